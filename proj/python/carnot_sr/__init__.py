"""Exact symbolic and numerical toolkit for the rank-2 step-4 Carnot group.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
