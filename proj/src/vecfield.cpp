#include "carnot/vecfield.hpp"

#include <stdexcept>

namespace carnot {

namespace {

void require_compatible(const VecField& a, const VecField& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("VecField: dimension mismatch");
  if (a.varset() != b.varset() && !(*a.varset() == *b.varset()))
    throw std::invalid_argument("VecField: varset mismatch");
}

bool is_prefix(const VarSet& small, const VarSet& big) {
  if (small.size() > big.size()) return false;
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small.name(i) != big.name(i)) return false;
  return true;
}

}  // namespace

VecField::VecField(std::vector<Poly> components, std::size_t dim)
    : dim_(dim), comp_(std::move(components)) {
  if (comp_.empty() || comp_.size() != dim_)
    throw std::invalid_argument("VecField: component count must equal dim");
  vars_ = comp_.front().varset();
  for (const Poly& p : comp_)
    if (p.varset() != vars_ && !(*p.varset() == *vars_))
      throw std::invalid_argument("VecField: components on mixed varsets");
  if (dim_ > vars_->size())
    throw std::invalid_argument("VecField: dim exceeds varset size");
}

bool VecField::is_zero() const {
  for (const Poly& p : comp_)
    if (!p.is_zero()) return false;
  return true;
}

Poly VecField::apply(const Poly& f) const {
  Poly acc = Poly::zero(vars_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (comp_[j].is_zero()) continue;
    acc += comp_[j] * f.derivative(j);
  }
  return acc;
}

VecField VecField::operator-() const {
  VecField r = *this;
  for (Poly& p : r.comp_) p = -p;
  return r;
}

VecField& VecField::operator+=(const VecField& o) {
  require_compatible(*this, o);
  for (std::size_t i = 0; i < dim_; ++i) comp_[i] += o.comp_[i];
  return *this;
}

VecField& VecField::operator-=(const VecField& o) {
  require_compatible(*this, o);
  for (std::size_t i = 0; i < dim_; ++i) comp_[i] -= o.comp_[i];
  return *this;
}

VecField operator*(const Rational& c, const VecField& v) {
  VecField r = v;
  for (std::size_t i = 0; i < r.dim_; ++i) r.comp_[i] = c * r.comp_[i];
  return r;
}

VecField VecField::extend(const VarSetPtr& bigger) const {
  if (!is_prefix(*vars_, *bigger))
    throw std::invalid_argument("VecField::extend: varset must extend by suffix");
  std::vector<Poly> comps;
  comps.reserve(dim_);
  for (const Poly& p : comp_) comps.push_back(p.extend(bigger));
  return VecField(std::move(comps), dim_);
}

VecField lie_bracket(const VecField& v, const VecField& w) {
  require_compatible(v, w);
  std::vector<Poly> comps;
  comps.reserve(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k)
    comps.push_back(v.apply(w.component(k)) - w.apply(v.component(k)));
  return VecField(std::move(comps), v.dim());
}

PolyMap::PolyMap(std::vector<Poly> components, std::size_t dim)
    : dim_(dim), comp_(std::move(components)) {
  if (comp_.empty() || comp_.size() != dim_)
    throw std::invalid_argument("PolyMap: component count must equal dim");
  vars_ = comp_.front().varset();
  for (const Poly& p : comp_)
    if (p.varset() != vars_ && !(*p.varset() == *vars_))
      throw std::invalid_argument("PolyMap: components on mixed varsets");
}

PolyMap PolyMap::identity(VarSetPtr vs, std::size_t dim) {
  std::vector<Poly> comps;
  comps.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) comps.push_back(Poly::variable(vs, vs->name(i)));
  return PolyMap(std::move(comps), dim);
}

std::vector<Poly> PolyMap::images_with_parameters(const PolyMap& inner) const {
  std::vector<Poly> images;
  images.reserve(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (i < dim_)
      images.push_back(inner.comp_[i]);
    else
      images.push_back(Poly::variable(vars_, vars_->name(i)));
  }
  return images;
}

PolyMap PolyMap::after(const PolyMap& inner) const {
  if (dim_ != inner.dim_ || (vars_ != inner.vars_ && !(*vars_ == *inner.vars_)))
    throw std::invalid_argument("PolyMap::after: incompatible maps");
  auto images = images_with_parameters(inner);
  std::vector<Poly> comps;
  comps.reserve(dim_);
  for (const Poly& p : comp_) comps.push_back(p.substitute(images));
  return PolyMap(std::move(comps), dim_);
}

Poly PolyMap::pullback(const Poly& f) const {
  if (f.varset() != vars_ && !(*f.varset() == *vars_))
    throw std::invalid_argument("PolyMap::pullback: varset mismatch");
  return f.substitute(images_with_parameters(*this));
}

std::vector<Rational> PolyMap::eval(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(dim_);
  for (const Poly& p : comp_) out.push_back(p.eval(point));
  return out;
}

std::vector<double> PolyMap::eval(std::span<const double> point) const {
  std::vector<double> out;
  out.reserve(dim_);
  for (const Poly& p : comp_) out.push_back(p.eval(point));
  return out;
}

PolyMap flow(const VecField& v, const Poly& time, int series_cap) {
  const VarSetPtr& big = time.varset();
  if (!is_prefix(*v.varset(), *big))
    throw std::invalid_argument("flow: time varset must extend the field's varset");
  VecField vx = (big->size() == v.varset()->size()) ? v : v.extend(big);

  std::vector<Poly> comps;
  comps.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    Poly term = Poly::variable(big, big->name(i));
    Poly acc = term;
    Rational factorial(1);
    Poly tpow = Poly::constant(big, Rational(1));
    int k = 0;
    while (true) {
      term = vx.apply(term);
      if (term.is_zero()) break;
      ++k;
      if (k > series_cap) throw std::domain_error("non-nilpotent field");
      factorial *= Rational(k);
      tpow = tpow * time;
      acc += Rational(1) / factorial * (tpow * term);
    }
    comps.push_back(std::move(acc));
  }
  return PolyMap(std::move(comps), v.dim());
}

PolyMap flow(const VecField& v, const Rational& t, int series_cap) {
  return flow(v, Poly::constant(v.varset(), t), series_cap);
}

VecField pushforward(const VecField& v, const PolyMap& fwd, const PolyMap& inv) {
  if (v.dim() != fwd.dim() || v.dim() != inv.dim())
    throw std::invalid_argument("pushforward: dimension mismatch");
  std::vector<Poly> comps;
  comps.reserve(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) {
    Poly acc = Poly::zero(v.varset());
    for (std::size_t j = 0; j < v.dim(); ++j) {
      Poly dkj = fwd.component(k).derivative(j);
      if (dkj.is_zero() || v.component(j).is_zero()) continue;
      acc += inv.pullback(dkj) * inv.pullback(v.component(j));
    }
    comps.push_back(std::move(acc));
  }
  return VecField(std::move(comps), v.dim());
}

}  // namespace carnot
