#include "carnot/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace carnot {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("VarSet: duplicate variable " + names_[i]);
}

std::optional<std::size_t> VarSet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

VarSetPtr prefixed_vars(const std::string& prefix, int count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return make_varset(std::move(names));
}

VarSetPtr concat_varsets(const VarSet& a, const VarSet& b) {
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  return make_varset(std::move(names));
}

Poly Poly::zero(VarSetPtr vs) {
  Poly p;
  p.vars_ = std::move(vs);
  return p;
}

Poly Poly::constant(VarSetPtr vs, Rational c) {
  Poly p = zero(std::move(vs));
  if (c != 0) p.terms_.emplace(Monomial(p.vars_->size(), 0), std::move(c));
  return p;
}

Poly Poly::variable(VarSetPtr vs, std::string_view name) {
  auto idx = vs->index(name);
  if (!idx)
    throw std::invalid_argument("Poly::variable: unknown variable " + std::string(name));
  Poly p = zero(std::move(vs));
  Monomial m(p.vars_->size(), 0);
  m[*idx] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Poly Poly::from_terms(VarSetPtr vs, std::map<Monomial, Rational> terms) {
  Poly p = zero(std::move(vs));
  for (auto& [m, c] : terms)
    if (c != 0) p.terms_.emplace(m, std::move(c));
  return p;
}

void Poly::require_same_varset(const Poly& o) const {
  if (!vars_ || !o.vars_)
    throw std::invalid_argument("Poly: operation on uninitialized polynomial");
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
    throw std::invalid_argument("Poly: varset mismatch");
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_varset(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_varset(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_varset(b);
  Poly r = Poly::zero(a.vars_);
  Monomial m(a.vars_->size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r = Poly::zero(p.vars_);
  if (c == 0) return r;
  r.terms_ = p.terms_;
  for (auto& [m, coeff] : r.terms_) coeff *= c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(vars_, Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (vars_ != o.vars_ && (!vars_ || !o.vars_ || !(*vars_ == *o.vars_))) return false;
  return terms_ == o.terms_;
}

Poly Poly::derivative(std::size_t var_index) const {
  if (var_index >= vars_->size())
    throw std::invalid_argument("Poly::derivative: variable index out of range");
  Poly r = zero(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var_index] == 0) continue;
    Monomial d = m;
    d[var_index] -= 1;
    r.add_term(d, c * Rational(m[var_index]));
  }
  return r;
}

Poly Poly::derivative(std::string_view var) const {
  auto idx = vars_->index(var);
  if (!idx) throw std::invalid_argument("Poly::derivative: unknown variable");
  return derivative(*idx);
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_->size())
    throw std::invalid_argument("Poly::eval: point dimension mismatch");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

double Poly::eval(std::span<const double> point) const {
  if (point.size() != vars_->size())
    throw std::invalid_argument("Poly::eval: point dimension mismatch");
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != vars_->size())
    throw std::invalid_argument("Poly::substitute: one image per variable required");
  const VarSetPtr& target = images.front().varset();
  for (const Poly& im : images) {
    if (im.varset() != target && !(*im.varset() == *target))
      throw std::invalid_argument("Poly::substitute: images on mixed varsets");
  }
  Poly acc = Poly::zero(target);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t = t * images[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

Poly Poly::extend(const VarSetPtr& bigger) const {
  std::vector<std::size_t> where(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto idx = bigger->index(vars_->name(i));
    if (!idx)
      throw std::invalid_argument("Poly::extend: target varset misses " + vars_->name(i));
    where[i] = *idx;
  }
  Poly r = zero(bigger);
  for (const auto& [m, c] : terms_) {
    Monomial big(bigger->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) big[where[i]] = m[i];
    r.terms_.emplace(std::move(big), c);
  }
  return r;
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    deg = std::max(deg, d);
  }
  return deg;
}

int Poly::degree_in(std::size_t var_index) const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m[var_index]));
  return deg;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  auto tdeg = [](const Monomial& m) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    return d;
  };
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
    int da = tdeg(a->first), db = tdeg(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    Rational c = t->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    os << to_string(c);
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      os << " * " << vars_->name(i);
      if (t->first[i] > 1) os << "^" << t->first[i];
    }
    first = false;
  }
  return os.str();
}

}  // namespace carnot
