#include "jc/param_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jc {

std::string param_name(Param p) {
  switch (p) {
    case Param::s: return "s";
    case Param::t: return "t";
    case Param::lambda: return "l";
    case Param::mu: return "m";
    case Param::tau: return "tau";
  }
  return "?";
}

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) t_.emplace_back(Mono(), c);
}

ParamPoly ParamPoly::var(Param p, int e) {
  ParamPoly r;
  r.t_.emplace_back(mono_param(p, e), Rational(1));
  return r;
}

ParamPoly ParamPoly::from_terms(TermVec t) {
  normalize_terms(t);
  ParamPoly r;
  r.t_ = std::move(t);
  return r;
}

bool ParamPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].first.params_zero());
}

Rational ParamPoly::constant() const {
  if (!is_constant()) throw std::logic_error("parameter polynomial is not constant: " + str());
  return t_.empty() ? Rational(0) : t_[0].second;
}

Rational ParamPoly::constant_term() const {
  for (const auto& [m, c] : t_)
    if (m.params_zero()) return c;
  return Rational(0);
}

int ParamPoly::degree(Param p) const {
  int d = t_.empty() ? 0 : -1000;
  for (const auto& tm : t_) d = std::max(d, tm.first.param(p));
  return d;
}

int ParamPoly::min_degree(Param p) const {
  int d = t_.empty() ? 0 : 1000;
  for (const auto& tm : t_) d = std::min(d, tm.first.param(p));
  return d;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& tm : t_) {
    int k = 0;
    for (int i = 0; i < 4; ++i) k += tm.first.param(Param(i));
    d = std::max(d, k);
  }
  return d;
}

bool ParamPoly::depends_on(Param p) const {
  for (const auto& tm : t_)
    if (tm.first.param(p) != 0) return true;
  return false;
}

ParamPoly ParamPoly::operator-() const { return scaled(Rational(-1)); }

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  t_ = add_terms(t_, o.t_);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  t_ = add_terms(t_, o.t_, true);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  t_ = mul_terms(t_, o.t_);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  r.t_ = mul_terms(a.t_, b.t_);
  return r;
}

ParamPoly ParamPoly::pow(int e) const {
  if (e < 0) {
    if (t_.size() != 1) throw std::domain_error("negative power of a non-monomial parameter polynomial");
    // only tau may carry negative exponents
    const auto& [m, c] = t_[0];
    for (int i = 0; i < 4; ++i)
      if (m.param(Param(i)) != 0) throw std::domain_error("negative power of a parameter");
    Mono mm;
    mm.set_param(Param::tau, -m.param(Param::tau));
    ParamPoly r;
    r.t_.emplace_back(mm, c.inv());
    return r.pow(-e);
  }
  ParamPoly r(1), b(*this);
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly r;
  r.t_ = scale_terms(t_, c);
  return r;
}

ParamPoly ParamPoly::subs(Param p, const ParamPoly& value) const {
  std::map<int, ParamPoly> powers;
  ParamPoly r;
  TermVec acc;
  for (const auto& [m, c] : t_) {
    int e = m.param(p);
    if (e == 0) {
      acc.emplace_back(m, c);
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    Mono rest = m;
    rest.set_param(p, 0);
    TermVec part = shift_terms(it->second.t_, rest, c);
    acc.insert(acc.end(), part.begin(), part.end());
  }
  normalize_terms(acc);
  r.t_ = std::move(acc);
  return r;
}

ParamPoly ParamPoly::coeff(Param p, int k) const {
  TermVec acc;
  for (const auto& [m, c] : t_) {
    if (m.param(p) != k) continue;
    Mono rest = m;
    rest.set_param(p, 0);
    acc.emplace_back(rest, c);
  }
  return from_terms(std::move(acc));
}

std::string ParamPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest terms first
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coef = c.str();
    bool neg = c.sign() < 0;
    if (neg) coef = coef.substr(1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int i = 0; i < kNumParams; ++i) {
      int e = m.param(Param(i));
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += param_name(Param(i));
      if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    if (mono.empty()) {
      os << coef;
    } else {
      if (coef != "1") os << coef << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace jc
