#include "jc/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "jc/errors.hpp"

namespace jc {

VarSpaceP make_space(std::vector<std::string> names) {
  if (int(names.size()) > kMaxVars) throw ResourceLimit("more than 16 coordinate variables");
  auto vs = std::make_shared<VarSpace>();
  vs->names = std::move(names);
  return vs;
}

VarSpaceP make_space(int n, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make_space(std::move(names));
}

VarSpaceP make_space_xy(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return make_space(std::move(names));
}

bool same_space(const VarSpaceP& a, const VarSpaceP& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names == b->names;
}

MPoly::MPoly(VarSpaceP vs, const ParamPoly& c) : vs_(std::move(vs)), t_(c.terms()) {}

MPoly MPoly::var(VarSpaceP vs, int i) {
  if (i < 0 || i >= vs->size()) throw ContractViolation("variable index out of range");
  MPoly r(std::move(vs));
  Mono m;
  m.set_x(i, 1);
  r.t_.emplace_back(m, Rational(1));
  return r;
}

MPoly MPoly::monomial(VarSpaceP vs, const Exp& e, const Rational& c) {
  MPoly r(std::move(vs));
  if (!c.is_zero()) r.t_.emplace_back(mono_x(e), c);
  return r;
}

MPoly MPoly::from_terms(VarSpaceP vs, TermVec t) {
  normalize_terms(t);
  MPoly r(std::move(vs));
  r.t_ = std::move(t);
  return r;
}

void MPoly::check_space(const MPoly& o) const {
  // a zero polynomial without a space is compatible with anything
  if (!vs_ || !o.vs_) return;
  if (!same_space(vs_, o.vs_)) throw ContractViolation("polynomials over different variable lists");
}

bool MPoly::is_param_free() const {
  for (const auto& tm : t_)
    if (!tm.first.params_zero()) return false;
  return true;
}

int MPoly::degree() const {
  if (t_.empty()) return -1;
  return t_.back().first.xdeg();  // graded order: last key has the top degree
}

int MPoly::min_degree() const {
  if (t_.empty()) return -1;
  return t_.front().first.xdeg();
}

MPoly MPoly::homogeneous_part(int k) const {
  MPoly r(vs_);
  for (const auto& tm : t_)
    if (tm.first.xdeg() == k) r.t_.push_back(tm);
  return r;
}

bool MPoly::is_homogeneous() const { return t_.empty() || degree() == min_degree(); }

MPoly MPoly::operator-() const { return scaled(Rational(-1)); }

MPoly& MPoly::operator+=(const MPoly& o) {
  check_space(o);
  if (!vs_) vs_ = o.vs_;
  t_ = add_terms(t_, o.t_);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_space(o);
  if (!vs_) vs_ = o.vs_;
  t_ = add_terms(t_, o.t_, true);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_space(b);
  MPoly r(a.vs_ ? a.vs_ : b.vs_);
  r.t_ = mul_terms(a.t_, b.t_);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  a.check_space(b);
  return terms_equal(a.t_, b.t_);
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r(vs_);
  r.t_ = scale_terms(t_, c);
  return r;
}

MPoly MPoly::scaled(const ParamPoly& c) const {
  MPoly r(vs_);
  r.t_ = mul_terms(t_, c.terms());
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw ContractViolation("negative power of a polynomial");
  MPoly r(vs_, ParamPoly(1)), b(*this);
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

MPoly MPoly::derivative(int i) const {
  MPoly r(vs_);
  for (const auto& [m, c] : t_) {
    int e = m.x(i);
    if (e == 0) continue;
    Mono mm = m;
    mm.set_x(i, e - 1);
    r.t_.emplace_back(mm, c * Rational(e));
  }
  // lowering one exponent can reorder keys across degree classes only uniformly
  normalize_terms(r.t_);
  return r;
}

MPoly MPoly::derivative(const Exp& e) const {
  MPoly r(vs_);
  for (const auto& [m, c] : t_) {
    Mono mm = m;
    Rational f = c;
    bool zero = false;
    for (int i = 0; i < kMaxVars && !zero; ++i) {
      if (!e[i]) continue;
      int have = m.x(i);
      if (have < e[i]) {
        zero = true;
        break;
      }
      f *= falling(have, e[i]);
      mm.set_x(i, have - e[i]);
    }
    if (!zero) r.t_.emplace_back(mm, f);
  }
  normalize_terms(r.t_);
  return r;
}

ParamPoly MPoly::coeff(const Exp& e) const {
  TermVec acc;
  for (const auto& [m, c] : t_)
    if (m.xexp() == e) acc.emplace_back(m.params_only(), c);
  return ParamPoly::from_terms(std::move(acc));
}

std::vector<std::pair<Exp, ParamPoly>> MPoly::coefficients() const {
  // terms with equal coordinate part are contiguous: the x bytes lead the key
  std::vector<std::pair<Exp, ParamPoly>> out;
  std::size_t i = 0;
  while (i < t_.size()) {
    Exp e = t_[i].first.xexp();
    TermVec acc;
    std::size_t j = i;
    while (j < t_.size() && t_[j].first.xexp() == e) {
      acc.emplace_back(t_[j].first.params_only(), t_[j].second);
      ++j;
    }
    out.emplace_back(e, ParamPoly::from_terms(std::move(acc)));
    i = j;
  }
  return out;
}

ParamPoly MPoly::eval(const std::vector<Rational>& point) const {
  if (int(point.size()) != nvars()) throw ContractViolation("evaluation point has wrong length");
  TermVec acc;
  for (const auto& [m, c] : t_) {
    Rational v = c;
    for (int i = 0; i < nvars() && !v.is_zero(); ++i)
      if (m.x(i)) v *= point[i].pow(m.x(i));
    if (!v.is_zero()) acc.emplace_back(m.params_only(), v);
  }
  return ParamPoly::from_terms(std::move(acc));
}

MPoly MPoly::subs_param(Param p, const ParamPoly& v) const {
  std::map<int, ParamPoly> powers;
  TermVec acc;
  for (const auto& [m, c] : t_) {
    int e = m.param(p);
    if (e == 0) {
      acc.emplace_back(m, c);
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, v.pow(e)).first;
    Mono rest = m;
    rest.set_param(p, 0);
    auto part = shift_terms(it->second.terms(), rest, c);
    acc.insert(acc.end(), part.begin(), part.end());
  }
  return from_terms(vs_, std::move(acc));
}

MPoly MPoly::compose(const std::vector<MPoly>& images, const VarSpaceP& target) const {
  if (int(images.size()) != nvars()) throw ContractViolation("compose: wrong number of images");
  std::vector<std::map<int, MPoly>> cache(images.size());
  TermVec acc;
  for (const auto& [m, c] : t_) {
    MPoly prod(target);
    prod.t_.emplace_back(m.params_only(), c);
    for (int i = 0; i < nvars(); ++i) {
      int e = m.x(i);
      if (!e) continue;
      auto it = cache[i].find(e);
      if (it == cache[i].end()) it = cache[i].emplace(e, images[i].pow(e)).first;
      prod *= it->second;
    }
    acc.insert(acc.end(), prod.t_.begin(), prod.t_.end());
  }
  return from_terms(target, std::move(acc));
}

MPoly MPoly::remap(const VarSpaceP& target, const std::vector<int>& map) const {
  if (int(map.size()) != nvars()) throw ContractViolation("remap: wrong map length");
  TermVec acc;
  acc.reserve(t_.size());
  for (const auto& [m, c] : t_) {
    Mono mm = m.params_only();
    for (int i = 0; i < nvars(); ++i)
      if (m.x(i)) mm.set_x(map[i], mm.x(map[i]) + m.x(i));
    acc.emplace_back(mm, c);
  }
  return from_terms(target, std::move(acc));
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  check_space(divisor);
  if (divisor.is_zero()) throw ContractViolation("division by zero polynomial");
  if (!divisor.is_param_free()) throw ContractViolation("divisor must be parameter free");
  // leading coordinate monomial of the divisor in graded lex
  const Term& lead = divisor.t_.back();
  Exp le = lead.first.xexp();
  Rational lc_inv = lead.second.inv();
  MPoly rem = *this, quo(vs_ ? vs_ : divisor.vs_);
  TermVec qacc;
  while (!rem.is_zero()) {
    // the top coordinate exponent block of rem (all parameter variants)
    Exp top = rem.t_.back().first.xexp();
    for (int i = 0; i < kMaxVars; ++i)
      if (top[i] < le[i]) return std::nullopt;
    Exp qe;
    for (int i = 0; i < kMaxVars; ++i) qe[i] = std::uint8_t(top[i] - le[i]);
    Mono qx = mono_x(qe);
    TermVec qpart;
    for (auto it = rem.t_.rbegin(); it != rem.t_.rend() && it->first.xexp() == top; ++it)
      qpart.emplace_back(qx * it->first.params_only(), it->second * lc_inv);
    normalize_terms(qpart);
    TermVec sub = mul_terms(qpart, divisor.t_);
    rem.t_ = add_terms(rem.t_, sub, true);
    qacc.insert(qacc.end(), qpart.begin(), qpart.end());
  }
  return from_terms(quo.vs_, std::move(qacc));
}

std::string exp_str(const VarSpace& vs, const Exp& e, const char* prefix_d) {
  std::string s;
  for (int i = 0; i < vs.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += prefix_d ? std::string(prefix_d) + vs.names[i] : vs.names[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  auto groups = coefficients();
  bool first = true;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    std::string mono = vs_ ? exp_str(*vs_, it->first) : "";
    std::string coef = it->second.str();
    bool simple = it->second.size() == 1;
    if (!first) os << " + ";
    first = false;
    if (mono.empty()) {
      os << (simple ? coef : "(" + coef + ")");
    } else if (coef == "1") {
      os << mono;
    } else if (coef == "-1") {
      os << "-" << mono;
    } else {
      os << (simple ? coef : "(" + coef + ")") << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace jc
