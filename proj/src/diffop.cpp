#include "jc/diffop.hpp"

#include <map>
#include <sstream>

#include "jc/errors.hpp"

namespace jc {

DiffOp DiffOp::identity(VarSpaceP vs) {
  DiffOp r(std::move(vs));
  r.t_.emplace_back(Mono(), Rational(1));
  return r;
}

DiffOp DiffOp::partial(VarSpaceP vs, int i) {
  if (i < 0 || i >= vs->size()) throw ContractViolation("partial: index out of range");
  DiffOp r(std::move(vs));
  Mono m;
  m.set_d(i, 1);
  r.t_.emplace_back(m, Rational(1));
  return r;
}

DiffOp DiffOp::mul(const MPoly& c) {
  DiffOp r(c.space());
  r.t_ = c.terms();
  return r;
}

DiffOp DiffOp::symbol(const MPoly& p) {
  TermVec acc;
  for (const auto& [m, c] : p.terms()) {
    Mono k = m.params_only();
    for (int i = 0; i < p.nvars(); ++i)
      if (m.x(i)) k.set_d(i, m.x(i));
    acc.emplace_back(k, c);
  }
  return from_terms(p.space(), std::move(acc));
}

DiffOp DiffOp::from_coefficients(VarSpaceP vs, const std::vector<std::pair<Exp, MPoly>>& parts) {
  TermVec acc;
  for (const auto& [d, c] : parts) {
    for (const auto& [m, v] : c.terms()) {
      Mono k = m;
      for (int i = 0; i < kMaxVars; ++i)
        if (d[i]) k.set_d(i, d[i]);
      acc.emplace_back(k, v);
    }
  }
  return from_terms(std::move(vs), std::move(acc));
}

DiffOp DiffOp::from_terms(VarSpaceP vs, TermVec t) {
  normalize_terms(t);
  DiffOp r(std::move(vs));
  r.t_ = std::move(t);
  return r;
}

void DiffOp::check_space(const DiffOp& o) const {
  if (!vs_ || !o.vs_) return;
  if (!same_space(vs_, o.vs_)) throw ContractViolation("operators over different variable lists");
}

int DiffOp::order() const {
  int o = -1;
  for (const auto& tm : t_) o = std::max(o, tm.first.ddeg());
  return o;
}

DiffOp DiffOp::operator-() const { return scaled(Rational(-1)); }

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  check_space(o);
  if (!vs_) vs_ = o.vs_;
  t_ = add_terms(t_, o.t_);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  check_space(o);
  if (!vs_) vs_ = o.vs_;
  t_ = add_terms(t_, o.t_, true);
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  a.check_space(b);
  DiffOp r(a.vs_ ? a.vs_ : b.vs_);
  int n = r.vs_ ? r.vs_->size() : 0;
  TermVec acc;
  // (x^a d^al)(x^b d^be) = sum_g prod_i C(al_i,g_i) b_i!/(b_i-g_i)! x^{a+b-g} d^{al-g+be}
  for (const auto& [ma, ca] : a.t_) {
    Exp al = ma.dexp();
    Mono ma_nod = ma;
    for (int i = 0; i < n; ++i) ma_nod.set_d(i, 0);
    for (const auto& [mb, cb] : b.t_) {
      Exp bx = mb.xexp();
      Mono base = ma_nod * mb;  // x^{a+b} d^{be}, params multiplied
      Rational c0 = ca * cb;
      std::vector<int> lim(n);
      bool any = false;
      for (int i = 0; i < n; ++i) {
        lim[i] = std::min<int>(al[i], bx[i]);
        any = any || lim[i] > 0;
      }
      if (!any) {
        Mono k = base;
        for (int i = 0; i < n; ++i)
          if (al[i]) k.set_d(i, k.d(i) + al[i]);
        acc.emplace_back(k, c0);
        continue;
      }
      std::vector<int> g(n, 0);
      while (true) {
        Rational c = c0;
        Mono k = base;
        for (int i = 0; i < n; ++i) {
          if (g[i]) {
            c *= binomial(al[i], g[i]) * falling(bx[i], g[i]);
            k.set_x(i, k.x(i) - g[i]);
          }
          int de = al[i] - g[i];
          if (de) k.set_d(i, k.d(i) + de);
        }
        acc.emplace_back(k, c);
        int i = 0;
        while (i < n && g[i] == lim[i]) g[i++] = 0;
        if (i == n) break;
        ++g[i];
      }
    }
  }
  normalize_terms(acc);
  r.t_ = std::move(acc);
  return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  a.check_space(b);
  return terms_equal(a.t_, b.t_);
}

DiffOp DiffOp::scaled(const Rational& c) const {
  DiffOp r(vs_);
  r.t_ = scale_terms(t_, c);
  return r;
}

DiffOp DiffOp::scaled(const ParamPoly& c) const {
  DiffOp r(vs_);
  r.t_ = mul_terms(t_, c.terms());
  return r;
}

DiffOp DiffOp::pow(int e) const {
  if (e < 0) throw ContractViolation("negative operator power");
  DiffOp r = identity(vs_);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

MPoly DiffOp::apply(const MPoly& f) const {
  if (vs_ && f.space() && !same_space(vs_, f.space()))
    throw ContractViolation("operator and function over different variable lists");
  TermVec acc;
  std::map<Exp, MPoly> cache;
  for (const auto& [m, c] : t_) {
    Exp d = m.dexp();
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, f.derivative(d)).first;
    if (it->second.is_zero()) continue;
    Mono k = m;
    for (int i = 0; i < kMaxVars; ++i)
      if (d[i]) k.set_d(i, 0);
    auto part = shift_terms(it->second.terms(), k, c);
    acc.insert(acc.end(), part.begin(), part.end());
  }
  return MPoly::from_terms(vs_ ? vs_ : f.space(), std::move(acc));
}

std::vector<std::pair<Exp, MPoly>> DiffOp::coefficients() const {
  std::map<Exp, TermVec> groups;
  for (const auto& [m, c] : t_) {
    Mono k = m;
    Exp d = m.dexp();
    for (int i = 0; i < kMaxVars; ++i)
      if (d[i]) k.set_d(i, 0);
    groups[d].emplace_back(k, c);
  }
  std::vector<std::pair<Exp, MPoly>> out;
  for (auto& [d, tv] : groups) out.emplace_back(d, MPoly::from_terms(vs_, std::move(tv)));
  return out;
}

MPoly DiffOp::coefficient(const Exp& d) const {
  TermVec acc;
  for (const auto& [m, c] : t_) {
    if (m.dexp() != d) continue;
    Mono k = m;
    for (int i = 0; i < kMaxVars; ++i)
      if (d[i]) k.set_d(i, 0);
    acc.emplace_back(k, c);
  }
  return MPoly::from_terms(vs_, std::move(acc));
}

DiffOp DiffOp::subs_param(Param p, const ParamPoly& v) const {
  return map_coefficients([&](const MPoly& c) { return c.subs_param(p, v); });
}

DiffOp DiffOp::map_coefficients(const std::function<MPoly(const MPoly&)>& f) const {
  std::vector<std::pair<Exp, MPoly>> parts;
  for (auto& [d, c] : coefficients()) parts.emplace_back(d, f(c));
  return from_coefficients(vs_, parts);
}

DiffOp DiffOp::substitute(const std::vector<DiffOp>& xs, const std::vector<DiffOp>& ds,
                          const VarSpaceP& target) const {
  int n = vs_ ? vs_->size() : 0;
  if (int(xs.size()) != n || int(ds.size()) != n) throw ContractViolation("substitute: wrong number of images");
  std::vector<std::map<int, DiffOp>> xc(n), dc(n);
  auto power = [](std::vector<std::map<int, DiffOp>>& cache, const std::vector<DiffOp>& img, int i, int e) {
    auto it = cache[i].find(e);
    if (it == cache[i].end()) it = cache[i].emplace(e, img[i].pow(e)).first;
    return it->second;
  };
  // group terms by (x,d) part so each product of images is built once
  std::map<Mono, TermVec> groups;
  for (const auto& [m, c] : t_) {
    Mono key = m.without_params();
    groups[key].emplace_back(m.params_only(), c);
  }
  DiffOp acc(target);
  for (auto& [key, pc] : groups) {
    DiffOp prod = identity(target);
    for (int i = 0; i < n; ++i)
      if (key.x(i)) prod = prod * power(xc, xs, i, key.x(i));
    for (int i = 0; i < n; ++i)
      if (key.d(i)) prod = prod * power(dc, ds, i, key.d(i));
    normalize_terms(pc);
    acc += prod.scaled(ParamPoly::from_terms(pc));
  }
  return acc;
}

std::string DiffOp::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto parts = coefficients();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    std::string d = vs_ ? exp_str(*vs_, it->first, "d") : "";
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (!d.empty()) os << "*" << d;
  }
  return os.str();
}

}  // namespace jc
