#include "jc/detpower.hpp"

#include "jc/errors.hpp"
#include "jc/fischer.hpp"

namespace jc {

namespace {

Matrix pairing_matrix(const Algebra& a, Pairing p) { return p == Pairing::Trace ? a.trace_gram : a.pairing; }

// images of the chart variables under xi -> G^{-1} xi (or G^{-1}(xi - zeta)), placed in `space`
std::vector<MPoly> dual_images(const Matrix& inv, const VarSpaceP& space, int n, bool wave) {
  std::vector<MPoly> img;
  for (int i = 0; i < n; ++i) {
    MPoly v(space);
    for (int j = 0; j < n; ++j) {
      if (inv(i, j).is_zero()) continue;
      v += MPoly::var(space, j).scaled(inv(i, j));
      if (wave) v -= MPoly::var(space, n + j).scaled(inv(i, j));
    }
    img.push_back(v);
  }
  return img;
}

int xdeg_part(const Exp& e, int lo, int hi) {
  int k = 0;
  for (int i = lo; i < hi; ++i) k += e[i];
  return k;
}

Rational multi_binomial(const Exp& g, const Exp& d) {
  Rational c(1);
  for (int i = 0; i < kMaxVars; ++i)
    if (d[i]) c *= binomial(g[i], d[i]);
  return c;
}

// all multi-indices d <= g
std::vector<Exp> sub_indices(const Exp& g, int n) {
  std::vector<Exp> out;
  Exp d{};
  while (true) {
    out.push_back(d);
    int i = 0;
    while (i < n && d[i] == g[i]) d[i++] = 0;
    if (i == n) break;
    ++d[i];
  }
  return out;
}

// monomials of total degree exactly k in n variables
void monomials_of_degree(int n, int k, std::vector<Exp>& out) {
  Exp e{};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = std::uint8_t(left);
      out.push_back(e);
      e[i] = 0;
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = std::uint8_t(v);
      rec(i + 1, left - v);
    }
    e[i] = 0;
  };
  if (n > 0) rec(0, k);
}

}  // namespace

DetCalculus::DetCalculus(AlgebraP alg, bool two_var, Pairing pairing)
    : alg_(std::move(alg)), two_(two_var), pairing_(pairing), det_pow_(2) {
  int n = alg_->n;
  if (two_ && 2 * n > kMaxVars) throw ResourceLimit("two-variable calculus needs 2n <= 16 coordinates");
  vs_ = two_ ? make_space_xy(n) : alg_->chart;
  det_x_ = det_in(*alg_, vs_, 0);
  if (two_) det_y_ = det_in(*alg_, vs_, n);
  auto inv = inverse(pairing_matrix(*alg_, pairing));
  if (!inv) throw ContractViolation("pairing matrix is singular");
  sym_x_ = alg_->det.compose(dual_images(*inv, vs_, n, false), vs_);
  if (two_) sym_wave_ = alg_->det.compose(dual_images(*inv, vs_, n, true), vs_);
  for (int i = 0; i < n; ++i) grad_.push_back(det_x_.derivative(i));
  if (two_)
    for (int i = 0; i < n; ++i) grad_.push_back(det_y_.derivative(n + i));
}

const MPoly& DetCalculus::det_pow(int which, int k) const {
  auto& cache = det_pow_[which];
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, (which ? det_y_ : det_x_).pow(k)).first;
  return it->second;
}

DetPowerExpr DetCalculus::partial(const DetPowerExpr& e, int var) const {
  int n = alg_->n;
  bool is_y = var >= n;
  if (is_y && !two_) throw ContractViolation("y derivative in a single-variable calculus");
  // d[det^{s+a} q] = det^{s+a-1} ((s+a) d(det) q + det dq)
  Param p = is_y ? Param::t : Param::s;
  int shift = is_y ? e.b : e.a;
  ParamPoly c = ParamPoly::var(p) + ParamPoly(shift);
  const MPoly& det = is_y ? det_y_ : det_x_;
  DetPowerExpr r = e;
  r.body = (grad_[var] * e.body).scaled(c) + det * e.body.derivative(var);
  if (is_y)
    r.b -= 1;
  else
    r.a -= 1;
  return r;
}

DetPowerExpr DetCalculus::partial(const DetPowerExpr& e, const Exp& gamma) const {
  DetPowerExpr r = e;
  for (int i = 0; i < vs_->size(); ++i)
    for (int k = 0; k < gamma[i]; ++k) r = partial(r, i);
  return r;
}

DetPowerExpr DetCalculus::lower_to(const DetPowerExpr& e, int a, int b) const {
  if (a > e.a || (two_ && b > e.b)) throw ContractViolation("lower_to cannot raise a shift");
  DetPowerExpr r = e;
  if (a < e.a) r.body = r.body * det_pow(0, e.a - a);
  if (two_ && b < e.b) r.body = r.body * det_pow(1, e.b - b);
  r.a = a;
  if (two_) r.b = b;
  return r;
}

DetPowerExpr DetCalculus::apply_symbol(const MPoly& symbol, const DetPowerExpr& e) const {
  if (!symbol.is_homogeneous()) throw ContractViolation("apply_symbol needs a homogeneous symbol");
  int k = symbol.degree();
  int n = alg_->n, nv = vs_->size();
  std::map<Exp, DetPowerExpr> memo;
  memo.emplace(Exp{}, e);
  std::function<const DetPowerExpr&(const Exp&)> get = [&](const Exp& g) -> const DetPowerExpr& {
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;
    int i = 0;
    while (g[i] == 0) ++i;
    Exp h = g;
    --h[i];
    DetPowerExpr v = partial(get(h), i);
    return memo.emplace(g, std::move(v)).first->second;
  };
  DetPowerExpr out{e.a - k, two_ ? e.b - k : e.b, MPoly(vs_)};
  for (const auto& [g, c] : symbol.coefficients()) {
    const DetPowerExpr& d = get(g);
    int kx = xdeg_part(g, 0, n), ky = two_ ? xdeg_part(g, n, nv) : 0;
    MPoly body = d.body.scaled(c);
    if (k - kx) body = body * det_pow(0, k - kx);
    if (two_ && k - ky) body = body * det_pow(1, k - ky);
    out.body += body;
  }
  return out;
}

MPoly extract_Dst(const DetCalculus& dc, const MPoly& f) {
  if (!dc.two_var()) throw ContractViolation("extract_Dst needs the two-variable calculus");
  int r = dc.algebra()->r;
  DetPowerExpr w = dc.det_wave_apply({0, 0, f});
  MPoly divisor = dc.det_x().pow(r - 1) * dc.det_y().pow(r - 1);
  auto q = w.body.divide_exact(divisor);
  if (!q) throw TheoremViolation("det(dx-dy)[det^s det^t f] is not divisible by det^{r-1} det^{r-1}");
  return *q;
}

DiffOp Dst_operator(const DetCalculus& dc) {
  if (!dc.two_var()) throw ContractViolation("Dst_operator needs the two-variable calculus");
  int r = dc.algebra()->r, n = dc.n(), nv = 2 * n;
  const VarSpaceP& vs = dc.space();
  DetPowerExpr g{0, 0, MPoly(vs, ParamPoly(1))};
  std::map<Exp, DetPowerExpr> memo;
  std::map<Exp, MPoly> coef;
  for (const auto& [gam, c] : dc.wave_symbol().coefficients()) {
    for (const Exp& d : sub_indices(gam, nv)) {
      Exp rest;
      for (int i = 0; i < kMaxVars; ++i) rest[i] = std::uint8_t(gam[i] - d[i]);
      auto it = memo.find(rest);
      if (it == memo.end()) it = memo.emplace(rest, dc.lower_to(dc.partial(g, rest), -r, -r)).first;
      MPoly term = it->second.body.scaled(c).scaled(multi_binomial(gam, d));
      auto [ci, fresh] = coef.emplace(d, term);
      if (!fresh) ci->second += term;
    }
  }
  MPoly divisor = dc.det_x().pow(r - 1) * dc.det_y().pow(r - 1);
  std::vector<std::pair<Exp, MPoly>> parts;
  for (auto& [d, c] : coef) {
    if (c.is_zero()) continue;
    auto q = c.divide_exact(divisor);
    if (!q) throw TheoremViolation("operator coefficient of D_{s,t} is not polynomial");
    parts.emplace_back(d, *q);
  }
  return DiffOp::from_coefficients(vs, parts);
}

DiffOp Dst_operator_by_solve(const DetCalculus& dc, int order) {
  const VarSpaceP& vs = dc.space();
  int nv = vs->size();
  DiffOp acc(vs);
  for (int k = 0; k <= order; ++k) {
    std::vector<Exp> monos;
    monomials_of_degree(nv, k, monos);
    std::vector<std::pair<Exp, MPoly>> found;
    for (const Exp& g : monos) {
      MPoly m = MPoly::monomial(vs, g);
      MPoly res = extract_Dst(dc, m) - acc.apply(m);
      if (res.is_zero()) continue;
      Rational gf(1);
      for (int i = 0; i < nv; ++i) gf *= factorial(g[i]);
      found.emplace_back(g, res.scaled(gf.inv()));
    }
    acc += DiffOp::from_coefficients(vs, found);
  }
  return acc;
}

DiffOp Dst_operator_graded(const DetCalculus& dc) {
  const auto& alg = dc.algebra();
  if (alg->kind != Kind::SymR || alg->m > 3) throw UnsupportedKind("graded construction implemented for Sym(m,R), m <= 3");
  int n = alg->n;
  const VarSpaceP& vs = dc.space();
  MPoly bold = det_of_dual(*alg, alg->chart, 0);
  LeibnitzData ld = leibnitz_data(bold, true);
  int rho = ld.rho();
  // p_i(d) in chart coordinates is phat_i(d/dx) with phat_i(x) = p_i(Gx) in W(Delta)
  std::vector<MPoly> gx;
  for (int i = 0; i < n; ++i) {
    MPoly v(alg->chart);
    for (int j = 0; j < n; ++j)
      if (!alg->pairing(i, j).is_zero()) v += MPoly::var(alg->chart, j).scaled(alg->pairing(i, j));
    gx.push_back(v);
  }
  std::vector<int> deg(rho);
  std::vector<MPoly> sx(rho), sy(rho);
  std::vector<DiffOp> wave(rho);
  std::vector<int> to_x(n), to_y(n);
  for (int i = 0; i < n; ++i) {
    to_x[i] = i;
    to_y[i] = n + i;
  }
  std::vector<MPoly> diff_img;
  for (int i = 0; i < n; ++i) diff_img.push_back(MPoly::var(vs, i) - MPoly::var(vs, n + i));
  for (int i = 0; i < rho; ++i) {
    const MPoly& p = ld.basis[i];
    deg[i] = p.degree();
    MPoly sh = sharp(alg, p.compose(gx, alg->chart), deg[i]);
    sx[i] = sh.remap(vs, to_x);
    sy[i] = sh.remap(vs, to_y);
    wave[i] = DiffOp::symbol(p.compose(diff_img, vs));
  }
  Rational d(alg->d);
  DiffOp out(vs);
  for (int k = 0; k < rho; ++k) {
    MPoly coef(vs);
    for (int i = 0; i < rho; ++i)
      for (int j = 0; j < rho; ++j) {
        const Rational& a = ld.a(i, j, k);
        if (a.is_zero()) continue;
        ParamPoly bb = b_function(deg[i], d, Param::s) * b_function(deg[j], d, Param::t);
        if (deg[j] % 2) bb = -bb;
        coef += (sx[i] * sy[j]).scaled(bb * ParamPoly(a));
      }
    if (!coef.is_zero()) out += DiffOp::mul(coef) * wave[k];
  }
  return out;
}

BernsteinResult bernstein_poly(const AlgebraP& alg, Pairing pairing) {
  DetCalculus dc(alg, false, pairing);
  int r = alg->r;
  DetPowerExpr w = dc.det_d({0, 0, MPoly(dc.space(), ParamPoly(1))});
  auto q = w.body.divide_exact(dc.det_x().pow(r - 1));
  if (!q) throw TheoremViolation("det(d) det^s is not a multiple of det^{s-1}");
  if (q->degree() > 0) throw TheoremViolation("Bernstein quotient depends on x");
  BernsteinResult res;
  res.b = q->is_zero() ? ParamPoly() : q->coeff(Exp{});
  res.expected = b_function(r, Rational(alg->d));
  if (alg->kind == Kind::Rpq && pairing == Pairing::Native) {
    res.expected *= ParamPoly(4);
    res.convention = "P(d) in standard coordinates: 4 b_{2,n-2}(s)";
  } else {
    res.convention = "d/dx dual to tr(xy): b_{r,d}(s)";
  }
  res.matches = res.b == res.expected;
  return res;
}

std::pair<Rational, Rational> eps_sign_check(const DetCalculus& dc, int k, bool eps_minus,
                                             const std::vector<Rational>& point) {
  if (k < 1) throw ContractViolation("eps_sign_check needs k >= 1");
  Rational D = dc.det_x().eval(point).constant();
  if (D.sign() >= 0) throw ContractViolation("eps_sign_check needs a point with det < 0");
  // near the point |det|^k = (-1)^k det^k and sign(det)|det|^k = (-1)^{k+1} det^k
  MPoly lhs_poly = apply_diffop(dc.det_symbol(), dc.det_x().pow(k));
  Rational lhs = lhs_poly.eval(point).constant();
  if ((k + (eps_minus ? 1 : 0)) % 2) lhs = -lhs;
  BernsteinResult br = bernstein_poly(dc.algebra(), dc.pairing());
  Rational bk = br.expected.subs(Param::s, ParamPoly(k)).constant();
  Rational mag = D.abs().pow(k - 1);
  // target sign -eps: for -eps = '-' multiply by sign(det) = -1
  Rational rhs = bk * (eps_minus ? mag : -mag);
  return {lhs, rhs};
}

bool deltafgh_check(const AlgebraP& alg, const MPoly& f, const MPoly& g, const MPoly& h) {
  if (alg->kind != Kind::SymR || alg->m > 3) throw UnsupportedKind("Delta(fgh) check implemented for Sym(m,R), m <= 3");
  MPoly bold = det_of_dual(*alg, alg->chart, 0);
  static thread_local std::map<std::string, LeibnitzData> cache;
  auto it = cache.find(alg->spec);
  if (it == cache.end()) it = cache.emplace(alg->spec, leibnitz_data(bold, true)).first;
  return leibnitz_expand3(it->second, f, g, h) == apply_diffop(bold, f * g * h);
}

}  // namespace jc
