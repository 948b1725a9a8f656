#include "jc/rpq.hpp"

#include "jc/errors.hpp"
#include "jc/weyl.hpp"

namespace jc {

namespace {

struct Pieces {
  int n;
  VarSpaceP vs;
  std::vector<Rational> eps;
  MPoly Px, Py, Pxy, Pxmy;
  DiffOp Pdx, Pdy, Pdxy, Pdxmy;
  DiffOp x(int j) const { return DiffOp::mul(MPoly::var(vs, j)); }
  DiffOp y(int j) const { return DiffOp::mul(MPoly::var(vs, n + j)); }
  DiffOp dx(int j) const { return DiffOp::partial(vs, j); }
  DiffOp dy(int j) const { return DiffOp::partial(vs, n + j); }
};

void check_signature(int p, int q) {
  if (p < 2 || q < 1) throw ConfigError("R^{p,q} operators need p >= 2 and q >= 1");
  if (p + q > 8) throw ResourceLimit("R^{p,q} operators limited to p + q <= 8");
}

Pieces pieces(int p, int q) {
  check_signature(p, q);
  Pieces P;
  int n = P.n = p + q;
  P.vs = make_space_xy(n);
  P.Px = P.Py = P.Pxy = P.Pxmy = MPoly(P.vs);
  P.Pdx = P.Pdy = P.Pdxy = P.Pdxmy = DiffOp(P.vs);
  for (int j = 0; j < n; ++j) {
    Rational e(j < p ? 1 : -1);
    P.eps.push_back(e);
    MPoly xj = MPoly::var(P.vs, j), yj = MPoly::var(P.vs, n + j);
    P.Px += (xj * xj).scaled(e);
    P.Py += (yj * yj).scaled(e);
    P.Pxy += (xj * yj).scaled(e);
    P.Pxmy += ((xj - yj) * (xj - yj)).scaled(e);
    P.Pdx += (P.dx(j) * P.dx(j)).scaled(e);
    P.Pdy += (P.dy(j) * P.dy(j)).scaled(e);
    P.Pdxy += (P.dx(j) * P.dy(j)).scaled(e);
    P.Pdxmy += ((P.dx(j) - P.dy(j)) * (P.dx(j) - P.dy(j))).scaled(e);
  }
  return P;
}

ParamPoly pv(Param p) { return ParamPoly::var(p); }

}  // namespace

DiffOp explicit_Dst(int p, int q) {
  Pieces P = pieces(p, q);
  const auto& vs = P.vs;
  ParamPoly s = pv(Param::s), t = pv(Param::t), n(P.n);
  DiffOp ex(vs), ey(vs);
  for (int j = 0; j < P.n; ++j) {
    ex += P.x(j) * (P.dx(j) - P.dy(j));
    ey += P.y(j) * (P.dy(j) - P.dx(j));
  }
  DiffOp D = DiffOp::mul(P.Px * P.Py) * P.Pdxmy;
  D += (DiffOp::mul(P.Py) * ex).scaled(s * ParamPoly(4));
  D += (DiffOp::mul(P.Px) * ey).scaled(t * ParamPoly(4));
  D += DiffOp::mul(P.Px.scaled(ParamPoly(2) * t * (ParamPoly(2) * t - ParamPoly(2) + n)));
  D -= DiffOp::mul(P.Pxy.scaled(ParamPoly(8) * s * t));
  D += DiffOp::mul(P.Py.scaled(ParamPoly(2) * s * (ParamPoly(2) * s - ParamPoly(2) + n)));
  return D;
}

DiffOp explicit_Est(int p, int q) {
  Pieces P = pieces(p, q);
  const auto& vs = P.vs;
  ParamPoly s1 = pv(Param::s) - ParamPoly(1), t1 = pv(Param::t) - ParamPoly(1), n(P.n);
  DiffOp sx(vs), sy(vs);
  for (int j = 0; j < P.n; ++j) {
    sx += (P.x(j) - P.y(j)) * P.dx(j);
    sy += (P.y(j) - P.x(j)) * P.dy(j);
  }
  DiffOp E = -(DiffOp::mul(P.Pxmy) * P.Pdx * P.Pdy);
  E += (sx * P.Pdy).scaled(ParamPoly(4) * s1);
  E += (sy * P.Pdx).scaled(ParamPoly(4) * t1);
  E -= P.Pdy.scaled(ParamPoly(2) * s1 * (ParamPoly(2) * pv(Param::s) - n));
  E += P.Pdxy.scaled(ParamPoly(8) * s1 * t1);
  E -= P.Pdx.scaled(ParamPoly(2) * t1 * (ParamPoly(2) * pv(Param::t) - n));
  return E;
}

DiffOp explicit_F(int p, int q) {
  Pieces P = pieces(p, q);
  const auto& vs = P.vs;
  ParamPoly l = pv(Param::lambda), m = pv(Param::mu);
  ParamPoly h(Rational(P.n, 2) - Rational(1));
  ParamPoly a = h - l, b = h - m;  // -lambda + n/2 - 1, -mu + n/2 - 1
  DiffOp sx(vs), sy(vs);
  for (int j = 0; j < P.n; ++j) {
    sx += (P.x(j) - P.y(j)) * P.dx(j);
    sy += (P.y(j) - P.x(j)) * P.dy(j);
  }
  DiffOp F = -(DiffOp::mul(P.Pxmy) * P.Pdx * P.Pdy);
  F += (sx * P.Pdy).scaled(ParamPoly(4) * a);
  F += (sy * P.Pdx).scaled(ParamPoly(4) * b);
  F += P.Pdy.scaled(ParamPoly(4) * l * a);
  F += P.Pdx.scaled(ParamPoly(4) * m * b);
  F += P.Pdxy.scaled(ParamPoly(8) * a * b);
  return F;
}

DiffOp explicit_B1(int p, int q) {
  Pieces P = pieces(p, q);
  ParamPoly l = pv(Param::lambda), m = pv(Param::mu);
  ParamPoly h(Rational(P.n, 2) - Rational(1));
  ParamPoly a = h - l, b = h - m;
  DiffOp B = P.Pdx.scaled(m * b) + P.Pdy.scaled(l * a) + P.Pdxy.scaled(ParamPoly(2) * a * b);
  return B.scaled(Rational(4));
}

RpqOperators rpq_operators(int p, int q) {
  check_signature(p, q);
  RpqOperators ops;
  ops.p = p;
  ops.q = q;
  ops.n = p + q;
  ops.alg = make_rpq(p, q);
  ops.space = make_space_xy(ops.n);
  ops.D = explicit_Dst(p, q);
  ops.E = explicit_Est(p, q);
  ops.F = explicit_F(p, q);
  ops.B1 = explicit_B1(p, q);
  return ops;
}

BracketN build_BN(const RpqOperators& ops, int N) {
  if (N < 1) throw ContractViolation("B^(N) needs N >= 1");
  BracketN b;
  b.N = N;
  b.FN = ops.F;
  for (int k = 1; k < N; ++k) {
    DiffOp Fk = ops.F.subs_param(Param::lambda, pv(Param::lambda) + ParamPoly(k))
                    .subs_param(Param::mu, pv(Param::mu) + ParamPoly(k));
    b.FN = Fk * b.FN;
  }
  b.B = restrict_diagonal(b.FN);
  return b;
}

std::optional<Rational> proportionality(const DiffOp& A, const DiffOp& B) {
  if (B.is_zero()) return A.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  const auto& [mb, cb] = B.terms().front();
  for (const auto& [ma, ca] : A.terms())
    if (ma == mb) {
      Rational c = ca / cb;
      if (A == B.scaled(c)) return c;
      return std::nullopt;
    }
  return std::nullopt;
}

DiffOp swap_xy(const DiffOp& A) {
  const auto& vs = A.space();
  int n2 = vs->size();
  if (n2 % 2) throw ContractViolation("swap needs an x,y space");
  int n = n2 / 2;
  std::vector<DiffOp> xs, ds;
  for (int i = 0; i < n2; ++i) {
    int j = i < n ? i + n : i - n;
    xs.push_back(DiffOp::mul(MPoly::var(vs, j)));
    ds.push_back(DiffOp::partial(vs, j));
  }
  DiffOp S = A.substitute(xs, ds, vs);
  if (S.terms().empty()) return S;
  // lambda <-> mu through the (unused) tau slot; tau never appears in these operators
  for (const auto& [m, c] : S.terms())
    if (m.param(Param::tau) != 0) throw ContractViolation("swap_xy: operator carries tau");
  return S.subs_param(Param::lambda, ParamPoly::var(Param::tau))
      .subs_param(Param::mu, ParamPoly::var(Param::lambda))
      .subs_param(Param::tau, ParamPoly::var(Param::mu));
}

}  // namespace jc
