#include "jc/conformal.hpp"

#include <cmath>

#include "jc/errors.hpp"
#include "jc/weyl.hpp"

namespace jc {

namespace {

Exp unit_exp(int i, int j = -1) {
  Exp e{};
  e[i] += 1;
  if (j >= 0) e[j] += 1;
  return e;
}

// x-linear part of a degree-1 polynomial as a matrix row
Matrix linear_matrix(const std::vector<MPoly>& polys, int n) {
  Matrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = polys[i].coeff(unit_exp(j)).constant();
  return M;
}

Matrix embed_middle(const Matrix& h) {
  int n = h.rows();
  Matrix g(n + 2, n + 2);
  g(0, 0) = Rational(1);
  g(n + 1, n + 1) = Rational(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(1 + i, 1 + j) = h(i, j);
  return g;
}

Matrix translation_lie(const ConformalModel& m, const std::vector<Rational>& a) {
  int n = m.n;
  Matrix X(n + 2, n + 2);
  auto Pa = m.P.apply(a);
  for (int j = 0; j < n; ++j) {
    X(1 + j, 0) = a[j];
    X(n + 1, 1 + j) = Pa[j] * Rational(2);
  }
  return X;
}

// X kappa(x) as polynomials in variables offset.. of `space`
std::vector<MPoly> lie_on_kappa(const ConformalModel& m, const Matrix& X, const VarSpaceP& space, int offset) {
  int n = m.n;
  std::vector<MPoly> k;
  k.emplace_back(space, ParamPoly(1));
  for (int j = 0; j < n; ++j) k.push_back(MPoly::var(space, offset + j));
  k.push_back(det_in(*m.alg, space, offset));
  std::vector<MPoly> w(n + 2, MPoly(space));
  for (int i = 0; i < n + 2; ++i)
    for (int j = 0; j < n + 2; ++j)
      if (!X(i, j).is_zero()) w[i] += k[j].scaled(X(i, j));
  return w;
}

struct VectorField {
  std::vector<MPoly> V;
  MPoly sigma;
};

VectorField field(const ConformalModel& m, const Matrix& X, const VarSpaceP& space, int offset) {
  if (X.rows() != m.n + 2 || X.cols() != m.n + 2) throw ContractViolation("Lie algebra element has the wrong size");
  auto w = lie_on_kappa(m, X, space, offset);
  VectorField f{{}, w[0]};
  for (int j = 0; j < m.n; ++j) f.V.push_back(w[1 + j] - w[0] * MPoly::var(space, offset + j));
  return f;
}

}  // namespace

ConformalModel conformal_model(const AlgebraP& alg) {
  if (!alg || alg->kind != Kind::Rpq) throw UnsupportedKind("conformal model is implemented for rpq only");
  ConformalModel m;
  m.alg = alg;
  int n = m.n = alg->n;
  m.P = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = alg->det.coeff(unit_exp(i, j)).constant();
      m.P(i, j) = i == j ? c : c / Rational(2);
    }
  m.J = Matrix(n + 2, n + 2);
  m.J(0, n + 1) = m.J(n + 1, 0) = Rational(-1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.J(1 + i, 1 + j) = m.P(i, j);
  m.xspace = make_space(n);
  m.xyspace = make_space_xy(n);

  Matrix iota = inversion(m);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> a(n);
    a[j] = Rational(1);
    m.basis.push_back(translation_lie(m, a));
    m.names.push_back("T" + std::to_string(j + 1));
  }
  Matrix H(n + 2, n + 2);
  H(0, 0) = Rational(-1);
  H(n + 1, n + 1) = Rational(1);
  m.basis.push_back(H);
  m.names.push_back("H");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix A(n, n);
      A(i, j) = m.P(j, j);
      A(j, i) = -m.P(i, i);
      if (!m.P(i, j).is_zero()) throw ContractViolation("rpq quadratic form is not diagonal");
      Matrix R = embed_middle(A);
      R(0, 0) = R(n + 1, n + 1) = Rational(0);
      m.basis.push_back(R);
      m.names.push_back("M" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int j = 0; j < n; ++j) {
    m.basis.push_back(iota * m.basis[j] * iota);
    m.names.push_back("C" + std::to_string(j + 1));
  }
  for (const auto& X : m.basis)
    if (!in_lie_algebra(m, X)) throw TheoremViolation("conformal Lie basis element leaves the quadric");
  return m;
}

Matrix translation(const ConformalModel& m, const std::vector<Rational>& a) {
  // n_a (alpha, v, beta) = (alpha, alpha a + v, alpha P(a) + 2 P(a, v) + beta)
  int n = m.n;
  if (int(a.size()) != n) throw ContractViolation("translation vector has the wrong size");
  Matrix g = Matrix::identity(n + 2);
  auto Pa = m.P.apply(a);
  Rational Paa;
  for (int j = 0; j < n; ++j) {
    g(1 + j, 0) = a[j];
    g(n + 1, 1 + j) = Pa[j] * Rational(2);
    Paa += a[j] * Pa[j];
  }
  g(n + 1, 0) = Paa;
  return g;
}

Matrix dilation(const ConformalModel& m, const Rational& t) {
  if (t.is_zero()) throw ContractViolation("dilation by zero");
  Matrix g = Matrix::identity(m.n + 2);
  g(0, 0) = Rational(1) / t;
  g(m.n + 1, m.n + 1) = t;
  return g;
}

Matrix inversion(const ConformalModel& m) {
  // x -> -x^{-1} = -adj(x)/P(x):  (alpha, v, beta) -> (beta, -adj v, alpha)
  int n = m.n;
  Matrix g(n + 2, n + 2);
  g(0, n + 1) = g(n + 1, 0) = Rational(1);
  Matrix adj = linear_matrix(m.alg->adj, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(1 + i, 1 + j) = -adj(i, j);
  return g;
}

Matrix rotation(const ConformalModel& m, const Matrix& A) {
  int n = m.n;
  if (A.rows() != n || A.cols() != n) throw ContractViolation("rotation generator has the wrong size");
  if (!(A.transpose() * m.P + m.P * A).is_zero()) throw ContractViolation("rotation generator not in so(p,q)");
  Matrix I = Matrix::identity(n);
  auto inv = inverse(I - A);
  if (!inv) throw SingularElement("Cayley transform undefined (1 is an eigenvalue)");
  return embed_middle(*inv * (I + A));
}

bool in_group(const ConformalModel& m, const Matrix& g) { return g.transpose() * m.J * g == m.J; }
bool in_lie_algebra(const ConformalModel& m, const Matrix& X) {
  return (X.transpose() * m.J + m.J * X).is_zero();
}

std::vector<Rational> kappa_embed(const ConformalModel& m, const std::vector<Rational>& v) {
  if (int(v.size()) != m.n) throw ContractViolation("point has the wrong size");
  std::vector<Rational> w{Rational(1)};
  w.insert(w.end(), v.begin(), v.end());
  Rational P;
  auto Pv = m.P.apply(v);
  for (int j = 0; j < m.n; ++j) P += v[j] * Pv[j];
  w.push_back(P);
  return w;
}

Rational quadric(const ConformalModel& m, const std::vector<Rational>& w) {
  Rational q;
  auto Jw = m.J.apply(w);
  for (std::size_t i = 0; i < w.size(); ++i) q += w[i] * Jw[i];
  return q;
}

Rational cocycle(const ConformalModel& m, const Matrix& g, const std::vector<Rational>& x) {
  return g.apply(kappa_embed(m, x))[0];
}

std::vector<Rational> act(const ConformalModel& m, const Matrix& g, const std::vector<Rational>& x) {
  auto w = g.apply(kappa_embed(m, x));
  if (w[0].is_zero()) throw SingularElement("g maps x to the conformal boundary (point at infinity)");
  std::vector<Rational> out(w.begin() + 1, w.begin() + 1 + m.n);
  for (auto& c : out) c = c / w[0];
  return out;
}

DiffOp dpi(const ConformalModel& m, const Matrix& X, const ParamPoly& lambda, const VarSpaceP& space, int offset) {
  VectorField f = field(m, X, space, offset);
  DiffOp op = DiffOp::mul(f.sigma.scaled(lambda));
  for (int j = 0; j < m.n; ++j) op -= DiffOp::mul(f.V[j]) * DiffOp::partial(space, offset + j);
  return op;
}

DiffOp dpi2(const ConformalModel& m, const Matrix& X, const ParamPoly& lambda, const ParamPoly& mu) {
  return dpi(m, X, lambda, m.xyspace, 0) + dpi(m, X, mu, m.xyspace, m.n);
}

DiffOp dpi_diag(const ConformalModel& m, const Matrix& X, const ParamPoly& nu) {
  const auto& vs = m.xyspace;
  VectorField f = field(m, X, vs, 0);
  DiffOp op = DiffOp::mul(f.sigma.scaled(nu));
  for (int j = 0; j < m.n; ++j)
    op -= DiffOp::mul(f.V[j]) * (DiffOp::partial(vs, j) + DiffOp::partial(vs, m.n + j));
  return op;
}

Matrix lie_bracket(const Matrix& X, const Matrix& Y) { return X * Y - Y * X; }

namespace {
const ParamPoly& lam() {
  static const ParamPoly v = ParamPoly::var(Param::lambda);
  return v;
}
const ParamPoly& mu() {
  static const ParamPoly v = ParamPoly::var(Param::mu);
  return v;
}
}  // namespace

DiffOp covariance_residual(const ConformalModel& m, const DiffOp& Op, const Matrix& X, int shift) {
  if (!same_space(Op.space(), m.xyspace)) throw ContractViolation("operator is not on the x,y space");
  return Op * dpi2(m, X, lam(), mu()) - dpi2(m, X, lam() + ParamPoly(shift), mu() + ParamPoly(shift)) * Op;
}

DiffOp restricted_covariance_residual(const ConformalModel& m, const DiffOp& Op, const Matrix& X,
                                      int target_shift) {
  if (!same_space(Op.space(), m.xyspace)) throw ContractViolation("operator is not on the x,y space");
  DiffOp lhs = restrict_diagonal(Op * dpi2(m, X, lam(), mu()));
  DiffOp rhs = restrict_diagonal(dpi_diag(m, X, lam() + mu() + ParamPoly(target_shift)) * Op);
  return lhs - rhs;
}

bool covariance_apply_check(const ConformalModel& m, const DiffOp& Op, const Matrix& X, int shift, int max_deg) {
  const auto& vs = m.xyspace;
  int nv = vs->size();
  DiffOp A = dpi2(m, X, lam(), mu());
  DiffOp B = dpi2(m, X, lam() + ParamPoly(shift), mu() + ParamPoly(shift));
  // all exponents of total degree <= max_deg
  std::vector<Exp> exps{Exp{}};
  for (std::size_t k = 0; k < exps.size(); ++k) {
    int deg = 0;
    for (int i = 0; i < nv; ++i) deg += exps[k][i];
    if (deg == max_deg) continue;
    int last = nv - 1;
    while (last >= 0 && exps[k][last] == 0) --last;
    for (int i = std::max(last, 0); i < nv; ++i) {
      Exp e = exps[k];
      e[i] += 1;
      exps.push_back(e);
    }
  }
  for (const auto& e : exps) {
    MPoly f = MPoly::monomial(vs, e);
    if (Op.apply(A.apply(f)) != B.apply(Op.apply(f))) return false;
  }
  return true;
}

bool hua_check(const ConformalModel& m, const Matrix& g, const std::vector<Rational>& x,
               const std::vector<Rational>& y) {
  auto gx = act(m, g, x), gy = act(m, g, y);
  std::vector<Rational> d(m.n), e(m.n);
  for (int j = 0; j < m.n; ++j) {
    d[j] = gx[j] - gy[j];
    e[j] = x[j] - y[j];
  }
  return det_value(element(m.alg, d)) * cocycle(m, g, x) * cocycle(m, g, y) == det_value(element(m.alg, e));
}

bool hua_check(const AlgebraP& alg, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  auto xi = inverse(element(alg, x)), yi = inverse(element(alg, y));
  std::vector<Rational> d(alg->n), e(alg->n);
  for (int j = 0; j < alg->n; ++j) {
    d[j] = yi.x[j] - xi.x[j];
    e[j] = x[j] - y[j];
  }
  return det_value(element(alg, d)) * det_value(element(alg, x)) * det_value(element(alg, y)) ==
         det_value(element(alg, e));
}

double knapp_stein_kernel(const AlgebraP& alg, double lambda, bool eps_minus, const std::vector<double>& x,
                          const std::vector<double>& y) {
  if (int(x.size()) != alg->n || int(y.size()) != alg->n) throw ContractViolation("point has the wrong size");
  double D = 0;
  for (const auto& [mono, c] : alg->det.terms()) {
    Exp e = mono.xexp();
    double v = c.to_double();
    for (int j = 0; j < alg->n; ++j) v *= std::pow(x[j] - y[j], e[j]);
    D += v;
  }
  if (D == 0) throw SingularElement("kernel evaluated on det(x - y) = 0");
  double v = std::pow(std::abs(D), -2.0 * alg->n / alg->r + lambda);
  return eps_minus && D < 0 ? -v : v;
}

}  // namespace jc
