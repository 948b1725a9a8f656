#include "jc/weyl.hpp"

#include "jc/errors.hpp"

namespace jc {

namespace {

DiffOp linear_x(const VarSpaceP& vs, const Matrix& M, int row, const ParamPoly& c) {
  MPoly v(vs);
  for (int k = 0; k < M.cols(); ++k)
    if (!M(row, k).is_zero()) v += MPoly::var(vs, k).scaled(M(row, k));
  return DiffOp::mul(v.scaled(c));
}

DiffOp linear_d(const VarSpaceP& vs, const Matrix& M, int row, const ParamPoly& c) {
  DiffOp v(vs);
  for (int k = 0; k < M.cols(); ++k)
    if (!M(row, k).is_zero()) v += DiffOp::partial(vs, k).scaled(M(row, k));
  return v.scaled(c);
}

DiffOp conjugate(const DiffOp& A, const Matrix& G, bool inverse_map) {
  const VarSpaceP& vs = A.space();
  int n = vs->size();
  if (G.rows() != n || G.cols() != n) throw ContractViolation("Fourier Gram matrix has the wrong size");
  auto Ginv = inverse(G);
  if (!Ginv) throw ContractViolation("Fourier Gram matrix is singular");
  ParamPoly tau = ParamPoly::var(Param::tau), tinv = ParamPoly::var(Param::tau, -1);
  std::vector<DiffOp> xs, ds;
  for (int j = 0; j < n; ++j) {
    if (inverse_map) {
      xs.push_back(linear_d(vs, *Ginv, j, -tinv));
      ds.push_back(linear_x(vs, G, j, tau));
    } else {
      xs.push_back(linear_d(vs, *Ginv, j, tinv));
      ds.push_back(linear_x(vs, G, j, -tau));
    }
  }
  return A.substitute(xs, ds, vs);
}

}  // namespace

Matrix fourier_gram(const Algebra& a, bool two_var) {
  if (!two_var) return a.fourier_pairing;
  int n = a.n;
  Matrix G(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      G(i, j) = a.fourier_pairing(i, j);
      G(n + i, n + j) = a.fourier_pairing(i, j);
    }
  return G;
}

DiffOp fourier_conjugate(const DiffOp& A, const Matrix& G) { return conjugate(A, G, false); }
DiffOp fourier_conjugate_inv(const DiffOp& A, const Matrix& G) { return conjugate(A, G, true); }

DiffOp parity(const DiffOp& A) {
  TermVec t = A.terms();
  for (auto& [m, c] : t)
    if ((m.xdeg() + m.ddeg()) % 2) c = -c;
  return DiffOp::from_terms(A.space(), std::move(t));
}

EstResult build_Est(const DetCalculus& dc, const DiffOp& D) {
  const Algebra& a = *dc.algebra();
  DiffOp E = fourier_conjugate_inv(D, fourier_gram(a, true));
  EstResult res;
  res.tau_power = -a.r;
  TermVec stripped;
  for (const auto& [m, c] : E.terms()) {
    if (m.param(Param::tau) != res.tau_power)
      throw TheoremViolation("E_{s,t} carries tau^" + std::to_string(m.param(Param::tau)) + ", expected tau^" +
                             std::to_string(res.tau_power));
    Mono k = m;
    k.set_param(Param::tau, 0);
    stripped.emplace_back(k, c);
  }
  res.E0 = DiffOp::from_terms(E.space(), std::move(stripped));
  if (a.tau_is_i && res.tau_power % 2 == 0)
    res.E = (res.tau_power / 2) % 2 ? -res.E0 : res.E0;  // i^{-r} = (-1)^{r/2}
  else
    res.E = E;
  return res;
}

DiffOp build_F(const Algebra& a, const DiffOp& E) {
  Rational nr(a.n, a.r);
  return E.subs_param(Param::s, ParamPoly(nr) - ParamPoly::var(Param::lambda))
      .subs_param(Param::t, ParamPoly(nr) - ParamPoly::var(Param::mu));
}

MPoly restrict_diagonal(const MPoly& p) {
  int n2 = p.nvars();
  if (n2 % 2) throw ContractViolation("restriction needs an x,y space");
  int n = n2 / 2;
  std::vector<int> map(n2);
  for (int i = 0; i < n; ++i) map[i] = map[n + i] = i;
  return p.remap(p.space(), map);
}

DiffOp restrict_diagonal(const DiffOp& A) {
  return A.map_coefficients([](const MPoly& c) { return restrict_diagonal(c); });
}

}  // namespace jc
