// Conformal group of R^{p,q} in the quadric model, its cocycle, and the
// infinitesimal principal series acting on polynomial functions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jc/diffop.hpp"
#include "jc/jordan.hpp"
#include "jc/linalg.hpp"

namespace jc {

struct ConformalModel {
  AlgebraP alg;  // rpq
  int n = 0;
  Matrix P;      // P(v) = v^T P v
  Matrix J;      // Gram matrix of Q(alpha, v, beta) = P(v) - alpha beta on (alpha, v, beta)
  VarSpaceP xspace, xyspace;
  std::vector<Matrix> basis;  // translations, dilation, rotations, special conformal
  std::vector<std::string> names;
};

ConformalModel conformal_model(const AlgebraP& rpq);

// group elements (all satisfy g^T J g = J)
Matrix translation(const ConformalModel& m, const std::vector<Rational>& a);
Matrix dilation(const ConformalModel& m, const Rational& t);  // v -> t v
Matrix inversion(const ConformalModel& m);                    // x -> -x^{-1}
// Cayley transform (I - A)^{-1}(I + A) of A in so(p,q), embedded in the middle block
Matrix rotation(const ConformalModel& m, const Matrix& A);
bool in_group(const ConformalModel& m, const Matrix& g);
bool in_lie_algebra(const ConformalModel& m, const Matrix& X);

std::vector<Rational> kappa_embed(const ConformalModel& m, const std::vector<Rational>& v);
Rational quadric(const ConformalModel& m, const std::vector<Rational>& w);
// a(g,x) = alpha(g kappa(x))
Rational cocycle(const ConformalModel& m, const Matrix& g, const std::vector<Rational>& x);
// g(x); throws SingularElement when alpha(g kappa(x)) = 0
std::vector<Rational> act(const ConformalModel& m, const Matrix& g, const std::vector<Rational>& x);

// d pi_lambda(X) = -V_X . grad + lambda sigma_X acting on variables offset..offset+n-1 of `space`,
// with V_X(x) = (X kappa(x))_V - alpha(X kappa(x)) x and sigma_X(x) = alpha(X kappa(x))
DiffOp dpi(const ConformalModel& m, const Matrix& X, const ParamPoly& lambda, const VarSpaceP& space, int offset);
// d(pi_lambda (x) pi_mu)(X) on the xy space
DiffOp dpi2(const ConformalModel& m, const Matrix& X, const ParamPoly& lambda, const ParamPoly& mu);
// -V_X(x).(grad_x + grad_y) + nu sigma_X(x): the target action seen through restriction
DiffOp dpi_diag(const ConformalModel& m, const Matrix& X, const ParamPoly& nu);

Matrix lie_bracket(const Matrix& X, const Matrix& Y);

// Op o d(pi_l (x) pi_m)(X) - d(pi_{l+shift} (x) pi_{m+shift})(X) o Op
DiffOp covariance_residual(const ConformalModel& m, const DiffOp& Op, const Matrix& X, int shift);
// res(Op o d(pi_l (x) pi_m)(X)) - res(dpi_diag(l + m + target_shift) o Op)
DiffOp restricted_covariance_residual(const ConformalModel& m, const DiffOp& Op, const Matrix& X, int target_shift);
// application form: both sides of the covariance applied to every monomial of degree <= max_deg
bool covariance_apply_check(const ConformalModel& m, const DiffOp& Op, const Matrix& X, int shift, int max_deg);

// det(g x - g y) = a(g,x)^{-1} det(x - y) a(g,y)^{-1}
bool hua_check(const ConformalModel& m, const Matrix& g, const std::vector<Rational>& x,
               const std::vector<Rational>& y);
// det(-x^{-1} + y^{-1}) det(x) det(y) = det(x - y) in any implemented algebra
bool hua_check(const AlgebraP& alg, const std::vector<Rational>& x, const std::vector<Rational>& y);

// det(x - y)^{-2n/r + lambda, eps}
double knapp_stein_kernel(const AlgebraP& alg, double lambda, bool eps_minus, const std::vector<double>& x,
                          const std::vector<double>& y);

}  // namespace jc
