// Calculus of expressions det(x)^{s+a} det(y)^{t+b} q(x,y): Bernstein
// identities and the bi-differential family D_{s,t}.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jc/diffop.hpp"
#include "jc/jordan.hpp"

namespace jc {

// det(x)^{s+a} * det(y)^{t+b} * body; the single-variable form ignores b
struct DetPowerExpr {
  int a = 0, b = 0;
  MPoly body;
};

enum class Pairing {
  Native,  // the algebra's own coordinate convention (P(d) for rpq)
  Trace    // d/dx taken with respect to tr(xy)
};

class DetCalculus {
 public:
  DetCalculus(AlgebraP alg, bool two_var, Pairing pairing = Pairing::Native);

  const AlgebraP& algebra() const { return alg_; }
  const VarSpaceP& space() const { return vs_; }
  bool two_var() const { return two_; }
  Pairing pairing() const { return pairing_; }
  int n() const { return alg_->n; }
  const MPoly& det_x() const { return det_x_; }
  const MPoly& det_y() const { return det_y_; }
  // det(G^{-1} xi) in the x slots, and det(G^{-1}(xi - zeta)) over all slots
  const MPoly& det_symbol() const { return sym_x_; }
  const MPoly& wave_symbol() const { return sym_wave_; }

  DetPowerExpr partial(const DetPowerExpr& e, int var) const;
  // d^gamma e for a multi-index over the space
  DetPowerExpr partial(const DetPowerExpr& e, const Exp& gamma) const;
  // symbol(d) e for a symbol homogeneous of degree k; the result has shifts (a-k, b-k)
  DetPowerExpr apply_symbol(const MPoly& symbol, const DetPowerExpr& e) const;
  // det(d/dx) e
  DetPowerExpr det_d(const DetPowerExpr& e) const { return apply_symbol(sym_x_, e); }
  // det(d/dx - d/dy) e
  DetPowerExpr det_wave_apply(const DetPowerExpr& e) const { return apply_symbol(sym_wave_, e); }
  // raise shifts to (a,b) by multiplying the body with det powers
  DetPowerExpr lower_to(const DetPowerExpr& e, int a, int b) const;

 private:
  AlgebraP alg_;
  bool two_;
  Pairing pairing_;
  VarSpaceP vs_;
  MPoly det_x_, det_y_, sym_x_, sym_wave_;
  std::vector<MPoly> grad_;  // d det_x / dx_i and d det_y / dy_i over the space
  mutable std::vector<std::map<int, MPoly>> det_pow_;  // [0] x, [1] y
  const MPoly& det_pow(int which, int k) const;
};

// D_{s,t} f: det(dx-dy)[det^s det^t f] divided exactly by det(x)^{r-1} det(y)^{r-1}.
// f lives over the calculus' xy space. Throws TheoremViolation if not divisible.
MPoly extract_Dst(const DetCalculus& dc, const MPoly& f);

// D_{s,t} as an operator, read off the Leibniz expansion of det(dx-dy) o det^s det^t
DiffOp Dst_operator(const DetCalculus& dc);
// the same operator recovered from its action on monomials of degree <= order
DiffOp Dst_operator_by_solve(const DetCalculus& dc, int order);
// W(Delta)-graded construction for Sym(m,R), m <= 3 (Leibnitz triple expansion)
DiffOp Dst_operator_graded(const DetCalculus& dc);

struct BernsteinResult {
  ParamPoly b;         // computed det(d) det^s / det^{s-1}
  ParamPoly expected;  // b_{r,d}(s), times 4 for rpq in the native convention
  bool matches = false;
  std::string convention;
};
BernsteinResult bernstein_poly(const AlgebraP& alg, Pairing pairing = Pairing::Native);

// det(d) det^{k,eps} at a point with det < 0 (computed from det^k by differentiation)
// against b(k) det^{k-1,-eps}; returns {lhs, rhs}
std::pair<Rational, Rational> eps_sign_check(const DetCalculus& dc, int k, bool eps_minus,
                                             const std::vector<Rational>& point);

// Delta(d)(fgh) via the triple Leibnitz coefficients of the graded W(Delta) basis
bool deltafgh_check(const AlgebraP& alg, const MPoly& f, const MPoly& g, const MPoly& h);

}  // namespace jc
