// Hand-transcribed operators for V = R^{p,q} and the bracket family B^(N).
#pragma once

#include <optional>

#include "jc/diffop.hpp"
#include "jc/jordan.hpp"

namespace jc {

struct RpqOperators {
  int p = 0, q = 0, n = 0;
  AlgebraP alg;
  VarSpaceP space;  // x1..xn, y1..yn (xi, zeta on the Fourier side)
  DiffOp D, E, F, B1;
};

// p >= 2, q >= 1; ConfigError otherwise
RpqOperators rpq_operators(int p, int q);

DiffOp explicit_Dst(int p, int q);
DiffOp explicit_Est(int p, int q);
// the second sum carries d/dy_j P(d/dx) (the display's d/dx_j there is a misprint: it breaks F = E_{n/2-lambda, n/2-mu})
DiffOp explicit_F(int p, int q);
// constant-coefficient operator on the x,y space; res is implicit
DiffOp explicit_B1(int p, int q);

struct BracketN {
  int N = 0;
  DiffOp FN;  // F_{lambda+N-1, mu+N-1} o ... o F_{lambda,mu}
  DiffOp B;   // res o FN
};
BracketN build_BN(const RpqOperators& ops, int N);

// c with A = c B, if such a rational constant exists
std::optional<Rational> proportionality(const DiffOp& A, const DiffOp& B);

// x <-> y in coefficients and derivatives, lambda <-> mu
DiffOp swap_xy(const DiffOp& A);

}  // namespace jc
