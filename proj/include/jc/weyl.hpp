// Fourier conjugation on the Weyl algebra and the families E_{s,t}, F_{lambda,mu}.
#pragma once

#include "jc/detpower.hpp"
#include "jc/diffop.hpp"

namespace jc {

// Fourier kernel Gram matrix on V (two_var: block diagonal on V x V)
Matrix fourier_gram(const Algebra& a, bool two_var);

// A -> F o A o F^{-1}:  d_j -> -tau (G x)_j,  x_j -> tau^{-1} (G^{-1} d)_j
DiffOp fourier_conjugate(const DiffOp& A, const Matrix& G);
// inverse automorphism:  x_j -> -tau^{-1} (G^{-1} d)_j,  d_j -> tau (G x)_j
DiffOp fourier_conjugate_inv(const DiffOp& A, const Matrix& G);
// A(-x, -d)
DiffOp parity(const DiffOp& A);

struct EstResult {
  DiffOp E0;          // tau-free part
  int tau_power = 0;  // E = tau^{tau_power} E0
  DiffOp E;           // tau kept formal, or resolved when tau = sqrt(-1) and the power is even
};
// E_{s,t} = FC^{-1}(D_{s,t}); throws TheoremViolation unless every term carries the same tau power -r
EstResult build_Est(const DetCalculus& dc, const DiffOp& D);
// F_{lambda,mu} = E_{n/r - lambda, n/r - mu}
DiffOp build_F(const Algebra& a, const DiffOp& E);

// coefficient restriction y -> x of an operator on V x V (derivatives kept)
DiffOp restrict_diagonal(const DiffOp& A);
MPoly restrict_diagonal(const MPoly& p);

}  // namespace jc
