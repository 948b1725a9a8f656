// Gamma factors, functional-equation matrices and constants for the local Zeta
// distributions, plus the numerical check of the R^{p,q} Fourier functional equation.
#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "jc/param_poly.hpp"
#include "jc/rational.hpp"

namespace jc {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;

// ---- gamma factors ----

// product of Gamma(a_k s + c_k) times base^(slope s) times constant, kept as a shift pattern
struct GammaFactor {
  struct Term {
    Rational a, c;
  };
  std::vector<Term> gammas;
  double base = 1, slope = 0, constant = 1;  // constant * base^(slope s)
  double eval(double s) const;
  // f(s+1)/f(s) as an exact polynomial in s times base^slope, when every a_k = 1
  ParamPoly shift_ratio_poly(Param var = Param::s) const;
  double shift_ratio_scale() const;
  // the first `count` poles of each Gamma term, ascending by distance from 0
  std::vector<Rational> poles(int count) const;
};

// gamma(s) = 2^{2s+n} pi^{n/2-1} Gamma(s+1) Gamma(s+n/2)
GammaFactor gamma_rpq(int n);
// Gamma_V(s) = prod_{k=1}^{r+} Gamma(s/2 - (k-1) d/4)
double gamma_V(double s, int rplus, int d);
// Gindikin Gamma_Omega(s) = (2 pi)^{(n-r)/2} prod_{j=1}^r Gamma(s - (j-1) d/2)
double gamma_Omega(double s, int r, int d, int n);

// ---- R^{p,q} matrix ----
Mat2 A_matrix_pq(int p, int q, double s);
// the same matrix rebuilt from the transforms of P_+^s and P_-^s
Mat2 A_matrix_pq_from_sectors(int p, int q, double s);

// ---- euclidean functional equations ----
enum class EuclCase { a, a_prime, b1, b2, c1, c2, c3, c4 };
std::string case_name(EuclCase c);
// classification of (r, d); ConfigError when no case applies
EuclCase euclidean_case(int r, int d);
struct EuclideanFE {
  EuclCase which{};
  cplx prefactor;     // scalar in front of gamma(s + n/r) (includes the sin/cos power for case c)
  Mat2 M;             // A(s) or B(s)
  bool even_odd = false;  // true: right-hand side in the (Z^e, Z^o) basis
};
// transcription of the displayed case at s (already shifted: s = s' = s + n/r);
// throws ConfigError if (r, d) does not belong to the case
EuclideanFE euclidean_matrices(EuclCase c, int r, int d, double s);
// same, with the case's (a') diagonal and (b) prefactor taken from the proof's computation
EuclideanFE euclidean_matrices_derived(EuclCase c, int r, int d, double s);

// ---- u_ij from the generating function ----
struct GaussQ {
  Rational re, im;
};
using GPoly = std::map<int, GaussQ>;  // polynomial in x
// u[i][j], 0 <= i, j <= r
std::vector<std::vector<GPoly>> uij_table(int r, int d);
cplx eval(const GPoly& p, cplx x);
std::string gpoly_str(const GPoly& p);
bool gpoly_equal(const GPoly& a, const GPoly& b);

struct GenFnComparison {
  double residual = 0;  // max |theorem - generating function| over j, eps
  cplx ratio;           // best constant theorem / generating function
  bool proportional = false;
};
// compares F(Z_{s,eps}) from the u_ij route with the case display at s (functional-equation variable s' = s + n/r)
GenFnComparison compare_with_generating_function(const EuclideanFE& fe, int r, int d, double s_prime);

// ---- Z bookkeeping ----
struct ZMaps {
  int r = 0;
  std::vector<std::vector<Rational>> pm;  // rows Z_{s,+}, Z_{s,-} over Z_0..Z_r
  std::vector<std::vector<Rational>> eo;  // rows Z^e, Z^o
  std::vector<std::vector<Rational>> parity_sums;  // rows sum_even Z_{2k}, sum_odd Z_{2k+1}
};
ZMaps zeta_maps(int r);

// ---- kappa constants ----
enum class KappaType { split, non_split, rpq, euclidean_b1 };
KappaType parse_kappa_type(const std::string& s);
struct KappaConst {
  cplx scale;          // constant factor
  ParamPoly num, den;  // rational function of s, t
  cplx eval(double s, double t) const;
};
// the constants as stated; r, d, n describe the algebra (n ignored for split/b1)
KappaConst kappa_const(KappaType type, int r, int d, int n);
// c(s, eps) for split / non-split types
cplx c_value(bool split, int r, int d, int n, int rplus, double s, bool eps_minus);
// c(s,e) c(t,h) / ((2 pi i)^r c(s+1,-e) c(t+1,-h))
cplx kappa_from_c(bool split, int r, int d, int n, int rplus, double s, double t, bool e_minus, bool h_minus);
// the c-table quotient in the non-split case, simplified by hand: (-2 pi i)^r over
// b_{r+,d}(-2s-2n/r) b_{r+,d}(2s+2) b_{r+,d}(-2t-2n/r) b_{r+,d}(2t+2)
KappaConst kappa_nonsplit_derived(int r, int d, int n, int rplus);
// kappa for R^{p,q} rebuilt from the gamma(s) shift pattern, the flip a(s+1) = -a(-,-)(s) applied twice,
// and the factor i^{-2} of the Fourier transform of P(x - y)
KappaConst kappa_rpq_derived(int n);

// ---- numerical functional equation on R^{p,q} ----
struct ZetaNumeric {
  int p = 0, q = 0;
  double s = 0, width = 1;
  bool odd = false;
  double lhs[2]{}, rhs[2]{};        // pipeline A, index 0: eps = +, 1: eps = -
  double lhs_b[2]{}, rhs_b[2]{};    // pipeline B
  double rel_error = 0;             // max over eps of |lhs - rhs| / max(|lhs|, |rhs|)
  double pipeline_gap = 0;          // max relative difference between the pipelines
  double sector_residual = 0;       // P_+ and P_- transforms checked one at a time
  double error_estimate = 0;
  bool converged = true;
  long evaluations = 0;
};
// g = exp(-width |x|^2) (odd: x_1 exp(-width |x|^2)); -1 < s and -s - n/2 > -1 required
ZetaNumeric numeric_zeta_check(int p, int q, double s, double width = 1.0, bool odd = false, double abs_tol = 1e-8);

}  // namespace jc
