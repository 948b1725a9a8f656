// Concrete simple real Jordan algebras in coordinates, plus the classification table.
#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "jc/linalg.hpp"
#include "jc/mpoly.hpp"

namespace jc {

enum class Kind { SymR, MatR, HermC, Rpq };

struct Algebra {
  Kind kind{};
  int m = 0, p = 0, q = 0;
  std::string spec;  // "sym:2", "mat:2", "herm:2", "rpq:2,1"
  // structure constants of the classification table
  int n = 0, r = 0, d = 0, e = 0, rplus = 0, dplus = 0;
  bool euclidean = false;
  VarSpaceP chart;
  std::vector<Rational> unit;
  // e_i o e_j = sum_k prod[i*n+j][..] e_k
  std::vector<std::vector<std::pair<int, Rational>>> prod;

  // (x,y) = tr(xy) in the chart
  Matrix trace_gram;
  // det(d/dx) means det(pairing^{-1} d) in coordinates
  Matrix pairing;
  // Fourier kernel exp(tau * xi^T fourier_pairing x)
  Matrix fourier_pairing;
  // true: tau stands for sqrt(-1) (quadratic-space convention); false: tau = 2 pi sqrt(-1)
  bool tau_is_i = false;

  // generic element data over the chart
  std::vector<MPoly> generic;   // coordinate functions
  std::vector<MPoly> min_poly;  // a_1 .. a_r
  MPoly det, trace;
  std::vector<MPoly> adj;  // det(x) x^{-1}, polynomial of degree r-1
};
using AlgebraP = std::shared_ptr<const Algebra>;

AlgebraP make_sym(int m);
AlgebraP make_mat(int m);
AlgebraP make_herm(int m);
AlgebraP make_rpq(int p, int q);
// "sym:m", "mat:m", "herm:m", "rpq:p,q"; metadata-only families raise UnsupportedKind
AlgebraP parse_algebra(const std::string& spec);

struct JordanElement {
  AlgebraP alg;
  std::vector<Rational> x;
};

JordanElement unit(const AlgebraP& a);
JordanElement element(const AlgebraP& a, std::vector<Rational> x);

inline bool is_zero_value(const Rational& v) { return v.is_zero(); }
inline bool is_zero_value(const MPoly& v) { return v.is_zero(); }
inline Rational scale_value(const Rational& v, const Rational& c) { return v * c; }
inline MPoly scale_value(const MPoly& v, const Rational& c) { return v.scaled(c); }

// product over any commutative coefficient ring (Rational or MPoly)
template <class T>
std::vector<T> jordan_mul(const Algebra& a, const std::vector<T>& x, const std::vector<T>& y) {
  std::vector<T> out(a.n, T{});
  for (int i = 0; i < a.n; ++i) {
    if (is_zero_value(x[i])) continue;
    for (int j = 0; j < a.n; ++j) {
      if (is_zero_value(y[j])) continue;
      const auto& sc = a.prod[std::size_t(i) * a.n + j];
      if (sc.empty()) continue;
      T xy = x[i] * y[j];
      for (const auto& [k, c] : sc) out[k] += scale_value(xy, c);
    }
  }
  return out;
}


JordanElement jordan_mul(const JordanElement& x, const JordanElement& y);
JordanElement jordan_pow(const JordanElement& x, int k);

// L(x) and P(x) = 2L(x)^2 - L(x^2) as matrices on V
Matrix mult_op(const JordanElement& x);
Matrix quad_rep(const JordanElement& x);

// rank of x: length of the independent power sequence 1, x, x^2, ...
int element_rank(const JordanElement& x);
// a_1..a_r of the generic minimal polynomial at a regular x; throws RankDeficiency
std::vector<Rational> generic_min_poly(const JordanElement& x);

Rational det_value(const JordanElement& x);
Rational trace_value(const JordanElement& x);
JordanElement inverse(const JordanElement& x);

// p^sharp(x) = p(x^{-1}) det(x), polynomial for homogeneous p of degree k
MPoly sharp(const AlgebraP& a, const MPoly& p, int k);

// number of negative eigenvalues (euclidean SymR only)
int signature_class(const JordanElement& x);

// leading k x k minor of the generic symmetric matrix (SymR only)
MPoly principal_minor(const AlgebraP& a, int k);

// random element with full rank and det != 0
JordanElement sample_regular(const AlgebraP& a, std::mt19937_64& rng, int range = 5);

// matrix realization (SymR/MatR) and its complex variant (HermC) for cross-checks
struct CMatrix {
  Matrix re, im;
};
CMatrix to_matrix(const JordanElement& x);
JordanElement from_matrix(const AlgebraP& a, const CMatrix& m);
CMatrix cmul(const CMatrix& a, const CMatrix& b);

// det(pairing^{-1} xi) as a polynomial in `space` starting at variable `offset`
MPoly det_of_dual(const Algebra& a, const VarSpaceP& space, int offset);
// det(x) placed at variables offset.. offset+n-1 of `space`
MPoly det_in(const Algebra& a, const VarSpaceP& space, int offset);

// determinant of a square matrix of polynomials (Laplace expansion)
MPoly poly_det(const std::vector<std::vector<MPoly>>& m);

// b_{r,d}(s) = s (s + d/2) ... (s + (r-1)d/2)
ParamPoly b_function(int r, const Rational& d, Param var = Param::s);

// ---- classification table ----
struct RegistryRow {
  std::string family;  // e.g. "Sym(m,R)"
  std::string type;    // I..IV
  std::string param;   // parameter name and value
  int n, r, d, e, rplus, dplus;
  bool supported;
  std::string cli_spec;  // empty for metadata-only rows
};
// rows instantiated for parameter values 1..max_param (where valid)
std::vector<RegistryRow> registry(int max_param = 4);
std::string registry_json(int max_param = 4);

}  // namespace jc
