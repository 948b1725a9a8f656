// Constant-coefficient operators p(d/dx), the Fischer inner product,
// derivative spaces and the generalized Leibnitz expansion.
#pragma once

#include <vector>

#include "jc/linalg.hpp"
#include "jc/mpoly.hpp"

namespace jc {

// p(d/dx) q
MPoly apply_diffop(const MPoly& p, const MPoly& q);
// (p(d/dx) q)(0)
ParamPoly fischer_inner(const MPoly& p, const MPoly& q);

// Incrementally built span of parameter-free polynomials (reduced echelon form).
class PolySpan {
 public:
  explicit PolySpan(VarSpaceP vs) : vs_(std::move(vs)) {}
  // true if p was independent of the current span
  bool insert(const MPoly& p);
  bool contains(const MPoly& p) const;
  int dim() const { return int(rows_.size()); }
  const std::vector<MPoly>& inserted() const { return inserted_; }

 private:
  MPoly reduce(const MPoly& p) const;
  VarSpaceP vs_;
  std::vector<MPoly> rows_;  // monic, pairwise reduced on leading monomials
  std::vector<MPoly> inserted_;
};

struct DerivativeSpace {
  std::vector<MPoly> basis;  // grouped by degree, highest first
  std::vector<int> degree;   // degree of each basis element (homogeneous input)
  int dim() const { return int(basis.size()); }
  // basis elements of the given degree
  std::vector<MPoly> graded(int k) const;
};

// W(p): smallest space containing p and closed under every d/dx_i
DerivativeSpace derivative_space(const MPoly& p);

// Fischer-orthogonal basis of the same span (Gram-Schmidt over Q, degree by degree)
std::vector<MPoly> fischer_orthogonalize(const std::vector<MPoly>& basis);

// p^flat = p(d/dx) bold_p
MPoly flat(const MPoly& p, const MPoly& bold_p);

struct LeibnitzData {
  MPoly bold_p;
  std::vector<MPoly> basis;   // orthogonal basis p_i of W(bold_p)
  std::vector<Rational> norm; // (p_i, p_i)_F
  Matrix pair;                // (bold_p, p_i p_j)_F / (n_i n_j)
  // a_ijk of the triple expansion, normalized likewise; built on demand
  std::vector<Rational> triple;
  int rho() const { return int(basis.size()); }
  const Rational& a(int i, int j, int k) const {
    return triple[(std::size_t(i) * rho() + j) * rho() + k];
  }
};

LeibnitzData leibnitz_data(const MPoly& bold_p, bool with_triple = false);
// sum_ij c_ij (p_i(d) f)(p_j(d) g)
MPoly leibnitz_expand(const LeibnitzData& d, const MPoly& f, const MPoly& g);
MPoly leibnitz_expand(const MPoly& bold_p, const MPoly& f, const MPoly& g);
// sum_ijk a_ijk (p_i(d) f)(p_j(d) g)(p_k(d) h)
MPoly leibnitz_expand3(const LeibnitzData& d, const MPoly& f, const MPoly& g, const MPoly& h);

}  // namespace jc
