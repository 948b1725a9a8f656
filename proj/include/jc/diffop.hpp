// Normal-ordered differential operators with polynomial coefficients
// (coefficients on the left, derivatives on the right).
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jc/mpoly.hpp"

namespace jc {

class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(VarSpaceP vs) : vs_(std::move(vs)) {}
  static DiffOp identity(VarSpaceP vs);
  static DiffOp partial(VarSpaceP vs, int i);
  // multiplication by a polynomial
  static DiffOp mul(const MPoly& c);
  // p(d): every variable of p is read as the matching partial derivative
  static DiffOp symbol(const MPoly& p);
  // sum over d-exponents of coefficient * d^e
  static DiffOp from_coefficients(VarSpaceP vs, const std::vector<std::pair<Exp, MPoly>>& parts);
  static DiffOp from_terms(VarSpaceP vs, TermVec t);

  const VarSpaceP& space() const { return vs_; }
  const TermVec& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  int order() const;  // -1 for the zero operator

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  // composition A*B = A o B
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp& a, const DiffOp& b);
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  DiffOp scaled(const Rational& c) const;
  DiffOp scaled(const ParamPoly& c) const;
  DiffOp pow(int e) const;

  MPoly apply(const MPoly& f) const;

  // grouped by derivative exponent, ascending
  std::vector<std::pair<Exp, MPoly>> coefficients() const;
  MPoly coefficient(const Exp& d) const;

  DiffOp subs_param(Param p, const ParamPoly& v) const;
  // apply a map to every coefficient (same space)
  DiffOp map_coefficients(const std::function<MPoly(const MPoly&)>& f) const;
  // algebra homomorphism x_i -> xs[i], d_i -> ds[i]
  DiffOp substitute(const std::vector<DiffOp>& xs, const std::vector<DiffOp>& ds, const VarSpaceP& target) const;
  // commutator
  DiffOp bracket(const DiffOp& o) const { return *this * o - o * *this; }

  std::string str() const;

 private:
  void check_space(const DiffOp& o) const;
  VarSpaceP vs_;
  TermVec t_;
};

}  // namespace jc
