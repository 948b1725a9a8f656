// Polynomials in the formal parameters s, t, lambda, mu and the Laurent
// variable tau, with exact rational coefficients.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "jc/mono.hpp"

namespace jc {

class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(int c) : ParamPoly(Rational(c)) {}
  ParamPoly(const Rational& c);
  static ParamPoly var(Param p, int e = 1);
  static ParamPoly from_terms(TermVec t);  // keys must have no x/d part

  const TermVec& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant() const;  // throws unless constant
  Rational constant_term() const;
  std::size_t size() const { return t_.size(); }

  int degree(Param p) const;
  int min_degree(Param p) const;
  int total_degree() const;  // in s, t, lambda, mu (tau excluded)
  bool depends_on(Param p) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return terms_equal(a.t_, b.t_); }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  ParamPoly pow(int e) const;
  ParamPoly scaled(const Rational& c) const;

  // p -> value; for tau the value must be a monomial when negative powers occur
  ParamPoly subs(Param p, const ParamPoly& value) const;
  ParamPoly eval(Param p, const Rational& v) const { return subs(p, ParamPoly(v)); }
  // coefficient of p^k as a polynomial in the remaining parameters
  ParamPoly coeff(Param p, int k) const;

  std::string str() const;

 private:
  TermVec t_;
};

std::string param_name(Param p);

}  // namespace jc
