// Multivariate polynomials in point coordinates with ParamPoly coefficients.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jc/param_poly.hpp"

namespace jc {

// Ordered coordinate names; compared by content.
struct VarSpace {
  std::vector<std::string> names;
  int size() const { return int(names.size()); }
};
using VarSpaceP = std::shared_ptr<const VarSpace>;

VarSpaceP make_space(std::vector<std::string> names);
// x1..xn
VarSpaceP make_space(int n, const std::string& prefix = "x");
// x1..xn, y1..yn
VarSpaceP make_space_xy(int n);
bool same_space(const VarSpaceP& a, const VarSpaceP& b);

class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(VarSpaceP vs) : vs_(std::move(vs)) {}
  MPoly(VarSpaceP vs, const ParamPoly& c);
  static MPoly var(VarSpaceP vs, int i);
  static MPoly monomial(VarSpaceP vs, const Exp& e, const Rational& c = Rational(1));
  static MPoly from_terms(VarSpaceP vs, TermVec t);

  const VarSpaceP& space() const { return vs_; }
  int nvars() const { return vs_ ? vs_->size() : 0; }
  const TermVec& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_param_free() const;

  int degree() const;  // total coordinate degree, -1 for zero
  int min_degree() const;
  MPoly homogeneous_part(int k) const;
  bool is_homogeneous() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scaled(const Rational& c) const;
  MPoly scaled(const ParamPoly& c) const;
  MPoly pow(int e) const;

  MPoly derivative(int i) const;
  MPoly derivative(const Exp& e) const;

  // coefficient of x^e (a ParamPoly)
  ParamPoly coeff(const Exp& e) const;
  // grouped view: exponent -> ParamPoly coefficient
  std::vector<std::pair<Exp, ParamPoly>> coefficients() const;

  ParamPoly eval(const std::vector<Rational>& point) const;
  MPoly subs_param(Param p, const ParamPoly& v) const;
  // substitute variable i -> images[i] (all images share one target space)
  MPoly compose(const std::vector<MPoly>& images, const VarSpaceP& target) const;
  // rename variables into another space: variable i -> variable map[i]
  MPoly remap(const VarSpaceP& target, const std::vector<int>& map) const;

  // exact division by a parameter-free divisor; nullopt if not exact
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;

  std::string str() const;

 private:
  void check_space(const MPoly& o) const;
  VarSpaceP vs_;
  TermVec t_;
};

std::string exp_str(const VarSpace& vs, const Exp& e, const char* prefix_d = nullptr);

}  // namespace jc
