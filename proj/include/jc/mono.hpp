// Packed monomial keys shared by ParamPoly, MPoly and DiffOp, and the sorted
// term-vector arithmetic underneath all three.
#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <utility>
#include <vector>

#include "jc/rational.hpp"

namespace jc {

inline constexpr int kMaxVars = 16;

// Formal parameters. tau is the Fourier constant and may carry negative powers.
enum class Param : int { s = 0, t = 1, lambda = 2, mu = 3, tau = 4 };
inline constexpr int kNumParams = 5;

using Exp = std::array<std::uint8_t, kMaxVars>;

// Byte layout (compared with memcmp, so the order is graded lex in x, then
// graded lex in the derivative slots, then lex in the parameters):
//   [0] total x degree, [1..16] x exponents,
//   [17] total derivative order, [18..33] derivative exponents,
//   [34..37] s t lambda mu exponents, [38] tau exponent + 128.
struct Mono {
  static constexpr int kXDeg = 0, kX = 1, kDDeg = 17, kD = 18, kP = 34, kTau = 38;
  std::array<std::uint8_t, 40> b{};

  Mono() { b[kTau] = 128; }

  int x(int i) const { return b[kX + i]; }
  int d(int i) const { return b[kD + i]; }
  int xdeg() const { return b[kXDeg]; }
  int ddeg() const { return b[kDDeg]; }
  int param(Param p) const {
    return p == Param::tau ? int(b[kTau]) - 128 : int(b[kP + int(p)]);
  }

  void set_x(int i, int e);
  void set_d(int i, int e);
  void set_param(Param p, int e);

  Exp xexp() const;
  Exp dexp() const;
  bool params_zero() const;
  bool x_zero() const { return b[kXDeg] == 0; }
  bool d_zero() const { return b[kDDeg] == 0; }

  // copies of this monomial with some slots cleared
  Mono params_only() const;
  Mono without_params() const;

  Mono operator*(const Mono& o) const;

  friend bool operator<(const Mono& a, const Mono& c) {
    return std::memcmp(a.b.data(), c.b.data(), a.b.size()) < 0;
  }
  friend bool operator==(const Mono& a, const Mono& c) {
    return std::memcmp(a.b.data(), c.b.data(), a.b.size()) == 0;
  }
  friend bool operator!=(const Mono& a, const Mono& c) { return !(a == c); }
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept;
};

Mono mono_x(const Exp& e);
Mono mono_param(Param p, int e);

using Term = std::pair<Mono, Rational>;
using TermVec = std::vector<Term>;

// sorts, merges equal keys, drops zeros
void normalize_terms(TermVec& v);
TermVec add_terms(const TermVec& a, const TermVec& c, bool subtract = false);
TermVec scale_terms(const TermVec& a, const Rational& c);
// commutative product of monomials
TermVec mul_terms(const TermVec& a, const TermVec& c);
// multiply every key by m (order preserving)
TermVec shift_terms(const TermVec& a, const Mono& m, const Rational& c);
bool terms_equal(const TermVec& a, const TermVec& c);

}  // namespace jc
