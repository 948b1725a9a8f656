// Exact rationals: inline int64 numerator/denominator, GMP fallback on overflow.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace jc {

class Rational {
 public:
  Rational() = default;
  Rational(int v) : n_(v) {}
  Rational(long v) { set_small_or_big(v, 1); }
  Rational(long long v) { set_small_or_big(v, 1); }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q) { assign(q); }

  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  double to_double() const;
  std::string str() const;

  // numerator/denominator as GMP integers
  mpz_class num() const;
  mpz_class den() const;

  Rational operator-() const;
  Rational inv() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational pow(int e) const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

 private:
  // |n_| and d_ stay below 2^62 so two-term cross products fit in __int128.
  static constexpr std::int64_t kLimit = std::int64_t{1} << 62;

  void set_small_or_big(__int128 n, __int128 d);
  void assign(const mpq_class& q);
  bool small() const { return !big_; }

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// binomial and factorial helpers used across the polynomial code
Rational factorial(int k);
Rational falling(int b, int g);  // b(b-1)...(b-g+1)
Rational binomial(int a, int g);

}  // namespace jc
