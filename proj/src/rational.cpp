#include "jc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace jc {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 uabs(i128 v) { return v < 0 ? u128(-v) : u128(v); }

void set_mpz_i128(mpz_class& z, i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  std::uint64_t hi = std::uint64_t(u >> 64), lo = std::uint64_t(u);
  z = hi;
  z <<= 64;
  z += mpz_class(static_cast<unsigned long>(lo));
  if (neg) z = -z;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  set_small_or_big(num, den);
}

void Rational::set_small_or_big(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(uabs(n), u128(d));
  if (g > 1) {
    n /= i128(g);
    d /= i128(g);
  }
  if (n == 0) d = 1;
  if (n > -kLimit && n < kLimit && d < kLimit) {
    n_ = std::int64_t(n);
    d_ = std::int64_t(d);
    big_.reset();
    return;
  }
  mpq_class q;
  mpz_class zn, zd;
  set_mpz_i128(zn, n);
  set_mpz_i128(zd, d);
  mpq_set_num(q.get_mpq_t(), zn.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), zd.get_mpz_t());
  assign(q);
}

void Rational::assign(const mpq_class& q) {
  const mpz_class n(q.get_num()), d(q.get_den());
  if (mpz_sizeinbase(n.get_mpz_t(), 2) < 62 && mpz_sizeinbase(d.get_mpz_t(), 2) < 62) {
    n_ = n.get_si();
    d_ = d.get_si();
    big_.reset();
  } else {
    mpq_class c(q);
    c.canonicalize();
    big_ = std::make_shared<const mpq_class>(std::move(c));
    n_ = 0;
    d_ = 1;
  }
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    // decimal literal read exactly
    mpf_class f;
    if (f.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    return Rational(mpq_class(f));
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const {
  if (small()) return d_ == 1;
  return big_->get_den() == 1;
}

int Rational::sign() const {
  if (small()) return (n_ > 0) - (n_ < 0);
  return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
  if (!small()) return *big_;
  mpq_class q;
  mpq_set_si(q.get_mpq_t(), long(n_), static_cast<unsigned long>(d_));
  return q;
}

double Rational::to_double() const {
  if (small()) return double(n_) / double(d_);
  return big_->get_d();
}

std::string Rational::str() const {
  if (small()) {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }
  return big_->get_str();
}

mpz_class Rational::num() const {
  if (small()) return mpz_class(static_cast<long>(n_));
  return big_->get_num();
}

mpz_class Rational::den() const {
  if (small()) return mpz_class(static_cast<long>(d_));
  return big_->get_den();
}

Rational Rational::operator-() const {
  Rational r;
  if (small()) {
    r.n_ = -n_;
    r.d_ = d_;
  } else {
    r.assign(-*big_);
  }
  return r;
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  Rational r;
  if (small()) {
    r.set_small_or_big(d_, n_);
  } else {
    mpq_class q;
    mpq_inv(q.get_mpq_t(), big_->get_mpq_t());
    r.assign(q);
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (small() && o.small()) {
    if (d_ == 1 && o.d_ == 1) {
      i128 s = i128(n_) + o.n_;
      if (s > -kLimit && s < kLimit) {
        n_ = std::int64_t(s);
        return *this;
      }
      set_small_or_big(s, 1);
      return *this;
    }
    std::uint64_t g = gcd64(std::uint64_t(d_), std::uint64_t(o.d_));
    if (g == 1) {
      set_small_or_big(i128(n_) * o.d_ + i128(o.n_) * d_, i128(d_) * o.d_);
      return *this;
    }
    i128 t = i128(n_) * (o.d_ / std::int64_t(g)) + i128(o.n_) * (d_ / std::int64_t(g));
    set_small_or_big(t, i128(d_ / std::int64_t(g)) * o.d_);
    return *this;
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (small() && o.small()) {
    if (n_ == 0 || o.n_ == 0) {
      n_ = 0;
      d_ = 1;
      return *this;
    }
    std::int64_t g1 = std::int64_t(gcd64(std::uint64_t(n_ < 0 ? -n_ : n_), std::uint64_t(o.d_)));
    std::int64_t g2 = std::int64_t(gcd64(std::uint64_t(o.n_ < 0 ? -o.n_ : o.n_), std::uint64_t(d_)));
    i128 n = i128(n_ / g1) * (o.n_ / g2);
    i128 d = i128(d_ / g2) * (o.d_ / g1);
    if (n > -kLimit && n < kLimit && d < kLimit) {
      n_ = std::int64_t(n);
      d_ = std::int64_t(d);
      return *this;
    }
    set_small_or_big(n, d);
    return *this;
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inv(); }

bool operator==(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.small() != b.small()) return false;  // canonical: big only when it does not fit
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) {
    i128 l = i128(a.n_) * b.d_, r = i128(b.n_) * a.d_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Rational Rational::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  Rational r(1), b(*this);
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational factorial(int k) {
  Rational r(1);
  for (int i = 2; i <= k; ++i) r *= Rational(i);
  return r;
}

Rational falling(int b, int g) {
  Rational r(1);
  for (int i = 0; i < g; ++i) r *= Rational(b - i);
  return r;
}

Rational binomial(int a, int g) {
  if (g < 0 || g > a) return Rational(0);
  return falling(a, g) / factorial(g);
}

}  // namespace jc
