#include "jc/mono.hpp"

#include <algorithm>
#include <stdexcept>

namespace jc {

namespace {
[[noreturn]] void overflow() { throw std::overflow_error("monomial exponent overflow"); }
}  // namespace

void Mono::set_x(int i, int e) {
  int deg = int(b[kXDeg]) - b[kX + i] + e;
  if (e < 0 || e > 255 || deg > 255) overflow();
  b[kX + i] = std::uint8_t(e);
  b[kXDeg] = std::uint8_t(deg);
}

void Mono::set_d(int i, int e) {
  int deg = int(b[kDDeg]) - b[kD + i] + e;
  if (e < 0 || e > 255 || deg > 255) overflow();
  b[kD + i] = std::uint8_t(e);
  b[kDDeg] = std::uint8_t(deg);
}

void Mono::set_param(Param p, int e) {
  if (p == Param::tau) {
    if (e < -128 || e > 127) overflow();
    b[kTau] = std::uint8_t(e + 128);
  } else {
    if (e < 0 || e > 255) overflow();
    b[kP + int(p)] = std::uint8_t(e);
  }
}

Exp Mono::xexp() const {
  Exp e;
  std::memcpy(e.data(), b.data() + kX, kMaxVars);
  return e;
}

Exp Mono::dexp() const {
  Exp e;
  std::memcpy(e.data(), b.data() + kD, kMaxVars);
  return e;
}

bool Mono::params_zero() const {
  return b[kP] == 0 && b[kP + 1] == 0 && b[kP + 2] == 0 && b[kP + 3] == 0 && b[kTau] == 128;
}

Mono Mono::params_only() const {
  Mono m;
  std::memcpy(m.b.data() + kP, b.data() + kP, 5);
  return m;
}

Mono Mono::without_params() const {
  Mono m = *this;
  std::memset(m.b.data() + kP, 0, 4);
  m.b[kTau] = 128;
  return m;
}

Mono Mono::operator*(const Mono& o) const {
  Mono m;
  for (int i = 0; i < kTau; ++i) {
    int v = int(b[i]) + o.b[i];
    if (v > 255) overflow();
    m.b[i] = std::uint8_t(v);
  }
  int t = int(b[kTau]) + o.b[kTau] - 128;
  if (t < 0 || t > 255) overflow();
  m.b[kTau] = std::uint8_t(t);
  return m;
}

std::size_t MonoHash::operator()(const Mono& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto c : m.b) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return std::size_t(h);
}

Mono mono_x(const Exp& e) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i]) m.set_x(i, e[i]);
  return m;
}

Mono mono_param(Param p, int e) {
  Mono m;
  m.set_param(p, e);
  return m;
}

void normalize_terms(TermVec& v) {
  if (v.empty()) return;
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& c) { return a.first < c.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Rational acc = std::move(v[i].second);
    while (j < v.size() && v[j].first == v[i].first) {
      acc += v[j].second;
      ++j;
    }
    if (!acc.is_zero()) {
      v[out].first = v[i].first;
      v[out].second = std::move(acc);
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

TermVec add_terms(const TermVec& a, const TermVec& c, bool subtract) {
  TermVec r;
  r.reserve(a.size() + c.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < c.size()) {
    if (j == c.size() || (i < a.size() && a[i].first < c[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || c[j].first < a[i].first) {
      r.emplace_back(c[j].first, subtract ? -c[j].second : c[j].second);
      ++j;
    } else {
      Rational v = subtract ? a[i].second - c[j].second : a[i].second + c[j].second;
      if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

TermVec scale_terms(const TermVec& a, const Rational& c) {
  if (c.is_zero()) return {};
  TermVec r(a);
  if (c.is_one()) return r;
  for (auto& t : r) t.second *= c;
  return r;
}

TermVec mul_terms(const TermVec& a, const TermVec& c) {
  if (a.empty() || c.empty()) return {};
  if (a.size() == 1) return shift_terms(c, a[0].first, a[0].second);
  if (c.size() == 1) return shift_terms(a, c[0].first, c[0].second);
  TermVec r;
  r.reserve(a.size() * c.size());
  for (const auto& x : a)
    for (const auto& y : c) r.emplace_back(x.first * y.first, x.second * y.second);
  normalize_terms(r);
  return r;
}

TermVec shift_terms(const TermVec& a, const Mono& m, const Rational& c) {
  if (c.is_zero()) return {};
  TermVec r;
  r.reserve(a.size());
  for (const auto& t : a) r.emplace_back(t.first * m, t.second * c);
  return r;
}

bool terms_equal(const TermVec& a, const TermVec& c) {
  if (a.size() != c.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != c[i].first || !(a[i].second == c[i].second)) return false;
  return true;
}

}  // namespace jc
