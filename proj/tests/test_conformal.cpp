#include <cmath>
#include <random>

#include "doctest.h"
#include "jc/conformal.hpp"
#include "jc/detpower.hpp"
#include "jc/errors.hpp"
#include "jc/weyl.hpp"
#include "test_util.hpp"

using namespace jc;
using jc::testing::random_poly;
using jc::testing::random_rational;

namespace {

// Q[eps]/(eps^2)
struct Dual {
  Rational a, b;
};
Dual operator+(Dual x, Dual y) { return {x.a + y.a, x.b + y.b}; }
Dual operator*(Dual x, Dual y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
Dual inv(Dual x) { return {Rational(1) / x.a, -x.b / (x.a * x.a)}; }

Dual eval(const MPoly& f, const std::vector<Dual>& pt) {
  Dual acc{};
  for (const auto& [m, c] : f.terms()) {
    Dual v{c, Rational(0)};
    Exp e = m.xexp();
    for (std::size_t j = 0; j < pt.size(); ++j)
      for (int k = 0; k < e[j]; ++k) v = v * pt[j];
    acc = acc + v;
  }
  return acc;
}

// d/de at e = 0 of a(g^{-1},x)^{-lambda} f(g^{-1} x) with g = exp(e X), straight from the group action
Rational group_derivative(const ConformalModel& m, const Matrix& X, int lambda, const MPoly& f,
                          const std::vector<Rational>& x0) {
  auto k = kappa_embed(m, x0);
  auto Xk = X.apply(k);
  std::vector<Dual> w;
  for (std::size_t i = 0; i < k.size(); ++i) w.push_back({k[i], -Xk[i]});  // (I - eps X) kappa
  Dual ainv = inv(w[0]);
  std::vector<Dual> pt;
  for (int j = 0; j < m.n; ++j) pt.push_back(w[1 + j] * ainv);
  Dual fac{Rational(1), Rational(0)};
  for (int j = 0; j < std::abs(lambda); ++j) fac = fac * (lambda > 0 ? ainv : w[0]);
  return (fac * eval(f, pt)).b;
}

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::vector<Rational> x;
  for (int j = 0; j < n; ++j) x.push_back(random_rational(rng));
  return x;
}

}  // namespace

TEST_CASE("group generators preserve the quadric") {
  std::mt19937_64 rng(11);
  for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    auto m = conformal_model(make_rpq(p, q));
    INFO(m.alg->spec);
    CHECK(int(m.basis.size()) == (m.n + 1) * (m.n + 2) / 2);
    Matrix span(int(m.basis.size()), (m.n + 2) * (m.n + 2));
    for (int b = 0; b < int(m.basis.size()); ++b)
      for (int i = 0; i < m.n + 2; ++i)
        for (int j = 0; j < m.n + 2; ++j) span(b, i * (m.n + 2) + j) = m.basis[b](i, j);
    CHECK(rank(span) == int(m.basis.size()));
    for (const auto& X : m.basis) CHECK(in_lie_algebra(m, X));
    CHECK(in_group(m, inversion(m)));
    CHECK(in_group(m, dilation(m, Rational(3, 2))));
    for (int k = 0; k < 10; ++k) {
      CHECK(in_group(m, translation(m, random_point(rng, m.n))));
      Matrix A(m.n, m.n);
      A(0, m.n - 1) = random_rational(rng) * m.P(m.n - 1, m.n - 1);
      A(m.n - 1, 0) = -A(0, m.n - 1) / m.P(m.n - 1, m.n - 1) * m.P(0, 0);
      if (A(0, m.n - 1) == Rational(1) || A(0, m.n - 1) == Rational(-1)) continue;
      CHECK(in_group(m, rotation(m, A)));
    }
    auto x = random_point(rng, m.n);
    CHECK(quadric(m, kappa_embed(m, x)).is_zero());
  }
}

TEST_CASE("action, cocycle and the inversion") {
  auto m = conformal_model(make_rpq(2, 1));
  // translation moves points, cocycle 1
  std::vector<Rational> a{Rational(1), Rational(2), Rational(-1)}, x{Rational(3), Rational(0), Rational(1)};
  Matrix T = translation(m, a);
  CHECK(act(m, T, x) == std::vector<Rational>{Rational(4), Rational(2), Rational(0)});
  CHECK(cocycle(m, T, x) == Rational(1));
  // inversion is -x^{-1} with cocycle P(x)
  Matrix iota = inversion(m);
  auto xi = inverse(element(m.alg, x)).x;
  for (auto& c : xi) c = -c;
  CHECK(act(m, iota, x) == xi);
  CHECK(cocycle(m, iota, x) == det_value(element(m.alg, x)));
  CHECK(act(m, dilation(m, Rational(2)), x) == std::vector<Rational>{Rational(6), Rational(0), Rational(2)});
  // a light-like point goes to infinity
  std::vector<Rational> nul{Rational(1), Rational(0), Rational(1)};
  CHECK(det_value(element(m.alg, nul)).is_zero());
  CHECK_THROWS_AS(act(m, iota, nul), SingularElement);

  std::mt19937_64 rng(12);
  std::vector<Matrix> gens{iota, dilation(m, Rational(-2, 3))};
  for (int k = 0; k < 3; ++k) gens.push_back(translation(m, random_point(rng, m.n)));
  std::uniform_int_distribution<int> pick(0, int(gens.size()) - 1);
  int tested = 0;
  while (tested < 100) {
    Matrix g1 = gens[pick(rng)] * gens[pick(rng)], g2 = gens[pick(rng)] * gens[pick(rng)];
    auto y = random_point(rng, m.n);
    try {
      auto g2y = act(m, g2, y);
      auto lhs = act(m, g1 * g2, y);
      REQUIRE(lhs == act(m, g1, g2y));
      REQUIRE(cocycle(m, g1 * g2, y) == cocycle(m, g1, g2y) * cocycle(m, g2, y));
      ++tested;
    } catch (const SingularElement&) {
    }
  }
}

TEST_CASE("covariance of det under the conformal group") {
  std::mt19937_64 rng(13);
  for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    auto m = conformal_model(make_rpq(p, q));
    Matrix iota = inversion(m);
    int tested = 0;
    while (tested < 30) {
      Matrix g = translation(m, random_point(rng, m.n)) * iota * dilation(m, Rational(3)) *
                 translation(m, random_point(rng, m.n)) * iota;
      auto x = random_point(rng, m.n), y = random_point(rng, m.n);
      try {
        REQUIRE(hua_check(m, g, x, y));
        ++tested;
      } catch (const SingularElement&) {
      }
    }
  }
  // x -> -x^{-1} in Sym(1), Sym(2) against matrix inverses
  for (const auto& a : {make_sym(1), make_sym(2), make_sym(3), make_mat(2), make_herm(2)}) {
    INFO(a->spec);
    for (int k = 0; k < 20; ++k) {
      auto x = sample_regular(a, rng).x, y = sample_regular(a, rng).x;
      REQUIRE(hua_check(a, x, y));
    }
  }
}

TEST_CASE("d pi against the group action") {
  std::mt19937_64 rng(14);
  for (auto [p, q] : {std::pair{2, 1}, {3, 1}}) {
    auto m = conformal_model(make_rpq(p, q));
    INFO(m.alg->spec);
    // translations: d pi(T_a) = -a . grad
    DiffOp T1 = dpi(m, m.basis[0], ParamPoly::var(Param::lambda), m.xspace, 0);
    CHECK(T1 == -DiffOp::partial(m.xspace, 0));
    for (int b = 0; b < int(m.basis.size()); ++b) {
      INFO(m.names[b]);
      for (int lambda : {-2, 0, 1, 3}) {
        DiffOp A = dpi(m, m.basis[b], ParamPoly(lambda), m.xspace, 0);
        for (int k = 0; k < 3; ++k) {
          MPoly f = random_poly(rng, m.xspace, 3, 4);
          auto x0 = random_point(rng, m.n);
          REQUIRE(A.apply(f).eval(x0).constant() == group_derivative(m, m.basis[b], lambda, f, x0));
        }
      }
    }
  }
}

TEST_CASE("d pi is a Lie algebra homomorphism") {
  for (auto [p, q] : {std::pair{2, 1}, {2, 2}}) {
    auto m = conformal_model(make_rpq(p, q));
    ParamPoly l = ParamPoly::var(Param::lambda);
    for (std::size_t i = 0; i < m.basis.size(); ++i)
      for (std::size_t j = i + 1; j < m.basis.size(); ++j) {
        DiffOp lhs = dpi(m, lie_bracket(m.basis[i], m.basis[j]), l, m.xspace, 0);
        DiffOp rhs = dpi(m, m.basis[i], l, m.xspace, 0).bracket(dpi(m, m.basis[j], l, m.xspace, 0));
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("F_{lambda,mu} intertwines and res o F is covariant") {
  for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    auto alg = make_rpq(p, q);
    auto m = conformal_model(alg);
    INFO(alg->spec);
    DetCalculus dc(alg, true);
    DiffOp F = build_F(*alg, build_Est(dc, Dst_operator(dc)).E);
    for (std::size_t b = 0; b < m.basis.size(); ++b) {
      INFO(m.names[b]);
      REQUIRE(covariance_residual(m, F, m.basis[b], 1).is_zero());
      REQUIRE(restricted_covariance_residual(m, F, m.basis[b], 2).is_zero());
      // the wrong shift fails where sigma != 0
      if (m.names[b][0] == 'H' || m.names[b][0] == 'C') REQUIRE(!covariance_residual(m, F, m.basis[b], 0).is_zero());
    }
    if (p == 2 && q == 1) CHECK(covariance_apply_check(m, F, m.basis.back(), 1, 3));
  }
}

TEST_CASE("restriction intertwines the tensor product") {
  auto m = conformal_model(make_rpq(2, 2));
  DiffOp I = DiffOp::identity(m.xyspace);
  for (const auto& X : m.basis) REQUIRE(restricted_covariance_residual(m, I, X, 0).is_zero());
}

TEST_CASE("Knapp-Stein kernel") {
  auto a = make_rpq(2, 1);
  std::vector<double> x{2, 0, 1}, y{0, 0, 0};
  // det = 4 - 1 = 3, exponent -3 + lambda
  CHECK(knapp_stein_kernel(a, 1.0, false, x, y) == doctest::Approx(std::pow(3.0, -2.0)));
  std::vector<double> z{0, 0, 1};  // det = -1
  CHECK(knapp_stein_kernel(a, 1.0, false, z, y) == doctest::Approx(1.0));
  CHECK(knapp_stein_kernel(a, 1.0, true, z, y) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(knapp_stein_kernel(a, 1.0, true, y, y), SingularElement);
  CHECK_THROWS_AS(conformal_model(make_sym(2)), UnsupportedKind);
}
