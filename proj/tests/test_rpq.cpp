#include <random>

#include "doctest.h"
#include "jc/conformal.hpp"
#include "jc/detpower.hpp"
#include "jc/errors.hpp"
#include "jc/fischer.hpp"
#include "jc/rpq.hpp"
#include "jc/weyl.hpp"
#include "test_util.hpp"

using namespace jc;
using jc::testing::random_poly;

namespace {
const std::vector<std::pair<int, int>> kSigs{{2, 1}, {2, 2}, {3, 1}};
}

TEST_CASE("hand-coded operators equal the generic ones") {
  for (auto [p, q] : kSigs) {
    auto ops = rpq_operators(p, q);
    INFO(ops.alg->spec);
    DetCalculus dc(ops.alg, true);
    DiffOp D = Dst_operator(dc);
    CHECK(ops.D == D);
    EstResult e = build_Est(dc, D);
    CHECK(ops.E == e.E);
    CHECK(ops.F == build_F(*ops.alg, e.E));
    CHECK(ops.F == build_F(*ops.alg, ops.E));
    // round trip through the Fourier side
    CHECK(fourier_conjugate(ops.E.scaled(Rational(-1)).scaled(ParamPoly::var(Param::tau, -2)),
                            fourier_gram(*ops.alg, true)) == ops.D);
  }
}

TEST_CASE("D_{s,t} examples") {
  auto ops = rpq_operators(2, 1);
  const auto& vs = ops.space;
  int n = ops.n;
  MPoly one(vs, ParamPoly(1));
  ParamPoly s = ParamPoly::var(Param::s), t = ParamPoly::var(Param::t);
  MPoly Px = det_in(*ops.alg, vs, 0), Py = det_in(*ops.alg, vs, n), Pxy(vs);
  for (int j = 0; j < n; ++j) Pxy += (MPoly::var(vs, j) * MPoly::var(vs, n + j)).scaled(Rational(j < 2 ? 1 : -1));
  MPoly expect = Px.scaled(ParamPoly(2) * t * (ParamPoly(2) * t - ParamPoly(2) + ParamPoly(n))) -
                 Pxy.scaled(ParamPoly(8) * s * t) +
                 Py.scaled(ParamPoly(2) * s * (ParamPoly(2) * s - ParamPoly(2) + ParamPoly(n)));
  CHECK(ops.D.apply(one) == expect);
  CHECK(ops.D.subs_param(Param::s, 0).subs_param(Param::t, 0).apply(one).is_zero());

  // brute force at (s,t) = (3,2)
  DetCalculus dc(ops.alg, true);
  std::mt19937_64 rng(21);
  DiffOp D32 = ops.D.subs_param(Param::s, 3).subs_param(Param::t, 2);
  for (int k = 0; k < 5; ++k) {
    MPoly f = random_poly(rng, vs, 2, 4);
    MPoly lhs = apply_diffop(dc.wave_symbol(), dc.det_x().pow(3) * dc.det_y().pow(2) * f);
    CHECK(lhs == dc.det_x().pow(2) * dc.det_y() * D32.apply(f));
  }
}

TEST_CASE("E_{s,t} examples") {
  auto ops = rpq_operators(2, 2);
  MPoly one(ops.space, ParamPoly(1));
  CHECK(ops.E.apply(one).is_zero());
  // coefficient of d/dx1 d/dy1 is 8(s-1)(t-1)
  Exp e{};
  e[0] = 1;
  e[ops.n] = 1;
  ParamPoly s1 = ParamPoly::var(Param::s) - ParamPoly(1), t1 = ParamPoly::var(Param::t) - ParamPoly(1);
  CHECK(ops.E.coefficient(e) == MPoly(ops.space, ParamPoly(8) * s1 * t1));
}

TEST_CASE("B^(1) examples and res o F") {
  for (auto [p, q] : kSigs) {
    auto ops = rpq_operators(p, q);
    INFO(ops.alg->spec);
    BracketN b1 = build_BN(ops, 1);
    auto c = proportionality(b1.B, ops.B1);
    REQUIRE(c.has_value());
    CHECK(*c == Rational(1));
    MPoly one(ops.space, ParamPoly(1));
    CHECK(b1.B.apply(one).is_zero());
    Rational h = Rational(ops.n, 2) - Rational(1);
    DiffOp B00 = ops.B1.subs_param(Param::lambda, 0).subs_param(Param::mu, 0);
    DiffOp Pdxy(ops.space);
    for (int j = 0; j < ops.n; ++j)
      Pdxy += (DiffOp::partial(ops.space, j) * DiffOp::partial(ops.space, ops.n + j)).scaled(Rational(j < p ? 1 : -1));
    CHECK(B00 == Pdxy.scaled(Rational(8) * h * h));
    DiffOp Bh = ops.B1.subs_param(Param::lambda, ParamPoly(h));
    DiffOp Pdx(ops.space);
    for (int j = 0; j < ops.n; ++j)
      Pdx += DiffOp::partial(ops.space, j).pow(2).scaled(Rational(j < p ? 1 : -1));
    ParamPoly mu = ParamPoly::var(Param::mu);
    CHECK(Bh == Pdx.scaled(ParamPoly(4) * mu * (ParamPoly(h) - mu)));
  }
}

TEST_CASE("B^(N) covariance and symmetry") {
  for (auto [p, q] : kSigs) {
    auto ops = rpq_operators(p, q);
    auto m = conformal_model(ops.alg);
    INFO(ops.alg->spec);
    CHECK(swap_xy(ops.F) == ops.F);
    for (int N : {1, 2}) {
      BracketN b = build_BN(ops, N);
      INFO("N = " << N);
      CHECK(b.B.order() == 2 * N);
      CHECK(swap_xy(b.B) == b.B);
      for (std::size_t k = 0; k < m.basis.size(); ++k) {
        INFO(m.names[k]);
        REQUIRE(restricted_covariance_residual(m, b.FN, m.basis[k], 2 * N).is_zero());
      }
    }
  }
  auto ops = rpq_operators(2, 1);
  auto m = conformal_model(ops.alg);
  BracketN b2 = build_BN(ops, 2);
  // wrong target shift is detected
  CHECK(!restricted_covariance_residual(m, b2.FN, m.basis[m.n], 2).is_zero());
}

TEST_CASE("signature guard") {
  CHECK_THROWS_AS(rpq_operators(1, 2), ConfigError);
  CHECK_THROWS_AS(rpq_operators(3, 0), ConfigError);
  CHECK_THROWS_AS(rpq_operators(5, 5), ResourceLimit);
}
