#include <random>

#include "doctest.h"
#include "jc/detpower.hpp"
#include "jc/errors.hpp"
#include "jc/fischer.hpp"
#include "test_util.hpp"

using namespace jc;
using jc::testing::random_poly;

namespace {

ParamPoly s_var() { return ParamPoly::var(Param::s); }

// s (s + d/2) ... written out by hand for the oracle
ParamPoly hand_b(std::initializer_list<Rational> roots) {
  ParamPoly acc(1);
  for (const auto& c : roots) acc *= s_var() + ParamPoly(c);
  return acc;
}

MPoly subst_st(const MPoly& p, int s, int t) {
  return p.subs_param(Param::s, ParamPoly(s)).subs_param(Param::t, ParamPoly(t));
}

std::vector<Rational> point_with_negative_det(const DetCalculus& dc, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  while (true) {
    std::vector<Rational> p;
    for (int i = 0; i < dc.n(); ++i) p.emplace_back(d(rng));
    if (dc.det_x().eval(p).constant().sign() < 0) return p;
  }
}

}  // namespace

TEST_CASE("bernstein polynomials") {
  CHECK(bernstein_poly(make_sym(1)).b == s_var());
  CHECK(bernstein_poly(make_sym(2)).b == hand_b({0, Rational(1, 2)}));
  CHECK(bernstein_poly(make_sym(3)).b == hand_b({0, Rational(1, 2), 1}));
  CHECK(bernstein_poly(make_mat(2)).b == hand_b({0, 1}));
  CHECK(bernstein_poly(make_herm(2)).b == hand_b({0, 1}));
  CHECK(bernstein_poly(make_mat(3)).b == hand_b({0, 1, 2}));
  for (auto [p, q] : {std::pair{2, 1}, {3, 2}, {2, 2}}) {
    auto a = make_rpq(p, q);
    Rational half_n(p + q, 2);
    auto nat = bernstein_poly(a);
    CHECK(nat.matches);
    CHECK(nat.b == hand_b({0, half_n - 1}).scaled(Rational(4)) );
    // with d/dx dual to the trace form the factor 4 disappears
    auto tr = bernstein_poly(a, Pairing::Trace);
    CHECK(tr.b == hand_b({0, half_n - 1}));
    CHECK(tr.matches);
  }
}

TEST_CASE("bernstein identity at integer powers by plain differentiation") {
  for (const auto& a : {make_sym(2), make_sym(3), make_mat(2), make_herm(2), make_rpq(2, 1)}) {
    DetCalculus dc(a, false);
    auto b = bernstein_poly(a).b;
    for (int k = 1; k <= 4; ++k) {
      MPoly lhs = apply_diffop(dc.det_symbol(), dc.det_x().pow(k));
      MPoly rhs = dc.det_x().pow(k - 1).scaled(b.subs(Param::s, ParamPoly(k)));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("single variable chain rule") {
  DetCalculus dc(make_sym(1), false);
  auto r = dc.partial({0, 0, MPoly(dc.space(), ParamPoly(1))}, 0);
  CHECK(r.a == -1);
  CHECK(r.body == MPoly(dc.space(), s_var()));
}

TEST_CASE("D_{s,t} 1 on rpq") {
  for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    auto a = make_rpq(p, q);
    DetCalculus dc(a, true);
    int n = p + q;
    MPoly one(dc.space(), ParamPoly(1));
    ParamPoly s = s_var(), t = ParamPoly::var(Param::t);
    // polarization P(xi, zeta)
    std::vector<MPoly> sum;
    for (int i = 0; i < n; ++i) sum.push_back(MPoly::var(dc.space(), i) + MPoly::var(dc.space(), n + i));
    std::vector<MPoly> xs;
    for (int i = 0; i < n; ++i) xs.push_back(MPoly::var(dc.space(), i));
    MPoly pxz = (a->det.compose(sum, dc.space()) - dc.det_x() - dc.det_y()).scaled(Rational(1, 2));
    MPoly expect = dc.det_x().scaled(t * (t.scaled(2) + ParamPoly(n - 2)) * ParamPoly(2)) -
                   pxz.scaled(s * t * ParamPoly(8)) +
                   dc.det_y().scaled(s * (s.scaled(2) + ParamPoly(n - 2)) * ParamPoly(2));
    CHECK(extract_Dst(dc, one) == expect);
  }
}

TEST_CASE("det wave at s = t = 2 matches plain differentiation") {
  auto a = make_sym(2);
  DetCalculus dc(a, true);
  auto w = dc.det_wave_apply({0, 0, MPoly(dc.space(), ParamPoly(1))});
  CHECK(w.a == -2);
  CHECK(w.b == -2);
  MPoly plain = apply_diffop(dc.wave_symbol(), dc.det_x().pow(2) * dc.det_y().pow(2));
  CHECK(subst_st(w.body, 2, 2) == plain);
}

TEST_CASE("D_{0,0} is det(x) det(y) det(dx - dy)") {
  std::mt19937_64 rng(6);
  for (const auto& a : {make_sym(2), make_mat(2), make_rpq(2, 1)}) {
    DetCalculus dc(a, true);
    for (int k = 0; k < 5; ++k) {
      MPoly f = random_poly(rng, dc.space(), 3, 4);
      MPoly d00 = subst_st(extract_Dst(dc, f), 0, 0);
      CHECK(d00 == dc.det_x() * dc.det_y() * apply_diffop(dc.wave_symbol(), f));
    }
  }
}

TEST_CASE("D_{s,t} a(x) on Sym(2) against integer powers") {
  auto a = make_sym(2);
  DetCalculus dc(a, true);
  MPoly f = MPoly::var(dc.space(), 0);
  MPoly d = extract_Dst(dc, f);
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; l <= 5; ++l) {
      MPoly brute = apply_diffop(dc.wave_symbol(), dc.det_x().pow(k) * dc.det_y().pow(l) * f);
      REQUIRE(brute == dc.det_x().pow(k - 1) * dc.det_y().pow(l - 1) * subst_st(d, k, l));
    }
}

TEST_CASE("main identity divisibility and degree in (s,t)") {
  std::mt19937_64 rng(12);
  for (const auto& a : {make_sym(2), make_mat(2), make_rpq(2, 1), make_rpq(2, 2), make_sym(3)}) {
    INFO(a->spec);
    DetCalculus dc(a, true);
    int trials = a->r == 3 ? 3 : 10;
    for (int k = 0; k < trials; ++k) {
      MPoly f = random_poly(rng, dc.space(), 3, 4);
      MPoly d = extract_Dst(dc, f);
      for (const auto& [e, c] : d.coefficients()) REQUIRE(c.total_degree() <= a->r);
    }
  }
}

TEST_CASE("operator form of D_{s,t}") {
  std::mt19937_64 rng(13);
  for (const auto& a : {make_sym(2), make_mat(2), make_rpq(2, 1), make_rpq(2, 2)}) {
    INFO(a->spec);
    DetCalculus dc(a, true);
    DiffOp D = Dst_operator(dc);
    CHECK(D.order() == a->r);
    CHECK(D == Dst_operator_by_solve(dc, a->r));
    for (int k = 0; k < 5; ++k) {
      MPoly f = random_poly(rng, dc.space(), 4, 5);
      REQUIRE(D.apply(f) == extract_Dst(dc, f));
    }
  }
}

TEST_CASE("graded construction agrees on Sym(m)") {
  for (int m : {1, 2, 3}) {
    DetCalculus dc(make_sym(m), true);
    CHECK(Dst_operator_graded(dc) == Dst_operator(dc));
  }
}

TEST_CASE("sign flip of the split Bernstein identity") {
  std::mt19937_64 rng(21);
  for (const auto& a : {make_sym(2), make_sym(3), make_mat(2), make_rpq(2, 1), make_rpq(3, 2)}) {
    DetCalculus dc(a, false);
    for (int k = 1; k <= 4; ++k)
      for (bool em : {false, true}) {
        auto pt = point_with_negative_det(dc, rng);
        auto [lhs, rhs] = eps_sign_check(dc, k, em, pt);
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("Delta(fgh) triple expansion") {
  auto s2 = make_sym(2);
  const auto& vs = s2->chart;
  MPoly one(vs, ParamPoly(1)), a = MPoly::var(vs, 0), c = MPoly::var(vs, 2);
  CHECK(deltafgh_check(s2, one, one, one));
  CHECK(apply_diffop(det_of_dual(*s2, vs, 0), a * c) == one);
  CHECK(deltafgh_check(s2, a, c, one));
  std::mt19937_64 rng(31);
  for (int k = 0; k < 10; ++k)
    CHECK(deltafgh_check(s2, random_poly(rng, vs, 3, 4), random_poly(rng, vs, 3, 4), random_poly(rng, vs, 3, 4)));
  auto s3 = make_sym(3);
  for (int k = 0; k < 3; ++k)
    CHECK(deltafgh_check(s3, random_poly(rng, s3->chart, 2, 3), random_poly(rng, s3->chart, 2, 3),
                         random_poly(rng, s3->chart, 2, 3)));
}
