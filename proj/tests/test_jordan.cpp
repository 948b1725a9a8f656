#include <random>

#include "doctest.h"
#include "jc/errors.hpp"
#include "jc/jordan.hpp"
#include "test_util.hpp"

using namespace jc;

namespace {

std::vector<AlgebraP> algebras() {
  return {make_sym(2), make_sym(3), make_mat(2), make_herm(2), make_rpq(2, 1), make_rpq(3, 2), make_rpq(2, 2)};
}

JordanElement random_element(const AlgebraP& a, std::mt19937_64& rng) {
  std::vector<Rational> x;
  for (int i = 0; i < a->n; ++i) x.push_back(jc::testing::random_rational(rng));
  return element(a, x);
}

bool eq(const JordanElement& a, const JordanElement& b) { return a.x == b.x; }

// Gaussian elimination over Q(i) for the complex determinant oracle
std::pair<Rational, Rational> complex_det(CMatrix m) {
  int n = m.re.rows();
  Rational dr(1), di(0);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m.re(i, c).is_zero() || !m.im(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return {0, 0};
    if (piv != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(m.re(piv, j), m.re(c, j));
        std::swap(m.im(piv, j), m.im(c, j));
      }
      dr = -dr;
      di = -di;
    }
    Rational pr = m.re(c, c), pi = m.im(c, c);
    Rational nr = dr * pr - di * pi, ni = dr * pi + di * pr;
    dr = nr;
    di = ni;
    Rational norm = pr * pr + pi * pi;
    Rational ir = pr / norm, ii = -pi / norm;  // 1/pivot
    for (int i = c + 1; i < n; ++i) {
      Rational fr = m.re(i, c) * ir - m.im(i, c) * ii, fi = m.re(i, c) * ii + m.im(i, c) * ir;
      for (int j = c; j < n; ++j) {
        Rational ar = m.re(c, j), ai = m.im(c, j);
        m.re(i, j) -= fr * ar - fi * ai;
        m.im(i, j) -= fr * ai + fi * ar;
      }
    }
  }
  return {dr, di};
}

}  // namespace

TEST_CASE("product examples") {
  auto r21 = make_rpq(2, 1);
  auto x = element(r21, {1, 1, 0}), y = element(r21, {2, 0, 3});
  CHECK(jordan_mul(x, y).x == std::vector<Rational>{2, 2, 3});
  auto s2 = make_sym(2);
  // chart of Sym(2): x11, x12, x22
  auto a = element(s2, {1, 2, 0}), b = element(s2, {0, 1, 1});
  CHECK(jordan_mul(a, b).x == std::vector<Rational>{2, Rational(3, 2), 2});
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10; ++k) {
    auto z = random_element(r21, rng);
    CHECK(eq(jordan_mul(unit(r21), z), z));
  }
}

TEST_CASE("jordan axioms on random pairs") {
  std::mt19937_64 rng(42);
  for (const auto& a : algebras()) {
    INFO(a->spec);
    for (int k = 0; k < 100; ++k) {
      auto x = random_element(a, rng), y = random_element(a, rng);
      auto x2 = jordan_mul(x, x);
      REQUIRE(eq(jordan_mul(x, y), jordan_mul(y, x)));
      REQUIRE(eq(jordan_mul(unit(a), x), x));
      REQUIRE(eq(jordan_mul(jordan_mul(x, y), x2), jordan_mul(x, jordan_mul(y, x2))));
    }
  }
}

TEST_CASE("structure constants match the matrix product") {
  std::mt19937_64 rng(4);
  for (const auto& a : {make_sym(3), make_mat(3), make_herm(3)}) {
    for (int k = 0; k < 20; ++k) {
      auto x = random_element(a, rng), y = random_element(a, rng);
      CMatrix X = to_matrix(x), Y = to_matrix(y);
      CMatrix xy = cmul(X, Y), yx = cmul(Y, X);
      CMatrix sym{(xy.re + yx.re).scaled(Rational(1, 2)), (xy.im + yx.im).scaled(Rational(1, 2))};
      REQUIRE(eq(jordan_mul(x, y), from_matrix(a, sym)));
      // quadratic representation is x y x
      CMatrix xyx = cmul(xy, X);
      REQUIRE(quad_rep(x).apply(y.x) == from_matrix(a, xyx).x);
    }
  }
}

TEST_CASE("quadratic representation") {
  auto s2 = make_sym(2);
  CHECK(quad_rep(unit(s2)) == Matrix::identity(3));
  auto x = element(s2, {1, 0, 2}), y = element(s2, {0, 1, 0});
  CHECK(quad_rep(x).apply(y.x) == std::vector<Rational>{0, 2, 0});
  std::mt19937_64 rng(8);
  for (const auto& a : algebras()) {
    INFO(a->spec);
    for (int k = 0; k < 30; ++k) {
      auto u = random_element(a, rng), v = random_element(a, rng);
      auto pv = element(a, quad_rep(u).apply(v.x));
      REQUIRE(det_value(pv) == det_value(u) * det_value(u) * det_value(v));
    }
  }
}

TEST_CASE("generic minimal polynomial") {
  auto s2 = make_sym(2);
  auto x = element(s2, {2, 0, 3});
  auto a = generic_min_poly(x);
  CHECK(a == std::vector<Rational>{5, 6});
  CHECK(trace_value(x) == Rational(5));
  CHECK(det_value(x) == Rational(6));
  for (const auto& alg : algebras()) {
    CHECK(trace_value(unit(alg)) == Rational(alg->r));
    CHECK(det_value(unit(alg)) == Rational(1));
  }
  auto r21 = make_rpq(2, 1);
  auto vs = r21->chart;
  MPoly x1 = MPoly::var(vs, 0), x2 = MPoly::var(vs, 1), x3 = MPoly::var(vs, 2);
  CHECK(r21->det == x1 * x1 + x2 * x2 - x3 * x3);
  CHECK(r21->trace == x1.scaled(Rational(2)));
  try {
    generic_min_poly(unit(s2));
    CHECK(false);
  } catch (const RankDeficiency& e) {
    CHECK(e.rank == 1);
  }
}

TEST_CASE("minimal polynomial annihilates and matches matrix oracles") {
  std::mt19937_64 rng(9);
  auto list = algebras();
  for (const char* extra : {"sym:4", "sym:5", "mat:3", "herm:3", "rpq:4,3"}) list.push_back(parse_algebra(extra));
  for (const auto& alg : list) {
    INFO(alg->spec);
    for (int k = 0; k < 30; ++k) {
      auto x = sample_regular(alg, rng);
      auto a = generic_min_poly(x);
      // x^r - a1 x^{r-1} + ... = 0
      std::vector<Rational> acc(alg->n);
      for (int j = 0; j <= alg->r; ++j) {
        Rational c = j == 0 ? Rational(1) : a[j - 1];
        if (j % 2) c = -c;
        auto pw = jordan_pow(x, alg->r - j);
        for (int i = 0; i < alg->n; ++i) acc[i] += c * pw.x[i];
      }
      REQUIRE(std::all_of(acc.begin(), acc.end(), [](const Rational& v) { return v.is_zero(); }));
      REQUIRE(a.front() == trace_value(x));
      REQUIRE(a.back() == det_value(x));
      if (alg->kind == Kind::SymR || alg->kind == Kind::MatR) {
        CMatrix X = to_matrix(x);
        REQUIRE(det(X.re) == det_value(x));
        Rational tr;
        for (int i = 0; i < alg->m; ++i) tr += X.re(i, i);
        REQUIRE(tr == trace_value(x));
      } else if (alg->kind == Kind::HermC) {
        auto [dr, di] = complex_det(to_matrix(x));
        REQUIRE(di.is_zero());
        REQUIRE(dr == det_value(x));
      }
    }
  }
}

TEST_CASE("det is homogeneous of degree r") {
  for (const auto& alg : algebras()) {
    std::vector<MPoly> img;
    for (int i = 0; i < alg->n; ++i) img.push_back(alg->generic[i].scaled(ParamPoly::var(Param::t)));
    CHECK(alg->det.compose(img, alg->chart) == alg->det.scaled(ParamPoly::var(Param::t, alg->r)));
  }
}

TEST_CASE("inverse") {
  auto s2 = make_sym(2);
  CHECK(eq(inverse(unit(s2)), unit(s2)));
  auto r21 = make_rpq(2, 1);
  auto x = element(r21, {2, 1, 0});
  CHECK(inverse(x).x == std::vector<Rational>{Rational(2, 5), Rational(-1, 5), 0});
  CHECK_THROWS_AS(inverse(element(r21, {1, 0, 1})), SingularElement);
  std::mt19937_64 rng(3);
  for (const auto& alg : algebras()) {
    for (int k = 0; k < 30; ++k) {
      auto y = sample_regular(alg, rng);
      auto yi = inverse(y);
      REQUIRE(eq(jordan_mul(y, yi), unit(alg)));
      REQUIRE(quad_rep(y).apply(yi.x) == y.x);
      if (alg->kind == Kind::SymR) {
        auto mi = jc::inverse(to_matrix(y).re);
        REQUIRE(mi.has_value());
        REQUIRE(from_matrix(alg, {*mi, Matrix(alg->m, alg->m)}).x == yi.x);
      }
    }
  }
}

TEST_CASE("sharp") {
  auto s2 = make_sym(2);
  MPoly a = s2->generic[0], c = s2->generic[2];
  MPoly one(s2->chart, ParamPoly(1));
  CHECK(sharp(s2, one, 0) == s2->det);
  CHECK(sharp(s2, s2->det, 2) == one);
  CHECK(sharp(s2, a, 1) == c);
  auto s3 = make_sym(3);
  // Delta_2 of Sym(3) lies in W(Delta); its sharp is again polynomial of degree 1
  MPoly d2 = principal_minor(s3, 2);
  MPoly sh = sharp(s3, d2, 2);
  CHECK(sh.degree() == 1);
  CHECK_THROWS_AS(sharp(s2, a * a + c, 2), ContractViolation);
}

TEST_CASE("signature class") {
  auto s2 = make_sym(2), s3 = make_sym(3);
  CHECK(signature_class(unit(s3)) == 0);
  CHECK(signature_class(element(s2, {1, 0, -1})) == 1);
  CHECK(signature_class(element(s3, {-1, 0, 0, -2, 0, -3})) == 3);
  CHECK(signature_class(element(s2, {0, 1, 0})) == 1);
  CHECK_THROWS_AS(signature_class(element(s2, {1, 0, 0})), SingularElement);
  CHECK_THROWS_AS(signature_class(unit(make_rpq(2, 1))), UnsupportedKind);
}

TEST_CASE("principal minors") {
  auto s2 = make_sym(2), s3 = make_sym(3);
  CHECK(principal_minor(s2, 0) == MPoly(s2->chart, ParamPoly(1)));
  MPoly a = s2->generic[0], b = s2->generic[1], c = s2->generic[2];
  CHECK(principal_minor(s2, 1) == a);
  CHECK(principal_minor(s2, 2) == a * c - b * b);
  CHECK(principal_minor(s2, 2) == s2->det);
  // Sym(3) chart: x11 x12 x13 x22 x23 x33
  const auto& g = s3->generic;
  CHECK(principal_minor(s3, 2) == g[0] * g[3] - g[1] * g[1]);
  CHECK(principal_minor(s3, 3) == s3->det);
  CHECK_THROWS_AS(principal_minor(s3, 4), ContractViolation);
}

TEST_CASE("registry rows satisfy the dimension identity") {
  auto rows = registry(5);
  CHECK(rows.size() > 50);
  for (const auto& r : rows) {
    INFO(r.family << " " << r.param);
    CHECK(2 * r.n == 2 * r.rplus * (r.e + 1) + r.rplus * (r.rplus - 1) * r.d);
    if (r.e == 0) CHECK(r.r == r.rplus);
    if (r.supported) {
      auto a = parse_algebra(r.cli_spec);
      CHECK(a->n == r.n);
      CHECK(a->r == r.r);
      CHECK(a->d == r.d);
      CHECK(a->e == r.e);
    }
  }
  CHECK_THROWS_AS(parse_algebra("octc:3"), UnsupportedKind);
  CHECK_THROWS_AS(parse_algebra("foo:3"), ConfigError);
  CHECK_THROWS_AS(parse_algebra("rpq:9,9"), ResourceLimit);
  CHECK(registry_json(2).find("\"supported\": true") != std::string::npos);
}
