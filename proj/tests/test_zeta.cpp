#include <cmath>
#include <random>

#include "doctest.h"
#include "jc/errors.hpp"
#include "jc/jordan.hpp"
#include "jc/quadrature.hpp"
#include "jc/zeta.hpp"

using namespace jc;

namespace {

constexpr double kPi = 3.14159265358979323846;

double mat_diff(const Mat2& a, const Mat2& b) {
  double m = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

std::vector<double> random_s(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(u(rng));
  return out;
}

}  // namespace

TEST_CASE("quadrature on known integrals") {
  auto r = integrate([](double x) { return std::exp(x); }, 0, 1);
  CHECK(r.converged);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1)) < 1e-12);
  auto g = integrate_half_line([](double x) { return std::exp(-x * x); });
  CHECK(std::abs(g.value - std::sqrt(kPi) / 2) < 1e-10);
  // integrable endpoint singularity
  auto s = integrate([](double x) { return x > 0 ? std::pow(x, -0.5) : 0.0; }, 0, 1, 1e-9);
  CHECK(std::abs(s.value - 2) < 1e-7);
  // budget exhaustion is reported, not hidden
  auto bad = integrate([](double x) { return x > 0 ? std::pow(x, -0.999) : 0.0; }, 0, 1, 1e-12, 50);
  CHECK(!bad.converged);
}

TEST_CASE("gamma factor poles and shift pattern") {
  for (int n : {3, 4, 5}) {
    GammaFactor g = gamma_rpq(n);
    auto poles = g.poles(3);
    for (int k = 1; k <= 3; ++k) CHECK(std::find(poles.begin(), poles.end(), Rational(-k)) != poles.end());
    for (int k = 0; k < 3; ++k)
      CHECK(std::find(poles.begin(), poles.end(), Rational(-n, 2) - Rational(k)) != poles.end());
    for (double s : {0.3, 1.7, -0.45}) {
      double ratio = g.eval(s + 1) / g.eval(s);
      ParamPoly sr = g.shift_ratio_poly();
      double expect = g.shift_ratio_scale() * (s + 1) * (s + n / 2.0);
      CHECK(std::abs(ratio - expect) < 1e-10 * std::abs(expect));
      CHECK(sr == (ParamPoly::var(Param::s) + ParamPoly(1)) * (ParamPoly::var(Param::s) + ParamPoly(Rational(n, 2))));
    }
  }
  // Gamma_V(s + 2) / Gamma_V(s) = 2^{-r+} prod (s - (k-1) d/2)
  double s = 1.3;
  CHECK(std::abs(gamma_V(s + 2, 3, 2) / gamma_V(s, 3, 2) - s * (s - 1) * (s - 2) / 8) < 1e-12);
  CHECK(std::abs(gamma_Omega(2.5, 1, 1, 1) - std::tgamma(2.5)) < 1e-12);
}

TEST_CASE("R^{p,q} matrix: flip, period, sectors, p = q") {
  auto ss = random_s(100, 5);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {5, 3}}) {
    INFO(p << "," << q);
    double flip = 0, period = 0, sectors = 0;
    for (double s : ss) {
      Mat2 a = A_matrix_pq(p, q, s), a1 = A_matrix_pq(p, q, s + 1), a2 = A_matrix_pq(p, q, s + 2);
      for (int e = 0; e < 2; ++e)
        for (int h = 0; h < 2; ++h) flip = std::max(flip, std::abs(a1[e][h] + a[1 - e][1 - h]));
      period = std::max(period, mat_diff(a, a2));
      sectors = std::max(sectors, mat_diff(a, A_matrix_pq_from_sectors(p, q, s)));
    }
    CHECK(flip < 1e-12);
    CHECK(period < 1e-12);
    CHECK(sectors < 1e-12);
  }
  for (int p : {2, 3, 4}) {
    Mat2 a = A_matrix_pq(p, p, 0.37);
    CHECK(std::abs(a[0][1]) < 1e-15);
    CHECK(std::abs(a[1][0]) < 1e-15);
  }
}

TEST_CASE("euclidean classification") {
  CHECK(euclidean_case(3, 4) == EuclCase::a);
  CHECK(euclidean_case(3, 2) == EuclCase::a);
  CHECK(euclidean_case(2, 2) == EuclCase::a_prime);
  CHECK(euclidean_case(2, 1) == EuclCase::b1);
  CHECK(euclidean_case(2, 3) == EuclCase::b2);
  CHECK(euclidean_case(3, 1) == EuclCase::c1);
  CHECK(euclidean_case(5, 1) == EuclCase::c2);
  CHECK(euclidean_case(4, 1) == EuclCase::c3);
  CHECK(euclidean_case(6, 1) == EuclCase::c4);
  CHECK_THROWS_AS(euclidean_case(3, 3), ConfigError);
  CHECK_THROWS_AS(euclidean_matrices(EuclCase::b1, 3, 1, 0.2), ConfigError);
  // (2,1) satisfies both the b and c descriptions
  CHECK_NOTHROW(euclidean_matrices(EuclCase::c4, 2, 1, 0.2));
  auto fe = euclidean_matrices(EuclCase::c3, 4, 1, 0.4);
  CHECK(std::abs(fe.M[0][0] - cplx(0, -1)) < 1e-15);
  CHECK(std::abs(fe.M[0][1] - cplx(1, 0)) < 1e-15);
  auto fb = euclidean_matrices(EuclCase::b1, 2, 5, 0.4);
  CHECK(std::abs(fb.prefactor - 4 * std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("euclidean flip identities") {
  auto ss = random_s(100, 17);
  double b1 = 0, b2 = 0, c2 = 0, c1 = 0;
  for (double s : ss) {
    auto m = euclidean_matrices(EuclCase::b1, 2, 1, s).M, m1 = euclidean_matrices(EuclCase::b1, 2, 1, s + 1).M;
    auto n = euclidean_matrices(EuclCase::b2, 2, 3, s).M, n1 = euclidean_matrices(EuclCase::b2, 2, 3, s + 1).M;
    for (int e = 0; e < 2; ++e)
      for (int h = 0; h < 2; ++h) {
        b1 = std::max(b1, std::abs(m[e][h] + m1[1 - e][1 - h]));
        b2 = std::max(b2, std::abs(n[e][h] + n1[1 - e][1 - h]));
      }
    // even column: a^e_eps(s) = -i a^e_{-eps}(s+1); odd column: +i
    for (EuclCase c : {EuclCase::c1, EuclCase::c2}) {
      int r = c == EuclCase::c1 ? 3 : 5;
      auto b = euclidean_matrices(c, r, 1, s).M, bb = euclidean_matrices(c, r, 1, s + 1).M;
      double& acc = c == EuclCase::c1 ? c1 : c2;
      for (int e = 0; e < 2; ++e) {
        acc = std::max(acc, std::abs(b[e][0] - cplx(0, -1) * bb[1 - e][0]));
        acc = std::max(acc, std::abs(b[e][1] - cplx(0, 1) * bb[1 - e][1]));
      }
    }
  }
  CHECK(b1 < 1e-12);
  CHECK(b2 < 1e-12);
  CHECK(c2 < 1e-12);
  CHECK(c1 < 1e-12);
}

TEST_CASE("u_ij generating function") {
  // r = 2 reproduces the table sum_i y^i u_ij = {1 + x^2y^2, x + xi(1-x^2)y + xy^2, x^2 + y^2}
  for (int d : {1, 3, 5}) {
    auto u = uij_table(2, d);
    GaussQ one{Rational(1), Rational(0)}, zero{Rational(0), Rational(0)};
    GaussQ xi = d % 4 == 1 ? GaussQ{Rational(0), Rational(-1)} : GaussQ{Rational(0), Rational(1)};
    GaussQ mxi{-xi.re, -xi.im};
    CHECK(gpoly_equal(u[0][0], GPoly{{0, one}}));
    CHECK(gpoly_equal(u[2][0], GPoly{{2, one}}));
    CHECK(gpoly_equal(u[0][1], GPoly{{1, one}}));
    CHECK(gpoly_equal(u[1][1], GPoly{{0, xi}, {2, mxi}}));
    CHECK(gpoly_equal(u[2][1], GPoly{{1, one}}));
    CHECK(gpoly_equal(u[0][2], GPoly{{2, one}}));
    CHECK(gpoly_equal(u[2][2], GPoly{{0, one}}));
    CHECK(gpoly_equal(u[1][0], GPoly{{0, zero}}));
  }
  // column sums claimed in the case analysis, r <= 3: case a gives (1 + x)^r for every j
  for (int r = 1; r <= 3; ++r) {
    auto u = uij_table(r, 4);
    for (int j = 0; j <= r; ++j) {
      for (double xv : {0.3, -1.7}) {
        cplx sum = 0, alt = 0;
        for (int i = 0; i <= r; ++i) {
          sum += eval(u[i][j], xv);
          alt += (i % 2 ? -1.0 : 1.0) * eval(u[i][j], xv);
        }
        CHECK(std::abs(sum - std::pow(1 + xv, r)) < 1e-12);
        CHECK(std::abs(alt - std::pow(-1.0, j) * std::pow(1 - xv, r)) < 1e-12);
      }
    }
  }
  // c-1, r = 3: j even (x^2-1)(x-1)(-1)^k, j odd (-1)^{k+1}(x^2-1)(x-1)
  auto u = uij_table(3, 1);
  for (int j = 0; j <= 3; ++j) {
    double xv = 0.61;
    cplx sum = 0;
    for (int i = 0; i <= 3; ++i) sum += eval(u[i][j], xv);
    int k = j / 2;
    double sign = j % 2 == 0 ? (k % 2 ? -1 : 1) : (k % 2 ? 1 : -1);
    CHECK(std::abs(sum - sign * (xv * xv - 1) * (xv - 1)) < 1e-12);
  }
}

TEST_CASE("euclidean displays against the generating function") {
  // derived matrices agree for every case; the displays for a', b and c disagree
  for (int r = 1; r <= 8; ++r)
    for (int d = 1; d <= 8; ++d) {
      EuclCase c;
      try {
        c = euclidean_case(r, d);
      } catch (const ConfigError&) {
        continue;
      }
      INFO("r=" << r << " d=" << d << " case " << case_name(c));
      for (double sp : {0.37, 1.21, -0.83}) {
        auto der = compare_with_generating_function(euclidean_matrices_derived(c, r, d, sp), r, d, sp);
        CHECK(der.residual < 1e-12);
        auto disp = compare_with_generating_function(euclidean_matrices(c, r, d, sp), r, d, sp);
        bool display_ok = disp.residual < 1e-12;
        bool expect_ok = c == EuclCase::a;
        CHECK(display_ok == expect_ok);
        if (c == EuclCase::b1 || c == EuclCase::b2) CHECK(std::abs(disp.ratio - 2.0) < 1e-12);
        if (c == EuclCase::c1 || c == EuclCase::c2) CHECK(std::abs(disp.ratio - 0.5) < 1e-12);
        if (c == EuclCase::a_prime || c == EuclCase::c3 || c == EuclCase::c4) CHECK(!disp.proportional);
      }
    }
  // at (r, d) = (2, 1) the derived c-4 row coincides with b-1
  for (double sp : {0.2, 0.9}) {
    auto b = euclidean_matrices_derived(EuclCase::b1, 2, 1, sp);
    auto c = euclidean_matrices_derived(EuclCase::c4, 2, 1, sp);
    for (int e = 0; e < 2; ++e)
      for (int h = 0; h < 2; ++h) CHECK(std::abs(b.prefactor * b.M[e][h] - c.prefactor * c.M[e][h]) < 1e-12);
  }
}

TEST_CASE("Z bookkeeping maps") {
  for (int r = 1; r <= 6; ++r) {
    ZMaps z = zeta_maps(r);
    // Z_{s,+} + Z_{s,-} = 2 sum_even, Z_{s,+} - Z_{s,-} = 2 sum_odd
    for (int i = 0; i <= r; ++i) {
      CHECK(z.pm[0][i] + z.pm[1][i] == Rational(2) * z.parity_sums[0][i]);
      CHECK(z.pm[0][i] - z.pm[1][i] == Rational(2) * z.parity_sums[1][i]);
      // Z^e, Z^o carry the (-1)^k twist on the matching parity and vanish on the other
      Rational twist = Rational((i / 2) % 2 ? -1 : 1);
      CHECK(z.eo[i % 2][i] == twist);
      CHECK(z.eo[1 - i % 2][i] == Rational(0));
      // round trip: pm rows recovered from the parity sums
      CHECK(z.parity_sums[0][i] + z.parity_sums[1][i] == z.pm[0][i]);
      CHECK(z.parity_sums[0][i] - z.parity_sums[1][i] == z.pm[1][i]);
    }
  }
  CHECK_THROWS_AS(zeta_maps(0), ConfigError);
}

TEST_CASE("kappa constants") {
  CHECK(parse_kappa_type("split") == KappaType::split);
  CHECK_THROWS_AS(parse_kappa_type("euclidean-a"), ConfigError);
  for (int n : {3, 4, 5, 7}) {
    KappaConst stated = kappa_const(KappaType::rpq, 2, n - 2, n);
    ParamPoly s = ParamPoly::var(Param::s), t = ParamPoly::var(Param::t), h(Rational(n, 2));
    CHECK(stated.num == ParamPoly(1));
    CHECK(stated.den ==
          ParamPoly(16) * (s + ParamPoly(1)) * (s + h) * (t + ParamPoly(1)) * (t + h));
    CHECK(stated.scale == cplx(1));
    KappaConst der = kappa_rpq_derived(n);
    CHECK(der.den == stated.den);
    // the i^{-2} of F(P(x - y) .) flips the sign
    CHECK(der.scale == cplx(-1));
    // poles at s = -1 and s = -n/2
    CHECK(stated.den.subs(Param::s, ParamPoly(-1)).is_zero());
    CHECK(stated.den.subs(Param::s, ParamPoly(-h)).is_zero());
  }
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (const auto& row : registry(3)) {
    if (row.type == "I" || row.family == "R^{p,q}") continue;
    bool split = row.type == "II";
    INFO(row.family << " " << row.param);
    KappaConst k = split ? kappa_const(KappaType::split, row.r, row.d, row.n)
                         : kappa_nonsplit_derived(row.r, row.d, row.n, row.rplus);
    KappaConst stated_ns = kappa_const(KappaType::non_split, row.r, row.d, row.n);
    for (int trial = 0; trial < 20; ++trial) {
      double s = u(rng), t = u(rng);
      cplx ref = k.eval(s, t);
      for (bool e : {false, true})
        for (bool h : {false, true}) {
          cplx q = kappa_from_c(split, row.r, row.d, row.n, row.rplus, s, t, e, h);
          CHECK(std::abs(q - ref) <= 1e-10 * std::abs(ref));
        }
      if (!split) CHECK(std::abs(stated_ns.eval(s, t) - ref) > 1e-3 * std::abs(ref));
    }
  }
}

TEST_CASE("numerical functional equation on R^{2,1}") {
  for (double s : {-0.6, -0.7, -0.8}) {
    ZetaNumeric z = numeric_zeta_check(2, 1, s);
    INFO("s = " << s);
    CHECK(z.converged);
    CHECK(z.rel_error < 1e-4);
    CHECK(z.pipeline_gap < 1e-4);
    CHECK(z.sector_residual < 1e-4);
    CHECK(std::abs(z.lhs[0]) > 1);
  }
  // different Gaussian width and R^{1,1}
  CHECK(numeric_zeta_check(2, 1, -0.55, 0.4).rel_error < 1e-4);
  CHECK(numeric_zeta_check(1, 1, -0.3).rel_error < 1e-4);
  // odd in x_1: both sides vanish
  ZetaNumeric odd = numeric_zeta_check(2, 1, -0.7, 1.0, true);
  for (int e = 0; e < 2; ++e) {
    CHECK(std::abs(odd.lhs[e]) < 1e-10);
    CHECK(std::abs(odd.rhs[e]) < 1e-10);
  }
  CHECK_THROWS_AS(numeric_zeta_check(2, 2, -0.7), ConfigError);
  CHECK_THROWS_AS(numeric_zeta_check(2, 1, -0.4), ConfigError);
}
