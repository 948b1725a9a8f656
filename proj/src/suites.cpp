#include "jc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "jc/conformal.hpp"
#include "jc/detpower.hpp"
#include "jc/errors.hpp"
#include "jc/fischer.hpp"
#include "jc/jordan.hpp"
#include "jc/rpq.hpp"
#include "jc/weyl.hpp"
#include "jc/zeta.hpp"

namespace jc {

namespace {

constexpr int kMaxDegree = 6;

struct Task {
  std::string id, anchor;
  std::function<CheckRecord(std::mt19937_64&)> run;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

CheckRecord exact(bool ok, std::size_t failures = 0, std::string detail = {}) {
  CheckRecord r;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.residual = double(failures);
  r.detail = std::move(detail);
  return r;
}

CheckRecord numeric(double residual, double tol, std::string detail = {}) {
  CheckRecord r;
  r.residual = residual;
  r.status = residual < tol ? CheckStatus::pass : CheckStatus::fail;
  r.detail = std::move(detail);
  return r;
}

MPoly random_poly(std::mt19937_64& rng, const VarSpaceP& vs, int max_deg, int nterms) {
  std::uniform_int_distribution<int> coef(-5, 5), var(0, vs->size() - 1), deg(0, max_deg);
  TermVec t;
  for (int k = 0; k < nterms; ++k) {
    Exp e{};
    for (int j = deg(rng); j > 0; --j) e[var(rng)]++;
    int c = coef(rng);
    t.emplace_back(mono_x(e), Rational(c == 0 ? 1 : c));
  }
  return MPoly::from_terms(vs, std::move(t));
}

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::vector<Rational> x;
  for (int j = 0; j < n; ++j) x.emplace_back(num(rng), den(rng));
  return x;
}

MPoly subst_st(const MPoly& p, int s, int t) {
  return p.subs_param(Param::s, ParamPoly(s)).subs_param(Param::t, ParamPoly(t));
}

std::vector<AlgebraP> algebras_for(const SuiteConfig& cfg, const std::vector<std::string>& defaults) {
  std::vector<AlgebraP> out;
  for (const auto& s : cfg.algebras.empty() ? defaults : cfg.algebras) out.push_back(parse_algebra(s));
  return out;
}

std::vector<AlgebraP> rpq_only(const SuiteConfig& cfg, const std::string& suite, const std::vector<std::string>& defaults) {
  auto algs = algebras_for(cfg, defaults);
  for (const auto& a : algs)
    if (a->kind != Kind::Rpq) throw ConfigError("suite " + suite + " needs rpq:p,q algebras, got " + a->spec);
  return algs;
}

// ---------------- suites ----------------

void leibnitz_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  std::vector<int> dims{1, 2, 3, 6};
  if (!cfg.algebras.empty()) {
    dims.clear();
    for (const auto& a : algebras_for(cfg, {})) dims.push_back(a->n);
  }
  int deg = cfg.max_degree;
  for (int n : dims)
    tasks.push_back({"leibnitz/n=" + std::to_string(n), "generalized Leibnitz formula", [n, deg](std::mt19937_64& rng) {
                       auto vs = make_space(n);
                       std::size_t bad = 0;
                       int done = 0;
                       while (done < 100) {
                         MPoly bp = random_poly(rng, vs, deg, 3);
                         if (bp.is_zero()) continue;
                         MPoly f = random_poly(rng, vs, deg + 1, 4), g = random_poly(rng, vs, deg + 1, 4);
                         if (leibnitz_expand(leibnitz_data(bp), f, g) != apply_diffop(bp, f * g)) ++bad;
                         ++done;
                       }
                       return exact(bad == 0, bad, "100 random (p, f, g)");
                     }});
}

void jordan_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  for (const auto& a : algebras_for(cfg, {"sym:2", "sym:3", "mat:2", "herm:2", "rpq:2,1", "rpq:3,2"})) {
    tasks.push_back({"jordan-axioms/" + a->spec + "/identities", "Jordan algebra axioms", [a](std::mt19937_64& rng) {
                       std::size_t bad = 0;
                       for (int k = 0; k < 100; ++k) {
                         auto x = element(a, random_point(rng, a->n)), y = element(a, random_point(rng, a->n));
                         auto x2 = jordan_mul(x, x);
                         if (jordan_mul(x, y).x != jordan_mul(y, x).x) ++bad;
                         if (jordan_mul(unit(a), x).x != x.x) ++bad;
                         if (jordan_mul(jordan_mul(x, y), x2).x != jordan_mul(x, jordan_mul(y, x2)).x) ++bad;
                       }
                       return exact(bad == 0, bad, "commutativity, unit, (xy)x^2 = x(yx^2) on 100 pairs");
                     }});
    tasks.push_back({"jordan-axioms/" + a->spec + "/determinant", "generic minimal polynomial and determinant",
                     [a](std::mt19937_64& rng) {
                       std::size_t bad = 0;
                       for (int k = 0; k < 50; ++k) {
                         auto x = sample_regular(a, rng);
                         Rational c(3, 2);
                         auto cx = x.x;
                         for (auto& v : cx) v *= c;
                         Rational cr(1);
                         for (int j = 0; j < a->r; ++j) cr *= c;
                         if (det_value(element(a, cx)) != cr * det_value(x)) ++bad;
                         if (jordan_mul(x, inverse(x)).x != unit(a).x) ++bad;
                         if (int(generic_min_poly(x).size()) != a->r) ++bad;
                       }
                       return exact(bad == 0, bad, "homogeneity of degree r, x o x^{-1} = e, rank r on 50 points");
                     }});
  }
}

void bernstein_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  int deg = cfg.max_degree;
  for (const auto& a : algebras_for(cfg, {"sym:2", "sym:3", "mat:2", "rpq:2,1", "rpq:3,2"})) {
    tasks.push_back({"bernstein/" + a->spec + "/b-function", "Bernstein identity", [a](std::mt19937_64&) {
                       auto res = bernstein_poly(a);
                       return exact(res.matches, res.matches ? 0 : 1,
                                    "b(s) = " + res.b.str() + "; " + res.convention);
                     }});
    tasks.push_back({"bernstein/" + a->spec + "/integer-powers", "Bernstein identity", [a, deg](std::mt19937_64&) {
                       DetCalculus dc(a, false);
                       auto b = bernstein_poly(a).b;
                       std::size_t bad = 0;
                       for (int k = 1; k <= deg + 1; ++k) {
                         MPoly lhs = apply_diffop(dc.det_symbol(), dc.det_x().pow(k));
                         if (lhs != dc.det_x().pow(k - 1).scaled(b.subs(Param::s, ParamPoly(k)))) ++bad;
                       }
                       return exact(bad == 0, bad, "det(d) det^k = b(k) det^{k-1} by plain differentiation");
                     }});
  }
}

void main_identity_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  int deg = cfg.max_degree;
  for (const auto& a : algebras_for(cfg, {"sym:2", "mat:2", "rpq:2,1", "rpq:2,2"})) {
    tasks.push_back({"main-identity/" + a->spec + "/divisibility", "main identity", [a, deg](std::mt19937_64& rng) {
                       DetCalculus dc(a, true);
                       DiffOp D = Dst_operator(dc);
                       std::size_t bad = 0;
                       for (int k = 0; k < 50; ++k) {
                         MPoly f = random_poly(rng, dc.space(), deg, 4);
                         MPoly d = extract_Dst(dc, f);  // throws TheoremViolation if not divisible
                         for (const auto& [e, c] : d.coefficients())
                           if (c.total_degree() > a->r) ++bad;
                         if (D.apply(f) != d) ++bad;
                       }
                       return exact(bad == 0, bad, "50 random f: exact division, (s,t)-degree <= r, operator form agrees");
                     }});
    tasks.push_back({"main-identity/" + a->spec + "/integer-grid", "main identity", [a, deg](std::mt19937_64& rng) {
                       DetCalculus dc(a, true);
                       std::size_t bad = 0;
                       for (int k = 0; k < 2; ++k) {
                         MPoly f = random_poly(rng, dc.space(), std::min(deg, 2), 3);
                         MPoly d = extract_Dst(dc, f);
                         for (int s = 1; s <= 5; ++s)
                           for (int t = 1; t <= 5; ++t) {
                             MPoly brute = apply_diffop(dc.wave_symbol(), dc.det_x().pow(s) * dc.det_y().pow(t) * f);
                             if (brute != dc.det_x().pow(s - 1) * dc.det_y().pow(t - 1) * subst_st(d, s, t)) ++bad;
                           }
                       }
                       return exact(bad == 0, bad, "2 random f at (s,t) in {1..5}^2 against plain differentiation");
                     }});
  }
}

void fourier_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  for (const auto& a : algebras_for(cfg, {"rpq:2,1", "rpq:2,2", "rpq:3,1", "sym:2", "mat:2"})) {
    tasks.push_back({"fourier-weyl/" + a->spec + "/E=FC^-1(D)", "Fourier conjugation of D_{s,t}", [a](std::mt19937_64&) {
                       DetCalculus dc(a, true);
                       DiffOp D = Dst_operator(dc);
                       EstResult e = build_Est(dc, D);
                       DiffOp Etau = e.E0.scaled(ParamPoly::var(Param::tau, e.tau_power));
                       bool ok = e.tau_power == -a->r && fourier_conjugate(Etau, fourier_gram(*a, true)) == D;
                       MPoly one(dc.space(), ParamPoly(1));
                       ok = ok && e.E.apply(one).is_zero();
                       return exact(ok, ok ? 0 : 1, "tau power " + std::to_string(e.tau_power) + ", FC(E) = D, E(1) = 0");
                     }});
    if (a->kind != Kind::Rpq) continue;
    tasks.push_back({"fourier-weyl/" + a->spec + "/explicit-operators", "explicit operators on R^{p,q}",
                     [a](std::mt19937_64&) {
                       auto ops = rpq_operators(a->p, a->q);
                       DetCalculus dc(ops.alg, true);
                       DiffOp D = Dst_operator(dc);
                       EstResult e = build_Est(dc, D);
                       std::size_t bad = 0;
                       if (ops.D != D) ++bad;
                       if (ops.E != e.E) ++bad;
                       if (ops.F != build_F(*ops.alg, e.E)) ++bad;
                       if (ops.F != build_F(*ops.alg, ops.E)) ++bad;
                       return exact(bad == 0, bad, "D, E, F transcriptions equal the generic operators");
                     }});
  }
}

void covariance_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  for (const auto& a : rpq_only(cfg, "covariance", {"rpq:2,1", "rpq:2,2", "rpq:3,1"})) {
    auto m = std::make_shared<ConformalModel>(conformal_model(a));
    auto ops = std::make_shared<RpqOperators>(rpq_operators(a->p, a->q));
    for (std::size_t b = 0; b < m->basis.size(); ++b) {
      std::string base = "covariance/" + a->spec + "/" + m->names[b];
      tasks.push_back({base + "/F", "covariance of F_{lambda,mu}", [m, ops, b](std::mt19937_64&) {
                         DiffOp r = covariance_residual(*m, ops->F, m->basis[b], 1);
                         return exact(r.is_zero(), r.size(), "shift +1, exact in Q[lambda,mu]");
                       }});
      tasks.push_back({base + "/B1", "covariance of res o F", [m, ops, b](std::mt19937_64&) {
                         DiffOp r = restricted_covariance_residual(*m, ops->F, m->basis[b], 2);
                         return exact(r.is_zero(), r.size(), "target lambda + mu + 2, exact in Q[lambda,mu]");
                       }});
    }
  }
}

void brackets_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  for (const auto& a : rpq_only(cfg, "brackets", {"rpq:2,1", "rpq:2,2", "rpq:3,1"})) {
    auto ops = std::make_shared<RpqOperators>(rpq_operators(a->p, a->q));
    tasks.push_back({"brackets/" + a->spec + "/B1-display", "B^(1) display", [ops](std::mt19937_64&) {
                       BracketN b1 = build_BN(*ops, 1);
                       auto c = proportionality(b1.B, ops->B1);
                       bool ok = c.has_value() && *c == Rational(1);
                       return exact(ok, ok ? 0 : 1, c ? "res o F = " + c->str() + " * displayed B^(1)" : "not proportional");
                     }});
    auto m = std::make_shared<ConformalModel>(conformal_model(a));
    for (int N : {1, 2}) {
      auto bn = std::make_shared<BracketN>(build_BN(*ops, N));
      std::string base = "brackets/" + a->spec + "/N=" + std::to_string(N);
      tasks.push_back({base + "/shape", "Rankin-Cohen brackets B^(N)", [bn, N](std::mt19937_64&) {
                         bool ok = bn->B.order() == 2 * N && swap_xy(bn->B) == bn->B;
                         return exact(ok, ok ? 0 : 1, "order 2N and x <-> y symmetry");
                       }});
      for (std::size_t b = 0; b < m->basis.size(); ++b)
        tasks.push_back({base + "/" + m->names[b], "Rankin-Cohen brackets B^(N)", [m, bn, b, N](std::mt19937_64&) {
                           DiffOp r = restricted_covariance_residual(*m, bn->FN, m->basis[b], 2 * N);
                           return exact(r.is_zero(), r.size(), "target lambda + mu + " + std::to_string(2 * N));
                         }});
    }
  }
}

void lie_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  for (const auto& a : rpq_only(cfg, "lie-homomorphism", {"rpq:2,1", "rpq:2,2", "rpq:3,1"})) {
    tasks.push_back({"lie-homomorphism/" + a->spec, "infinitesimal principal series", [a](std::mt19937_64&) {
                       auto m = conformal_model(a);
                       ParamPoly l = ParamPoly::var(Param::lambda);
                       std::vector<DiffOp> d;
                       for (const auto& X : m.basis) d.push_back(dpi(m, X, l, m.xspace, 0));
                       std::size_t bad = 0, pairs = 0;
                       for (std::size_t i = 0; i < m.basis.size(); ++i)
                         for (std::size_t j = i + 1; j < m.basis.size(); ++j, ++pairs)
                           if (dpi(m, lie_bracket(m.basis[i], m.basis[j]), l, m.xspace, 0) != d[i].bracket(d[j])) ++bad;
                       return exact(bad == 0, bad, std::to_string(pairs) + " basis pairs, exact in Q[lambda]");
                     }});
  }
}

void cocycle_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  for (const auto& a : algebras_for(cfg, {"rpq:2,1", "rpq:2,2", "rpq:3,1", "sym:2", "sym:3", "mat:2", "herm:2"})) {
    if (a->kind != Kind::Rpq) {
      tasks.push_back({"cocycle/" + a->spec + "/hua", "determinant under inversion", [a](std::mt19937_64& rng) {
                         std::size_t bad = 0;
                         for (int k = 0; k < 100; ++k)
                           if (!hua_check(a, sample_regular(a, rng).x, sample_regular(a, rng).x)) ++bad;
                         return exact(bad == 0, bad, "det(y^{-1} - x^{-1}) det x det y = det(x - y) at 100 points");
                       }});
      continue;
    }
    tasks.push_back({"cocycle/" + a->spec + "/chain-rule", "cocycle chain rule", [a](std::mt19937_64& rng) {
                       auto m = conformal_model(a);
                       std::vector<Matrix> gens{inversion(m), dilation(m, Rational(-2, 3))};
                       for (int k = 0; k < 3; ++k) gens.push_back(translation(m, random_point(rng, m.n)));
                       std::uniform_int_distribution<int> pick(0, int(gens.size()) - 1);
                       std::size_t bad = 0;
                       int tested = 0;
                       while (tested < 100) {
                         Matrix g1 = gens[pick(rng)] * gens[pick(rng)], g2 = gens[pick(rng)] * gens[pick(rng)];
                         auto y = random_point(rng, m.n);
                         try {
                           auto g2y = act(m, g2, y);
                           if (act(m, g1 * g2, y) != act(m, g1, g2y)) ++bad;
                           if (cocycle(m, g1 * g2, y) != cocycle(m, g1, g2y) * cocycle(m, g2, y)) ++bad;
                           ++tested;
                         } catch (const SingularElement&) {
                         }
                       }
                       return exact(bad == 0, bad, "a(g1 g2, y) = a(g1, g2 y) a(g2, y) at 100 points");
                     }});
    tasks.push_back({"cocycle/" + a->spec + "/covariance-of-det", "determinant covariance", [a](std::mt19937_64& rng) {
                       auto m = conformal_model(a);
                       Matrix iota = inversion(m);
                       std::size_t bad = 0;
                       int tested = 0;
                       while (tested < 100) {
                         Matrix g = translation(m, random_point(rng, m.n)) * iota * dilation(m, Rational(3)) *
                                    translation(m, random_point(rng, m.n)) * iota;
                         try {
                           if (!hua_check(m, g, random_point(rng, m.n), random_point(rng, m.n))) ++bad;
                           ++tested;
                         } catch (const SingularElement&) {
                         }
                       }
                       return exact(bad == 0, bad, "det(gx - gy) = a(g,x)^{-1} det(x - y) a(g,y)^{-1} at 100 points");
                     }});
  }
}

// ---------------- zeta ----------------

std::vector<double> random_reals(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(u(rng));
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void zeta_matrix_suite(const SuiteConfig&, std::vector<Task>& tasks) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    std::string base = "zeta-matrices/A/" + std::to_string(p) + "," + std::to_string(q);
    tasks.push_back({base + "/flip", "A(s+1) = -A(-,-)(s) on R^{p,q}", [p, q](std::mt19937_64& rng) {
                       double worst = 0;
                       for (double s : random_reals(rng, 100)) {
                         Mat2 a = A_matrix_pq(p, q, s), a1 = A_matrix_pq(p, q, s + 1);
                         for (int e = 0; e < 2; ++e)
                           for (int h = 0; h < 2; ++h) worst = std::max(worst, std::abs(a1[e][h] + a[1 - e][1 - h]));
                       }
                       return numeric(worst, 1e-12, "100 random s");
                     }});
    tasks.push_back({base + "/period", "A(s+2) = A(s) on R^{p,q}", [p, q](std::mt19937_64& rng) {
                       double worst = 0;
                       for (double s : random_reals(rng, 100)) {
                         Mat2 a = A_matrix_pq(p, q, s), a2 = A_matrix_pq(p, q, s + 2);
                         for (int e = 0; e < 2; ++e)
                           for (int h = 0; h < 2; ++h) worst = std::max(worst, std::abs(a[e][h] - a2[e][h]));
                       }
                       return numeric(worst, 1e-12, "100 random s");
                     }});
    tasks.push_back({base + "/sectors", "transforms of P_+^s and P_-^s", [p, q](std::mt19937_64& rng) {
                       double worst = 0;
                       for (double s : random_reals(rng, 100)) {
                         Mat2 a = A_matrix_pq(p, q, s), b = A_matrix_pq_from_sectors(p, q, s);
                         for (int e = 0; e < 2; ++e)
                           for (int h = 0; h < 2; ++h) worst = std::max(worst, std::abs(a[e][h] - b[e][h]));
                       }
                       return numeric(worst, 1e-12, "rows rebuilt from the P_+/P_- pair");
                     }});
  }
  struct Flip {
    EuclCase c;
    int r, d;
  };
  for (Flip f : {Flip{EuclCase::b1, 2, 1}, Flip{EuclCase::b2, 2, 3}}) {
    tasks.push_back({"zeta-matrices/euclidean/" + case_name(f.c) + "/flip", "a(s) = -a(-,-)(s+1), euclidean case b",
                     [f](std::mt19937_64& rng) {
                       double worst = 0;
                       for (double s : random_reals(rng, 100)) {
                         auto m = euclidean_matrices(f.c, f.r, f.d, s).M, m1 = euclidean_matrices(f.c, f.r, f.d, s + 1).M;
                         for (int e = 0; e < 2; ++e)
                           for (int h = 0; h < 2; ++h) worst = std::max(worst, std::abs(m[e][h] + m1[1 - e][1 - h]));
                       }
                       return numeric(worst, 1e-12, "100 random s");
                     }});
  }
  for (Flip f : {Flip{EuclCase::c1, 3, 1}, Flip{EuclCase::c2, 5, 1}}) {
    tasks.push_back({"zeta-matrices/euclidean/" + case_name(f.c) + "/flip",
                     "a^e(s) = -i a^e_{-}(s+1), a^o(s) = i a^o_{-}(s+1)", [f](std::mt19937_64& rng) {
                       double worst = 0;
                       for (double s : random_reals(rng, 100)) {
                         auto b = euclidean_matrices(f.c, f.r, f.d, s).M, bb = euclidean_matrices(f.c, f.r, f.d, s + 1).M;
                         for (int e = 0; e < 2; ++e) {
                           worst = std::max(worst, std::abs(b[e][0] - cplx(0, -1) * bb[1 - e][0]));
                           worst = std::max(worst, std::abs(b[e][1] - cplx(0, 1) * bb[1 - e][1]));
                         }
                       }
                       return numeric(worst, 1e-12, "100 random s");
                     }});
  }
  tasks.push_back({"zeta-matrices/u_ij/r=2-table", "u_ij generating function", [](std::mt19937_64&) {
                     std::size_t bad = 0;
                     for (int d : {1, 3, 5, 7}) {
                       auto u = uij_table(2, d);
                       GaussQ one{Rational(1), Rational(0)};
                       GaussQ xi = d % 4 == 1 ? GaussQ{Rational(0), Rational(-1)} : GaussQ{Rational(0), Rational(1)};
                       if (!gpoly_equal(u[0][0], GPoly{{0, one}}) || !gpoly_equal(u[2][0], GPoly{{2, one}})) ++bad;
                       if (!gpoly_equal(u[0][1], GPoly{{1, one}}) || !gpoly_equal(u[2][1], GPoly{{1, one}})) ++bad;
                       if (!gpoly_equal(u[1][1], GPoly{{0, xi}, {2, GaussQ{-xi.re, -xi.im}}})) ++bad;
                       if (!gpoly_equal(u[0][2], GPoly{{2, one}}) || !gpoly_equal(u[2][2], GPoly{{0, one}})) ++bad;
                     }
                     return exact(bad == 0, bad, "sum_i y^i u_ij = 1 + x^2y^2, x + xi(1-x^2)y + xy^2, x^2 + y^2");
                   }});
  for (int r = 1; r <= 8; ++r)
    for (int d = 1; d <= 8; ++d) {
      EuclCase c;
      try {
        c = euclidean_case(r, d);
      } catch (const ConfigError&) {
        continue;
      }
      std::string base = "zeta-matrices/euclidean/" + case_name(c) + "/r=" + std::to_string(r) + ",d=" + std::to_string(d);
      tasks.push_back({base + "/derived", "euclidean functional equation, generating-function route",
                       [c, r, d](std::mt19937_64&) {
                         double worst = 0;
                         for (double sp : {0.37, 1.21, -0.83})
                           worst = std::max(worst, compare_with_generating_function(
                                                       euclidean_matrices_derived(c, r, d, sp), r, d, sp)
                                                       .residual);
                         return numeric(worst, 1e-12, "derived matrix against sum_i eps^i u_ij");
                       }});
      tasks.push_back({base + "/display", "euclidean functional equation, displayed matrix", [c, r, d](std::mt19937_64&) {
                         double worst = 0;
                         GenFnComparison last;
                         for (double sp : {0.37, 1.21, -0.83}) {
                           last = compare_with_generating_function(euclidean_matrices(c, r, d, sp), r, d, sp);
                           worst = std::max(worst, last.residual);
                         }
                         CheckRecord rec;
                         rec.residual = worst;
                         rec.status = worst < 1e-12 ? CheckStatus::pass : CheckStatus::noted;
                         if (rec.status == CheckStatus::noted)
                           rec.detail = last.proportional ? "display = " + fmt(last.ratio.real()) + " x generating function"
                                                          : "display not proportional to the generating function";
                         return rec;
                       }});
    }
  tasks.push_back({"zeta-matrices/Z-maps", "Z_{s,+-}, Z^e, Z^o bookkeeping", [](std::mt19937_64&) {
                     std::size_t bad = 0;
                     for (int r = 1; r <= 8; ++r) {
                       ZMaps z = zeta_maps(r);
                       for (int i = 0; i <= r; ++i) {
                         if (z.parity_sums[0][i] + z.parity_sums[1][i] != z.pm[0][i]) ++bad;
                         if (z.parity_sums[0][i] - z.parity_sums[1][i] != z.pm[1][i]) ++bad;
                         if (z.eo[i % 2][i] != Rational((i / 2) % 2 ? -1 : 1) || !z.eo[1 - i % 2][i].is_zero()) ++bad;
                       }
                     }
                     return exact(bad == 0, bad, "round trip for r <= 8");
                   }});
  tasks.push_back({"zeta-matrices/kappa/rpq-display", "kappa on R^{p,q}", [](std::mt19937_64&) {
                     std::size_t bad = 0;
                     for (int n : {3, 4, 5, 6, 7, 8}) {
                       KappaConst k = kappa_const(KappaType::rpq, 2, n - 2, n);
                       ParamPoly s = ParamPoly::var(Param::s), t = ParamPoly::var(Param::t), h(Rational(n, 2));
                       ParamPoly den = ParamPoly(16) * (s + ParamPoly(1)) * (s + h) * (t + ParamPoly(1)) * (t + h);
                       if (!(k.num == ParamPoly(1) && k.den == den && k.scale == cplx(1))) ++bad;
                     }
                     return exact(bad == 0, bad, "1/(16(s+1)(s+n/2)(t+1)(t+n/2)) for n = 3..8");
                   }});
  tasks.push_back({"zeta-matrices/kappa/rpq-rebuilt", "kappa on R^{p,q} from gamma(s) and the flip", [](std::mt19937_64&) {
                     CheckRecord rec;
                     KappaConst d = kappa_rpq_derived(3), k = kappa_const(KappaType::rpq, 2, 1, 3);
                     bool same_den = d.den == k.den;
                     rec.residual = std::abs(d.scale - k.scale);
                     rec.status = same_den && rec.residual == 0 ? CheckStatus::pass
                                  : same_den                    ? CheckStatus::noted
                                                                : CheckStatus::fail;
                     rec.detail = "rebuilt scale " + fmt(d.scale.real()) + " (factor i^{-2} of F(P(x-y) .)), display scale " +
                                  fmt(k.scale.real()) + "; denominators " + (same_den ? "agree" : "differ");
                     return rec;
                   }});
  tasks.push_back({"zeta-matrices/kappa/split", "kappa from c(s,eps), split case", [](std::mt19937_64& rng) {
                     std::uniform_real_distribution<double> u(0.05, 0.95);
                     double worst = 0;
                     for (const auto& row : registry(3)) {
                       if (row.type != "II" || row.family == "R^{p,q}") continue;
                       KappaConst k = kappa_const(KappaType::split, row.r, row.d, row.n);
                       for (int trial = 0; trial < 20; ++trial) {
                         double s = u(rng), t = u(rng);
                         cplx ref = k.eval(s, t);
                         for (bool e : {false, true})
                           for (bool h : {false, true})
                             worst = std::max(worst, std::abs(kappa_from_c(true, row.r, row.d, row.n, row.rplus, s, t, e, h) -
                                                              ref) / std::abs(ref));
                       }
                     }
                     return numeric(worst, 1e-10, "20 random (s,t) per split row, all sign pairs, relative");
                   }});
  tasks.push_back({"zeta-matrices/kappa/non-split", "kappa from c(s), non-split case", [](std::mt19937_64& rng) {
                     std::uniform_real_distribution<double> u(0.05, 0.95);
                     double derived = 0, display = 0;
                     for (const auto& row : registry(3)) {
                       if (row.type != "III" && row.type != "IV") continue;
                       KappaConst k = kappa_nonsplit_derived(row.r, row.d, row.n, row.rplus);
                       KappaConst st = kappa_const(KappaType::non_split, row.r, row.d, row.n);
                       for (int trial = 0; trial < 20; ++trial) {
                         double s = u(rng), t = u(rng);
                         cplx q = kappa_from_c(false, row.r, row.d, row.n, row.rplus, s, t, false, false);
                         derived = std::max(derived, std::abs(k.eval(s, t) - q) / std::abs(q));
                         display = std::max(display, std::abs(st.eval(s, t) - q) / std::abs(q));
                       }
                     }
                     CheckRecord rec = numeric(derived, 1e-10);
                     if (rec.status == CheckStatus::pass && display > 1e-10) rec.status = CheckStatus::noted;
                     rec.detail = "b_{r+,d} form matches to " + fmt(derived) + "; displayed b_{2r,d} form off by relative " +
                                  fmt(display);
                     return rec;
                   }});
}

void zeta_numeric_suite(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  std::vector<std::pair<int, int>> sigs{{2, 1}};
  if (!cfg.algebras.empty()) {
    sigs.clear();
    for (const auto& a : rpq_only(cfg, "zeta-numeric", {})) sigs.emplace_back(a->p, a->q);
  }
  double tol = cfg.tolerance;
  for (auto [p, q] : sigs) {
    int n = p + q;
    double lo = -1, hi = 1 - n / 2.0;
    if (!(hi > lo)) throw ConfigError("no convergence strip for the Gaussian pairing when p + q >= 4");
    std::vector<double> points = (p == 2 && q == 1) ? std::vector<double>{-0.6, -0.7, -0.8}
                                                    : std::vector<double>{lo + 0.25 * (hi - lo), lo + 0.5 * (hi - lo)};
    std::string sig = std::to_string(p) + "," + std::to_string(q);
    for (double s : points)
      tasks.push_back({"zeta-numeric/" + sig + "/s=" + fmt(s), "functional equation on R^{p,q}",
                       [p, q, s, tol](std::mt19937_64&) {
                         ZetaNumeric z = numeric_zeta_check(p, q, s);
                         CheckRecord rec = numeric(std::max(z.rel_error, z.sector_residual), tol);
                         if (!z.converged) rec.status = CheckStatus::fail;
                         rec.detail = "lhs(+) " + fmt(z.lhs[0]) + " rhs(+) " + fmt(z.rhs[0]) + ", lhs(-) " + fmt(z.lhs[1]) +
                                      " rhs(-) " + fmt(z.rhs[1]) + ", pipeline gap " + fmt(z.pipeline_gap) +
                                      ", quadrature error " + fmt(z.error_estimate);
                         return rec;
                       }});
    tasks.push_back({"zeta-numeric/" + sig + "/odd", "functional equation on R^{p,q}, odd test function",
                     [p, q, points](std::mt19937_64&) {
                       ZetaNumeric z = numeric_zeta_check(p, q, points[0], 1.0, true);
                       double worst = 0;
                       for (int e = 0; e < 2; ++e) worst = std::max({worst, std::abs(z.lhs[e]), std::abs(z.rhs[e])});
                       return numeric(worst, 1e-10, "both sides vanish for x_1 exp(-|x|^2)");
                     }});
  }
}

using SuiteFn = void (*)(const SuiteConfig&, std::vector<Task>&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t{
      {"leibnitz", leibnitz_suite},         {"jordan-axioms", jordan_suite},
      {"bernstein", bernstein_suite},       {"main-identity", main_identity_suite},
      {"fourier-weyl", fourier_suite},      {"covariance", covariance_suite},
      {"brackets", brackets_suite},         {"lie-homomorphism", lie_suite},
      {"cocycle", cocycle_suite},           {"zeta-matrices", zeta_matrix_suite},
      {"zeta-numeric", zeta_numeric_suite},
  };
  return t;
}

bool suite_uses_rpq_only(const std::string& name) {
  return name == "covariance" || name == "brackets" || name == "lie-homomorphism" || name == "zeta-numeric";
}

void run_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks, std::vector<CheckRecord>& out) {
  std::size_t base = out.size();
  out.resize(base + tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      std::mt19937_64 rng(cfg.seed ^ fnv1a(tasks[i].id));
      auto t0 = std::chrono::steady_clock::now();
      CheckRecord rec;
      try {
        rec = tasks[i].run(rng);
      } catch (const ResourceLimit&) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        continue;
      } catch (const std::exception& e) {
        rec = exact(false, 1, std::string("exception: ") + e.what());
      }
      rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      rec.id = tasks[i].id;
      rec.anchor = tasks[i].anchor;
      out[base + i] = std::move(rec);
    }
  };
  int width = std::max(1, std::min<int>(cfg.jobs, int(tasks.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < width; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

int SuiteReport::count(CheckStatus s) const {
  return int(std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : suite_table()) v.push_back(n);
    return v;
  }();
  return names;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::noted: return "noted";
  }
  return "?";
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.max_degree < 1) throw ConfigError("max degree must be >= 1");
  if (cfg.max_degree > kMaxDegree)
    throw ResourceLimit("max degree " + std::to_string(cfg.max_degree) + " exceeds the limit " + std::to_string(kMaxDegree));
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (!(cfg.tolerance > 0)) throw ConfigError("tolerance must be positive");
  // parse every algebra up front so bad specs fail before any work
  for (const auto& a : cfg.algebras) parse_algebra(a);

  SuiteReport rep;
  rep.suite = cfg.suite;
  rep.config = cfg;
  std::vector<Task> tasks;
  if (cfg.suite == "all") {
    bool all_rpq = std::all_of(cfg.algebras.begin(), cfg.algebras.end(),
                               [](const std::string& s) { return parse_algebra(s)->kind == Kind::Rpq; });
    for (const auto& [name, fn] : suite_table()) {
      if (!cfg.algebras.empty() && suite_uses_rpq_only(name) && !all_rpq) continue;
      fn(cfg, tasks);
    }
  } else {
    auto it = std::find_if(suite_table().begin(), suite_table().end(),
                           [&](const auto& e) { return e.first == cfg.suite; });
    if (it == suite_table().end()) throw ConfigError("unknown suite '" + cfg.suite + "'");
    it->second(cfg, tasks);
  }
  run_tasks(cfg, tasks, rep.checks);
  return rep;
}

std::string report_json(const SuiteReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["algebras"] = r.config.algebras;
  j["seed"] = r.config.seed;
  j["max_degree"] = r.config.max_degree;
  j["tolerance"] = r.config.tolerance;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["paper_anchor"] = c.anchor;
    e["status"] = status_name(c.status);
    e["residual"] = c.residual;
    if (with_timing) e["millis"] = std::round(c.millis * 1000) / 1000;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"pass", r.count(CheckStatus::pass)},
                  {"fail", r.count(CheckStatus::fail)},
                  {"noted", r.count(CheckStatus::noted)}};
  return j.dump(2);
}

}  // namespace jc
