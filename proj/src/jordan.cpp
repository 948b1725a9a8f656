#include "jc/jordan.hpp"

#include <functional>
#include <sstream>

#include "json.hpp"

#include "jc/errors.hpp"

namespace jc {

namespace {

// ---- matrix realizations ----

CMatrix czero(int m) { return {Matrix(m, m), Matrix(m, m)}; }

CMatrix cadd(const CMatrix& a, const CMatrix& b) { return {a.re + b.re, a.im + b.im}; }

struct ChartEntry {
  int i, j;
  int part;  // 0 real entry, 1 real part of a complex pair, 2 imaginary part
};

std::vector<ChartEntry> chart_entries(Kind kind, int m) {
  std::vector<ChartEntry> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (kind == Kind::MatR) {
        out.push_back({i, j, 0});
      } else if (j >= i) {
        if (kind == Kind::SymR || i == j) {
          out.push_back({i, j, 0});
        } else {
          out.push_back({i, j, 1});
          out.push_back({i, j, 2});
        }
      }
    }
  return out;
}

CMatrix basis_matrix(Kind kind, int m, const ChartEntry& ce) {
  CMatrix b = czero(m);
  if (kind == Kind::MatR) {
    b.re(ce.i, ce.j) = 1;
  } else if (ce.i == ce.j) {
    b.re(ce.i, ce.i) = 1;
  } else if (ce.part == 0 || ce.part == 1) {
    b.re(ce.i, ce.j) = 1;
    b.re(ce.j, ce.i) = 1;
  } else {
    b.im(ce.i, ce.j) = 1;
    b.im(ce.j, ce.i) = -1;
  }
  return b;
}

std::vector<Rational> coords_of(Kind kind, int m, const CMatrix& mat) {
  std::vector<Rational> out;
  for (const auto& ce : chart_entries(kind, m)) {
    if (ce.part == 2)
      out.push_back(mat.im(ce.i, ce.j));
    else
      out.push_back(mat.re(ce.i, ce.j));
  }
  return out;
}

std::string entry_name(Kind kind, const ChartEntry& ce) {
  std::string ij = std::to_string(ce.i + 1) + std::to_string(ce.j + 1);
  if (kind == Kind::HermC) {
    if (ce.part == 0) return "h" + ij;
    return (ce.part == 1 ? "u" : "v") + ij;
  }
  return "x" + ij;
}

// ---- symbolic helpers ----

std::vector<std::vector<MPoly>> minor_of(const std::vector<std::vector<MPoly>>& m, int row, int col) {
  std::vector<std::vector<MPoly>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (int(i) == row) continue;
    std::vector<MPoly> r;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (int(j) != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

void finish_generic(Algebra& a) {
  int n = a.n, r = a.r;
  for (int i = 0; i < n; ++i) a.generic.push_back(MPoly::var(a.chart, i));
  std::vector<std::vector<MPoly>> pw;
  std::vector<MPoly> one;
  for (int i = 0; i < n; ++i) one.emplace_back(a.chart, ParamPoly(a.unit[i]));
  pw.push_back(one);
  for (int k = 1; k <= r; ++k) pw.push_back(jordan_mul(a, a.generic, pw.back()));

  // generic trace tr(x) = (r/n) Tr L(x) on a simple algebra; the a_j then follow from
  // Newton's identities on the power traces tr(x^k)
  std::vector<Rational> tr_lin(n);
  for (int i = 0; i < n; ++i) {
    Rational acc;
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.prod[std::size_t(i) * n + j])
        if (k == j) acc += c;
    tr_lin[i] = acc * Rational(r, n);
  }
  auto tr_of = [&](const std::vector<MPoly>& v) {
    MPoly acc(a.chart);
    for (int i = 0; i < n; ++i)
      if (!tr_lin[i].is_zero()) acc += v[i].scaled(tr_lin[i]);
    return acc;
  };
  if (tr_of(one) != MPoly(a.chart, ParamPoly(r))) throw TheoremViolation("trace of the unit is not the rank");
  std::vector<MPoly> psum(r + 1);
  for (int k = 1; k <= r; ++k) psum[k] = tr_of(pw[k]);
  std::vector<MPoly> ej(r + 1);
  ej[0] = MPoly(a.chart, ParamPoly(1));
  for (int j = 1; j <= r; ++j) {
    MPoly acc(a.chart);
    for (int i = 1; i <= j; ++i) {
      MPoly t = ej[j - i] * psum[i];
      acc = (i % 2) ? acc + t : acc - t;
    }
    ej[j] = acc.scaled(Rational(1, j));
  }
  a.min_poly.assign(ej.begin() + 1, ej.end());
  // Cayley-Hamilton check: x^r - a_1 x^{r-1} + ... = 0
  for (int i = 0; i < n; ++i) {
    MPoly acc(a.chart);
    for (int j = 0; j <= r; ++j) {
      MPoly t = ej[j] * pw[r - j][i];
      acc = (j % 2) ? acc - t : acc + t;
    }
    if (!acc.is_zero()) throw TheoremViolation("generic minimal polynomial does not annihilate x in " + a.spec);
  }
  a.trace = a.min_poly[0];
  a.det = a.min_poly[r - 1];
  // adj = (-1)^{r+1} sum_{j=0}^{r-1} (-1)^j a_j x^{r-1-j}, a_0 = 1
  a.adj.assign(n, MPoly(a.chart));
  for (int j = 0; j < r; ++j) {
    MPoly coef = j == 0 ? MPoly(a.chart, ParamPoly(1)) : a.min_poly[j - 1];
    if (j % 2) coef = -coef;
    if ((r + 1) % 2) coef = -coef;
    for (int i = 0; i < n; ++i) a.adj[i] += coef * pw[r - 1 - j][i];
  }
}

void build_from_matrices(Algebra& a) {
  auto entries = chart_entries(a.kind, a.m);
  a.n = int(entries.size());
  std::vector<std::string> names;
  std::vector<CMatrix> basis;
  for (const auto& ce : entries) {
    names.push_back(entry_name(a.kind, ce));
    basis.push_back(basis_matrix(a.kind, a.m, ce));
  }
  a.chart = make_space(names);
  a.prod.assign(std::size_t(a.n) * a.n, {});
  a.trace_gram = Matrix(a.n, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      CMatrix s = cadd(cmul(basis[i], basis[j]), cmul(basis[j], basis[i]));
      auto c = coords_of(a.kind, a.m, s);
      for (int k = 0; k < a.n; ++k)
        if (!c[k].is_zero()) a.prod[std::size_t(i) * a.n + j].emplace_back(k, c[k] / Rational(2));
      CMatrix pr = cmul(basis[i], basis[j]);
      Rational tr;
      for (int t = 0; t < a.m; ++t) tr += pr.re(t, t);
      a.trace_gram(i, j) = tr;
    }
  CMatrix id = czero(a.m);
  for (int t = 0; t < a.m; ++t) id.re(t, t) = 1;
  a.unit = coords_of(a.kind, a.m, id);
  a.pairing = a.trace_gram;
  a.fourier_pairing = a.trace_gram;
  a.tau_is_i = false;
}

}  // namespace

CMatrix cmul(const CMatrix& a, const CMatrix& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

MPoly poly_det(const std::vector<std::vector<MPoly>>& m) {
  int n = int(m.size());
  if (n == 0) throw ContractViolation("empty determinant");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MPoly acc;
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    MPoly term = m[0][j] * poly_det(minor_of(m, 0, j));
    acc = (j % 2) ? acc - term : acc + term;
  }
  if (!acc.space()) acc = MPoly(m[0][0].space());
  return acc;
}

AlgebraP make_sym(int m) {
  if (m < 1 || m > 5) throw ConfigError("sym:m needs 1 <= m <= 5");
  auto a = std::make_shared<Algebra>();
  a->kind = Kind::SymR;
  a->m = m;
  a->spec = "sym:" + std::to_string(m);
  build_from_matrices(*a);
  a->r = m;
  a->d = 1;
  a->e = 0;
  a->rplus = m;
  a->dplus = 1;
  a->euclidean = true;
  finish_generic(*a);
  return a;
}

AlgebraP make_mat(int m) {
  if (m < 1 || m > 4) throw ConfigError("mat:m needs 1 <= m <= 4");
  auto a = std::make_shared<Algebra>();
  a->kind = Kind::MatR;
  a->m = m;
  a->spec = "mat:" + std::to_string(m);
  build_from_matrices(*a);
  a->r = m;
  a->d = 2;
  a->e = 0;
  a->rplus = m;
  a->dplus = 1;
  finish_generic(*a);
  return a;
}

AlgebraP make_herm(int m) {
  if (m < 1 || m > 4) throw ConfigError("herm:m needs 1 <= m <= 4");
  auto a = std::make_shared<Algebra>();
  a->kind = Kind::HermC;
  a->m = m;
  a->spec = "herm:" + std::to_string(m);
  build_from_matrices(*a);
  a->r = m;
  a->d = 2;
  a->e = 0;
  a->rplus = m;
  a->dplus = 2;
  a->euclidean = true;
  finish_generic(*a);
  return a;
}

AlgebraP make_rpq(int p, int q) {
  if (p < 2 || q < 1) throw ConfigError("rpq:p,q needs p >= 2 and q >= 1");
  if (p + q > 8) throw ResourceLimit("rpq:p,q limited to p + q <= 8 (two copies must fit in 16 variables)");
  auto a = std::make_shared<Algebra>();
  a->kind = Kind::Rpq;
  a->p = p;
  a->q = q;
  a->spec = "rpq:" + std::to_string(p) + "," + std::to_string(q);
  int n = p + q;
  a->n = n;
  a->r = 2;
  a->d = n - 2;
  a->e = 0;
  a->rplus = 2;
  a->dplus = q - 1;
  a->chart = make_space(n, "x");
  // beta(v, w) = sum_{j<p} v_j w_j - sum_{j>=p} v_j w_j on coordinates 2..n
  auto beta = [&](int j) { return j < p ? Rational(1) : Rational(-1); };
  a->prod.assign(std::size_t(n) * n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& sc = a->prod[std::size_t(i) * n + j];
      if (i == 0 && j == 0) sc.emplace_back(0, Rational(1));
      else if (i == 0) sc.emplace_back(j, Rational(1));
      else if (j == 0) sc.emplace_back(i, Rational(1));
      else if (i == j) sc.emplace_back(0, -beta(i));
    }
  a->unit.assign(n, Rational(0));
  a->unit[0] = 1;
  a->trace_gram = Matrix(n, n);
  a->trace_gram(0, 0) = 2;
  for (int j = 1; j < n; ++j) a->trace_gram(j, j) = -beta(j) * Rational(2);
  // P(d) convention: half the trace form
  a->pairing = a->trace_gram.scaled(Rational(1, 2));
  a->fourier_pairing = Matrix::identity(n);
  a->tau_is_i = true;
  finish_generic(*a);
  return a;
}

AlgebraP parse_algebra(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("algebra spec must look like kind:args, got '" + spec + "'");
  std::string kind = spec.substr(0, colon), args = spec.substr(colon + 1);
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size()) throw ConfigError("bad integer in algebra spec '" + spec + "'");
      return v;
    } catch (const std::logic_error&) {
      throw ConfigError("bad integer in algebra spec '" + spec + "'");
    }
  };
  if (kind == "sym") return make_sym(to_int(args));
  if (kind == "mat") return make_mat(to_int(args));
  if (kind == "herm") return make_herm(to_int(args));
  if (kind == "rpq") {
    auto comma = args.find(',');
    if (comma == std::string::npos) throw ConfigError("rpq spec needs p,q");
    return make_rpq(to_int(args.substr(0, comma)), to_int(args.substr(comma + 1)));
  }
  static const char* meta_only[] = {"hermh", "skew", "symh", "math", "symc", "matc", "skwc",
                                     "rk0", "r1k", "ck", "oct", "octs", "octc"};
  for (const char* k : meta_only)
    if (kind == k) throw UnsupportedKind("'" + kind + "' is in the classification table but has no arithmetic");
  throw ConfigError("unknown algebra kind '" + kind + "'");
}

JordanElement unit(const AlgebraP& a) { return {a, a->unit}; }

JordanElement element(const AlgebraP& a, std::vector<Rational> x) {
  if (int(x.size()) != a->n) throw ContractViolation("coordinate vector has wrong length");
  return {a, std::move(x)};
}

JordanElement jordan_mul(const JordanElement& x, const JordanElement& y) {
  if (x.alg != y.alg && x.alg->spec != y.alg->spec) throw ContractViolation("elements of different algebras");
  return {x.alg, jordan_mul(*x.alg, x.x, y.x)};
}

JordanElement jordan_pow(const JordanElement& x, int k) {
  JordanElement r = unit(x.alg);
  for (int i = 0; i < k; ++i) r = jordan_mul(x, r);
  return r;
}

Matrix mult_op(const JordanElement& x) {
  int n = x.alg->n;
  Matrix L(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    auto col = jordan_mul(*x.alg, x.x, e);
    for (int i = 0; i < n; ++i) L(i, j) = col[i];
  }
  return L;
}

Matrix quad_rep(const JordanElement& x) {
  Matrix L = mult_op(x);
  Matrix L2 = mult_op(jordan_mul(x, x));
  return (L * L).scaled(Rational(2)) - L2;
}

int element_rank(const JordanElement& x) {
  int n = x.alg->n;
  std::vector<std::vector<Rational>> rows;
  JordanElement cur = unit(x.alg);
  for (int k = 0; k <= n; ++k) {
    rows.push_back(cur.x);
    if (rank(Matrix::from_rows(rows)) < int(rows.size())) return k;
    cur = jordan_mul(x, cur);
  }
  return n;
}

std::vector<Rational> generic_min_poly(const JordanElement& x) {
  const Algebra& a = *x.alg;
  int r = a.r;
  std::vector<std::vector<Rational>> pw{a.unit};
  for (int k = 1; k <= r; ++k) pw.push_back(jordan_mul(a, x.x, pw.back()));
  Matrix M(a.n, r);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < a.n; ++i) M(i, k) = pw[k][i];
  int rk = rank(M);
  if (rk < r) throw RankDeficiency("element is not regular (rank " + std::to_string(rk) + " < " + std::to_string(r) + ")", rk);
  auto c = solve(M, pw[r]);
  if (!c) throw TheoremViolation("x^r is not in the span of lower powers");
  std::vector<Rational> out(r);
  for (int j = 1; j <= r; ++j) out[j - 1] = (j % 2) ? (*c)[r - j] : -(*c)[r - j];
  return out;
}

Rational det_value(const JordanElement& x) { return x.alg->det.eval(x.x).constant(); }
Rational trace_value(const JordanElement& x) { return x.alg->trace.eval(x.x).constant(); }

JordanElement inverse(const JordanElement& x) {
  Rational d = det_value(x);
  if (d.is_zero()) throw SingularElement("det(x) = 0");
  std::vector<Rational> out;
  for (const auto& c : x.alg->adj) out.push_back(c.eval(x.x).constant() / d);
  return {x.alg, out};
}

MPoly sharp(const AlgebraP& a, const MPoly& p, int k) {
  if (!same_space(p.space(), a->chart)) throw ContractViolation("sharp: polynomial not over the algebra chart");
  if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != k))
    throw ContractViolation("sharp: polynomial must be homogeneous of degree k");
  if (k == 0) return p * a->det;
  MPoly sub = p.compose(a->adj, a->chart);
  auto q = sub.divide_exact(a->det.pow(k - 1));
  if (!q) throw TheoremViolation("sharp: p(adj x) not divisible by det^(k-1)");
  return *q;
}

int signature_class(const JordanElement& x) {
  if (x.alg->kind != Kind::SymR) throw UnsupportedKind("signature class implemented for Sym(m,R) only");
  CMatrix X = to_matrix(x);
  int m = x.alg->m;
  // Faddeev-LeVerrier: char poly coefficients c[0..m], c[m] = 1
  std::vector<Rational> c(m + 1);
  c[m] = 1;
  Matrix Mk(m, m);
  for (int k = 1; k <= m; ++k) {
    Mk = X.re * Mk + Matrix::identity(m).scaled(c[m - k + 1]);
    Matrix XM = X.re * Mk;
    Rational tr;
    for (int i = 0; i < m; ++i) tr += XM(i, i);
    c[m - k] = -tr / Rational(k);
  }
  if (c[0].is_zero()) throw SingularElement("signature class undefined on det(x) = 0");
  // negative roots = sign changes of p(-T)
  int changes = 0, last = 0;
  for (int i = 0; i <= m; ++i) {
    int sgn = c[i].sign() * ((i % 2) ? -1 : 1);
    if (sgn == 0) continue;
    if (last != 0 && sgn != last) ++changes;
    last = sgn;
  }
  return changes;
}

MPoly principal_minor(const AlgebraP& a, int k) {
  if (a->kind != Kind::SymR) throw UnsupportedKind("principal minors implemented for Sym(m,R) only");
  if (k < 0 || k > a->r) throw ContractViolation("principal minor index out of range");
  if (k == 0) return MPoly(a->chart, ParamPoly(1));
  auto entries = chart_entries(a->kind, a->m);
  std::vector<std::vector<MPoly>> M(k, std::vector<MPoly>(k));
  for (int idx = 0; idx < a->n; ++idx) {
    const auto& ce = entries[idx];
    if (ce.i < k && ce.j < k) {
      M[ce.i][ce.j] = a->generic[idx];
      M[ce.j][ce.i] = a->generic[idx];
    }
  }
  return poly_det(M);
}

JordanElement sample_regular(const AlgebraP& a, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Rational> x;
    for (int i = 0; i < a->n; ++i) x.emplace_back(num(rng), den(rng));
    JordanElement e{a, x};
    if (det_value(e).is_zero()) continue;
    if (element_rank(e) < a->r) continue;
    return e;
  }
  throw TheoremViolation("could not sample a regular element of " + a->spec);
}

CMatrix to_matrix(const JordanElement& x) {
  const Algebra& a = *x.alg;
  if (a.kind == Kind::Rpq) throw UnsupportedKind("no matrix realization for rpq");
  CMatrix M = czero(a.m);
  auto entries = chart_entries(a.kind, a.m);
  for (int idx = 0; idx < a.n; ++idx) M = cadd(M, [&] {
      CMatrix b = basis_matrix(a.kind, a.m, entries[idx]);
      return CMatrix{b.re.scaled(x.x[idx]), b.im.scaled(x.x[idx])};
    }());
  return M;
}

JordanElement from_matrix(const AlgebraP& a, const CMatrix& m) {
  if (a->kind == Kind::Rpq) throw UnsupportedKind("no matrix realization for rpq");
  return {a, coords_of(a->kind, a->m, m)};
}

MPoly det_in(const Algebra& a, const VarSpaceP& space, int offset) {
  std::vector<int> map;
  for (int i = 0; i < a.n; ++i) map.push_back(offset + i);
  return a.det.remap(space, map);
}

MPoly det_of_dual(const Algebra& a, const VarSpaceP& space, int offset) {
  auto inv = inverse(a.pairing);
  if (!inv) throw ContractViolation("pairing matrix is singular");
  std::vector<MPoly> images;
  for (int i = 0; i < a.n; ++i) {
    MPoly img(space);
    for (int j = 0; j < a.n; ++j)
      if (!(*inv)(i, j).is_zero()) img += MPoly::var(space, offset + j).scaled((*inv)(i, j));
    images.push_back(img);
  }
  return a.det.compose(images, space);
}

ParamPoly b_function(int r, const Rational& d, Param var) {
  ParamPoly s = ParamPoly::var(var), acc(1);
  for (int j = 0; j < r; ++j) acc *= s + ParamPoly(Rational(j) * d / Rational(2));
  return acc;
}

// ---- classification table ----

std::vector<RegistryRow> registry(int max_param) {
  std::vector<RegistryRow> rows;
  auto add = [&](std::string fam, std::string type, std::string pname, int pv, int n, int r, int d, int e,
                 int rp, int dp, std::string spec) {
    rows.push_back({std::move(fam), std::move(type), pname + "=" + std::to_string(pv), n, r, d, e, rp, dp,
                    !spec.empty(), std::move(spec)});
  };
  for (int m = 1; m <= max_param; ++m) {
    add("Sym(m,R)", "I", "m", m, m * (m + 1) / 2, m, 1, 0, m, 1, m <= 5 ? "sym:" + std::to_string(m) : "");
    add("Herm(m,C)", "I", "m", m, m * m, m, 2, 0, m, 2, m <= 4 ? "herm:" + std::to_string(m) : "");
    add("Herm(m,H)", "I", "m", m, m * (2 * m - 1), m, 4, 0, m, 4, "");
    add("Mat(m,R)", "II", "m", m, m * m, m, 2, 0, m, 1, m <= 4 ? "mat:" + std::to_string(m) : "");
    add("Skew(2m,R)", "II", "m", m, m * (2 * m - 1), m, 4, 0, m, 2, "");
    add("Sym(2l,R)∩Mat(l,H)", "III", "l", m, m * (2 * m + 1), 2 * m, 4, 2, m, 2, "");
    add("Mat(l,H)", "III", "l", m, 4 * m * m, 2 * m, 8, 3, m, 4, "");
    add("Sym(m,C)", "IV", "m", m, m * (m + 1), 2 * m, 2, 1, m, 1, "");
    add("Mat(m,C)", "IV", "m", m, 2 * m * m, 2 * m, 4, 1, m, 2, "");
    add("Skw(2m,C)", "IV", "m", m, 2 * m * (2 * m - 1), 2 * m, 8, 1, m, 4, "");
  }
  for (int k = 3; k <= max_param + 2; ++k) {
    add("R^{1,k-1}", "I", "k", k, k, 2, k - 2, 0, 2, k - 2, "");
    add("R^{k,0}", "III", "k", k, k, 2, 0, k - 1, 1, 0, "");
    add("C^k", "IV", "k", k, 2 * k, 4, 2 * (k - 2), 1, 2, k - 2, "");
  }
  for (int p = 2; p <= max_param; ++p)
    for (int q = 1; q <= max_param; ++q) {
      int n = p + q;
      rows.push_back({"R^{p,q}", "II", "p=" + std::to_string(p) + ",q=" + std::to_string(q), n, 2, n - 2, 0, 2,
                      q - 1, n <= 8, n > 8 ? "" : "rpq:" + std::to_string(p) + "," + std::to_string(q)});
    }
  rows.push_back({"Herm(3,O)", "I", "-", 27, 3, 8, 0, 3, 8, false, ""});
  rows.push_back({"Herm(3,O_s)", "II", "-", 27, 3, 8, 0, 3, 4, false, ""});
  // rank and d follow from r = 2 r_+ and the dimension identity
  rows.push_back({"Herm(3,O)_C", "IV", "-", 54, 6, 16, 1, 3, 8, false, ""});
  return rows;
}

std::string registry_json(int max_param) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : registry(max_param)) {
    arr.push_back({{"family", r.family}, {"type", r.type}, {"param", r.param}, {"n", r.n}, {"r", r.r},
                   {"d", r.d}, {"e", r.e}, {"r_plus", r.rplus}, {"d_plus", r.dplus},
                   {"supported", r.supported}, {"cli_spec", r.cli_spec}});
  }
  return arr.dump(2);
}

}  // namespace jc
