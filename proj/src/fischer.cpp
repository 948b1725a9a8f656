#include "jc/fischer.hpp"

#include <algorithm>
#include <deque>

#include "jc/errors.hpp"

namespace jc {

namespace {

void require_same(const MPoly& a, const MPoly& b) {
  if (a.space() && b.space() && !same_space(a.space(), b.space()))
    throw ContractViolation("polynomials over different variable lists");
}

Rational exp_factorial(const Exp& e) {
  Rational f(1);
  for (auto v : e) f *= factorial(v);
  return f;
}

// coefficient of a parameter-free monomial key
const Rational* find_coeff(const MPoly& p, const Mono& m) {
  const auto& t = p.terms();
  auto it = std::lower_bound(t.begin(), t.end(), m,
                             [](const Term& a, const Mono& k) { return a.first < k; });
  if (it != t.end() && it->first == m) return &it->second;
  return nullptr;
}

}  // namespace

MPoly apply_diffop(const MPoly& p, const MPoly& q) {
  require_same(p, q);
  MPoly out(q.space() ? q.space() : p.space());
  for (const auto& [e, c] : p.coefficients()) {
    MPoly d = q.derivative(e);
    if (d.is_zero()) continue;
    out += d.scaled(c);
  }
  return out;
}

ParamPoly fischer_inner(const MPoly& p, const MPoly& q) {
  require_same(p, q);
  auto pc = p.coefficients();
  auto qc = q.coefficients();
  ParamPoly acc;
  std::size_t j = 0;
  for (const auto& [e, c] : pc) {
    while (j < qc.size() && mono_x(qc[j].first) < mono_x(e)) ++j;
    if (j < qc.size() && qc[j].first == e) acc += (c * qc[j].second).scaled(exp_factorial(e));
  }
  return acc;
}

MPoly PolySpan::reduce(const MPoly& p) const {
  MPoly r = p;
  for (const auto& row : rows_) {
    const Mono& lead = row.terms().back().first;
    const Rational* c = find_coeff(r, lead);
    if (c) r -= row.scaled(*c);
  }
  return r;
}

bool PolySpan::insert(const MPoly& p) {
  if (!p.is_param_free()) throw ContractViolation("span of parameter-dependent polynomials");
  MPoly r = reduce(p);
  if (r.is_zero()) return false;
  r = r.scaled(r.terms().back().second.inv());
  const Mono& lead = r.terms().back().first;
  for (auto& row : rows_) {
    const Rational* c = find_coeff(row, lead);
    if (c) row -= r.scaled(*c);
  }
  rows_.push_back(std::move(r));
  inserted_.push_back(p);
  return true;
}

bool PolySpan::contains(const MPoly& p) const { return reduce(p).is_zero(); }

std::vector<MPoly> DerivativeSpace::graded(int k) const {
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (degree[i] == k) out.push_back(basis[i]);
  return out;
}

DerivativeSpace derivative_space(const MPoly& p) {
  if (p.is_zero()) throw ContractViolation("derivative space of the zero polynomial is empty");
  if (!p.is_param_free()) throw ContractViolation("derivative space needs a parameter-free polynomial");
  PolySpan span(p.space());
  std::deque<MPoly> queue;
  span.insert(p);
  queue.push_back(p);
  while (!queue.empty()) {
    MPoly b = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < p.nvars(); ++i) {
      MPoly d = b.derivative(i);
      if (d.is_zero()) continue;
      if (span.insert(d)) queue.push_back(d);
    }
  }
  DerivativeSpace out;
  out.basis = span.inserted();
  std::stable_sort(out.basis.begin(), out.basis.end(),
                   [](const MPoly& a, const MPoly& b) { return a.degree() > b.degree(); });
  for (const auto& b : out.basis) out.degree.push_back(b.degree());
  return out;
}

std::vector<MPoly> fischer_orthogonalize(const std::vector<MPoly>& basis) {
  std::vector<MPoly> out;
  std::vector<Rational> norms;
  for (const auto& b : basis) {
    MPoly v = b;
    for (std::size_t k = 0; k < out.size(); ++k) {
      Rational c = fischer_inner(b, out[k]).constant();
      if (!c.is_zero()) v -= out[k].scaled(c / norms[k]);
    }
    Rational n = fischer_inner(v, v).constant();
    if (n.is_zero()) throw TheoremViolation("Fischer product degenerate on a real polynomial");
    out.push_back(std::move(v));
    norms.push_back(n);
  }
  return out;
}

MPoly flat(const MPoly& p, const MPoly& bold_p) { return apply_diffop(p, bold_p); }

LeibnitzData leibnitz_data(const MPoly& bold_p, bool with_triple) {
  LeibnitzData d;
  d.bold_p = bold_p;
  d.basis = fischer_orthogonalize(derivative_space(bold_p).basis);
  int rho = d.rho();
  for (const auto& b : d.basis) d.norm.push_back(fischer_inner(b, b).constant());
  // (bold_p, p_i p_j)_F without normalization
  Matrix raw(rho, rho);
  for (int i = 0; i < rho; ++i)
    for (int j = i; j < rho; ++j) {
      Rational v = fischer_inner(bold_p, d.basis[i] * d.basis[j]).constant();
      raw(i, j) = v;
      raw(j, i) = v;
    }
  d.pair = Matrix(rho, rho);
  for (int i = 0; i < rho; ++i)
    for (int j = 0; j < rho; ++j) d.pair(i, j) = raw(i, j) / (d.norm[i] * d.norm[j]);
  if (with_triple) {
    // (p_l, p_j p_k)_F
    std::vector<Rational> inner(std::size_t(rho) * rho * rho);
    for (int l = 0; l < rho; ++l)
      for (int j = 0; j < rho; ++j)
        for (int k = j; k < rho; ++k) {
          Rational v = fischer_inner(d.basis[l], d.basis[j] * d.basis[k]).constant();
          inner[(std::size_t(l) * rho + j) * rho + k] = v;
          inner[(std::size_t(l) * rho + k) * rho + j] = v;
        }
    d.triple.assign(std::size_t(rho) * rho * rho, Rational(0));
    for (int i = 0; i < rho; ++i)
      for (int l = 0; l < rho; ++l) {
        if (raw(i, l).is_zero()) continue;
        for (int j = 0; j < rho; ++j)
          for (int k = 0; k < rho; ++k) {
            const Rational& v = inner[(std::size_t(l) * rho + j) * rho + k];
            if (v.is_zero()) continue;
            d.triple[(std::size_t(i) * rho + j) * rho + k] +=
                raw(i, l) * v / (d.norm[i] * d.norm[l] * d.norm[j] * d.norm[k]);
          }
      }
  }
  return d;
}

MPoly leibnitz_expand(const LeibnitzData& d, const MPoly& f, const MPoly& g) {
  require_same(f, g);
  int rho = d.rho();
  std::vector<MPoly> df, dg;
  for (const auto& b : d.basis) {
    df.push_back(apply_diffop(b, f));
    dg.push_back(apply_diffop(b, g));
  }
  MPoly out(f.space());
  for (int i = 0; i < rho; ++i) {
    if (df[i].is_zero()) continue;
    for (int j = 0; j < rho; ++j) {
      if (d.pair(i, j).is_zero() || dg[j].is_zero()) continue;
      out += (df[i] * dg[j]).scaled(d.pair(i, j));
    }
  }
  return out;
}

MPoly leibnitz_expand(const MPoly& bold_p, const MPoly& f, const MPoly& g) {
  return leibnitz_expand(leibnitz_data(bold_p), f, g);
}

MPoly leibnitz_expand3(const LeibnitzData& d, const MPoly& f, const MPoly& g, const MPoly& h) {
  if (d.triple.empty()) throw ContractViolation("triple coefficients were not built");
  int rho = d.rho();
  std::vector<MPoly> df, dg, dh;
  for (const auto& b : d.basis) {
    df.push_back(apply_diffop(b, f));
    dg.push_back(apply_diffop(b, g));
    dh.push_back(apply_diffop(b, h));
  }
  MPoly out(f.space());
  for (int i = 0; i < rho; ++i) {
    if (df[i].is_zero()) continue;
    for (int j = 0; j < rho; ++j) {
      if (dg[j].is_zero()) continue;
      MPoly fg;
      bool have = false;
      for (int k = 0; k < rho; ++k) {
        const Rational& a = d.a(i, j, k);
        if (a.is_zero() || dh[k].is_zero()) continue;
        if (!have) {
          fg = df[i] * dg[j];
          have = true;
        }
        out += (fg * dh[k]).scaled(a);
      }
    }
  }
  return out;
}

}  // namespace jc
