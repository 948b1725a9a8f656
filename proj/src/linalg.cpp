#include "jc/linalg.hpp"

#include <sstream>

#include "jc/errors.hpp"

namespace jc {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  Matrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.r_; ++i) {
    if (int(rows[i].size()) != m.c_) throw ContractViolation("ragged matrix rows");
    for (int j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw ContractViolation("matrix shape mismatch");
  Matrix p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j)
        if (!o(k, j).is_zero()) p(i, j) += a * o(k, j);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw ContractViolation("matrix shape mismatch");
  Matrix p(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) p.a_[i] += o.a_[i];
  return p;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Rational(-1)); }

Matrix Matrix::scaled(const Rational& c) const {
  Matrix p(*this);
  for (auto& v : p.a_) v *= c;
  return p;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (int(v.size()) != c_) throw ContractViolation("matrix-vector shape mismatch");
  std::vector<Rational> out(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

Rref rref(Matrix m) {
  Rref out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Rational inv = m(row, col).inv();
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

int rank(const Matrix& m) { return rref(m).rank(); }

Rational det(Matrix m) {
  if (m.rows() != m.cols()) throw ContractViolation("determinant of a non-square matrix");
  int n = m.rows();
  Rational d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    Rational inv = m(col, col).inv();
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      Rational f = m(i, col) * inv;
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  int n = m.rows();
  if (n != m.cols()) throw ContractViolation("inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
  return inv;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref r = rref(aug);
  std::vector<Rational> x(m.cols());
  for (int k = 0; k < r.rank(); ++k) {
    int pc = r.pivots[k];
    if (pc == m.cols()) return std::nullopt;  // inconsistent
    x[pc] = r.m(k, m.cols());
  }
  return x;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : r.pivots) is_piv[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (int k = 0; k < r.rank(); ++k) v[r.pivots[k]] = -r.m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace jc
