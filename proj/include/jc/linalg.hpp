// Dense exact linear algebra over Q.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jc/rational.hpp"

namespace jc {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

struct Rref {
  Matrix m;
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank() const { return int(pivots.size()); }
};

Rref rref(Matrix m);
int rank(const Matrix& m);
Rational det(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
// one solution of m x = b, if any
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);
// basis of {x : m x = 0}, one vector per free column
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

}  // namespace jc
