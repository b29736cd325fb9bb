#pragma once

#include <optional>
#include <vector>

#include "kv/ratfunc.hpp"

namespace kv {

// Dense matrix over the rational-function field.
class Matrix {
 public:
  Matrix(VarListPtr vars, std::size_t rows, std::size_t cols)
      : vars_(std::move(vars)),
        rows_(rows),
        cols_(cols),
        a_(rows * cols, RatFunc::zero(vars_)) {}

  static Matrix identity(VarListPtr vars, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarListPtr& vars() const { return vars_; }

  RatFunc& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RatFunc& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const RatFunc& f) const;
  Matrix pow(unsigned k) const;  // square matrices

  bool is_zero() const;
  bool is_symmetric() const;
  bool eq(const Matrix& o) const;  // entrywise rf_eq

  // Exact Gauss-Jordan elimination; nullopt when the determinant is
  // identically zero.
  std::optional<Matrix> inverse() const;

 private:
  VarListPtr vars_;
  std::size_t rows_, cols_;
  std::vector<RatFunc> a_;
};

}  // namespace kv
