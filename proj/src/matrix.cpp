#include "kv/matrix.hpp"

#include "kv/errors.hpp"

namespace kv {

Matrix Matrix::identity(VarListPtr vars, std::size_t n) {
  Matrix m(std::move(vars), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFunc::one(m.vars_);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix r(vars_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw RankMismatch("matrix shape mismatch");
  Matrix r(a.vars_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw RankMismatch("matrix shape mismatch");
  Matrix r(a.vars_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw RankMismatch("matrix shape mismatch");
  Matrix r(a.vars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RatFunc s = RatFunc::zero(a.vars_);
      for (std::size_t k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Matrix Matrix::scaled(const RatFunc& f) const {
  Matrix r(vars_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * f;
  return r;
}

Matrix Matrix::pow(unsigned k) const {
  if (rows_ != cols_) throw RankMismatch("power of a non-square matrix");
  Matrix r = identity(vars_, rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& f : a_)
    if (!f.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!at(i, j).eq(at(j, i))) return false;
  return true;
}

bool Matrix::eq(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!a_[k].eq(o.a_[k])) return false;
  return true;
}

namespace {

// Cofactor-expansion determinant; cheap at tensor ranks and keeps the
// adjugate/determinant representation compact (one shared denominator).
RatFunc det_recursive(const Matrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.size() == 1) return m.at(row, cols[0]);
  RatFunc acc = RatFunc::zero(m.vars());
  for (std::size_t pick = 0; pick < cols.size(); ++pick) {
    const RatFunc& pivot = m.at(row, cols[pick]);
    if (pivot.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t q = 0; q < cols.size(); ++q)
      if (q != pick) rest.push_back(cols[q]);
    RatFunc minor = det_recursive(m, rest, row + 1);
    if (minor.is_zero()) continue;
    RatFunc term = pivot * minor;
    acc = (pick % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

RatFunc determinant(const Matrix& m) {
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_recursive(m, cols, 0);
}

}  // namespace

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw RankMismatch("inverse of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return identity(vars_, 0);
  if (n <= 4) {
    RatFunc det = determinant(*this);
    if (det.is_zero()) return std::nullopt;
    Matrix inv(vars_, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(vars_, n - 1, n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
          if (r == i) continue;
          for (std::size_t c = 0, mc = 0; c < n; ++c) {
            if (c == j) continue;
            minor.at(mr, mc) = at(r, c);
            ++mc;
          }
          ++mr;
        }
        RatFunc cof = (n == 1) ? RatFunc::one(vars_) : determinant(minor);
        if ((i + j) % 2 == 1) cof = -cof;
        inv.at(j, i) = cof / det;
      }
    return inv;
  }
  Matrix a = *this;
  Matrix inv = identity(vars_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    RatFunc p = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) / p;
      inv.at(col, j) = inv.at(col, j) / p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      RatFunc f = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) = a.at(r, j) - f * a.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace kv
