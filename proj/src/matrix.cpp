#include "nearassoc/matrix.hpp"

namespace nearassoc {

namespace {

void require_same_context(const FieldContext& a, const FieldContext& b) {
  if (a != b) fail(Errc::ContextMismatch, a.describe() + " vs " + b.describe());
}

void require_same_length(const Vec& lhs, const Vec& rhs) {
  if (lhs.size() != rhs.size())
    fail(Errc::DimensionMismatch, "vector lengths " + std::to_string(lhs.size()) + " vs " +
                                      std::to_string(rhs.size()));
}

}  // namespace

Vec zero_vec(const FieldContext& ctx, std::size_t n) { return Vec(n, Scalar::zero(ctx)); }

Vec basis_vec(const FieldContext& ctx, std::size_t n, std::size_t i) {
  Vec v = zero_vec(ctx, n);
  v.at(i) = Scalar::one(ctx);
  return v;
}

Vec add(const Vec& lhs, const Vec& rhs) {
  require_same_length(lhs, rhs);
  Vec out = lhs;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs[i];
  return out;
}

Vec sub(const Vec& lhs, const Vec& rhs) {
  require_same_length(lhs, rhs);
  Vec out = lhs;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs[i];
  return out;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (Scalar& entry : out) entry *= c;
  return out;
}

bool is_zero(const Vec& v) {
  for (const Scalar& entry : v)
    if (!entry.is_zero()) return false;
  return true;
}

Matrix::Matrix(const FieldContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ctx)) {}

Matrix Matrix::identity(const FieldContext& ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ctx);
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_)
    fail(Errc::DimensionMismatch, "applying " + std::to_string(rows_) + "x" +
                                      std::to_string(cols_) + " map to a vector of length " +
                                      std::to_string(v.size()));
  Vec out = zero_vec(ctx_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) out[i] += at(i, j) * v[j];
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) fail(Errc::DimensionMismatch, "determinant of a non-square matrix");
  Matrix work = *this;
  const std::size_t n = rows_;
  Scalar result = Scalar::one(ctx_);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(ctx_);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
      result = -result;
    }
    result *= work.at(col, col);
    const Scalar inv = work.at(col, col).inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (work.at(row, col).is_zero()) continue;
      const Scalar factor = work.at(row, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        work.at(row, j) -= factor * work.at(col, j);
    }
  }
  return result;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) fail(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix work = *this;
  Matrix out = identity(ctx_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(out.at(pivot, j), out.at(col, j));
      }
    }
    const Scalar inv = work.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) *= inv;
      out.at(col, j) *= inv;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || work.at(row, col).is_zero()) continue;
      const Scalar factor = work.at(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(row, j) -= factor * work.at(col, j);
        out.at(row, j) -= factor * out.at(col, j);
      }
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const Scalar& entry : data_)
    if (!entry.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  require_same_context(lhs.ctx_, rhs.ctx_);
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
    fail(Errc::DimensionMismatch, "adding matrices of different shapes");
  Matrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
  require_same_context(lhs.ctx_, rhs.ctx_);
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
    fail(Errc::DimensionMismatch, "subtracting matrices of different shapes");
  Matrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_context(lhs.ctx_, rhs.ctx_);
  if (lhs.cols_ != rhs.rows_)
    fail(Errc::DimensionMismatch, "multiplying " + std::to_string(lhs.rows_) + "x" +
                                      std::to_string(lhs.cols_) + " by " +
                                      std::to_string(rhs.rows_) + "x" +
                                      std::to_string(rhs.cols_));
  Matrix out(lhs.ctx_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (lhs.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += lhs.at(i, k) * rhs.at(k, j);
    }
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  require_same_context(c.context(), m.ctx_);
  Matrix out = m;
  for (Scalar& entry : out.data_) entry *= c;
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  require_same_context(lhs.ctx_, rhs.ctx_);
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < lhs.data_.size(); ++i)
    if (lhs.data_[i] != rhs.data_[i]) return false;
  return true;
}

}  // namespace nearassoc
