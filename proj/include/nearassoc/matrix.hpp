#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nearassoc/field.hpp"

namespace nearassoc {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldContext& ctx, std::size_t n);
Vec basis_vec(const FieldContext& ctx, std::size_t n, std::size_t i);
Vec add(const Vec& lhs, const Vec& rhs);
Vec sub(const Vec& lhs, const Vec& rhs);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero(const Vec& v);

// Dense exact matrix. Entry (i, j) is the coefficient of e_i in the image of
// e_j, so a linear map acts on column vectors: (M v)[i] = sum_j M(i,j) v[j].
class Matrix {
 public:
  Matrix(const FieldContext& ctx, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldContext& ctx, std::size_t n);

  const FieldContext& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  Scalar det() const;                      // square only
  std::optional<Matrix> inverse() const;   // absent when singular

  bool is_zero() const;
  bool is_identity() const;

  friend Matrix operator+(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator-(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);
  friend bool operator!=(const Matrix& lhs, const Matrix& rhs) { return !(lhs == rhs); }

 private:
  FieldContext ctx_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace nearassoc
