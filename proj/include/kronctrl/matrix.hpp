#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "kronctrl/rational.hpp"

namespace kronctrl {

/// Row vector. Every left eigenvector, chain vector and witness is a RowVec.
class RowVec {
 public:
  RowVec() = default;
  explicit RowVec(std::size_t size) : entries_(size) {}
  explicit RowVec(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  RowVec(std::initializer_list<Rational> entries) : entries_(entries) {}

  /// e_index in R^size; index is 1-based.
  static RowVec unit(std::size_t size, std::size_t index);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool is_zero() const;

  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  RowVec& operator+=(const RowVec& rhs);
  RowVec& operator-=(const RowVec& rhs);
  RowVec& operator*=(const Rational& scale);

  friend RowVec operator+(RowVec lhs, const RowVec& rhs) { return lhs += rhs; }
  friend RowVec operator-(RowVec lhs, const RowVec& rhs) { return lhs -= rhs; }
  friend RowVec operator*(const Rational& scale, RowVec v) { return v *= scale; }

  friend bool operator==(const RowVec&, const RowVec&) = default;

 private:
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RowVec& v);

/// Dense row-major matrix of rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws DimensionMismatch on ragged input.
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  /// Stacks row vectors; all must share `cols` entries.
  static Mat from_rows(std::span<const RowVec> rows, std::size_t cols);
  static Mat from_rows(std::span<const RowVec> rows);
  static Mat diagonal(std::span<const Rational> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RowVec row(std::size_t r) const;
  RowVec col(std::size_t c) const;
  std::vector<RowVec> row_list() const;

  Mat transpose() const;
  bool is_zero() const;

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(const Rational& scale);

  friend Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
  friend Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
  friend Mat operator*(const Rational& scale, Mat m) { return m *= scale; }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Exact product; throws DimensionMismatch unless a.cols() == b.rows().
Mat mat_mul(const Mat& a, const Mat& b);
inline Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }

/// v·m; throws DimensionMismatch unless v.size() == m.rows().
RowVec operator*(const RowVec& v, const Mat& m);

/// Kronecker product: block (i,j) of the result is a(i,j)·b.
Mat kron(const Mat& a, const Mat& b);
RowVec kron(const RowVec& a, const RowVec& b);

/// m − s·I for square m.
Mat shift(const Mat& m, const Rational& s);

/// m^k for square m (m^0 = I).
Mat mat_pow(const Mat& m, unsigned k);

}  // namespace kronctrl
