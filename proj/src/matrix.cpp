#include "kronctrl/matrix.hpp"

#include <ostream>
#include <string>

#include "kronctrl/error.hpp"

namespace kronctrl {

namespace {

std::string shape(const Mat& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

RowVec RowVec::unit(std::size_t size, std::size_t index) {
  if (index == 0 || index > size) throw DimensionMismatch("unit vector index out of range");
  RowVec v(size);
  v[index - 1] = 1;
  return v;
}

bool RowVec::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

RowVec& RowVec::operator+=(const RowVec& rhs) {
  if (size() != rhs.size()) throw DimensionMismatch("row vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

RowVec& RowVec::operator-=(const RowVec& rhs) {
  if (size() != rhs.size()) throw DimensionMismatch("row vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

RowVec& RowVec::operator*=(const Rational& scale) {
  for (auto& x : entries_) x *= scale;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const RowVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::span<const RowVec> rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_rows(std::span<const RowVec> rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

Mat Mat::diagonal(std::span<const Rational> entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RowVec Mat::row(std::size_t r) const {
  return RowVec(std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

RowVec Mat::col(std::size_t c) const {
  RowVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<RowVec> Mat::row_list() const {
  std::vector<RowVec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Mat& Mat::operator+=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("cannot add " + shape(*this) + " and " + shape(rhs));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch("cannot subtract " + shape(rhs) + " from " + shape(*this));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Rational& scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RowVec operator*(const RowVec& v, const Mat& m) {
  if (v.size() != m.rows())
    throw DimensionMismatch("cannot multiply row of length " + std::to_string(v.size()) + " by " + shape(m));
  RowVec out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(k, j).is_zero()) out[j] += v[k] * m(k, j);
    }
  }
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  }
  return out;
}

RowVec kron(const RowVec& a, const RowVec& b) {
  RowVec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

Mat shift(const Mat& m, const Rational& s) {
  if (!m.is_square()) throw DimensionMismatch("shift needs a square matrix, got " + shape(m));
  Mat out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= s;
  return out;
}

Mat mat_pow(const Mat& m, unsigned k) {
  if (!m.is_square()) throw DimensionMismatch("power needs a square matrix, got " + shape(m));
  Mat out = Mat::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace kronctrl
