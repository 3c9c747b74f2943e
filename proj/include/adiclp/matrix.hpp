// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "adiclp/rational.hpp"

namespace adiclp {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major matrix. Dimensions may be zero.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(size_t rows, size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("Mat: size mismatch");
  }
  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(size_t j) const {
    std::vector<T> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat select_rows(const std::vector<size_t>& idx) const {
    Mat s(idx.size(), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
    return s;
  }
  Mat select_cols(const std::vector<size_t>& idx) const {
    Mat s(rows_, idx.size());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, idx[j]);
    return s;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
std::vector<T> mat_vec(const Mat<T>& A, const std::vector<T>& x) {
  if (x.size() != A.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<T> y(A.rows(), T(0));
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) y[i] += A(i, j) * x[j];
  return y;
}

template <class T>
std::vector<T> transpose_vec(const Mat<T>& A, const std::vector<T>& u) {
  if (u.size() != A.rows()) throw std::invalid_argument("transpose_vec: dimension mismatch");
  std::vector<T> y(A.cols(), T(0));
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) y[j] += A(i, j) * u[i];
  return y;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& A, const Mat<T>& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  Mat<T> C(A.rows(), B.cols());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t k = 0; k < A.cols(); ++k) {
      if (A(i, k) == T(0)) continue;
      for (size_t j = 0; j < B.cols(); ++j) C(i, j) += A(i, k) * B(k, j);
    }
  return C;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  T s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatMat to_rat(const IntMat& A) {
  RatMat R(A.rows(), A.cols());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) R(i, j) = Rat(A(i, j));
  return R;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline Int max_abs(const IntMat& A) {
  Int m = 0;
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j)
      if (abs(A(i, j)) > m) m = abs(A(i, j));
  return m;
}

// Text format: header "m n", then m whitespace-separated rows.
template <class T, class Parse>
Mat<T> read_matrix(std::istream& in, Parse parse) {
  size_t m, n;
  if (!(in >> m >> n)) throw std::invalid_argument("matrix: bad header");
  Mat<T> A(m, n);
  std::string tok;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!(in >> tok)) throw std::invalid_argument("matrix: missing entries");
      A(i, j) = parse(tok);
    }
  return A;
}

inline RatMat read_rat_matrix(std::istream& in) {
  return read_matrix<Rat>(in, [](const std::string& s) { return Rat::parse(s); });
}

inline IntMat read_int_matrix(std::istream& in) {
  return read_matrix<Int>(in, [](const std::string& s) {
    Rat q = Rat::parse(s);
    if (!q.is_integer()) throw std::invalid_argument("matrix: integer entry expected");
    return q.num();
  });
}

template <class T>
void write_matrix(std::ostream& out, const Mat<T>& A) {
  out << A.rows() << ' ' << A.cols() << '\n';
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) {
      if (j) out << ' ';
      if constexpr (std::is_same_v<T, Rat>)
        out << A(i, j).str();
      else
        out << A(i, j).get_str();
    }
    out << '\n';
  }
}

}  // namespace adiclp
