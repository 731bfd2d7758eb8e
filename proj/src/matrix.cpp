#include "gnne/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnne/error.hpp"

namespace gnne {

namespace {

void require(bool ok, const char* op, std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc) {
  if (!ok) {
    throw ArgumentError(std::string(op) + ": shape mismatch " + std::to_string(ar) + "x" + std::to_string(ac) +
                        " vs " + std::to_string(br) + "x" + std::to_string(bc));
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::column(std::span<const double> values) {
  Matrix m(values.size(), 1);
  std::copy(values.begin(), values.end(), m.data().begin());
  return m;
}

void Matrix::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

bool Matrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matmul", a.rows(), a.cols(), b.rows(), b.cols());
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double s = a(i, k);
      if (s == 0.0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += s * brow[j];
    }
  }
  return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "matmul_tn", a.rows(), a.cols(), b.rows(), b.cols());
  Matrix c(a.cols(), b.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    auto brow = b.row(k);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const double s = a(k, i);
      if (s == 0.0) continue;
      auto out = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += s * brow[j];
    }
  }
  return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "matmul_nt", a.rows(), a.cols(), b.rows(), b.cols());
  Matrix c(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto arow = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      auto brow = b.row(j);
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += arow[k] * brow[k];
      c(i, j) = s;
    }
  }
  return c;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_ptr,
                           std::vector<std::size_t> col_idx, std::vector<double> values)
    : rows_(rows), cols_(cols), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)), values_(std::move(values)) {
  if (row_ptr_.size() != rows_ + 1 || col_idx_.size() != values_.size() || row_ptr_.back() != values_.size()) {
    throw ArgumentError("SparseMatrix: inconsistent CSR arrays");
  }
}

Matrix SparseMatrix::multiply(const Matrix& b) const {
  require(cols_ == b.rows(), "sparse multiply", rows_, cols_, b.rows(), b.cols());
  Matrix c(rows_, b.cols());
  for (std::size_t i = 0; i < rows_; ++i) {
    auto out = c.row(i);
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      const double s = values_[p];
      auto brow = b.row(col_idx_[p]);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += s * brow[j];
    }
  }
  return c;
}

Matrix SparseMatrix::transpose_multiply(const Matrix& b) const {
  require(rows_ == b.rows(), "sparse transpose_multiply", rows_, cols_, b.rows(), b.cols());
  Matrix c(cols_, b.cols());
  for (std::size_t i = 0; i < rows_; ++i) {
    auto brow = b.row(i);
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      const double s = values_[p];
      auto out = c.row(col_idx_[p]);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += s * brow[j];
    }
  }
  return c;
}

Matrix SparseMatrix::to_dense() const {
  Matrix d(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) d(i, col_idx_[p]) += values_[p];
  }
  return d;
}

}  // namespace gnne
