#include "gnorm/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnorm/error.hpp"

namespace gnorm {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(ErrorCode::InvalidArgument, "matrix entry is not finite");
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0)
    fail(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    fail(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
  if (entries_.size() != rows * cols)
    fail(ErrorCode::DimensionMismatch,
         "expected " + std::to_string(rows * cols) + " entries, got " +
             std::to_string(entries_.size()));
  require_finite(entries_);
}

CMatrix CMatrix::from_real(std::size_t rows, std::size_t cols,
                           std::span<const double> entries) {
  std::vector<Complex> z(entries.begin(), entries.end());
  return CMatrix(rows, cols, std::move(z));
}

CMatrix CMatrix::identity(std::size_t order) {
  CMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::conjugate_transpose() const {
  CMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool CMatrix::is_real() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& z) { return z.imag() == 0.0; });
}

double CMatrix::hermitian_defect() const {
  if (!is_square()) fail(ErrorCode::NotHermitian, "matrix is not square");
  double defect = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      defect = std::max(defect,
                        std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return defect;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::DimensionMismatch, "inner dimensions differ");
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::DimensionMismatch, "shapes differ");
  CMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

CMatrix operator*(double scale, const CMatrix& a) {
  CMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = scale * a(i, j);
  return c;
}

CMatrix gram_rows(const CMatrix& a) {
  const std::size_t m = a.rows();
  CMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < a.cols(); ++k)
        s += a(i, k) * std::conj(a(j, k));
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
  for (std::size_t i = 0; i < m; ++i) g(i, i) = g(i, i).real();
  return g;
}

}  // namespace gnorm
