#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gnorm {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major.
///
/// Construction validates that the entry count matches the shape and that
/// every entry is finite; afterwards the value is only read, so instances can
/// be shared freely between threads.
class CMatrix {
 public:
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix from_real(std::size_t rows, std::size_t cols,
                           std::span<const double> entries);
  static CMatrix identity(std::size_t order);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) noexcept {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  CMatrix conjugate_transpose() const;
  CMatrix transpose() const;

  /// True when every imaginary part is exactly zero.
  bool is_real() const noexcept;

  /// Max entrywise deviation |a_ij - conj(a_ji)|; requires a square matrix.
  double hermitian_defect() const;

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(double scale, const CMatrix& a);

/// A * A^H, an m x m Hermitian positive semidefinite matrix.
CMatrix gram_rows(const CMatrix& a);

}  // namespace gnorm
