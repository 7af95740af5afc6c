#include "gnorm/constructions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gnorm/error.hpp"
#include "gnorm/spectra.hpp"

namespace gnorm {

CMatrix all_ones(std::size_t m, std::size_t n) {
  return CMatrix(m, n, std::vector<Complex>(m * n, Complex{1.0, 0.0}));
}

CMatrix dft_matrix(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "DFT order must be positive");
  CMatrix a(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce the exponent mod n first so 1, -1, i, -i come out exact.
      const std::size_t e = (k * j) % n;
      if (4 * e % n == 0) {
        static constexpr Complex quarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        a(k, j) = quarter[4 * e / n];
      } else {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) /
                             static_cast<double>(n);
        a(k, j) = std::polar(1.0, angle);
      }
    }
  return a;
}

CMatrix sylvester_hadamard(std::size_t order) {
  if (order == 0 || (order & (order - 1)) != 0)
    fail(ErrorCode::NotPowerOfTwo,
         "Sylvester order " + std::to_string(order) + " is not a power of two");
  CMatrix h(order, order);
  h(0, 0) = 1.0;
  for (std::size_t size = 1; size < order; size *= 2)
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        const Complex x = h(i, j);
        h(i, j + size) = x;
        h(i + size, j) = x;
        h(i + size, j + size) = -x;
      }
  return h;
}

CMatrix kronecker(const CMatrix& a, const CMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows * cols > kMaxKroneckerEntries)
    fail(ErrorCode::SizeOverflow, "Kronecker product exceeds 10^6 entries");
  CMatrix k(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
  return k;
}

bool is_zero_one(const CMatrix& a) noexcept {
  for (const Complex& z : a.entries())
    if (z != Complex{0.0, 0.0} && z != Complex{1.0, 0.0}) return false;
  return true;
}

bool is_nonnegative(const CMatrix& a) noexcept {
  for (const Complex& z : a.entries())
    if (z.imag() != 0.0 || z.real() < 0.0) return false;
  return true;
}

CMatrix one_complement(const CMatrix& a) {
  if (!is_zero_one(a)) fail(ErrorCode::NotZeroOne, "matrix is not a 0/1 matrix");
  CMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = 1.0 - 2.0 * a(i, j);
  return c;
}

CMatrix dft_rows(std::size_t n, std::span<const std::size_t> rows) {
  if (rows.empty()) fail(ErrorCode::InvalidArgument, "no rows selected");
  const CMatrix full = dft_matrix(n);
  CMatrix out(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] >= n) fail(ErrorCode::InvalidArgument, "DFT row index out of range");
    for (std::size_t j = 0; j < n; ++j) out(r, j) = full(rows[r], j);
  }
  return out;
}

Plainness plainness(const CMatrix& a, double tol_scale) {
  Plainness p;
  p.allones = allones_form(a);
  p.sigma1 = singular_values(a).largest();
  p.plain = std::abs(std::abs(p.allones) - p.sigma1) <=
            1e-7 * tol_scale * (1.0 + p.sigma1);
  return p;
}

bool is_plain(const CMatrix& a) { return plainness(a).plain; }

bool in_had_class(const CMatrix& a, double tol_scale) {
  const double modulus = std::abs(a(0, 0));
  if (modulus == 0.0) return false;
  for (const Complex& z : a.entries())
    if (std::abs(std::abs(z) - modulus) > 1e-9 * tol_scale * modulus) return false;
  const double row_norm_sq = modulus * modulus * static_cast<double>(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t s = r + 1; s < a.rows(); ++s) {
      Complex dot{};
      for (std::size_t j = 0; j < a.cols(); ++j) dot += a(r, j) * std::conj(a(s, j));
      if (std::abs(dot) > 1e-9 * tol_scale * row_norm_sq) return false;
    }
  return true;
}

}  // namespace gnorm
