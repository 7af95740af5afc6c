#pragma once

#include <cstddef>
#include <vector>

#include "gnorm/cmatrix.hpp"

namespace gnorm {

/// Real eigenvalues of a Hermitian matrix, nonincreasing.
struct EigenSpectrum {
  std::vector<double> values;
};

/// Singular values, nonincreasing, min(rows, cols) of them.
struct SingularSpectrum {
  std::vector<double> values;

  double largest() const noexcept { return values.empty() ? 0.0 : values.front(); }
};

inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic Jacobi on a Hermitian matrix. Real-valued input runs the real
/// symmetric variant of the same rotation scheme.
///
/// Throws NotHermitian when |a_ij - conj(a_ji)| exceeds 1e-12 (1 + |M|_inf),
/// NoConvergence when the sweep limit is hit.
EigenSpectrum hermitian_eigenvalues(const CMatrix& m);

/// Real symmetric row-major input of the given order; the symmetric check
/// is skipped (callers build the data symmetric by construction).
EigenSpectrum symmetric_eigenvalues(std::vector<double> a, std::size_t order);

/// Singular values through the Gram matrix on the smaller side. Hermitian
/// input takes the moduli of its eigenvalues instead, which avoids the square
/// root amplification of roundoff near zero.
SingularSpectrum singular_values(const CMatrix& a);

/// Moduli of the eigenvalues, re-sorted nonincreasing.
SingularSpectrum singular_values_from_eigen(const EigenSpectrum& eigen);

/// Sum of all entries divided by sqrt(rows * cols).
Complex allones_form(const CMatrix& a);

/// Real part of allones_form; throws NonRealRayleigh when the imaginary part
/// exceeds 1e-9 (1 + |value|).
double rayleigh_allones(const CMatrix& a);

}  // namespace gnorm
