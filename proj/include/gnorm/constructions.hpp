#pragma once

#include <cstddef>
#include <span>

#include "gnorm/cmatrix.hpp"

namespace gnorm {

CMatrix all_ones(std::size_t m, std::size_t n);

/// a_kj = exp(2 pi i (k-1)(j-1) / n), a complex Hadamard matrix of every order.
CMatrix dft_matrix(std::size_t n);

/// +-1 matrix from the doubling construction; throws NotPowerOfTwo.
CMatrix sylvester_hadamard(std::size_t order);

inline constexpr std::size_t kMaxKroneckerEntries = 1'000'000;

/// Throws SizeOverflow above kMaxKroneckerEntries entries.
CMatrix kronecker(const CMatrix& a, const CMatrix& b);

/// J - 2A for a 0/1 matrix; throws NotZeroOne otherwise.
CMatrix one_complement(const CMatrix& a);

/// The given rows of dft_matrix(n) as an m x n member of Had_{m,n}.
CMatrix dft_rows(std::size_t n, std::span<const std::size_t> rows);

struct Plainness {
  Complex allones;  ///< <j_m, A j_n> / sqrt(mn), signed
  double sigma1;
  bool plain;       ///< |allones| = sigma1 within 1e-7 (1 + sigma1)
};

/// Both the signed form and the modulus verdict, for diagnostics.
Plainness plainness(const CMatrix& a, double tol_scale = 1.0);

bool is_plain(const CMatrix& a);

/// Entries share one nonzero modulus and rows are pairwise orthogonal.
bool in_had_class(const CMatrix& a, double tol_scale = 1.0);

bool is_zero_one(const CMatrix& a) noexcept;
bool is_nonnegative(const CMatrix& a) noexcept;

}  // namespace gnorm
