#pragma once

#include <cstddef>
#include <optional>

#include "gnorm/cmatrix.hpp"
#include "gnorm/graph.hpp"
#include "gnorm/spectra.hpp"

namespace gnorm {

/// A graph or matrix together with the spectral data every bound reads.
/// All derived quantities are computed once at construction; the object is
/// immutable afterwards.
class Subject {
 public:
  static Subject from_graph(Graph g);
  static Subject from_matrix(CMatrix a);

  bool is_graph() const noexcept { return graph_.has_value(); }
  /// nullptr for matrix subjects.
  const Graph* graph() const noexcept { return graph_ ? &*graph_ : nullptr; }
  const CMatrix& matrix() const noexcept { return matrix_; }

  std::size_t rows() const noexcept { return matrix_.rows(); }
  std::size_t cols() const noexcept { return matrix_.cols(); }

  const SingularSpectrum& sigma() const noexcept { return sigma_; }
  /// Eigenvalues for graphs and Hermitian matrices.
  const std::optional<EigenSpectrum>& eigen() const noexcept { return eigen_; }
  /// Exact chromatic number for graphs up to the exact-search bound.
  std::optional<int> chromatic() const noexcept { return chromatic_; }

  std::size_t edge_count() const noexcept { return edges_; }
  double entry_l1() const noexcept { return l1_; }
  double entry_l2() const noexcept { return l2_; }
  double entry_inf() const noexcept { return linf_; }
  bool nonnegative() const noexcept { return nonnegative_; }
  bool zero_one() const noexcept { return zero_one_; }

 private:
  explicit Subject(CMatrix a) : matrix_(std::move(a)) {}
  void fill_entrywise();

  std::optional<Graph> graph_;
  CMatrix matrix_;
  SingularSpectrum sigma_;
  std::optional<EigenSpectrum> eigen_;
  std::optional<int> chromatic_;
  std::size_t edges_ = 0;
  double l1_ = 0, l2_ = 0, linf_ = 0;
  bool nonnegative_ = false;
  bool zero_one_ = false;
};

}  // namespace gnorm
