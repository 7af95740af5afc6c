#pragma once

#include <limits>
#include <span>

#include "gnorm/cmatrix.hpp"
#include "gnorm/graph.hpp"
#include "gnorm/spectra.hpp"

namespace gnorm {

/// Schatten order p >= 1, finite.
class SchattenOrder {
 public:
  explicit SchattenOrder(double p);
  double value() const noexcept { return p_; }

 private:
  double p_;
};

/// Ky Fan order k >= 1. Orders above the number of singular values saturate.
class KyFanOrder {
 public:
  explicit KyFanOrder(int k);
  int value() const noexcept { return k_; }

 private:
  int k_;
};

inline constexpr double kEntrywiseInfinity = std::numeric_limits<double>::infinity();

double schatten_from_singular(std::span<const double> sigma, SchattenOrder p);
/// Sum of sigma_i^p without the final root.
double schatten_power_sum(std::span<const double> sigma, double p);
double kyfan_from_singular(std::span<const double> sigma, KyFanOrder k);

double schatten_norm(const CMatrix& a, SchattenOrder p);
double schatten_norm(const Graph& g, SchattenOrder p);
double kyfan_norm(const CMatrix& a, KyFanOrder k);
double kyfan_norm(const Graph& g, KyFanOrder k);

/// Graph energy, the Schatten 1-norm of the adjacency matrix.
double energy(const Graph& g);

/// |A|_p = (sum |a_ij|^p)^(1/p) for p >= 1, max |a_ij| for p = infinity.
double entrywise_norm(const CMatrix& a, double p);

struct KyFan2Identity {
  double kyfan2;           ///< sigma_1 + sigma_2
  double eigen_expression; ///< max(|mu_1| + |mu_2|, |mu_1| + |mu_n|)
};

/// Both sides of the identity tying ||G||_{F_2} to the extreme eigenvalues.
KyFan2Identity kyfan2_eigen_identity(const Graph& g);
KyFan2Identity kyfan2_eigen_identity(const EigenSpectrum& eigen);

}  // namespace gnorm
