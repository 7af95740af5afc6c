#include "gnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnorm/error.hpp"

namespace gnorm {

SchattenOrder::SchattenOrder(double p) : p_(p) {
  if (!std::isfinite(p) || p < 1.0)
    fail(ErrorCode::InvalidArgument, "Schatten order must be finite and >= 1");
}

KyFanOrder::KyFanOrder(int k) : k_(k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "Ky Fan order must be >= 1");
}

double schatten_power_sum(std::span<const double> sigma, double p) {
  double s = 0.0;
  if (p == 1.0) {
    for (double x : sigma) s += x;
  } else if (p == 2.0) {
    for (double x : sigma) s += x * x;
  } else {
    for (double x : sigma)
      if (x > 0.0) s += std::pow(x, p);
  }
  return s;
}

double schatten_from_singular(std::span<const double> sigma, SchattenOrder p) {
  // Scale by sigma_1 so large p cannot overflow.
  const double top = sigma.empty() ? 0.0 : sigma.front();
  if (top == 0.0) return 0.0;
  if (p.value() == 1.0) return schatten_power_sum(sigma, 1.0);
  if (p.value() == 2.0) return std::sqrt(schatten_power_sum(sigma, 2.0));
  double s = 0.0;
  for (double x : sigma)
    if (x > 0.0) s += std::pow(x / top, p.value());
  return top * std::pow(s, 1.0 / p.value());
}

double kyfan_from_singular(std::span<const double> sigma, KyFanOrder k) {
  const std::size_t terms = std::min<std::size_t>(sigma.size(), k.value());
  double s = 0.0;
  for (std::size_t i = 0; i < terms; ++i) s += sigma[i];
  return s;
}

double schatten_norm(const CMatrix& a, SchattenOrder p) {
  return schatten_from_singular(singular_values(a).values, p);
}

double schatten_norm(const Graph& g, SchattenOrder p) {
  return schatten_norm(g.adjacency_matrix(), p);
}

double kyfan_norm(const CMatrix& a, KyFanOrder k) {
  return kyfan_from_singular(singular_values(a).values, k);
}

double kyfan_norm(const Graph& g, KyFanOrder k) {
  return kyfan_norm(g.adjacency_matrix(), k);
}

double energy(const Graph& g) { return schatten_norm(g, SchattenOrder(1.0)); }

double entrywise_norm(const CMatrix& a, double p) {
  if (p == kEntrywiseInfinity) {
    double m = 0.0;
    for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
  }
  if (!std::isfinite(p) || p < 1.0)
    fail(ErrorCode::InvalidArgument, "entrywise order must be >= 1 or infinity");
  double s = 0.0;
  for (const Complex& z : a.entries()) {
    const double x = std::abs(z);
    s += p == 1.0 ? x : p == 2.0 ? x * x : std::pow(x, p);
  }
  return p == 1.0 ? s : p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p);
}

KyFan2Identity kyfan2_eigen_identity(const EigenSpectrum& eigen) {
  const auto& mu = eigen.values;
  if (mu.size() < 2)
    fail(ErrorCode::InvalidArgument, "F_2 identity needs at least two vertices");
  const SingularSpectrum sigma = singular_values_from_eigen(eigen);
  KyFan2Identity out;
  out.kyfan2 = sigma.values[0] + sigma.values[1];
  out.eigen_expression = std::max(std::abs(mu.front()) + std::abs(mu[1]),
                                  std::abs(mu.front()) + std::abs(mu.back()));
  return out;
}

KyFan2Identity kyfan2_eigen_identity(const Graph& g) {
  if (g.order() < 2)
    fail(ErrorCode::InvalidArgument, "F_2 identity needs at least two vertices");
  const CMatrix a = g.adjacency_matrix();
  KyFan2Identity out = kyfan2_eigen_identity(hermitian_eigenvalues(a));
  out.kyfan2 = kyfan_norm(a, KyFanOrder(2));
  return out;
}

}  // namespace gnorm
