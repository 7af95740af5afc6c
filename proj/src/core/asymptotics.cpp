#include "gnorm/asymptotics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "gnorm/error.hpp"
#include "gnorm/norms.hpp"
#include "gnorm/parallel.hpp"
#include "gnorm/spectra.hpp"

namespace gnorm {

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

std::uint64_t stream_word(std::uint64_t seed, std::uint64_t sample,
                          std::uint64_t block) noexcept {
  return mix64(mix64(mix64(seed) ^ sample) ^ (block * 0xD1B54A32D192ED03ull));
}

Graph sample_gn_half(int n, std::uint64_t seed, std::uint64_t sample_index) {
  GraphBuilder b(n);
  std::uint64_t t = 0;
  std::uint64_t word = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t) {
      if (t % 64 == 0) word = stream_word(seed, sample_index, t / 64);
      if ((word >> (t % 64)) & 1u) b.add_edge(i, j);
    }
  return std::move(b).build();
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    fail(ErrorCode::DomainError, "gamma_fn requires finite x > 0");
  static constexpr std::array<double, 9> kCoef = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  if (x < 0.5)
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  const double z = x - 1.0;
  double sum = kCoef[0];
  for (std::size_t i = 1; i < kCoef.size(); ++i) sum += kCoef[i] / (z + static_cast<double>(i));
  const double t = z + g + 0.5;
  // t^(z+1/2) e^-t evaluated in log space to keep large arguments finite.
  return std::sqrt(2.0 * std::numbers::pi) * sum * std::exp((z + 0.5) * std::log(t) - t);
}

double semicircle_constant(double p) {
  if (!(p >= 1.0)) fail(ErrorCode::DomainError, "semicircle constant requires p >= 1");
  return gamma_fn(p / 2.0 + 0.5) / (std::sqrt(std::numbers::pi) * gamma_fn(p / 2.0 + 2.0));
}

double predicted_schatten(int n, double p) {
  if (n < 1 || !(p >= 1.0)) fail(ErrorCode::InvalidArgument, "predicted_schatten needs n >= 1, p >= 1");
  const double nn = static_cast<double>(n);
  if (p < 2.0) return std::pow(semicircle_constant(p), 1.0 / p) * std::pow(nn, 1.0 / p + 0.5);
  if (p == 2.0) return nn / std::numbers::sqrt2;
  return nn / 2.0;
}

ExperimentStats run_experiment(int n, double p, int samples, std::uint64_t seed,
                               unsigned threads) {
  if (n < 1 || n > kMaxExperimentOrder)
    fail(ErrorCode::InvalidArgument, "experiment order must be in [1, 2000]");
  if (samples < 1) fail(ErrorCode::InvalidArgument, "experiment needs at least one sample");
  const SchattenOrder order(p);

  ExperimentStats st;
  st.n = n;
  st.p = p;
  st.samples = samples;
  st.seed = seed;
  st.values.resize(samples);
  st.sigma1_over_n.resize(samples);
  st.sigma2_over_sqrt_n.resize(samples);
  st.edge_density.resize(samples);

  const double nn = static_cast<double>(n);
  parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t s) {
    const Graph g = sample_gn_half(n, seed, s);
    const double edges = static_cast<double>(g.edge_count());
    const SingularSpectrum sigma = singular_values_from_eigen(
        symmetric_eigenvalues(g.adjacency_real(), static_cast<std::size_t>(n)));
    st.values[s] = p == 2.0 ? std::sqrt(2.0 * edges) : schatten_from_singular(sigma.values, order);
    st.sigma1_over_n[s] = sigma.values[0] / nn;
    st.sigma2_over_sqrt_n[s] = n > 1 ? sigma.values[1] / std::sqrt(nn) : 0.0;
    st.edge_density[s] = n > 1 ? edges / static_cast<double>(pair_count(n)) : 0.0;
  });

  st.mean = mean_of(st.values);
  if (samples > 1) {
    double ss = 0.0;
    for (double v : st.values) ss += (v - st.mean) * (v - st.mean);
    st.stdev = std::sqrt(ss / static_cast<double>(samples - 1));
  }
  st.predicted = predicted_schatten(n, p);
  st.normalized = st.mean / st.predicted;
  st.mean_sigma1_over_n = mean_of(st.sigma1_over_n);
  st.mean_sigma2_over_sqrt_n = mean_of(st.sigma2_over_sqrt_n);
  st.mean_edge_density = mean_of(st.edge_density);
  return st;
}

}  // namespace gnorm
