#pragma once

#include <cstdint>
#include <vector>

#include "gnorm/graph.hpp"

namespace gnorm {

/// Counter-based stream: the word for (seed, sample, block) is a pure hash,
/// so any subset of samples can be generated in any order or thread.
std::uint64_t stream_word(std::uint64_t seed, std::uint64_t sample, std::uint64_t block) noexcept;

/// G(n, 1/2): pair t (graph6 column order) is an edge iff bit t of the
/// stream for (seed, sample_index) is set.
Graph sample_gn_half(int n, std::uint64_t seed, std::uint64_t sample_index = 0);

/// Lanczos approximation (g = 7, 9 terms) with reflection below 1/2.
/// Throws DomainError for x <= 0.
double gamma_fn(double x);

/// c_p = Gamma(p/2 + 1/2) / (sqrt(pi) Gamma(p/2 + 2)).
double semicircle_constant(double p);

/// Leading term of ||G(n,1/2)||_Sp: c_p^(1/p) n^(1/p+1/2) for p < 2,
/// n/sqrt(2) at p = 2, n/2 above.
double predicted_schatten(int n, double p);

inline constexpr int kMaxExperimentOrder = 2000;

struct ExperimentStats {
  int n = 0;
  double p = 1.0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;            ///< ||A||_Sp per sample, sample order
  double mean = 0;
  double stdev = 0;                      ///< sample standard deviation (0 for one sample)
  double predicted = 0;
  double normalized = 0;                 ///< mean / predicted
  std::vector<double> sigma1_over_n;     ///< per sample
  std::vector<double> sigma2_over_sqrt_n;
  std::vector<double> edge_density;      ///< e(G) / C(n,2)
  double mean_sigma1_over_n = 0;
  double mean_sigma2_over_sqrt_n = 0;
  double mean_edge_density = 0;
};

/// Samples graphs, computes the Schatten norm and the two leading singular
/// values. At p = 2 the norm comes from the edge count, sqrt(2 e(G)).
/// Throws InvalidArgument for n outside [1, 2000] or samples < 1.
ExperimentStats run_experiment(int n, double p, int samples, std::uint64_t seed,
                               unsigned threads = 0);

}  // namespace gnorm
