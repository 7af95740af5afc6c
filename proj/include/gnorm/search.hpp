#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnorm/graph.hpp"

namespace gnorm {

inline constexpr int kMaxEnumerationOrder = 8;
inline constexpr std::size_t kWitnessCap = 100;
inline constexpr double kWitnessTieTolerance = 1e-9;

/// Labeled graphs of order n: 2^C(n,2). Throws TooLarge above order 8.
std::uint64_t labeled_graph_count(int n);

/// True when no vertex permutation yields a smaller pair code.
bool is_canonical(int n, std::uint64_t code);
/// Minimum pair code over all vertex permutations (brute force).
std::uint64_t canonical_code(int n, std::uint64_t code);

/// Fixed prefix partition of the code space: chunk c holds the codes whose
/// top bits equal c. The count depends only on n, never on threads.
std::size_t scan_chunk_count(int n);

/// Visits every labeled graph code in increasing order within each chunk,
/// chunks distributed over threads. With `canonical`, non-canonical codes are
/// skipped. visit(chunk, code) must only touch chunk-local state.
void scan_graph_codes(int n, bool canonical, unsigned threads,
                      const std::function<void(std::size_t, std::uint64_t)>& visit);

/// Streams every graph of order n in increasing code order (single thread).
void enumerate_graphs(int n, bool canonical, const std::function<void(const Graph&)>& visit);

enum class Objective { XiK, TauK, Spread, MaxEnergy, MaxSchattenP };

std::string_view objective_name(Objective o) noexcept;
/// XI_K, TAU_K, SPREAD, MAX_ENERGY, MAX_SCHATTEN_P.
std::optional<Objective> parse_objective(std::string_view name) noexcept;

struct SearchOptions {
  bool canonical = false;
  unsigned threads = 0;
};

struct SearchRecord {
  int n = 0;
  Objective objective = Objective::XiK;
  std::optional<double> param;       ///< k or p
  double value = 0;
  std::vector<std::string> witnesses;  ///< graph6, increasing code order, capped
  std::uint64_t witness_count = 0;     ///< all ties, including those past the cap
  std::uint64_t graphs_scanned = 0;
  std::vector<std::string> notes;      ///< reference lines
};

/// Evaluates the objective on one graph (k or p in `param` as applicable).
double objective_value(Objective o, const Graph& g, std::optional<double> param);

/// Exact maximum over all graphs of order n. Throws TooLarge above order 8,
/// InvalidArgument on a missing or invalid parameter.
SearchRecord extremal(Objective o, int n, std::optional<double> param,
                      const SearchOptions& opts = {});

struct SpreadComparison {
  int n = 0;
  SearchRecord spread;
  SearchRecord kyfan2;
  std::uint64_t identity_checked = 0;
  std::uint64_t identity_failures = 0;  ///< |F_2 - eigen expression| > 1e-8
  double max_identity_error = 0;
  bool maxima_coincide = false;         ///< within 1e-9, informational
};

SpreadComparison compare_spread_vs_f2(int n, const SearchOptions& opts = {});

}  // namespace gnorm
