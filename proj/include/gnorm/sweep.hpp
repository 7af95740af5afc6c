#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnorm/bounds.hpp"

namespace gnorm {

struct SweepOptions {
  int n = 0;
  std::vector<double> ps{1.0, 1.5, 2.0, 3.0};
  std::vector<int> ks{1, 2, 3};
  /// Second exponent for rows that take one; empty means "same as ps".
  std::vector<double> qs;
  bool canonical = false;
  unsigned threads = 0;
  double tol_scale = 1.0;
};

inline constexpr std::size_t kSweepWitnessCap = 10;

/// Aggregate of one registry row at one parameter combination.
struct SweepRow {
  std::string bound_id;
  BoundParams params;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
  std::uint64_t violations = 0;
  std::uint64_t equalities = 0;
  std::optional<double> min_slack;
  std::string min_slack_witness;                ///< graph6; first graph attaining min_slack
  std::vector<std::string> equality_witnesses;  ///< first few, code order
  std::vector<std::string> violation_witnesses;
  std::string skip_reason;                      ///< first one seen
};

struct SweepReport {
  int n = 0;
  bool canonical = false;
  double tol_scale = 1.0;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t total_violations = 0;
  std::vector<SweepRow> rows;  ///< registry order, then parameter order
};

/// Evaluates every registry row at every applicable parameter combination on
/// every graph of order n. Output is independent of the thread count.
SweepReport sweep_bounds(const SweepOptions& opts);

}  // namespace gnorm
