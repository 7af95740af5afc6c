#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gnorm/graph.hpp"
#include "gnorm/subject.hpp"

namespace gnorm {

struct BoundParams {
  std::optional<double> p;
  std::optional<double> q;
  std::optional<int> k;
};

enum class BoundDirection { Upper, Lower };

/// Structured verdict of an equality detector.
struct EqualityWitness {
  std::string detector;
  bool verdict = false;
  std::string detail;
};

/// One bound evaluation.
///
/// slack is rhs - lhs for upper bounds and lhs - rhs for lower bounds (for
/// NONNEG_ENERGY, the smaller slack of its two chained inequalities).
/// holds <=> slack >= -tol, tol = 1e-7 * tol_scale * (1 + |lhs| + |rhs|).
/// equality requires the numeric slack within tol and, where the row has a
/// structural detector, the detector's verdict.
struct BoundCheck {
  std::string bound_id;
  BoundParams params;
  BoundDirection direction = BoundDirection::Upper;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  double tol = 0;
  bool holds = false;
  bool equality = false;
  std::optional<EqualityWitness> equality_witness;
  std::string notes;  ///< per-evaluation diagnostics; the static row note lives in BoundInfo
};

/// Static description of one registry row.
struct BoundInfo {
  std::string_view id;
  bool graph_only;
  bool uses_p;
  bool uses_q;
  bool uses_k;
  std::string_view statement;
  std::string_view note;
};

std::span<const BoundInfo> bound_registry();
/// nullptr when the id is unknown.
const BoundInfo* find_bound(std::string_view id);

/// Evaluates one row. Throws UnknownBoundId, or PreconditionFailed naming the
/// violated condition.
BoundCheck check_bound(std::string_view bound_id, const Subject& subject,
                       const BoundParams& params, double tol_scale = 1.0);

struct RegistryOutcome {
  std::string bound_id;
  std::optional<BoundCheck> check;  ///< empty when skipped
  std::string skip_reason;
};

/// Every registry row, in registry order; rows whose precondition fails are
/// reported with a reason instead of being dropped.
std::vector<RegistryOutcome> run_registry(const Subject& subject,
                                          const BoundParams& params,
                                          double tol_scale = 1.0);

/// Non-throwing evaluation by registry index; used by the exhaustive sweep.
/// Returns the skip reason through `skip` when the precondition fails.
std::optional<BoundCheck> evaluate_bound(std::size_t index, const Subject& subject,
                                         const BoundParams& params, double tol_scale,
                                         std::string_view* skip);

/// Part sizes (nonincreasing) when the graph minus its isolated vertices is
/// complete multipartite; an edgeless graph yields an empty list.
std::optional<std::vector<int>> detect_complete_multipartite(const Graph& g);

}  // namespace gnorm
