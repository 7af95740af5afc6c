#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gnorm/asymptotics.hpp"
#include "gnorm/bounds.hpp"
#include "gnorm/search.hpp"
#include "gnorm/subject.hpp"
#include "gnorm/sweep.hpp"

namespace gnorm {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name) noexcept;

/// Text mode prints 12 significant digits; JSON carries round-trip doubles.
/// Every renderer ends its output with a newline.

/// Empty ps/ks fall back to {1, 2}.
std::string render_norms(const Subject& s, std::span<const double> ps, std::span<const int> ks,
                         Format f);
std::string render_checks(std::span<const RegistryOutcome> outcomes, Format f);
std::string render_sweep(const SweepReport& r, Format f);

struct Band {
  double lo;
  double hi;
};
std::string render_experiment(const ExperimentStats& st, std::optional<Band> band, Format f);
std::string render_search(const SearchRecord& r, Format f);
std::string render_spread_comparison(const SpreadComparison& c, Format f);
/// A constructed graph prints as graph6 (text) or the matrix file (text/csv).
std::string render_graph(const Graph& g, std::string_view family, Format f);
std::string render_matrix(const CMatrix& a, std::string_view family, Format f);
std::string render_error(std::string_view code, std::string_view message, Format f);

}  // namespace gnorm
