#include "gnorm/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gnorm/error.hpp"
#include "gnorm/norms.hpp"
#include "gnorm/parallel.hpp"
#include "gnorm/spectra.hpp"

namespace gnorm {

namespace {

constexpr int kChunkBits = 8;

void require_order(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "order must be at least 1");
  if (n > kMaxEnumerationOrder)
    fail(ErrorCode::TooLarge, "exhaustive enumeration is limited to order 8, got " + std::to_string(n));
}

int code_bits(int n) { return static_cast<int>(pair_count(n)); }

// adjacency bitmasks from a pair code
std::array<std::uint16_t, 16> code_rows(int n, std::uint64_t code) {
  std::array<std::uint16_t, 16> rows{};
  int pos = code_bits(n) - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --pos)
      if ((code >> pos) & 1u) {
        rows[i] |= static_cast<std::uint16_t>(1u << j);
        rows[j] |= static_cast<std::uint16_t>(1u << i);
      }
  return rows;
}

std::vector<double> code_adjacency(int n, std::uint64_t code) {
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  int pos = code_bits(n) - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --pos)
      if ((code >> pos) & 1u) a[i * n + j] = a[j * n + i] = 1.0;
  return a;
}

struct CanonicalSearch {
  int n;
  const std::array<std::uint16_t, 16>& rows;
  std::array<int, 16> perm{};

  bool bit(int u, int v) const { return (rows[u] >> v) & 1u; }

  // true when some completion of perm[0..j) gives a smaller code
  bool smaller_exists(int j, unsigned used) {
    if (j == n) return false;
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      perm[j] = v;
      int cmp = 0;
      for (int i = 0; i < j && cmp == 0; ++i) {
        const bool mine = bit(perm[i], v);
        const bool orig = bit(i, j);
        if (mine != orig) cmp = mine ? 1 : -1;
      }
      if (cmp < 0) return true;
      if (cmp == 0 && smaller_exists(j + 1, used | (1u << v))) return true;
    }
    return false;
  }
};

std::uint64_t permuted_code(int n, const std::array<std::uint16_t, 16>& rows,
                            const std::array<int, 16>& perm) {
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | ((rows[perm[i]] >> perm[j]) & 1u);
  return code;
}

double top_sum(const std::vector<double>& v, std::size_t k) {
  k = std::min(k, v.size());
  return std::accumulate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
}

int integer_param(std::optional<double> param, std::string_view what) {
  if (!param) fail(ErrorCode::InvalidArgument, std::string(what) + " requires --k");
  const double k = *param;
  if (!(k >= 1.0) || k != std::floor(k) || k > 1e6)
    fail(ErrorCode::InvalidArgument, std::string(what) + " requires an integer k >= 1");
  return static_cast<int>(k);
}

void validate_param(Objective o, int n, std::optional<double> param) {
  switch (o) {
    case Objective::XiK:
      integer_param(param, "XI_K");
      break;
    case Objective::TauK:
      if (integer_param(param, "TAU_K") > n)
        fail(ErrorCode::InvalidArgument, "TAU_K requires k <= n");
      break;
    case Objective::MaxSchattenP:
      if (!param) fail(ErrorCode::InvalidArgument, "MAX_SCHATTEN_P requires --p");
      SchattenOrder{*param};
      break;
    case Objective::Spread:
    case Objective::MaxEnergy:
      break;
  }
}

double value_from_eigen(Objective o, const EigenSpectrum& eig, std::optional<double> param) {
  switch (o) {
    case Objective::XiK: {
      const SingularSpectrum s = singular_values_from_eigen(eig);
      return kyfan_from_singular(s.values, KyFanOrder(static_cast<int>(*param)));
    }
    case Objective::TauK:
      return top_sum(eig.values, static_cast<std::size_t>(*param));
    case Objective::Spread:
      return eig.values.front() - eig.values.back();
    case Objective::MaxEnergy: {
      double e = 0.0;
      for (double m : eig.values) e += std::abs(m);
      return e;
    }
    case Objective::MaxSchattenP: {
      const SingularSpectrum s = singular_values_from_eigen(eig);
      return schatten_from_singular(s.values, SchattenOrder(*param));
    }
  }
  return 0.0;
}

struct Best {
  bool any = false;
  double value = 0.0;
  std::vector<std::pair<std::uint64_t, double>> ties;  // code order
  std::uint64_t count = 0;
  std::uint64_t scanned = 0;

  void offer(std::uint64_t code, double v) {
    ++scanned;
    if (!any || v > value + kWitnessTieTolerance) {
      any = true;
      value = v;
      ties.assign(1, {code, v});
      count = 1;
      return;
    }
    if (v >= value - kWitnessTieTolerance) {
      value = std::max(value, v);
      ++count;
      if (ties.size() < kWitnessCap) ties.emplace_back(code, v);
    }
  }
};

// Chunks arrive in chunk order, so ties stay in increasing code order.
Best merge_chunks(std::vector<Best>& chunks) {
  Best out;
  for (Best& c : chunks) {
    out.scanned += c.scanned;
    if (!c.any) continue;
    if (!out.any || c.value > out.value + kWitnessTieTolerance) {
      const std::uint64_t scanned = out.scanned;
      out = std::move(c);
      out.scanned = scanned;
      continue;
    }
    if (c.value >= out.value - kWitnessTieTolerance) {
      out.value = std::max(out.value, c.value);
      out.count += c.count;
      for (const auto& t : c.ties) {
        if (out.ties.size() >= kWitnessCap) break;
        out.ties.push_back(t);
      }
    }
  }
  // Drop entries that fell out of the tie window after the maximum moved.
  const auto stale = [&](const auto& t) { return t.second < out.value - kWitnessTieTolerance; };
  const auto removed = static_cast<std::uint64_t>(std::count_if(out.ties.begin(), out.ties.end(), stale));
  out.ties.erase(std::remove_if(out.ties.begin(), out.ties.end(), stale), out.ties.end());
  out.count -= std::min(out.count, removed);
  return out;
}

std::string fixed(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::vector<std::string> reference_notes(Objective o, int n, std::optional<double> param) {
  const double nn = n;
  std::vector<std::string> notes;
  switch (o) {
    case Objective::XiK:
    case Objective::TauK: {
      const double k = *param;
      notes.push_back("upper bound (1 + sqrt(k)) n / 2 = " + fixed(0.5 * (1.0 + std::sqrt(k)) * nn));
      if (o == Objective::TauK) notes.push_back("tau_k(n) <= xi_k(n) by Fan dominance");
      break;
    }
    case Objective::Spread:
      notes.push_back("construction line (2n - 1) / sqrt(3) = " + fixed((2.0 * nn - 1.0) / std::sqrt(3.0)));
      notes.push_back("|mu_1| + |mu_2| <= (1/2 + sqrt(5/12)) n = " +
                      fixed((0.5 + std::sqrt(5.0 / 12.0)) * nn));
      break;
    case Objective::MaxEnergy:
      notes.push_back("upper bound n (1 + sqrt(n)) / 2 = " + fixed(nn * (1.0 + std::sqrt(nn)) / 2.0));
      break;
    case Objective::MaxSchattenP:
      break;
  }
  return notes;
}

SearchRecord to_record(Objective o, int n, std::optional<double> param, const Best& best) {
  SearchRecord rec;
  rec.n = n;
  rec.objective = o;
  rec.param = param;
  rec.value = best.value;
  rec.witness_count = best.count;
  rec.graphs_scanned = best.scanned;
  for (const auto& [code, v] : best.ties) rec.witnesses.push_back(write_graph6(from_pair_code(n, code)));
  rec.notes = reference_notes(o, n, param);
  if (rec.witness_count > rec.witnesses.size())
    rec.notes.push_back("witness list capped at " + std::to_string(kWitnessCap) + " of " +
                        std::to_string(rec.witness_count));
  return rec;
}

}  // namespace

std::uint64_t labeled_graph_count(int n) {
  require_order(n);
  return std::uint64_t{1} << code_bits(n);
}

bool is_canonical(int n, std::uint64_t code) {
  if (n < 1 || n > kMaxEnumerationOrder) fail(ErrorCode::TooLarge, "canonical test limited to order 8");
  const auto rows = code_rows(n, code);
  CanonicalSearch search{n, rows};
  return !search.smaller_exists(0, 0);
}

std::uint64_t canonical_code(int n, std::uint64_t code) {
  if (n < 1 || n > kMaxEnumerationOrder) fail(ErrorCode::TooLarge, "canonical form limited to order 8");
  const auto rows = code_rows(n, code);
  std::array<int, 16> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint64_t best = code;
  do {
    best = std::min(best, permuted_code(n, rows, perm));
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

std::size_t scan_chunk_count(int n) {
  require_order(n);
  return std::size_t{1} << std::min(code_bits(n), kChunkBits);
}

void scan_graph_codes(int n, bool canonical, unsigned threads,
                      const std::function<void(std::size_t, std::uint64_t)>& visit) {
  const std::size_t chunks = scan_chunk_count(n);
  const int low_bits = code_bits(n) - std::min(code_bits(n), kChunkBits);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t first = static_cast<std::uint64_t>(c) << low_bits;
    const std::uint64_t last = first + (std::uint64_t{1} << low_bits);
    for (std::uint64_t code = first; code < last; ++code)
      if (!canonical || is_canonical(n, code)) visit(c, code);
  });
}

void enumerate_graphs(int n, bool canonical, const std::function<void(const Graph&)>& visit) {
  scan_graph_codes(n, canonical, 1, [&](std::size_t, std::uint64_t code) {
    visit(from_pair_code(n, code));
  });
}

std::string_view objective_name(Objective o) noexcept {
  switch (o) {
    case Objective::XiK: return "XI_K";
    case Objective::TauK: return "TAU_K";
    case Objective::Spread: return "SPREAD";
    case Objective::MaxEnergy: return "MAX_ENERGY";
    case Objective::MaxSchattenP: return "MAX_SCHATTEN_P";
  }
  return "";
}

std::optional<Objective> parse_objective(std::string_view name) noexcept {
  for (Objective o : {Objective::XiK, Objective::TauK, Objective::Spread, Objective::MaxEnergy,
                      Objective::MaxSchattenP})
    if (objective_name(o) == name) return o;
  return std::nullopt;
}

double objective_value(Objective o, const Graph& g, std::optional<double> param) {
  validate_param(o, g.order(), param);
  return value_from_eigen(
      o, symmetric_eigenvalues(g.adjacency_real(), static_cast<std::size_t>(g.order())), param);
}

SearchRecord extremal(Objective o, int n, std::optional<double> param, const SearchOptions& opts) {
  require_order(n);
  validate_param(o, n, param);
  switch (o) {
    case Objective::Spread:
    case Objective::MaxEnergy:
      param.reset();
      break;
    default:
      break;
  }

  std::vector<Best> chunks(scan_chunk_count(n));
  scan_graph_codes(n, opts.canonical, opts.threads, [&](std::size_t c, std::uint64_t code) {
    const EigenSpectrum eig = symmetric_eigenvalues(code_adjacency(n, code), static_cast<std::size_t>(n));
    chunks[c].offer(code, value_from_eigen(o, eig, param));
  });
  return to_record(o, n, param, merge_chunks(chunks));
}

SpreadComparison compare_spread_vs_f2(int n, const SearchOptions& opts) {
  require_order(n);
  struct Acc {
    Best spread;
    Best kyfan2;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    double max_error = 0.0;
  };
  std::vector<Acc> chunks(scan_chunk_count(n));
  scan_graph_codes(n, opts.canonical, opts.threads, [&](std::size_t c, std::uint64_t code) {
    const EigenSpectrum eig = symmetric_eigenvalues(code_adjacency(n, code), static_cast<std::size_t>(n));
    const KyFan2Identity id = kyfan2_eigen_identity(eig);
    Acc& a = chunks[c];
    a.spread.offer(code, eig.values.front() - eig.values.back());
    a.kyfan2.offer(code, id.kyfan2);
    const double err = std::abs(id.kyfan2 - id.eigen_expression);
    ++a.checked;
    if (err > 1e-8) ++a.failures;
    a.max_error = std::max(a.max_error, err);
  });

  std::vector<Best> spread, kyfan2;
  SpreadComparison out;
  out.n = n;
  for (Acc& a : chunks) {
    spread.push_back(std::move(a.spread));
    kyfan2.push_back(std::move(a.kyfan2));
    out.identity_checked += a.checked;
    out.identity_failures += a.failures;
    out.max_identity_error = std::max(out.max_identity_error, a.max_error);
  }

  out.spread = to_record(Objective::Spread, n, std::nullopt, merge_chunks(spread));
  out.kyfan2 = to_record(Objective::XiK, n, 2.0, merge_chunks(kyfan2));
  out.maxima_coincide = std::abs(out.spread.value - out.kyfan2.value) <= kWitnessTieTolerance;
  return out;
}

}  // namespace gnorm
