#include "gnorm/sweep.hpp"

#include <limits>

#include "gnorm/error.hpp"
#include "gnorm/search.hpp"

namespace gnorm {

namespace {

struct Combo {
  std::size_t row;
  BoundParams params;
};

std::vector<Combo> combos(const SweepOptions& opts) {
  const std::vector<double>& qs = opts.qs.empty() ? opts.ps : opts.qs;
  std::vector<Combo> out;
  const auto reg = bound_registry();
  for (std::size_t r = 0; r < reg.size(); ++r) {
    const BoundInfo& info = reg[r];
    std::vector<std::optional<double>> pv{std::nullopt}, qv{std::nullopt};
    std::vector<std::optional<int>> kv{std::nullopt};
    if (info.uses_p) pv.assign(opts.ps.begin(), opts.ps.end());
    if (info.uses_q) qv.assign(qs.begin(), qs.end());
    if (info.uses_k) kv.assign(opts.ks.begin(), opts.ks.end());
    for (const auto& p : pv)
      for (const auto& q : qv)
        for (const auto& k : kv) out.push_back({r, BoundParams{p, q, k}});
  }
  return out;
}

struct Acc {
  std::uint64_t evaluated = 0, skipped = 0, violations = 0, equalities = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::uint64_t min_code = 0;
  std::vector<std::uint64_t> eq_codes, bad_codes;
  std::string skip_reason;
};

void merge_into(Acc& out, const Acc& c) {
  out.evaluated += c.evaluated;
  out.skipped += c.skipped;
  out.violations += c.violations;
  out.equalities += c.equalities;
  if (c.evaluated > 0 && c.min_slack < out.min_slack) {
    out.min_slack = c.min_slack;
    out.min_code = c.min_code;
  }
  for (auto code : c.eq_codes)
    if (out.eq_codes.size() < kSweepWitnessCap) out.eq_codes.push_back(code);
  for (auto code : c.bad_codes)
    if (out.bad_codes.size() < kSweepWitnessCap) out.bad_codes.push_back(code);
  if (out.skip_reason.empty()) out.skip_reason = c.skip_reason;
}

}  // namespace

SweepReport sweep_bounds(const SweepOptions& opts) {
  if (opts.ps.empty() && opts.ks.empty() && opts.qs.empty())
    fail(ErrorCode::InvalidArgument, "sweep needs at least one parameter value");
  const int n = opts.n;
  const std::vector<Combo> plan = combos(opts);
  const std::size_t chunks = scan_chunk_count(n);
  std::vector<std::vector<Acc>> acc(chunks, std::vector<Acc>(plan.size()));
  std::vector<std::uint64_t> scanned(chunks, 0);

  scan_graph_codes(n, opts.canonical, opts.threads, [&](std::size_t chunk, std::uint64_t code) {
    ++scanned[chunk];
    const Subject subject = Subject::from_graph(from_pair_code(n, code));
    std::vector<Acc>& local = acc[chunk];
    for (std::size_t i = 0; i < plan.size(); ++i) {
      Acc& a = local[i];
      std::string_view skip;
      const auto check = evaluate_bound(plan[i].row, subject, plan[i].params, opts.tol_scale, &skip);
      if (!check) {
        ++a.skipped;
        if (a.skip_reason.empty()) a.skip_reason = std::string(skip);
        continue;
      }
      ++a.evaluated;
      if (check->slack < a.min_slack) {
        a.min_slack = check->slack;
        a.min_code = code;
      }
      if (!check->holds) {
        ++a.violations;
        if (a.bad_codes.size() < kSweepWitnessCap) a.bad_codes.push_back(code);
      }
      if (check->equality) {
        ++a.equalities;
        if (a.eq_codes.size() < kSweepWitnessCap) a.eq_codes.push_back(code);
      }
    }
  });

  SweepReport rep;
  rep.n = n;
  rep.canonical = opts.canonical;
  rep.tol_scale = opts.tol_scale;
  for (auto s : scanned) rep.graphs_scanned += s;
  const auto reg = bound_registry();
  const auto g6 = [n](std::uint64_t code) { return write_graph6(from_pair_code(n, code)); };
  for (std::size_t i = 0; i < plan.size(); ++i) {
    Acc total;
    for (std::size_t c = 0; c < chunks; ++c) merge_into(total, acc[c][i]);
    SweepRow row;
    row.bound_id = std::string(reg[plan[i].row].id);
    row.params = plan[i].params;
    row.evaluated = total.evaluated;
    row.skipped = total.skipped;
    row.violations = total.violations;
    row.equalities = total.equalities;
    if (total.evaluated > 0) {
      row.min_slack = total.min_slack;
      row.min_slack_witness = g6(total.min_code);
    }
    for (auto code : total.eq_codes) row.equality_witnesses.push_back(g6(code));
    for (auto code : total.bad_codes) row.violation_witnesses.push_back(g6(code));
    row.skip_reason = total.skip_reason;
    rep.total_violations += row.violations;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace gnorm
