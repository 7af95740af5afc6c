#include "gnorm/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "gnorm/matrix_io.hpp"
#include "gnorm/norms.hpp"

namespace gnorm {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json json_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json params_json(const BoundParams& p) {
  json j = json::object();
  if (p.p) j["p"] = *p.p;
  if (p.q) j["q"] = *p.q;
  if (p.k) j["k"] = *p.k;
  return j;
}

std::string params_text(const BoundParams& p) {
  std::string out;
  const auto add = [&](std::string item) {
    if (!out.empty()) out += ' ';
    out += item;
  };
  if (p.p) add("p=" + num(*p.p));
  if (p.q) add("q=" + num(*p.q));
  if (p.k) add("k=" + std::to_string(*p.k));
  return out;
}

std::string_view direction_name(BoundDirection d) { return d == BoundDirection::Upper ? "upper" : "lower"; }

std::string combined_notes(const BoundCheck& c) {
  const BoundInfo* info = find_bound(c.bound_id);
  std::string out = info ? std::string(info->note) : std::string();
  if (!c.notes.empty()) {
    if (!out.empty()) out += "; ";
    out += c.notes;
  }
  return out;
}

json check_json(const BoundCheck& c) {
  json j;
  j["bound_id"] = c.bound_id;
  j["params"] = params_json(c.params);
  j["direction"] = direction_name(c.direction);
  j["lhs"] = json_number(c.lhs);
  j["rhs"] = json_number(c.rhs);
  j["slack"] = json_number(c.slack);
  j["tol"] = json_number(c.tol);
  j["holds"] = c.holds;
  j["equality"] = c.equality;
  if (c.equality_witness)
    j["equality_witness"] = {{"detector", c.equality_witness->detector},
                             {"verdict", c.equality_witness->verdict},
                             {"detail", c.equality_witness->detail}};
  else
    j["equality_witness"] = nullptr;
  j["notes"] = combined_notes(c);
  return j;
}

std::string_view kind_name(const Subject& s) { return s.is_graph() ? "graph" : "matrix"; }

std::vector<double> default_ps(std::span<const double> ps) {
  return ps.empty() ? std::vector<double>{1.0, 2.0} : std::vector<double>(ps.begin(), ps.end());
}

std::vector<int> default_ks(std::span<const int> ks) {
  return ks.empty() ? std::vector<int>{1, 2} : std::vector<int>(ks.begin(), ks.end());
}

json record_json(const SearchRecord& r) {
  json j;
  j["n"] = r.n;
  j["objective"] = objective_name(r.objective);
  j["param"] = r.param ? json(*r.param) : json(nullptr);
  j["value"] = r.value;
  j["witnesses"] = r.witnesses;
  j["witness_count"] = r.witness_count;
  j["graphs_scanned"] = r.graphs_scanned;
  j["notes"] = r.notes;
  return j;
}

std::string record_text(const SearchRecord& r) {
  std::ostringstream os;
  os << "objective " << objective_name(r.objective);
  if (r.param) os << " (" << (r.objective == Objective::MaxSchattenP ? "p" : "k") << "=" << num(*r.param) << ")";
  os << "\nn " << r.n << "\nvalue " << num(r.value) << "\ngraphs scanned " << r.graphs_scanned
     << "\nwitnesses " << r.witness_count;
  if (r.witness_count > r.witnesses.size()) os << " (first " << r.witnesses.size() << " listed)";
  os << '\n';
  for (const auto& w : r.witnesses) os << "  " << w << '\n';
  for (const auto& note : r.notes) os << "note: " << note << '\n';
  return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::string render_norms(const Subject& s, std::span<const double> ps_in, std::span<const int> ks_in,
                         Format f) {
  const auto ps = default_ps(ps_in);
  const auto ks = default_ks(ks_in);
  const auto& sigma = s.sigma().values;
  std::vector<std::pair<double, double>> schatten;
  for (double p : ps) schatten.emplace_back(p, schatten_from_singular(sigma, SchattenOrder(p)));
  std::vector<std::pair<int, double>> kyfan;
  for (int k : ks) kyfan.emplace_back(k, kyfan_from_singular(sigma, KyFanOrder(k)));
  const double energy_value = schatten_from_singular(sigma, SchattenOrder(1.0));

  if (f == Format::Json) {
    json j;
    j["subject"] = {{"kind", kind_name(s)}, {"rows", s.rows()}, {"cols", s.cols()}};
    if (s.is_graph()) j["subject"]["edges"] = s.edge_count();
    j["singular_values"] = sigma;
    j["schatten"] = json::array();
    for (auto [p, v] : schatten) j["schatten"].push_back({{"p", p}, {"value", v}});
    j["kyfan"] = json::array();
    for (auto [k, v] : kyfan) j["kyfan"].push_back({{"k", k}, {"value", v}});
    j["entrywise"] = {{"l1", s.entry_l1()}, {"l2", s.entry_l2()}, {"linf", s.entry_inf()}};
    j["energy"] = energy_value;
    return dump(j);
  }
  if (f == Format::Csv) {
    std::string out = "quantity,param,value\n";
    for (auto [p, v] : schatten) out += "schatten," + exact(p) + "," + exact(v) + "\n";
    for (auto [k, v] : kyfan) out += "kyfan," + std::to_string(k) + "," + exact(v) + "\n";
    out += "entrywise,1," + exact(s.entry_l1()) + "\n";
    out += "entrywise,2," + exact(s.entry_l2()) + "\n";
    out += "entrywise,inf," + exact(s.entry_inf()) + "\n";
    out += "energy,," + exact(energy_value) + "\n";
    return out;
  }
  std::ostringstream os;
  os << kind_name(s) << ' ' << s.rows() << 'x' << s.cols();
  if (s.is_graph()) os << ", " << s.edge_count() << " edges";
  os << "\nsingular values";
  for (double v : sigma) os << ' ' << num(v);
  os << '\n';
  for (auto [p, v] : schatten) os << "schatten p=" << num(p) << ' ' << num(v) << '\n';
  for (auto [k, v] : kyfan) os << "kyfan k=" << k << ' ' << num(v) << '\n';
  os << "entrywise l1 " << num(s.entry_l1()) << "\nentrywise l2 " << num(s.entry_l2())
     << "\nentrywise linf " << num(s.entry_inf()) << "\nenergy " << num(energy_value) << '\n';
  return os.str();
}

std::string render_checks(std::span<const RegistryOutcome> outcomes, Format f) {
  bool all_hold = true;
  for (const auto& o : outcomes)
    if (o.check && !o.check->holds) all_hold = false;

  if (f == Format::Json) {
    json j;
    j["checks"] = json::array();
    j["skipped"] = json::array();
    for (const auto& o : outcomes) {
      if (o.check)
        j["checks"].push_back(check_json(*o.check));
      else
        j["skipped"].push_back({{"bound_id", o.bound_id}, {"reason", o.skip_reason}});
    }
    j["all_hold"] = all_hold;
    return dump(j);
  }
  if (f == Format::Csv) {
    std::string out =
        "bound_id,p,q,k,direction,lhs,rhs,slack,tol,holds,equality,detector,verdict,notes,skip_reason\n";
    for (const auto& o : outcomes) {
      if (!o.check) {
        out += o.bound_id + ",,,,,,,,,,,,,," + csv_cell(o.skip_reason) + "\n";
        continue;
      }
      const BoundCheck& c = *o.check;
      const auto opt = [](const std::optional<double>& v) { return v ? exact(*v) : std::string(); };
      out += c.bound_id + "," + opt(c.params.p) + "," + opt(c.params.q) + "," +
             (c.params.k ? std::to_string(*c.params.k) : std::string()) + "," +
             std::string(direction_name(c.direction)) + "," + exact(c.lhs) + "," + exact(c.rhs) + "," +
             exact(c.slack) + "," + exact(c.tol) + "," + (c.holds ? "true" : "false") + "," +
             (c.equality ? "true" : "false") + "," +
             (c.equality_witness ? c.equality_witness->detector : std::string()) + "," +
             (c.equality_witness ? (c.equality_witness->verdict ? "true" : "false") : "") + "," +
             csv_cell(combined_notes(c)) + ",\n";
    }
    return out;
  }
  std::ostringstream os;
  for (const auto& o : outcomes) {
    if (!o.check) {
      os << o.bound_id << "  skipped: " << o.skip_reason << '\n';
      continue;
    }
    const BoundCheck& c = *o.check;
    os << c.bound_id;
    const std::string ps = params_text(c.params);
    if (!ps.empty()) os << " [" << ps << ']';
    os << "  " << direction_name(c.direction) << "  lhs " << num(c.lhs) << "  rhs " << num(c.rhs)
       << "  slack " << num(c.slack) << "  " << (c.holds ? "holds" : "VIOLATED")
       << (c.equality ? ", equality" : "") << '\n';
    if (c.equality_witness)
      os << "  detector " << c.equality_witness->detector << ": "
         << (c.equality_witness->verdict ? "yes" : "no")
         << (c.equality_witness->detail.empty() ? "" : " (" + c.equality_witness->detail + ")") << '\n';
    const std::string notes = combined_notes(c);
    if (!notes.empty()) os << "  note: " << notes << '\n';
  }
  os << (all_hold ? "all evaluated rows hold" : "some rows are violated") << '\n';
  return os.str();
}

std::string render_sweep(const SweepReport& r, Format f) {
  if (f == Format::Json) {
    json j;
    j["n"] = r.n;
    j["canonical"] = r.canonical;
    j["tol_scale"] = r.tol_scale;
    j["graphs_scanned"] = r.graphs_scanned;
    j["total_violations"] = r.total_violations;
    j["rows"] = json::array();
    for (const auto& row : r.rows) {
      json x;
      x["bound_id"] = row.bound_id;
      x["params"] = params_json(row.params);
      x["evaluated"] = row.evaluated;
      x["skipped"] = row.skipped;
      x["violations"] = row.violations;
      x["equalities"] = row.equalities;
      x["min_slack"] = row.min_slack ? json(*row.min_slack) : json(nullptr);
      x["min_slack_witness"] = row.min_slack_witness;
      x["equality_witnesses"] = row.equality_witnesses;
      x["violation_witnesses"] = row.violation_witnesses;
      x["skip_reason"] = row.skip_reason;
      j["rows"].push_back(std::move(x));
    }
    return dump(j);
  }
  if (f == Format::Csv) {
    std::string out =
        "bound_id,p,q,k,evaluated,skipped,violations,equalities,min_slack,min_slack_witness,"
        "first_equality_witness,skip_reason\n";
    for (const auto& row : r.rows) {
      const auto opt = [](const std::optional<double>& v) { return v ? exact(*v) : std::string(); };
      out += row.bound_id + "," + opt(row.params.p) + "," + opt(row.params.q) + "," +
             (row.params.k ? std::to_string(*row.params.k) : std::string()) + "," +
             std::to_string(row.evaluated) + "," + std::to_string(row.skipped) + "," +
             std::to_string(row.violations) + "," + std::to_string(row.equalities) + "," +
             opt(row.min_slack) + "," + csv_cell(row.min_slack_witness) + "," +
             csv_cell(row.equality_witnesses.empty() ? "" : row.equality_witnesses.front()) + "," +
             csv_cell(row.skip_reason) + "\n";
    }
    return out;
  }
  std::ostringstream os;
  os << "order " << r.n << (r.canonical ? " (canonical forms)" : " (labeled)") << ", "
     << r.graphs_scanned << " graphs\n";
  for (const auto& row : r.rows) {
    os << row.bound_id;
    const std::string ps = params_text(row.params);
    if (!ps.empty()) os << " [" << ps << ']';
    os << "  evaluated " << row.evaluated << "  skipped " << row.skipped << "  violations "
       << row.violations << "  equalities " << row.equalities;
    if (row.min_slack) os << "  min slack " << num(*row.min_slack) << " at " << row.min_slack_witness;
    if (row.evaluated == 0 && !row.skip_reason.empty()) os << "  (" << row.skip_reason << ')';
    os << '\n';
    if (!row.equality_witnesses.empty()) {
      os << "  equality at";
      for (const auto& w : row.equality_witnesses) os << ' ' << w;
      os << '\n';
    }
    if (!row.violation_witnesses.empty()) {
      os << "  VIOLATED at";
      for (const auto& w : row.violation_witnesses) os << ' ' << w;
      os << '\n';
    }
  }
  os << "total violations " << r.total_violations << '\n';
  return os.str();
}

std::string render_experiment(const ExperimentStats& st, std::optional<Band> band, Format f) {
  const bool within = band && st.normalized >= band->lo && st.normalized <= band->hi;
  if (f == Format::Json) {
    json j;
    j["n"] = st.n;
    j["p"] = st.p;
    j["samples"] = st.samples;
    j["seed"] = st.seed;
    j["values"] = st.values;
    j["mean"] = st.mean;
    j["stdev"] = st.stdev;
    j["predicted"] = st.predicted;
    j["normalized"] = st.normalized;
    j["sigma1_over_n"] = st.sigma1_over_n;
    j["sigma2_over_sqrt_n"] = st.sigma2_over_sqrt_n;
    j["edge_density"] = st.edge_density;
    j["mean_sigma1_over_n"] = st.mean_sigma1_over_n;
    j["mean_sigma2_over_sqrt_n"] = st.mean_sigma2_over_sqrt_n;
    j["mean_edge_density"] = st.mean_edge_density;
    if (band) j["band"] = {{"lo", band->lo}, {"hi", band->hi}, {"within", within}};
    return dump(j);
  }
  if (f == Format::Csv) {
    std::string out = "sample,schatten,sigma1_over_n,sigma2_over_sqrt_n,edge_density\n";
    for (int s = 0; s < st.samples; ++s)
      out += std::to_string(s) + "," + exact(st.values[s]) + "," + exact(st.sigma1_over_n[s]) + "," +
             exact(st.sigma2_over_sqrt_n[s]) + "," + exact(st.edge_density[s]) + "\n";
    out += "mean," + exact(st.mean) + "," + exact(st.mean_sigma1_over_n) + "," +
           exact(st.mean_sigma2_over_sqrt_n) + "," + exact(st.mean_edge_density) + "\n";
    return out;
  }
  std::ostringstream os;
  os << "G(" << st.n << ", 1/2), p=" << num(st.p) << ", " << st.samples << " samples, seed " << st.seed
     << "\nmean " << num(st.mean) << "  stdev " << num(st.stdev) << "\npredicted " << num(st.predicted)
     << "\nnormalized " << num(st.normalized) << "\nsigma1/n " << num(st.mean_sigma1_over_n)
     << "\nsigma2/sqrt(n) " << num(st.mean_sigma2_over_sqrt_n) << "\nedge density "
     << num(st.mean_edge_density) << '\n';
  if (band)
    os << "band [" << num(band->lo) << ", " << num(band->hi) << "] " << (within ? "within" : "OUTSIDE")
       << '\n';
  return os.str();
}

std::string render_search(const SearchRecord& r, Format f) {
  if (f == Format::Json) return dump(record_json(r));
  if (f == Format::Csv) {
    std::string out = "objective,n,param,value,witness\n";
    const std::string head = std::string(objective_name(r.objective)) + "," + std::to_string(r.n) + "," +
                             (r.param ? exact(*r.param) : std::string()) + "," + exact(r.value) + ",";
    for (const auto& w : r.witnesses) out += head + csv_cell(w) + "\n";
    return out;
  }
  return record_text(r);
}

std::string render_spread_comparison(const SpreadComparison& c, Format f) {
  if (f == Format::Json) {
    json j;
    j["n"] = c.n;
    j["spread"] = record_json(c.spread);
    j["kyfan2"] = record_json(c.kyfan2);
    j["identity_checked"] = c.identity_checked;
    j["identity_failures"] = c.identity_failures;
    j["max_identity_error"] = c.max_identity_error;
    j["maxima_coincide"] = c.maxima_coincide;
    return dump(j);
  }
  if (f == Format::Csv) {
    return "n,max_spread,max_kyfan2,identity_checked,identity_failures,max_identity_error,maxima_coincide\n" +
           std::to_string(c.n) + "," + exact(c.spread.value) + "," + exact(c.kyfan2.value) + "," +
           std::to_string(c.identity_checked) + "," + std::to_string(c.identity_failures) + "," +
           exact(c.max_identity_error) + "," + (c.maxima_coincide ? "true" : "false") + "\n";
  }
  std::ostringstream os;
  os << "n " << c.n << "\nmax spread " << num(c.spread.value) << "\nmax ||G||_F2 " << num(c.kyfan2.value)
     << "\nmaxima coincide " << (c.maxima_coincide ? "yes" : "no") << "\nF2 identity checked on "
     << c.identity_checked << " graphs, failures " << c.identity_failures << ", max error "
     << num(c.max_identity_error) << '\n';
  return os.str();
}

std::string render_graph(const Graph& g, std::string_view family, Format f) {
  const std::string g6 = write_graph6(g);
  if (f == Format::Json) {
    json j{{"family", family}, {"kind", "graph"}, {"order", g.order()}, {"edges", g.edge_count()},
           {"graph6", g6}};
    return dump(j);
  }
  return g6 + "\n";
}

std::string render_matrix(const CMatrix& a, std::string_view family, Format f) {
  if (f == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
      rows.push_back(std::move(row));
    }
    json j{{"family", family}, {"kind", "matrix"}, {"rows", a.rows()}, {"cols", a.cols()},
           {"entries", std::move(rows)}};
    return dump(j);
  }
  return write_matrix(a);
}

std::string render_error(std::string_view code, std::string_view message, Format f) {
  if (f == Format::Json) return dump(json{{"error", {{"code", code}, {"message", message}}}});
  return "error (" + std::string(code) + "): " + std::string(message) + "\n";
}

}  // namespace gnorm
