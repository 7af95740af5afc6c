// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gnorm/gnorm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

struct Globals {
  unsigned threads = 0;
  std::string format = "text";
  double tol_scale = 1.0;
};

gnorm_format to_format(const std::string& name) {
  if (name == "json") return GNORM_FORMAT_JSON;
  if (name == "csv") return GNORM_FORMAT_CSV;
  return GNORM_FORMAT_TEXT;
}

class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { gnorm_text_free(text_); }
  gnorm_text** out() { return &text_; }
  void print() const { std::fwrite(gnorm_text_data(text_), 1, gnorm_text_size(text_), stdout); }

 private:
  gnorm_text* text_ = nullptr;
};

class SubjectHandle {
 public:
  SubjectHandle() = default;
  SubjectHandle(const SubjectHandle&) = delete;
  SubjectHandle& operator=(const SubjectHandle&) = delete;
  ~SubjectHandle() { gnorm_subject_free(subject_); }
  gnorm_subject** out() { return &subject_; }
  const gnorm_subject* get() const { return subject_; }

 private:
  gnorm_subject* subject_ = nullptr;
};

int report_error(gnorm_status status, const std::string& message, gnorm_format format) {
  Text t;
  if (gnorm_report_error(status, message.c_str(), format, t.out()) == GNORM_OK) {
    if (format == GNORM_FORMAT_JSON) {
      t.print();
    } else {
      std::fwrite(gnorm_text_data(t.out()[0]), 1, gnorm_text_size(t.out()[0]), stderr);
    }
  } else {
    std::cerr << "error: " << message << '\n';
  }
  return kExitUsage;
}

int library_error(gnorm_status status, gnorm_format format) {
  return report_error(status, gnorm_last_error(), format);
}

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int load(const std::string& path, SubjectHandle& subject, gnorm_format format) {
  const auto text = read_input(path);
  if (!text) return report_error(GNORM_E_INVALID_ARGUMENT, "cannot read '" + path + "'", format);
  const gnorm_status st = gnorm_subject_load(text->data(), text->size(), subject.out());
  return st == GNORM_OK ? kExitOk : library_error(st, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schatten and Ky Fan norms of graphs and matrices, with the bound registry"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--tol-scale", g.tol_scale, "Multiplier for all relative tolerances")
      ->check(CLI::PositiveNumber);

  std::string in_path;
  std::vector<double> ps, qs;
  std::vector<int> ks;
  std::vector<std::string> bounds;
  std::optional<double> p_one, q_one;
  std::optional<int> k_one;
  int n = 0;
  bool canonical = false;

  auto* norms = app.add_subcommand("norms", "Schatten, Ky Fan and entrywise norms of an input");
  norms->add_option("--in", in_path, "graph6, edge list or CSV matrix ('-' for stdin)")->required();
  norms->add_option("--p", ps, "Schatten order (repeatable)");
  norms->add_option("--k", ks, "Ky Fan order (repeatable)");

  auto* check = app.add_subcommand("check", "Evaluate registry rows; exit 0 iff all evaluated rows hold");
  check->add_option("--in", in_path, "graph6, edge list or CSV matrix ('-' for stdin)")->required();
  check->add_option("--bound", bounds, "Row id (repeatable; default: whole registry)");
  check->add_option("--p", p_one, "p parameter");
  check->add_option("--q", q_one, "q parameter");
  check->add_option("--k", k_one, "k parameter");

  auto* sweep = app.add_subcommand("sweep", "Check every applicable row on all graphs of order N");
  sweep->add_option("--n", n, "Order")->required();
  sweep->add_option("--p", ps, "p values (default 1 1.5 2 3)");
  sweep->add_option("--k", ks, "k values (default 1 2 3)");
  sweep->add_option("--q", qs, "q values (default: the p values)");
  sweep->add_flag("--canonical", canonical, "One graph per isomorphism class");

  double rp = 1.0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> band;
  auto* random = app.add_subcommand("random", "Schatten norms of G(n, 1/2) against the predicted growth");
  random->add_option("--n", n, "Order")->required();
  random->add_option("--p", rp, "Schatten order")->required();
  random->add_option("--samples", samples, "Sample count")->required();
  random->add_option("--seed", seed, "Seed")->required();
  random->add_option("--band", band, "LO,HI band for the normalized mean; exit 1 when missed")
      ->delimiter(',')
      ->expected(2);

  std::string family, base;
  std::vector<double> params;
  auto* construct = app.add_subcommand("construct", "Emit a named graph (graph6) or matrix (CSV)");
  construct->add_option("--family", family, "Family name")->required();
  construct->add_option("--params", params, "Family parameters");
  construct->add_option("--base", base, "Base graph (graph6) for blowup, isolated, complement");

  std::string objective;
  auto* search = app.add_subcommand("search", "Exact extremal values over all graphs of order N");
  search->add_option("--objective", objective,
                     "XI_K, TAU_K, SPREAD, MAX_ENERGY, MAX_SCHATTEN_P or SPREAD_VS_F2")
      ->required();
  search->add_option("--n", n, "Order")->required();
  auto* sk = search->add_option("--k", k_one, "k for XI_K and TAU_K");
  search->add_option("--p", p_one, "p for MAX_SCHATTEN_P")->excludes(sk);
  search->add_flag("--canonical", canonical, "One graph per isomorphism class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const gnorm_format fmt = to_format(g.format);
  Text out;

  if (*norms) {
    SubjectHandle s;
    if (int rc = load(in_path, s, fmt)) return rc;
    const gnorm_status st = gnorm_report_norms(s.get(), ps.data(), ps.size(), ks.data(), ks.size(), fmt, out.out());
    if (st != GNORM_OK) return library_error(st, fmt);
    out.print();
    return kExitOk;
  }

  if (*check) {
    SubjectHandle s;
    if (int rc = load(in_path, s, fmt)) return rc;
    gnorm_params prm{p_one.has_value(), p_one.value_or(0.0), q_one.has_value(), q_one.value_or(0.0),
                     k_one.has_value(), k_one.value_or(0)};
    std::vector<const char*> ids;
    for (const auto& b : bounds) ids.push_back(b.c_str());
    int all_hold = 0;
    const gnorm_status st = gnorm_report_check(s.get(), ids.data(), ids.size(), &prm, g.tol_scale, fmt,
                                               &all_hold, out.out());
    if (st != GNORM_OK) return library_error(st, fmt);
    out.print();
    return all_hold ? kExitOk : kExitFailedCheck;
  }

  if (*sweep) {
    std::uint64_t violations = 0;
    const gnorm_status st = gnorm_report_sweep(n, ps.data(), ps.size(), ks.data(), ks.size(), qs.data(),
                                               qs.size(), canonical, g.threads, g.tol_scale, fmt,
                                               &violations, out.out());
    if (st != GNORM_OK) return library_error(st, fmt);
    out.print();
    return violations == 0 ? kExitOk : kExitFailedCheck;
  }

  if (*random) {
    int within = 1;
    const gnorm_status st = gnorm_report_random(n, rp, samples, seed, g.threads,
                                                band.empty() ? nullptr : band.data(), fmt, &within,
                                                out.out());
    if (st != GNORM_OK) return library_error(st, fmt);
    out.print();
    return within ? kExitOk : kExitFailedCheck;
  }

  if (*construct) {
    const gnorm_status st = gnorm_report_construct(family.c_str(), params.data(), params.size(),
                                                   base.empty() ? nullptr : base.c_str(), fmt, out.out());
    if (st != GNORM_OK) return library_error(st, fmt);
    out.print();
    return kExitOk;
  }

  if (*search) {
    gnorm_status st;
    if (objective == "SPREAD_VS_F2") {
      st = gnorm_report_spread_comparison(n, canonical, g.threads, fmt, out.out());
    } else {
      std::optional<double> prm = p_one;
      if (k_one) prm = static_cast<double>(*k_one);
      st = gnorm_report_search(objective.c_str(), n, prm ? &*prm : nullptr, canonical, g.threads, fmt,
                               out.out());
    }
    if (st != GNORM_OK) return library_error(st, fmt);
    out.print();
    return kExitOk;
  }
  return kExitUsage;
}
