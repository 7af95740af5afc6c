#include "gnorm/gnorm.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "gnorm/bounds.hpp"
#include "gnorm/constructions.hpp"
#include "gnorm/error.hpp"
#include "gnorm/families.hpp"
#include "gnorm/matrix_io.hpp"
#include "gnorm/norms.hpp"
#include "gnorm/report.hpp"
#include "gnorm/search.hpp"
#include "gnorm/sweep.hpp"

struct gnorm_subject {
  gnorm::Subject value;
};

struct gnorm_text {
  std::string value;
};

namespace {

thread_local std::string last_error;

gnorm_status fail_with(gnorm_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
gnorm_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const gnorm::Error& e) {
    return fail_with(static_cast<gnorm_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(GNORM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(GNORM_E_INTERNAL, e.what());
  } catch (...) {
    return fail_with(GNORM_E_INTERNAL, "unknown failure");
  }
}

gnorm_status null_argument(const char* what) {
  return fail_with(GNORM_E_INVALID_ARGUMENT, std::string(what) + " must not be null");
}

gnorm::Format to_format(gnorm_format f) {
  switch (f) {
    case GNORM_FORMAT_TEXT: return gnorm::Format::Text;
    case GNORM_FORMAT_JSON: return gnorm::Format::Json;
    case GNORM_FORMAT_CSV: return gnorm::Format::Csv;
  }
  gnorm::fail(gnorm::ErrorCode::InvalidArgument, "unknown output format");
}

gnorm::BoundParams to_params(const gnorm_params* p) {
  gnorm::BoundParams out;
  if (!p) return out;
  if (p->has_p) out.p = p->p;
  if (p->has_q) out.q = p->q;
  if (p->has_k) out.k = p->k;
  return out;
}

gnorm_status emit(std::string text, gnorm_text** out) {
  *out = new gnorm_text{std::move(text)};
  return GNORM_OK;
}

int whole(double v, const char* family) {
  if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 1e9)
    gnorm::fail(gnorm::ErrorCode::BadFamilyParams,
                std::string(family) + " parameters must be integers");
  return static_cast<int>(v);
}

std::size_t size_param(double v, const char* family) {
  const int i = whole(v, family);
  if (i < 1) gnorm::fail(gnorm::ErrorCode::BadFamilyParams, std::string(family) + " sizes must be >= 1");
  return static_cast<std::size_t>(i);
}

void expect_count(const std::vector<double>& params, std::size_t count, const char* family) {
  if (params.size() != count)
    gnorm::fail(gnorm::ErrorCode::BadFamilyParams,
                std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
}

gnorm::Graph base_graph(const char* base_graph6, const char* family) {
  if (!base_graph6)
    gnorm::fail(gnorm::ErrorCode::BadFamilyParams, std::string(family) + " needs a base graph");
  return gnorm::parse_graph6(base_graph6);
}

std::string construct(const std::string& family, const std::vector<double>& params,
                      const char* base_graph6, gnorm::Format format) {
  using namespace gnorm;
  const char* fam = family.c_str();
  if (family == "dft") {
    expect_count(params, 1, fam);
    return render_matrix(dft_matrix(size_param(params[0], fam)), family, format);
  }
  if (family == "hadamard") {
    expect_count(params, 1, fam);
    return render_matrix(sylvester_hadamard(size_param(params[0], fam)), family, format);
  }
  if (family == "ones") {
    expect_count(params, 2, fam);
    return render_matrix(all_ones(size_param(params[0], fam), size_param(params[1], fam)), family,
                         format);
  }
  if (family == "dftrows") {
    if (params.size() < 2) fail(ErrorCode::BadFamilyParams, "dftrows takes n and at least one row");
    std::vector<std::size_t> rows;
    for (std::size_t i = 1; i < params.size(); ++i) {
      const int r = whole(params[i], fam);
      if (r < 0) fail(ErrorCode::BadFamilyParams, "dftrows row indices must be >= 0");
      rows.push_back(static_cast<std::size_t>(r));
    }
    return render_matrix(dft_rows(size_param(params[0], fam), rows), family, format);
  }
  if (family == "complement") {
    expect_count(params, 0, fam);
    return render_matrix(one_complement(base_graph(base_graph6, fam).adjacency_matrix()), family, format);
  }
  if (family == "blowup" || family == "isolated") {
    expect_count(params, 1, fam);
    const Graph g = base_graph(base_graph6, fam);
    const int t = whole(params[0], fam);
    return render_graph(family == "blowup" ? blow_up(g, t) : with_isolated(g, t), family, format);
  }
  std::vector<int> ints;
  for (double v : params) ints.push_back(whole(v, fam));
  return render_graph(gnorm::family(family, ints), family, format);
}

}  // namespace

extern "C" {

const char* gnorm_version(void) { return "0.1.0"; }

const char* gnorm_status_name(gnorm_status status) {
  if (status == GNORM_OK) return "Ok";
  if (status == GNORM_E_INTERNAL) return "Internal";
  if (status >= GNORM_E_INVALID_ARGUMENT && status <= GNORM_E_DIMENSION_MISMATCH)
    return gnorm::error_code_name(static_cast<gnorm::ErrorCode>(static_cast<int>(status))).data();
  return "Unknown";
}

const char* gnorm_last_error(void) { return last_error.c_str(); }

const char* gnorm_text_data(const gnorm_text* text) { return text ? text->value.c_str() : ""; }

size_t gnorm_text_size(const gnorm_text* text) { return text ? text->value.size() : 0; }

void gnorm_text_free(gnorm_text* text) { delete text; }

gnorm_status gnorm_subject_load(const char* text, size_t size, gnorm_subject** out) {
  if (!text || !out) return null_argument("text and out");
  return guarded([&] {
    *out = new gnorm_subject{gnorm::load_subject(std::string_view(text, size))};
    return GNORM_OK;
  });
}

gnorm_status gnorm_subject_from_graph6(const char* graph6, gnorm_subject** out) {
  if (!graph6 || !out) return null_argument("graph6 and out");
  return guarded([&] {
    *out = new gnorm_subject{gnorm::Subject::from_graph(gnorm::parse_graph6(graph6))};
    return GNORM_OK;
  });
}

gnorm_status gnorm_subject_from_matrix(size_t rows, size_t cols, const double* real,
                                       const double* imag, gnorm_subject** out) {
  if (!real || !out) return null_argument("real and out");
  return guarded([&] {
    if (rows == 0 || cols == 0 || rows > (std::size_t{1} << 20) / cols)
      gnorm::fail(gnorm::ErrorCode::InvalidArgument, "matrix dimensions out of range");
    std::vector<gnorm::Complex> data(rows * cols);
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = {real[i], imag ? imag[i] : 0.0};
    *out = new gnorm_subject{gnorm::Subject::from_matrix(gnorm::CMatrix(rows, cols, std::move(data)))};
    return GNORM_OK;
  });
}

void gnorm_subject_free(gnorm_subject* subject) { delete subject; }

int gnorm_subject_is_graph(const gnorm_subject* subject) {
  return subject && subject->value.is_graph() ? 1 : 0;
}

gnorm_status gnorm_subject_dims(const gnorm_subject* subject, size_t* rows, size_t* cols) {
  if (!subject || !rows || !cols) return null_argument("subject, rows and cols");
  *rows = subject->value.rows();
  *cols = subject->value.cols();
  return GNORM_OK;
}

gnorm_status gnorm_singular_values(const gnorm_subject* subject, double* values, size_t cap,
                                   size_t* count) {
  if (!subject || !count || (cap > 0 && !values)) return null_argument("subject, values and count");
  const auto& sigma = subject->value.sigma().values;
  *count = sigma.size();
  for (std::size_t i = 0; i < cap && i < sigma.size(); ++i) values[i] = sigma[i];
  return GNORM_OK;
}

gnorm_status gnorm_schatten(const gnorm_subject* subject, double p, double* out) {
  if (!subject || !out) return null_argument("subject and out");
  return guarded([&] {
    *out = gnorm::schatten_from_singular(subject->value.sigma().values, gnorm::SchattenOrder(p));
    return GNORM_OK;
  });
}

gnorm_status gnorm_kyfan(const gnorm_subject* subject, int k, double* out) {
  if (!subject || !out) return null_argument("subject and out");
  return guarded([&] {
    *out = gnorm::kyfan_from_singular(subject->value.sigma().values, gnorm::KyFanOrder(k));
    return GNORM_OK;
  });
}

gnorm_status gnorm_check_bound(const gnorm_subject* subject, const char* bound_id,
                               const gnorm_params* params, double tol_scale,
                               gnorm_check_result* out) {
  if (!subject || !bound_id || !out) return null_argument("subject, bound_id and out");
  return guarded([&] {
    const gnorm::BoundCheck c = gnorm::check_bound(bound_id, subject->value, to_params(params), tol_scale);
    *out = gnorm_check_result{c.lhs, c.rhs, c.slack, c.tol, c.holds, c.equality,
                              c.equality_witness.has_value(),
                              c.equality_witness && c.equality_witness->verdict};
    return GNORM_OK;
  });
}

size_t gnorm_bound_count(void) { return gnorm::bound_registry().size(); }

const char* gnorm_bound_id(size_t index) {
  const auto reg = gnorm::bound_registry();
  return index < reg.size() ? reg[index].id.data() : nullptr;
}

gnorm_status gnorm_report_norms(const gnorm_subject* subject, const double* ps, size_t np,
                                const int* ks, size_t nk, gnorm_format format, gnorm_text** out) {
  if (!subject || !out || (np && !ps) || (nk && !ks)) return null_argument("subject and out");
  return guarded([&] {
    return emit(gnorm::render_norms(subject->value, {ps, np}, {ks, nk}, to_format(format)), out);
  });
}

gnorm_status gnorm_report_check(const gnorm_subject* subject, const char* const* bound_ids,
                                size_t nids, const gnorm_params* params, double tol_scale,
                                gnorm_format format, int* all_hold, gnorm_text** out) {
  if (!subject || !out || (nids && !bound_ids)) return null_argument("subject and out");
  return guarded([&] {
    const gnorm::BoundParams bp = to_params(params);
    std::vector<gnorm::RegistryOutcome> outcomes;
    if (nids == 0) {
      outcomes = gnorm::run_registry(subject->value, bp, tol_scale);
    } else {
      // Requested rows whose precondition fails are reported as skipped.
      const auto all = gnorm::run_registry(subject->value, bp, tol_scale);
      for (std::size_t i = 0; i < nids; ++i) {
        if (!bound_ids[i] || !gnorm::find_bound(bound_ids[i]))
          gnorm::fail(gnorm::ErrorCode::UnknownBoundId,
                      std::string("unknown bound id '") + (bound_ids[i] ? bound_ids[i] : "") + "'");
        for (const auto& o : all)
          if (o.bound_id == bound_ids[i]) outcomes.push_back(o);
      }
    }
    int ok = 1;
    for (const auto& o : outcomes)
      if (o.check && !o.check->holds) ok = 0;
    if (all_hold) *all_hold = ok;
    return emit(gnorm::render_checks(outcomes, to_format(format)), out);
  });
}

gnorm_status gnorm_report_sweep(int n, const double* ps, size_t np, const int* ks, size_t nk,
                                const double* qs, size_t nq, int canonical, unsigned threads,
                                double tol_scale, gnorm_format format, uint64_t* violations,
                                gnorm_text** out) {
  if (!out || (np && !ps) || (nk && !ks) || (nq && !qs)) return null_argument("out");
  return guarded([&] {
    gnorm::SweepOptions opts;
    opts.n = n;
    if (np) opts.ps.assign(ps, ps + np);
    if (nk) opts.ks.assign(ks, ks + nk);
    if (nq) opts.qs.assign(qs, qs + nq);
    opts.canonical = canonical != 0;
    opts.threads = threads;
    opts.tol_scale = tol_scale;
    const gnorm::SweepReport rep = gnorm::sweep_bounds(opts);
    if (violations) *violations = rep.total_violations;
    return emit(gnorm::render_sweep(rep, to_format(format)), out);
  });
}

gnorm_status gnorm_report_random(int n, double p, int samples, uint64_t seed, unsigned threads,
                                 const double* band, gnorm_format format, int* within_band,
                                 gnorm_text** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const gnorm::ExperimentStats st = gnorm::run_experiment(n, p, samples, seed, threads);
    std::optional<gnorm::Band> b;
    if (band) {
      if (!(band[0] <= band[1])) gnorm::fail(gnorm::ErrorCode::InvalidArgument, "band needs lo <= hi");
      b = gnorm::Band{band[0], band[1]};
    }
    if (within_band) *within_band = !b || (st.normalized >= b->lo && st.normalized <= b->hi);
    return emit(gnorm::render_experiment(st, b, to_format(format)), out);
  });
}

gnorm_status gnorm_report_search(const char* objective, int n, const double* param, int canonical,
                                 unsigned threads, gnorm_format format, gnorm_text** out) {
  if (!objective || !out) return null_argument("objective and out");
  return guarded([&] {
    const auto o = gnorm::parse_objective(objective);
    if (!o) gnorm::fail(gnorm::ErrorCode::InvalidArgument, std::string("unknown objective '") + objective + "'");
    std::optional<double> prm;
    if (param) prm = *param;
    const gnorm::SearchRecord r =
        gnorm::extremal(*o, n, prm, gnorm::SearchOptions{canonical != 0, threads});
    return emit(gnorm::render_search(r, to_format(format)), out);
  });
}

gnorm_status gnorm_report_spread_comparison(int n, int canonical, unsigned threads,
                                            gnorm_format format, gnorm_text** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto c = gnorm::compare_spread_vs_f2(n, gnorm::SearchOptions{canonical != 0, threads});
    return emit(gnorm::render_spread_comparison(c, to_format(format)), out);
  });
}

gnorm_status gnorm_report_construct(const char* family, const double* params, size_t nparams,
                                    const char* base_graph6, gnorm_format format, gnorm_text** out) {
  if (!family || !out || (nparams && !params)) return null_argument("family and out");
  return guarded([&] {
    return emit(construct(family, std::vector<double>(params, params + nparams), base_graph6,
                          to_format(format)),
                out);
  });
}

gnorm_status gnorm_report_error(gnorm_status status, const char* message, gnorm_format format,
                                gnorm_text** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    return emit(gnorm::render_error(gnorm_status_name(status), message ? message : "",
                                    to_format(format)),
                out);
  });
}

}  // extern "C"
