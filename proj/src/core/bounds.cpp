#include "gnorm/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "gnorm/constructions.hpp"
#include "gnorm/error.hpp"
#include "gnorm/norms.hpp"

namespace gnorm {

namespace {

using Skip = std::string_view;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Context {
  const Subject& s;
  const BoundParams& params;
  double tol_scale;
  std::string_view* skip;

  std::span<const double> sigma() const { return s.sigma().values; }
  const std::vector<double>& mu() const { return s.eigen()->values; }
  double sigma1() const { return s.sigma().largest(); }
  double n_vertices() const { return static_cast<double>(s.graph()->order()); }
  double two_m() const { return 2.0 * static_cast<double>(s.edge_count()); }
  double p() const { return *params.p; }
  double q() const { return *params.q; }
  int k() const { return *params.k; }

  std::optional<BoundCheck> skipped(Skip reason) const {
    *skip = reason;
    return std::nullopt;
  }
};

BoundCheck make_check(std::string_view id, const Context& cx, BoundDirection dir,
                      double lhs, double rhs) {
  BoundCheck c;
  c.bound_id = std::string(id);
  c.params = cx.params;
  c.direction = dir;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = dir == BoundDirection::Upper ? rhs - lhs : lhs - rhs;
  c.tol = 1e-7 * cx.tol_scale * (1.0 + std::abs(lhs) + std::abs(rhs));
  c.holds = c.slack >= -c.tol;
  c.equality = c.holds && std::abs(c.slack) <= c.tol;
  return c;
}

// Runs the detector only inside the numeric equality window; the final
// verdict is numeric AND structural.
template <class Detector>
BoundCheck with_detector(BoundCheck c, Detector&& detect) {
  if (c.equality) {
    EqualityWitness w = detect();
    c.equality = w.verdict;
    c.equality_witness = std::move(w);
  }
  return c;
}

// ---- structural detectors ----

EqualityWitness identity_at_p2() {
  return {"identity", true, "both sides coincide identically at p = 2"};
}

EqualityWitness gram_scalar(const CMatrix& a, double tol_scale) {
  const CMatrix g = a.rows() <= a.cols() ? gram_rows(a) : gram_rows(a.conjugate_transpose());
  const std::size_t m = g.rows();
  double trace = 0.0;
  for (std::size_t i = 0; i < m; ++i) trace += g(i, i).real();
  const double c = trace / static_cast<double>(m);
  double defect = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      defect = std::max(defect, std::abs(g(i, j) - (i == j ? Complex{c, 0.0} : Complex{})));
  EqualityWitness w{"gram_scalar", false, ""};
  if (c <= 1e-8 * tol_scale) {
    w.detail = "zero matrix: Gram = 0 carries no equal-length rows";
  } else {
    w.verdict = defect <= 1e-8 * tol_scale * (1.0 + c);
    w.detail = "Gram ~ c I with c = " + fmt(c) + ", max deviation " + fmt(defect);
  }
  return w;
}

EqualityWitness tail_equal(std::span<const double> sigma, double tol_scale) {
  EqualityWitness w{"sigma_tail_equal", true, ""};
  if (sigma.size() > 1) {
    const auto [lo, hi] = std::minmax_element(sigma.begin() + 1, sigma.end());
    const double spread = *hi - *lo;
    w.verdict = spread <= 1e-7 * tol_scale * (1.0 + sigma.front());
    w.detail = "sigma_2..sigma_m spread " + fmt(spread);
  } else {
    w.detail = "single singular value";
  }
  return w;
}

// Exactly k singular values above 1e-6 sigma_1, all equal.
bool k_equal_nonzero(std::span<const double> sigma, int k, double tol_scale,
                     std::string* detail) {
  const double top = sigma.empty() ? 0.0 : sigma.front();
  if (top <= 0.0) {
    *detail = "zero matrix";
    return false;
  }
  const auto nonzero = static_cast<int>(std::count_if(
      sigma.begin(), sigma.end(), [&](double x) { return x > 1e-6 * top; }));
  bool equal = nonzero == k &&
               sigma[k - 1] >= top - 1e-7 * tol_scale * (1.0 + top);
  *detail = std::to_string(nonzero) + " nonzero singular values (need " +
            std::to_string(k) + " equal), sigma_1 = " + fmt(top);
  return equal;
}

EqualityWitness k_equal_witness(std::span<const double> sigma, int k, double tol_scale) {
  EqualityWitness w{"k_equal_nonzero", false, ""};
  w.verdict = k_equal_nonzero(sigma, k, tol_scale, &w.detail);
  return w;
}

// J - 2B plain with exactly k equal nonzero singular values, B a 0/1 matrix.
EqualityWitness complement_plain(const CMatrix& zero_one, int k, double tol_scale) {
  const CMatrix c = one_complement(zero_one);
  const Plainness pl = plainness(c, tol_scale);
  std::string kdetail;
  const bool keq = k_equal_nonzero(singular_values(c).values, k, tol_scale, &kdetail);
  EqualityWitness w{"complement_plain", pl.plain && keq, ""};
  w.detail = "J-2A: <j,Aj>/sqrt(mn) = " + fmt(pl.allones.real()) +
             (pl.allones.imag() != 0.0 ? "+" + fmt(pl.allones.imag()) + "i" : "") +
             " (signed), sigma_1 = " + fmt(pl.sigma1) + ", plain(modulus) = " +
             (pl.plain ? "true" : "false") + "; " + kdetail;
  return w;
}

std::string parts_text(const std::vector<int>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

EqualityWitness multipartite_witness(const Graph& g, std::optional<int> chi,
                                     bool regular_parts) {
  EqualityWitness w{"complete_multipartite", false, ""};
  const auto parts = detect_complete_multipartite(g);
  if (!parts) {
    w.detail = "not complete multipartite plus isolated vertices";
    return w;
  }
  w.verdict = true;
  w.detail = "parts " + parts_text(*parts);
  if (chi && static_cast<int>(parts->size()) != *chi) {
    w.verdict = false;
    w.detail += ", part count differs from chi = " + std::to_string(*chi);
  }
  if (regular_parts && !parts->empty() &&
      std::adjacent_find(parts->begin(), parts->end(), std::not_equal_to<>()) != parts->end()) {
    w.verdict = false;
    w.detail += ", parts unequal (not regular)";
  }
  return w;
}

std::string srg_text(const SrgParameters& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

// ---- registry rows ----

using Evaluator = std::optional<BoundCheck> (*)(const Context&);

bool in_unit_to_two(double p) { return p >= 1.0 && p <= 2.0; }

std::optional<BoundCheck> mcclelland(const Context& cx) {
  const double n = cx.n_vertices();
  auto c = make_check("MCCLELLAND", cx, BoundDirection::Upper,
                      schatten_power_sum(cx.sigma(), 1.0), std::sqrt(cx.two_m() * n));
  return with_detector(std::move(c), [&] { return gram_scalar(cx.s.matrix(), cx.tol_scale); });
}

std::optional<BoundCheck> schatten_edges(const Context& cx) {
  const double p = cx.p();
  const double n = cx.n_vertices();
  const double rhs = std::pow(n, 1.0 - p / 2.0) * std::pow(cx.two_m(), p / 2.0);
  auto c = make_check("SCHATTEN_EDGES", cx,
                      p <= 2.0 ? BoundDirection::Upper : BoundDirection::Lower,
                      schatten_power_sum(cx.sigma(), p), rhs);
  return with_detector(std::move(c), [&] {
    return p == 2.0 ? identity_at_p2() : gram_scalar(cx.s.matrix(), cx.tol_scale);
  });
}

std::optional<BoundCheck> km_spectral(const Context& cx) {
  const double p = cx.p();
  if (!in_unit_to_two(p)) return cx.skipped("requires 1 <= p <= 2");
  const double n = cx.n_vertices();
  const double mu = cx.mu().front();
  const double rest = std::max(0.0, cx.two_m() - mu * mu);
  const double rhs = std::pow(mu, p) + std::pow(n - 1.0, 1.0 - p / 2.0) * std::pow(rest, p / 2.0);
  auto c = make_check("KM_SPECTRAL", cx, BoundDirection::Upper,
                      schatten_power_sum(cx.sigma(), p), rhs);
  return with_detector(std::move(c), [&] {
    return p == 2.0 ? identity_at_p2() : tail_equal(cx.sigma(), cx.tol_scale);
  });
}

EqualityWitness km_density_detector(const Context& cx) {
  const Graph& g = *cx.s.graph();
  const int n = g.order();
  const double two_m = cx.two_m();
  EqualityWitness w{"km_density_extremal", false, ""};
  if (cx.s.edge_count() == pair_count(n)) {
    w.verdict = true;
    w.detail = "complete graph K_" + std::to_string(n);
    return w;
  }
  if (n % 2 == 0 && cx.s.edge_count() == static_cast<std::size_t>(n / 2)) {
    bool matching = true;
    for (int v = 0; v < n && matching; ++v) matching = g.degree(v) == 1;
    if (matching) {
      w.verdict = true;
      w.detail = "perfect matching (n/2)K_2";
      return w;
    }
  }
  const auto srg = is_strongly_regular(g);
  if (!srg) {
    w.detail = "not strongly regular";
    return w;
  }
  const double d = two_m / n;
  const double r = std::sqrt(std::max(0.0, (two_m - d * d) / (n - 1.0)));
  const auto& mu = cx.mu();
  double worst = 0.0;
  for (std::size_t i = 1; i < mu.size(); ++i)
    worst = std::max(worst, std::abs(std::abs(mu[i]) - r));
  w.verdict = worst <= 1e-7 * cx.tol_scale * (1.0 + r);
  w.detail = "noncomplete SRG " + srg_text(*srg) + ", nontrivial eigenvalues vs +-" +
             fmt(r) + " deviate by " + fmt(worst);
  return w;
}

std::optional<BoundCheck> km_density(const Context& cx) {
  const double p = cx.p();
  if (!in_unit_to_two(p)) return cx.skipped("requires 1 <= p <= 2");
  const double n = cx.n_vertices();
  if (cx.two_m() < n) return cx.skipped("requires m >= n/2");
  const double d = cx.two_m() / n;
  const double rest = std::max(0.0, cx.two_m() - d * d);
  const double rhs = std::pow(d, p) + std::pow(n - 1.0, 1.0 - p / 2.0) * std::pow(rest, p / 2.0);
  auto c = make_check("KM_DENSITY", cx, BoundDirection::Upper,
                      schatten_power_sum(cx.sigma(), p), rhs);
  return with_detector(std::move(c), [&] {
    return p == 2.0 ? identity_at_p2() : km_density_detector(cx);
  });
}

std::optional<BoundCheck> schatten_abs_n(const Context& cx) {
  const double p = cx.p();
  if (!(p >= 1.0 && p < 2.0)) return cx.skipped("requires 1 <= p < 2");
  const double n = cx.n_vertices();
  const double rhs = std::pow(2.0, -p) * std::pow(n, 1.0 + p / 2.0) + std::pow(n, p);
  return make_check("SCHATTEN_ABS_N", cx, BoundDirection::Upper,
                    schatten_power_sum(cx.sigma(), p), rhs);
}

std::optional<BoundCheck> km_absolute(const Context& cx) {
  const double n = cx.n_vertices();
  auto c = make_check("KM_ABSOLUTE", cx, BoundDirection::Upper,
                      schatten_power_sum(cx.sigma(), 1.0), n * (1.0 + std::sqrt(n)) / 2.0);
  return with_detector(std::move(c), [&] {
    EqualityWitness w{"srg_parameters", false, ""};
    const Graph& g = *cx.s.graph();
    const int order = g.order();
    const auto srg = is_strongly_regular(g);
    const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(order))));
    if (!srg) {
      w.detail = "not strongly regular";
      return w;
    }
    w.detail = "SRG " + srg_text(*srg);
    if (root * root != order || (order + root) % 2 != 0 || (order + 2 * root) % 4 != 0) {
      w.detail += "; order admits no parameter set (n,(n+sqrt n)/2,(n+2sqrt n)/4,(n+2sqrt n)/4)";
      return w;
    }
    const int k = (order + root) / 2;
    const int lm = (order + 2 * root) / 4;
    const bool complete = cx.s.edge_count() == pair_count(order);
    w.verdict = srg->k == k && srg->lambda == lm && (complete || srg->mu == lm);
    w.detail += "; required (" + std::to_string(order) + "," + std::to_string(k) + "," +
                std::to_string(lm) + "," + std::to_string(lm) + ")";
    return w;
  });
}

std::optional<BoundCheck> schatten_p_ge2(const Context& cx) {
  const double p = cx.p();
  if (p < 2.0) return cx.skipped("requires p >= 2");
  auto c = make_check("SCHATTEN_P_GE2", cx, BoundDirection::Upper,
                      schatten_from_singular(cx.sigma(), SchattenOrder(p)),
                      std::sqrt(cx.two_m()));
  return with_detector(std::move(c), [&] {
    if (p == 2.0) return identity_at_p2();
    EqualityWitness w{"single_nonzero_sigma", false, ""};
    w.verdict = k_equal_nonzero(cx.sigma(), 1, cx.tol_scale, &w.detail);
    return w;
  });
}

std::optional<BoundCheck> schr_lower(const Context& cx) {
  if (cx.s.edge_count() == 0) return cx.skipped("requires at least one edge");
  if (!cx.s.chromatic()) return cx.skipped("chromatic number unavailable above order 32");
  const double p = cx.p();
  const int chi = *cx.s.chromatic();
  const double rhs =
      cx.sigma1() * std::pow(1.0 + std::pow(chi - 1.0, 1.0 - p), 1.0 / p);
  auto c = make_check("SCHR_LOWER", cx, BoundDirection::Lower,
                      schatten_from_singular(cx.sigma(), SchattenOrder(p)), rhs);
  return with_detector(std::move(c), [&] {
    return multipartite_witness(*cx.s.graph(), chi, p != 1.0);
  });
}

std::optional<BoundCheck> hoffman(const Context& cx) {
  if (cx.s.edge_count() == 0) return cx.skipped("requires at least one edge");
  if (!cx.s.chromatic()) return cx.skipped("chromatic number unavailable above order 32");
  const int chi = *cx.s.chromatic();
  const auto& mu = cx.mu();
  double lhs = 0.0;
  for (int i = 0; i < chi - 1; ++i) lhs += std::abs(mu[mu.size() - 1 - i]);
  return make_check("HOFFMAN", cx, BoundDirection::Lower, lhs, mu.front());
}

std::optional<BoundCheck> caporossi(const Context& cx) {
  auto c = make_check("CAPOROSSI", cx, BoundDirection::Lower,
                      schatten_power_sum(cx.sigma(), 1.0), 2.0 * cx.mu().front());
  return with_detector(std::move(c), [&] {
    return multipartite_witness(*cx.s.graph(), std::nullopt, false);
  });
}

std::optional<BoundCheck> kyfan_chromatic(const Context& cx) {
  if (cx.s.edge_count() == 0) return cx.skipped("requires at least one edge");
  if (!cx.s.chromatic()) return cx.skipped("chromatic number unavailable above order 32");
  const int chi = *cx.s.chromatic();
  return make_check("KYFAN_CHROMATIC", cx, BoundDirection::Lower,
                    kyfan_from_singular(cx.sigma(), KyFanOrder(chi)), 2.0 * cx.sigma1());
}

std::optional<BoundCheck> emna(const Context& cx) {
  const auto& mu = cx.mu();
  if (mu.size() < 2) return cx.skipped("requires n >= 2");
  return make_check("EMNA", cx, BoundDirection::Upper,
                    std::abs(mu[0]) + std::abs(mu[1]),
                    (0.5 + std::sqrt(5.0 / 12.0)) * cx.n_vertices());
}

// Matrix rows work with m = rows <= n = cols.
double short_side(const Subject& s) { return static_cast<double>(std::min(s.rows(), s.cols())); }

std::optional<BoundCheck> power_mean(const Context& cx) {
  const double p = cx.p(), q = cx.q();
  if (p > q) return cx.skipped("requires p <= q");
  const double m = short_side(cx.s);
  auto c = make_check("POWER_MEAN", cx, BoundDirection::Upper,
                      std::pow(m, -1.0 / p) * schatten_from_singular(cx.sigma(), SchattenOrder(p)),
                      std::pow(m, -1.0 / q) * schatten_from_singular(cx.sigma(), SchattenOrder(q)));
  return with_detector(std::move(c), [&] { return gram_scalar(cx.s.matrix(), cx.tol_scale); });
}

std::optional<BoundCheck> schatten_abs_mat(const Context& cx) {
  const double p = cx.p();
  if (!in_unit_to_two(p)) return cx.skipped("requires 1 <= p <= 2");
  if (cx.s.rows() > cx.s.cols()) return cx.skipped("requires rows <= cols");
  const double m = static_cast<double>(cx.s.rows()), n = static_cast<double>(cx.s.cols());
  auto c = make_check("SCHATTEN_ABS_MAT", cx, BoundDirection::Upper,
                      schatten_from_singular(cx.sigma(), SchattenOrder(p)),
                      std::pow(m, 1.0 / p) * std::sqrt(n) * cx.s.entry_inf());
  return with_detector(std::move(c), [&] {
    EqualityWitness w{"had_class", in_had_class(cx.s.matrix(), cx.tol_scale), ""};
    w.detail = w.verdict ? "equal-modulus entries, pairwise orthogonal rows"
                         : "not in Had_{m,n}";
    return w;
  });
}

std::optional<BoundCheck> km_matrix(const Context& cx) {
  const double p = cx.p(), q = cx.q();
  if (p > q) return cx.skipped("requires p <= q");
  if (cx.s.rows() > cx.s.cols()) return cx.skipped("requires rows <= cols");
  const double m = static_cast<double>(cx.s.rows());
  const double s1 = cx.sigma1();
  const double tail_q = std::max(0.0, schatten_power_sum(cx.sigma(), q) - std::pow(s1, q));
  const double factor = std::pow(m - 1.0, 1.0 - p / q);
  const double rhs = std::pow(s1, p) + factor * std::pow(tail_q, p / q);
  const double rhs_alt = std::pow(s1, p) + factor * std::pow(tail_q, 1.0 / q);
  auto c = make_check("KM_MATRIX", cx, BoundDirection::Upper,
                      schatten_power_sum(cx.sigma(), p), rhs);
  c.notes = "rhs with final exponent 1/q would be " + fmt(rhs_alt);
  return with_detector(std::move(c), [&] { return tail_equal(cx.sigma(), cx.tol_scale); });
}

std::optional<BoundCheck> nonneg_energy(const Context& cx) {
  if (!cx.s.nonnegative()) return cx.skipped("requires a nonnegative matrix");
  if (cx.s.rows() > cx.s.cols()) return cx.skipped("requires rows <= cols");
  const double m = static_cast<double>(cx.s.rows()), n = static_cast<double>(cx.s.cols());
  const double l1 = cx.s.entry_l1(), l2 = cx.s.entry_l2(), linf = cx.s.entry_inf();
  if (l1 < n * linf) return cx.skipped("requires |A|_1 >= n |A|_inf");
  const double lhs = schatten_power_sum(cx.sigma(), 1.0);
  const double mid = l1 / std::sqrt(m * n) +
                     std::sqrt((m - 1.0) * std::max(0.0, l2 * l2 - l1 * l1 / (m * n)));
  const double rhs = (m + std::sqrt(m)) * std::sqrt(n) * linf / 2.0;
  BoundCheck c = make_check("NONNEG_ENERGY", cx, BoundDirection::Upper, lhs, rhs);
  const double outer_slack = c.slack;
  c.slack = std::min(mid - lhs, rhs - mid);
  c.holds = c.slack >= -c.tol;
  c.equality = c.holds && std::abs(outer_slack) <= c.tol;
  c.notes = "intermediate bound " + fmt(mid);
  return with_detector(std::move(c), [&] {
    // 2A/|A|_inf - J = -(J - 2A/|A|_inf); plainness and Had membership are
    // sign-invariant, so test J - 2B with B = A/|A|_inf.
    EqualityWitness w{"scaled_complement_plain_had", false, ""};
    if (linf == 0.0) {
      w.detail = "zero matrix";
      return w;
    }
    CMatrix b = (1.0 / linf) * cx.s.matrix();
    CMatrix shifted(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) shifted(i, j) = 2.0 * b(i, j) - 1.0;
    const Plainness pl = plainness(shifted, cx.tol_scale);
    const bool had = in_had_class(shifted, cx.tol_scale);
    w.verdict = pl.plain && had;
    w.detail = "2A/|A|_inf - J: <j,Aj>/sqrt(mn) = " + fmt(pl.allones.real()) +
               " (signed), sigma_1 = " + fmt(pl.sigma1) + ", plain = " +
               (pl.plain ? "true" : "false") + ", Had = " + (had ? "true" : "false");
    return w;
  });
}

bool k_fits(const Context& cx) {
  if (cx.s.rows() > cx.s.cols()) {
    *cx.skip = "requires rows <= cols";
    return false;
  }
  if (static_cast<std::size_t>(cx.k()) > cx.s.rows()) {
    *cx.skip = "requires k <= rows";
    return false;
  }
  return true;
}

std::optional<BoundCheck> kyfan_01(const Context& cx) {
  if (!cx.s.zero_one()) return cx.skipped("requires a 0/1 matrix");
  if (!k_fits(cx)) return std::nullopt;
  const int k = cx.k();
  const double mn = static_cast<double>(cx.s.rows() * cx.s.cols());
  auto c = make_check("KYFAN_01", cx, BoundDirection::Upper,
                      kyfan_from_singular(cx.sigma(), KyFanOrder(k)),
                      (1.0 + std::sqrt(static_cast<double>(k))) * std::sqrt(mn) / 2.0);
  return with_detector(std::move(c), [&] {
    return complement_plain(cx.s.matrix(), k, cx.tol_scale);
  });
}

std::optional<BoundCheck> kyfan_l2(const Context& cx) {
  if (!k_fits(cx)) return std::nullopt;
  const int k = cx.k();
  auto c = make_check("KYFAN_L2", cx, BoundDirection::Upper,
                      kyfan_from_singular(cx.sigma(), KyFanOrder(k)),
                      std::sqrt(static_cast<double>(k)) * cx.s.entry_l2());
  return with_detector(std::move(c), [&] { return k_equal_witness(cx.sigma(), k, cx.tol_scale); });
}

std::optional<BoundCheck> kyfan_inf(const Context& cx) {
  if (!k_fits(cx)) return std::nullopt;
  const int k = cx.k();
  const double kmn = static_cast<double>(k) * static_cast<double>(cx.s.rows() * cx.s.cols());
  auto c = make_check("KYFAN_INF", cx, BoundDirection::Upper,
                      kyfan_from_singular(cx.sigma(), KyFanOrder(k)),
                      std::sqrt(kmn) * cx.s.entry_inf());
  return with_detector(std::move(c), [&] {
    EqualityWitness w = k_equal_witness(cx.sigma(), k, cx.tol_scale);
    w.detector = "k_equal_nonzero_unimodular";
    const double linf = cx.s.entry_inf();
    bool same_modulus = linf > 0.0;
    for (const Complex& z : cx.s.matrix().entries())
      if (std::abs(std::abs(z) - linf) > 1e-9 * cx.tol_scale * linf) same_modulus = false;
    w.verdict = w.verdict && same_modulus;
    w.detail += same_modulus ? "; entries share one modulus" : "; entry moduli differ";
    return w;
  });
}

std::optional<BoundCheck> kyfan_nonneg(const Context& cx) {
  if (!cx.s.nonnegative()) return cx.skipped("requires a nonnegative matrix");
  if (!k_fits(cx)) return std::nullopt;
  const int k = cx.k();
  const double mn = static_cast<double>(cx.s.rows() * cx.s.cols());
  const double linf = cx.s.entry_inf();
  auto c = make_check("KYFAN_NONNEG", cx, BoundDirection::Upper,
                      kyfan_from_singular(cx.sigma(), KyFanOrder(k)),
                      (1.0 + std::sqrt(static_cast<double>(k))) * std::sqrt(mn) * linf / 2.0);
  return with_detector(std::move(c), [&] {
    EqualityWitness w{"scaled_complement_plain", false, ""};
    if (linf == 0.0) {
      w.detail = "zero matrix";
      return w;
    }
    std::vector<Complex> scaled;
    scaled.reserve(cx.s.matrix().entries().size());
    for (const Complex& z : cx.s.matrix().entries()) {
      if (z != Complex{} && std::abs(z.real() - linf) > 1e-12 * linf) {
        w.detail = "not a scalar multiple of a 0/1 matrix";
        return w;
      }
      scaled.push_back(z == Complex{} ? 0.0 : 1.0);
    }
    w = complement_plain(CMatrix(cx.s.rows(), cx.s.cols(), std::move(scaled)), k, cx.tol_scale);
    w.detector = "scaled_complement_plain";
    return w;
  });
}

struct Row {
  BoundInfo info;
  Evaluator eval;
};

constexpr std::array kRows = {
    Row{{"MCCLELLAND", true, false, false, false, "||G||_S1 <= sqrt(2 m n)",
         "equality: Gram = cI (rows pairwise orthogonal, equal nonzero length)"},
        mcclelland},
    Row{{"SCHATTEN_EDGES", true, true, false, false,
         "||G||_Sp^p <= n^(1-p/2) (2m)^(p/2) for 1<=p<=2, reversed for p>2",
         "p-th power on the left; equality: all singular values equal"},
        schatten_edges},
    Row{{"KM_SPECTRAL", true, true, false, false,
         "||G||_Sp^p <= mu^p + (n-1)^(1-p/2) (2m - mu^2)^(p/2), 1<=p<=2",
         "equality: sigma_2 = ... = sigma_n"},
        km_spectral},
    Row{{"KM_DENSITY", true, true, false, false,
         "||G||_Sp^p <= (2m/n)^p + (n-1)^(1-p/2) (2m - (2m/n)^2)^(p/2), 1<=p<=2, m>=n/2",
         "equality: (n/2)K_2, K_n, or noncomplete SRG with nontrivial eigenvalues "
         "+-sqrt((2m-(2m/n)^2)/(n-1))"},
        km_density},
    Row{{"SCHATTEN_ABS_N", true, true, false, false,
         "||G||_Sp^p <= 2^(-p) n^(1+p/2) + n^p, 1<=p<2",
         "strict; tight only asymptotically (Paley graphs)"},
        schatten_abs_n},
    Row{{"KM_ABSOLUTE", true, false, false, false, "||G||_S1 <= n(1+sqrt n)/2",
         "equality: SRG (n,(n+sqrt n)/2,(n+2sqrt n)/4,(n+2sqrt n)/4)"},
        km_absolute},
    Row{{"SCHATTEN_P_GE2", true, true, false, false, "||G||_Sp <= sqrt(2m), p>=2",
         "norm-level form; the printed form ||G||_Sp^p < (2m)^(1/2) fails for K_4 at p=3"},
        schatten_p_ge2},
    Row{{"SCHR_LOWER", true, true, false, false,
         "||G||_Sp >= sigma_1 (1 + (chi-1)^(1-p))^(1/p)",
         "equality: complete chi-partite plus isolated vertices (regular parts when p>1)"},
        schr_lower},
    Row{{"HOFFMAN", true, false, false, false,
         "|mu_n| + ... + |mu_(n-chi+2)| >= mu_1", "no structural equality detector"},
        hoffman},
    Row{{"CAPOROSSI", true, false, false, false, "||G||_S1 >= 2 mu_1",
         "equality: complete multipartite plus isolated vertices"},
        caporossi},
    Row{{"KYFAN_CHROMATIC", true, false, false, false, "||G||_F_chi >= 2 sigma_1",
         "equality characterization is open; numeric verdict only"},
        kyfan_chromatic},
    Row{{"EMNA", true, false, false, false, "|mu_1| + |mu_2| <= (1/2 + sqrt(5/12)) n",
         "no structural equality detector"},
        emna},
    Row{{"POWER_MEAN", false, true, true, false,
         "m^(-1/p) ||A||_Sp <= m^(-1/q) ||A||_Sq, 1<=p<=q",
         "m is the shorter side; equality: Gram = cI"},
        power_mean},
    Row{{"SCHATTEN_ABS_MAT", false, true, false, false,
         "||A||_Sp <= m^(1/p) n^(1/2) |A|_inf, 1<=p<=2, m<=n",
         "equality: A in Had_{m,n}"},
        schatten_abs_mat},
    Row{{"KM_MATRIX", false, true, true, false,
         "||A||_Sp^p <= sigma_1^p + (m-1)^(1-p/q) (||A||_Sq^q - sigma_1^q)^(p/q), 1<=p<=q",
         "final exponent p/q (the printed 1/q agrees only at p=1, q=2); equality: "
         "sigma_2 = ... = sigma_m"},
        km_matrix},
    Row{{"NONNEG_ENERGY", false, false, false, false,
         "||A||_S1 <= |A|_1/sqrt(mn) + sqrt((m-1)(|A|_2^2 - |A|_1^2/(mn))) <= "
         "(m+sqrt m) sqrt(n) |A|_inf / 2",
         "slack is the smaller link slack; equality: 2A/|A|_inf - J plain and in Had_{m,n}"},
        nonneg_energy},
    Row{{"KYFAN_01", false, false, false, true,
         "||A||_Fk <= (1+sqrt k) sqrt(mn)/2 for 0/1 A, k<=m<=n",
         "equality: J-2A plain (modulus reading) with exactly k equal nonzero singular values"},
        kyfan_01},
    Row{{"KYFAN_L2", false, false, false, true, "||A||_Fk <= sqrt(k) |A|_2, k<=m<=n",
         "equality: exactly k equal nonzero singular values"},
        kyfan_l2},
    Row{{"KYFAN_INF", false, false, false, true, "||A||_Fk <= sqrt(kmn) |A|_inf, k<=m<=n",
         "equality: k equal nonzero singular values and equal-modulus entries"},
        kyfan_inf},
    Row{{"KYFAN_NONNEG", false, false, false, true,
         "||A||_Fk <= (1+sqrt k) sqrt(mn) |A|_inf / 2 for nonnegative A, k<=m<=n",
         "equality: scalar multiple of a 0/1 matrix with J-2A/|A|_inf plain and k equal "
         "nonzero singular values"},
        kyfan_nonneg},
};

const std::array<BoundInfo, kRows.size()> kInfos = [] {
  std::array<BoundInfo, kRows.size()> out{};
  for (std::size_t i = 0; i < kRows.size(); ++i) out[i] = kRows[i].info;
  return out;
}();

}  // namespace

std::span<const BoundInfo> bound_registry() { return kInfos; }

const BoundInfo* find_bound(std::string_view id) {
  for (const BoundInfo& info : kInfos)
    if (info.id == id) return &info;
  return nullptr;
}

std::optional<BoundCheck> evaluate_bound(std::size_t index, const Subject& subject,
                                         const BoundParams& params, double tol_scale,
                                         std::string_view* skip) {
  const Row& row = kRows.at(index);
  auto skipped = [&](std::string_view reason) -> std::optional<BoundCheck> {
    *skip = reason;
    return std::nullopt;
  };
  if (row.info.graph_only && !subject.is_graph()) return skipped("requires a graph subject");
  if (row.info.uses_p) {
    if (!params.p) return skipped("requires p");
    if (!(*params.p >= 1.0) || !std::isfinite(*params.p)) return skipped("requires finite p >= 1");
  }
  if (row.info.uses_q) {
    if (!params.q) return skipped("requires q");
    if (!(*params.q >= 1.0) || !std::isfinite(*params.q)) return skipped("requires finite q >= 1");
  }
  if (row.info.uses_k) {
    if (!params.k) return skipped("requires k");
    if (*params.k < 1) return skipped("requires k >= 1");
  }
  BoundParams used;
  if (row.info.uses_p) used.p = params.p;
  if (row.info.uses_q) used.q = params.q;
  if (row.info.uses_k) used.k = params.k;
  Context cx{subject, used, tol_scale, skip};
  return row.eval(cx);
}

BoundCheck check_bound(std::string_view bound_id, const Subject& subject,
                       const BoundParams& params, double tol_scale) {
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    if (kRows[i].info.id != bound_id) continue;
    std::string_view skip;
    auto c = evaluate_bound(i, subject, params, tol_scale, &skip);
    if (!c)
      fail(ErrorCode::PreconditionFailed,
           std::string(bound_id) + ": " + std::string(skip));
    return std::move(*c);
  }
  fail(ErrorCode::UnknownBoundId, "unknown bound id '" + std::string(bound_id) + "'");
}

std::vector<RegistryOutcome> run_registry(const Subject& subject, const BoundParams& params,
                                          double tol_scale) {
  std::vector<RegistryOutcome> out;
  out.reserve(kRows.size());
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    RegistryOutcome r;
    r.bound_id = std::string(kRows[i].info.id);
    std::string_view skip;
    r.check = evaluate_bound(i, subject, params, tol_scale, &skip);
    if (!r.check) r.skip_reason = std::string(skip);
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::vector<int>> detect_complete_multipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> part(n, -1);
  std::vector<int> vertices;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0) vertices.push_back(v);
  int parts = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int u = vertices[i];
    for (std::size_t j = 0; j < i; ++j)
      if (!g.adjacent(u, vertices[j])) {
        part[u] = part[vertices[j]];
        break;
      }
    if (part[u] < 0) part[u] = parts++;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const int u = vertices[i], v = vertices[j];
      if (g.adjacent(u, v) == (part[u] == part[v])) return std::nullopt;
    }
  std::vector<int> sizes(parts, 0);
  for (int v : vertices) ++sizes[part[v]];
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace gnorm
