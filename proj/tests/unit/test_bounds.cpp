#include <doctest.h>

#include <cmath>

#include "gnorm/bounds.hpp"
#include "gnorm/constructions.hpp"
#include "gnorm/error.hpp"
#include "gnorm/families.hpp"
#include "gnorm/norms.hpp"
#include "gnorm/search.hpp"
#include "../support/oracles.hpp"

using namespace gnorm;

namespace {

BoundParams with_p(double p) { return BoundParams{p, std::nullopt, std::nullopt}; }
BoundParams with_pq(double p, double q) { return BoundParams{p, q, std::nullopt}; }
BoundParams with_k(int k) { return BoundParams{std::nullopt, std::nullopt, k}; }

const RegistryOutcome& outcome(const std::vector<RegistryOutcome>& all, std::string_view id) {
  for (const auto& o : all)
    if (o.bound_id == id) return o;
  FAIL("missing row " << id);
  return all.front();
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("registry shape") {
  const auto reg = bound_registry();
  CHECK(reg.size() == 20);
  CHECK(reg.front().id == "MCCLELLAND");
  CHECK(reg.back().id == "KYFAN_NONNEG");
  CHECK(find_bound("KM_MATRIX") != nullptr);
  CHECK(find_bound("KM_MATRIX")->uses_q);
  CHECK(find_bound("NOPE") == nullptr);
  for (const auto& info : reg) CHECK_FALSE(info.statement.empty());
}

TEST_CASE("McClelland on K_4") {
  const Subject k4 = Subject::from_graph(complete_graph(4));
  const BoundCheck c = check_bound("MCCLELLAND", k4, {});
  CHECK(c.lhs == doctest::Approx(6.0));
  CHECK(c.rhs == doctest::Approx(std::sqrt(48.0)));
  CHECK(c.holds);
  CHECK_FALSE(c.equality);
  CHECK(c.slack == doctest::Approx(std::sqrt(48.0) - 6.0));
  CHECK(c.tol == doctest::Approx(1e-7 * (1.0 + 6.0 + std::sqrt(48.0))));
}

TEST_CASE("Ky Fan bound for 0/1 matrices at K_4") {
  const Subject k4 = Subject::from_graph(complete_graph(4));
  const BoundCheck c = check_bound("KYFAN_01", k4, with_k(4));
  CHECK(std::abs(c.lhs - 6.0) < 1e-9);
  CHECK(std::abs(c.rhs - 6.0) < 1e-12);
  CHECK(c.equality);
  REQUIRE(c.equality_witness.has_value());
  CHECK(c.equality_witness->detector == "complement_plain");
  CHECK(c.equality_witness->verdict);

  for (int t = 1; t <= 5; ++t) {
    const Subject b = Subject::from_graph(blow_up(complete_graph(4), t));
    const BoundCheck bc = check_bound("KYFAN_01", b, with_k(4));
    CHECK(std::abs(bc.lhs - 6.0 * t) < 1e-7);
    CHECK(bc.equality);
  }
  // k = 3 is strict for K_4
  CHECK_FALSE(check_bound("KYFAN_01", k4, with_k(3)).equality);
}

TEST_CASE("Caporossi on P_4 is strict") {
  const Subject p4 = Subject::from_graph(path_graph(4));
  const BoundCheck c = check_bound("CAPOROSSI", p4, {});
  double energy_oracle = 0.0;
  for (double x : oracle::path_spectrum(4)) energy_oracle += std::abs(x);
  CHECK(c.lhs == doctest::Approx(energy_oracle));
  CHECK(c.rhs == doctest::Approx(2.0 * oracle::path_spectrum(4).front()));
  CHECK(c.holds);
  CHECK_FALSE(c.equality);
  CHECK_FALSE(detect_complete_multipartite(path_graph(4)).has_value());
}

TEST_CASE("registry on K_4") {
  const auto all = run_registry(Subject::from_graph(complete_graph(4)), BoundParams{1.0, 2.0, 2});
  CHECK(all.size() == bound_registry().size());
  for (const char* id : {"MCCLELLAND", "KM_ABSOLUTE", "CAPOROSSI", "HOFFMAN"}) {
    const auto& o = outcome(all, id);
    REQUIRE(o.check.has_value());
    CHECK(o.check->holds);
  }
  CHECK(outcome(all, "CAPOROSSI").check->equality);
  CHECK(outcome(all, "HOFFMAN").check->equality);
  CHECK(outcome(all, "KM_ABSOLUTE").check->equality);  // SRG (4,3,2,0)
  for (const auto& o : all)
    if (!o.check) CHECK_FALSE(o.skip_reason.empty());
}

TEST_CASE("DFT matrix attains the Schatten bound for bounded entries") {
  for (int n : {2, 4, 8}) {
    const Subject f = Subject::from_matrix(dft_matrix(n));
    const BoundCheck c = check_bound("SCHATTEN_ABS_MAT", f, with_p(1.0));
    CHECK(c.lhs == doctest::Approx(std::pow(n, 1.5)));
    CHECK(c.equality);
    REQUIRE(c.equality_witness.has_value());
    CHECK(c.equality_witness->detector == "had_class");
  }
}

TEST_CASE("perfect matchings attain McClelland") {
  const BoundCheck c = check_bound("MCCLELLAND", Subject::from_graph(perfect_matching(6)), {});
  CHECK(c.lhs == doctest::Approx(6.0));
  CHECK(c.rhs == doctest::Approx(6.0));
  CHECK(c.equality);
  // the edgeless graph meets the numbers but is not a matching
  CHECK_FALSE(check_bound("MCCLELLAND", Subject::from_graph(empty_graph(4)), {}).equality);
}

TEST_CASE("complete multipartite detection") {
  CHECK(detect_complete_multipartite(cycle_graph(4)) == std::vector<int>{2, 2});
  CHECK(detect_complete_multipartite(with_isolated(complete_graph(3), 2)) == std::vector<int>{1, 1, 1});
  CHECK(detect_complete_multipartite(empty_graph(3)) == std::vector<int>{});
  const int parts[] = {1, 3, 2};
  CHECK(detect_complete_multipartite(complete_multipartite(parts)) == std::vector<int>{3, 2, 1});
}

TEST_CASE("preconditions and unknown ids") {
  const Subject empty = Subject::from_graph(empty_graph(4));
  CHECK(code_of([&] { check_bound("HOFFMAN", empty, {}); }) == ErrorCode::PreconditionFailed);
  CHECK(code_of([&] { check_bound("NOT_A_ROW", empty, {}); }) == ErrorCode::UnknownBoundId);
  const Subject m = Subject::from_matrix(all_ones(2, 3));
  CHECK(code_of([&] { check_bound("CAPOROSSI", m, {}); }) == ErrorCode::PreconditionFailed);
  CHECK(code_of([&] { check_bound("POWER_MEAN", m, with_pq(3.0, 2.0)); }) ==
        ErrorCode::PreconditionFailed);
  const Subject tall = Subject::from_matrix(all_ones(3, 2));
  CHECK(code_of([&] { check_bound("KYFAN_L2", tall, with_k(1)); }) == ErrorCode::PreconditionFailed);
  try {
    check_bound("HOFFMAN", empty, {});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("edge") != std::string::npos);
  }
}

TEST_CASE("power mean equality exactly on Gram = cI") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t m = 1; m <= n; ++m) {
      std::vector<std::size_t> rows;
      for (std::size_t r = 0; r < m; ++r) rows.push_back(r);
      const Subject s = Subject::from_matrix(dft_rows(n, rows));
      const BoundCheck c = check_bound("POWER_MEAN", s, with_pq(1.0, 3.0));
      CHECK(c.equality);
      REQUIRE(c.equality_witness.has_value());
      CHECK(c.equality_witness->detector == "gram_scalar");
    }
  oracle::Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = rng.integer(2, 5), n = rng.integer(m, 7);
    const BoundCheck c = check_bound("POWER_MEAN", Subject::from_matrix(rng.complex_matrix(m, n)),
                                     with_pq(1.0, rng.uniform(1.5, 4.0)));
    CHECK(c.holds);
    CHECK_FALSE(c.equality);
  }
}

TEST_CASE("KM matrix bound: exponent p/q holds on random matrices") {
  oracle::Rng rng(53);
  int alternative_violations = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int m = rng.integer(2, 6), n = rng.integer(m, 8);
    const CMatrix a = trial % 3 == 0 ? rng.zero_one_matrix(m, n)
                    : trial % 3 == 1 ? rng.real_matrix(m, n, 0.0, 3.0)
                                     : rng.complex_matrix(m, n);
    const double p = rng.uniform(1.0, 3.0), q = p + rng.uniform(0.0, 3.0);
    const Subject s = Subject::from_matrix(a);
    const BoundCheck c = check_bound("KM_MATRIX", s, with_pq(p, q));
    CHECK(c.holds);
    // independent evaluation of the 1/q variant
    const auto& sig = s.sigma().values;
    double sp = 0.0, sq = 0.0;
    for (double x : sig) {
      sp += std::pow(x, p);
      sq += std::pow(x, q);
    }
    const double alt = std::pow(sig[0], p) +
                       std::pow(m - 1.0, 1.0 - p / q) * std::pow(std::max(0.0, sq - std::pow(sig[0], q)), 1.0 / q);
    if (sp > alt * (1.0 + 1e-7)) ++alternative_violations;
  }
  MESSAGE("1/q exponent violated on " << alternative_violations << " of 400 random matrices");
  CHECK(alternative_violations > 0);
}

TEST_CASE("property: verdict invariants on random subjects") {
  oracle::Rng rng(59);
  const auto reg = bound_registry();
  for (int trial = 0; trial < 120; ++trial) {
    const bool graph = trial % 2 == 0;
    const Subject s = graph ? Subject::from_graph(rng.graph(rng.integer(2, 8)))
                            : Subject::from_matrix(trial % 4 == 1 ? rng.zero_one_matrix(rng.integer(1, 4), 5)
                                                                  : rng.real_matrix(rng.integer(1, 4), 5, 0.0, 2.0));
    const BoundParams params{rng.uniform(1.0, 3.0), rng.uniform(3.0, 5.0), rng.integer(1, 4)};
    for (std::size_t i = 0; i < reg.size(); ++i) {
      std::string_view skip;
      const auto c = evaluate_bound(i, s, params, 1.0, &skip);
      if (!c) {
        CHECK_FALSE(skip.empty());
        continue;
      }
      CHECK(c->holds);
      CHECK(c->holds == (c->slack >= -c->tol));
      CHECK(c->tol == doctest::Approx(1e-7 * (1.0 + std::abs(c->lhs) + std::abs(c->rhs))));
      if (c->equality) CHECK(c->holds);
      const double expected = c->direction == BoundDirection::Upper ? c->rhs - c->lhs : c->lhs - c->rhs;
      if (c->bound_id != "NONNEG_ENERGY") CHECK(c->slack == doctest::Approx(expected));
    }
  }
}

TEST_CASE("tolerance scale widens the window") {
  const Subject s = Subject::from_graph(complete_graph(5));
  const BoundCheck a = check_bound("MCCLELLAND", s, {}, 1.0);
  const BoundCheck b = check_bound("MCCLELLAND", s, {}, 10.0);
  CHECK(b.tol == doctest::Approx(10.0 * a.tol));
}

TEST_CASE("exhaustive equality characterizations, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    enumerate_graphs(n, false, [&](const Graph& g) {
      const Subject s = Subject::from_graph(g);
      const auto parts = detect_complete_multipartite(g);
      CHECK(check_bound("CAPOROSSI", s, {}).equality == parts.has_value());

      bool matching = n % 2 == 0;
      for (int v = 0; v < n && matching; ++v) matching = g.degree(v) == 1;
      CHECK(check_bound("MCCLELLAND", s, {}).equality == matching);

      if (g.edge_count() > 0) {
        const bool chi_parts = parts && static_cast<int>(parts->size()) == *s.chromatic();
        CHECK(check_bound("SCHR_LOWER", s, with_p(1.0)).equality == chi_parts);
      }
    });
}

}  // TEST_SUITE
