#include <doctest.h>

#include <cmath>

#include "gnorm/constructions.hpp"
#include "gnorm/error.hpp"
#include "gnorm/families.hpp"
#include "gnorm/spectra.hpp"
#include "../support/oracles.hpp"

using namespace gnorm;

namespace {

CMatrix two_i_minus_j(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (i == j ? 2.0 : 0.0) - 1.0;
  return m;
}

bool is_nonincreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("eigenvalues of small fixed matrices") {
  auto k2 = hermitian_eigenvalues(complete_graph(2).adjacency_matrix());
  CHECK(oracle::max_abs_diff(k2.values, {1.0, -1.0}) < 1e-12);

  auto m = hermitian_eigenvalues(two_i_minus_j(4));
  CHECK(oracle::max_abs_diff(m.values, {2.0, 2.0, 2.0, -2.0}) < 1e-12);

  for (int n : {1, 3, 7}) {
    auto z = hermitian_eigenvalues(CMatrix(n, n));
    CHECK(z.values == std::vector<double>(n, 0.0));
  }
}

TEST_CASE("complex Hermitian input with a prescribed spectrum") {
  const std::vector<double> d{5.0, 2.5, 0.0, -1.0, -1.0, -4.25};
  const CMatrix m = oracle::hermitian_with_spectrum(d);
  CHECK_FALSE(m.is_real());
  CHECK(oracle::max_abs_diff(hermitian_eigenvalues(m).values, oracle::sorted_desc(d)) < 1e-10);
}

TEST_CASE("non-Hermitian input is rejected") {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), Error);
  try {
    hermitian_eigenvalues(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  CHECK_THROWS_AS(hermitian_eigenvalues(CMatrix(2, 3)), Error);
  CMatrix c(2, 2);
  c(0, 1) = Complex(1.0, 1.0);
  c(1, 0) = Complex(1.0, 1.0);  // symmetric but not Hermitian
  CHECK_THROWS_AS(hermitian_eigenvalues(c), Error);
}

TEST_CASE("singular values of fixed matrices") {
  auto dft = singular_values(dft_matrix(4));
  CHECK(oracle::max_abs_diff(dft.values, {2.0, 2.0, 2.0, 2.0}) < 1e-12);

  auto j35 = singular_values(all_ones(3, 5));
  CHECK(oracle::max_abs_diff(j35.values, {std::sqrt(15.0), 0.0, 0.0}) < 1e-9);

  auto k2 = singular_values(complete_graph(2).adjacency_matrix());
  CHECK(oracle::max_abs_diff(k2.values, {1.0, 1.0}) < 1e-12);
}

TEST_CASE("rectangular matrices with prescribed singular values") {
  const std::vector<double> s{4.0, 3.0, 1.5, 0.25};
  const CMatrix a = oracle::matrix_with_singular_values(s, 7);
  CHECK(oracle::max_abs_diff(singular_values(a).values, s) < 1e-9);
  CHECK(oracle::max_abs_diff(singular_values(a.conjugate_transpose()).values, s) < 1e-9);
}

TEST_CASE("all-ones form") {
  CHECK(rayleigh_allones(all_ones(2, 2)) == doctest::Approx(2.0));
  CHECK(rayleigh_allones(two_i_minus_j(4)) == doctest::Approx(-2.0));
  CHECK(rayleigh_allones(complete_graph(2).adjacency_matrix()) == doctest::Approx(1.0));
  CMatrix c(1, 2);
  c(0, 0) = Complex(0.0, 1.0);
  CHECK_THROWS_AS(rayleigh_allones(c), Error);
}

TEST_CASE("property: singular values are invariant under conjugate transpose") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = rng.integer(1, 7), n = rng.integer(1, 7);
    const CMatrix a = trial % 2 ? rng.complex_matrix(m, n) : rng.real_matrix(m, n);
    const auto s = singular_values(a).values;
    const auto t = singular_values(a.conjugate_transpose()).values;
    REQUIRE(s.size() == t.size());
    CHECK(oracle::max_abs_diff(s, t) < 1e-9);
    CHECK(is_nonincreasing(s));
    double sum_sq = 0.0;
    for (double x : s) {
      CHECK(x >= 0.0);
      sum_sq += x * x;
    }
    const double f = oracle::frobenius_sq(a);
    CHECK(std::abs(sum_sq - f) <= 1e-9 * (1.0 + f));
  }
}

TEST_CASE("property: Hermitian eigenvalue moduli equal the singular values") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.integer(1, 9);
    const CMatrix h = rng.hermitian(n);
    const auto eig = hermitian_eigenvalues(h).values;
    CHECK(is_nonincreasing(eig));
    std::vector<double> mod;
    double trace = 0.0, diag = 0.0;
    for (double x : eig) {
      mod.push_back(std::abs(x));
      trace += x;
    }
    for (int i = 0; i < n; ++i) diag += h(i, i).real();
    CHECK(trace == doctest::Approx(diag).epsilon(1e-10).scale(1.0));
    CHECK(oracle::max_abs_diff(oracle::sorted_desc(mod), singular_values(h).values) < 1e-9);
  }
}

TEST_CASE("property: Gram route agrees with the Hermitian route on random square matrices") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.integer(2, 8);
    const CMatrix h = rng.hermitian(n);
    // A non-Hermitian matrix with the same singular values: multiply by a
    // unitary diagonal phase.
    CMatrix a = h;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) *= std::polar(1.0, 0.3 * (i + 1));
    CHECK(oracle::max_abs_diff(singular_values(a).values, singular_values(h).values) < 1e-9);
  }
}

}  // TEST_SUITE
