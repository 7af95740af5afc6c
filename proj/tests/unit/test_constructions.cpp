#include <doctest.h>

#include <cmath>

#include "gnorm/constructions.hpp"
#include "gnorm/error.hpp"
#include "gnorm/families.hpp"
#include "gnorm/spectra.hpp"
#include "../support/oracles.hpp"

using namespace gnorm;

TEST_SUITE("constructions") {

TEST_CASE("all-ones") {
  CHECK(all_ones(1, 1)(0, 0) == Complex(1.0));
  CHECK(oracle::max_abs_diff(singular_values(all_ones(2, 3)).values, {std::sqrt(6.0), 0.0}) < 1e-9);
  CHECK(rayleigh_allones(all_ones(4, 4)) == doctest::Approx(4.0));
}

TEST_CASE("DFT matrices") {
  CHECK(dft_matrix(1)(0, 0) == Complex(1.0));
  const CMatrix f2 = dft_matrix(2);
  CHECK(f2(0, 0) == Complex(1.0));
  CHECK(f2(1, 1) == Complex(-1.0));
  const CMatrix f4 = dft_matrix(4);
  CHECK(f4(1, 1) == Complex(0.0, 1.0));  // quarter turns are exact
  CHECK(oracle::max_abs_diff(singular_values(f4).values, {2, 2, 2, 2}) < 1e-12);
  for (int n = 1; n <= 9; ++n) {
    const CMatrix f = dft_matrix(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        CHECK(std::abs(f(k, j) - std::polar(1.0, 2.0 * std::numbers::pi * k * j / n)) < 1e-12);
  }
}

TEST_CASE("Sylvester Hadamard matrices") {
  CHECK(sylvester_hadamard(1)(0, 0) == Complex(1.0));
  const CMatrix h2 = sylvester_hadamard(2);
  CHECK(h2(1, 1) == Complex(-1.0));
  const CMatrix h8 = sylvester_hadamard(8);
  const CMatrix g = gram_rows(h8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(g(i, j) == Complex(i == j ? 8.0 : 0.0));
  CHECK(in_had_class(sylvester_hadamard(4)));
  CHECK_THROWS_AS(sylvester_hadamard(6), Error);
}

TEST_CASE("Kronecker products") {
  oracle::Rng rng(23);
  const CMatrix b = rng.real_matrix(2, 3);
  CHECK(kronecker(CMatrix::identity(1), b) == b);
  const CMatrix h = kronecker(sylvester_hadamard(2), all_ones(1, 2));
  CHECK(oracle::max_abs_diff(singular_values(h).values, {2.0, 2.0}) < 1e-12);
  const CMatrix blow = kronecker(complete_graph(4).adjacency_matrix(), all_ones(2, 2));
  CHECK(blow == blow_up(complete_graph(4), 2).adjacency_matrix());
  CHECK_THROWS_AS(kronecker(all_ones(1000, 1000), all_ones(2, 1)), Error);
}

TEST_CASE("property: Kronecker singular values are pairwise products") {
  oracle::Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const CMatrix a = rng.complex_matrix(rng.integer(1, 4), rng.integer(1, 4));
    const CMatrix b = rng.real_matrix(rng.integer(1, 3), rng.integer(1, 3));
    const auto sa = singular_values(a).values, sb = singular_values(b).values;
    std::vector<double> products;
    for (double x : sa)
      for (double y : sb) products.push_back(x * y);
    auto expected = oracle::sorted_desc(products);
    auto got = singular_values(kronecker(a, b)).values;
    // the Kronecker product has min(ma mb, na nb) singular values; the extra
    // pairwise products are zero
    expected.resize(got.size(), 0.0);
    // compared as squares: the Gram route is accurate in sigma^2, not sigma,
    // for values near zero
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(std::abs(got[i] * got[i] - expected[i] * expected[i]) < 1e-12 * (1.0 + got[0] * got[0]));
  }
}

TEST_CASE("one complement") {
  CHECK(one_complement(CMatrix(2, 3)) == all_ones(2, 3));
  const CMatrix c = one_complement(complete_graph(4).adjacency_matrix());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c(i, j) == Complex(i == j ? 1.0 : -1.0));
  CHECK(one_complement(all_ones(2, 2)) == -1.0 * all_ones(2, 2));
  CMatrix bad(1, 1);
  bad(0, 0) = 0.5;
  CHECK_THROWS_AS(one_complement(bad), Error);

  oracle::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = rng.zero_one_matrix(rng.integer(1, 5), rng.integer(1, 5));
    const CMatrix back = 0.5 * (all_ones(a.rows(), a.cols()) - one_complement(a));
    CHECK(back == a);
  }
}

TEST_CASE("plainness") {
  CHECK(is_plain(all_ones(3, 5)));
  const CMatrix c = one_complement(complete_graph(4).adjacency_matrix());
  const Plainness p = plainness(c);
  CHECK(p.plain);
  CHECK(p.allones.real() == doctest::Approx(-2.0));
  CHECK(p.sigma1 == doctest::Approx(2.0));
  const Plainness path = plainness(path_graph(3).adjacency_matrix());
  CHECK_FALSE(path.plain);
  CHECK(path.allones.real() == doctest::Approx(4.0 / 3.0));
  CHECK(path.sigma1 == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Had class membership") {
  const std::size_t rows[] = {1, 3};
  CHECK(in_had_class(dft_rows(4, rows)));
  CHECK_FALSE(in_had_class(all_ones(2, 2)));
  CHECK(in_had_class(sylvester_hadamard(4)));
  CHECK_FALSE(in_had_class(CMatrix(2, 2)));

  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t m = 1; m <= n; ++m) {
      std::vector<std::size_t> pick;
      for (std::size_t r = 0; r < m; ++r) pick.push_back((r + 1) % n);
      const CMatrix a = dft_rows(n, pick);
      REQUIRE(in_had_class(a));
      const auto s = singular_values(a).values;
      for (double x : s) CHECK(std::abs(x - s.front()) < 1e-8);
    }
}

}  // TEST_SUITE
