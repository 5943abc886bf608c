#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nsw/const_agents.hpp"
#include "nsw/exact.hpp"
#include "nsw/generators.hpp"

using namespace nsw;

TEST_CASE("multilinear estimate matches the additive closed form") {
  Valuation v = Valuation::additive({2.0, 4.0, 8.0});
  std::vector<double> y = {0.5, 0.25, 0.75};
  const double exact = 0.5 * 2.0 + 0.25 * 4.0 + 0.75 * 8.0;
  const int samples = 20000;
  double var = 0.0;
  for (int j = 0; j < 3; ++j) {
    var += v.values[j] * v.values[j] * y[j] * (1.0 - y[j]);
  }
  const double sigma = std::sqrt(var / samples);
  const double est = multilinear_estimate(v, y, samples, 99);
  CHECK(std::fabs(est - exact) <= 4.0 * sigma);
}

TEST_CASE("multilinear estimate is exact on integral points") {
  Valuation v = Valuation::coverage({1.0, 2.0, 4.0}, {{0, 1}, {1, 2}});
  CHECK(multilinear_estimate(v, {1.0, 0.0}, 50, 1) == doctest::Approx(3.0));
  CHECK(multilinear_estimate(v, {1.0, 1.0}, 50, 1) == doctest::Approx(7.0));
  CHECK(multilinear_estimate(v, {0.0, 0.0}, 50, 1) == 0.0);
}

TEST_CASE("decompose reconstructs the fractional point") {
  FractionalAssignment y;
  y.y = {{0.3, 0.6, 0.0}, {0.7, 0.1, 0.5}};
  ConvexDecomposition dec = decompose(y);
  REQUIRE_FALSE(dec.terms.empty());
  CHECK(dec.terms.size() <= 2u * 3u + 1u);
  double total = 0.0;
  std::vector<std::vector<double>> recon(2, std::vector<double>(3, 0.0));
  for (const auto& [coeff, alloc] : dec.terms) {
    CHECK(coeff > 0.0);
    total += coeff;
    for (int i = 0; i < 2; ++i) {
      for (int j : alloc.bundles[i]) recon[i][j] += coeff;
    }
  }
  CHECK(total == doctest::Approx(1.0));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(recon[i][j] == doctest::Approx(y.y[i][j]).epsilon(1e-9));
    }
  }
}

TEST_CASE("swap rounding preserves per-entry marginals") {
  FractionalAssignment y;
  y.y = {{0.3, 0.6}, {0.7, 0.4}};
  ConvexDecomposition dec = decompose(y);
  const int trials = 20000;
  std::vector<std::vector<int>> hits(2, std::vector<int>(2, 0));
  for (int t = 0; t < trials; ++t) {
    Allocation a = swap_round(dec, 1000 + t);
    CHECK(a.disjoint());
    for (int i = 0; i < 2; ++i) {
      for (int j : a.bundles[i]) ++hits[i][j];
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double p = y.y[i][j];
      const double sigma = std::sqrt(p * (1.0 - p) / trials);
      const double freq = double(hits[i][j]) / trials;
      CAPTURE(i);
      CAPTURE(j);
      CHECK(std::fabs(freq - p) <= 4.0 * sigma + 1e-12);
    }
  }
}

TEST_CASE("swap rounding is deterministic per seed") {
  FractionalAssignment y;
  y.y = {{0.5, 0.5, 0.2}, {0.5, 0.5, 0.8}};
  ConvexDecomposition dec = decompose(y);
  Allocation a = swap_round(dec, 7);
  Allocation b = swap_round(dec, 7);
  CHECK(a.bundles == b.bundles);
}

TEST_CASE("grid search with the exact oracle hits the guarantee") {
  const double delta = 0.1;
  const double floor = (1.0 - 1.0 / std::exp(1.0)) * (1.0 - delta);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    CAPTURE(seed);
    Instance inst = gen_random_additive(2, 5, seed, 0.5, 10.0);
    GridSearchConfig cfg;
    cfg.delta = delta;
    cfg.seed = seed;
    Allocation a = const_agents_solve(inst, cfg);
    REQUIRE(static_cast<int>(a.bundles.size()) == 2);
    CHECK(a.disjoint());
    CHECK(a.complete(inst.items()));
    const double got = nsw_value(inst, a).nsw;
    const double opt = exact_opt(inst).opt_nsw;
    CHECK(got >= floor * opt - 1e-9);
  }
}

TEST_CASE("grid search handles the even-split toy instance") {
  Instance inst;
  inst.weights = {1.0, 1.0};
  inst.valuations = {Valuation::additive({1.0, 1.0}),
                     Valuation::additive({1.0, 1.0})};
  inst.item_count = 2;
  GridSearchConfig cfg;
  cfg.delta = 0.1;
  Allocation a = const_agents_solve(inst, cfg);
  CHECK(a.bundles[0].size() == 1);
  CHECK(a.bundles[1].size() == 1);
  CHECK(nsw_value(inst, a).nsw == doctest::Approx(1.0));
}

TEST_CASE("rounded oracle still returns a usable partition") {
  Instance inst = gen_random_coverage(2, 6, 5, 8, 3, true);
  GridSearchConfig cfg;
  cfg.delta = 0.1;
  cfg.oracle = GridSearchConfig::Oracle::kRounded;
  cfg.sample_count = 500;
  cfg.seed = 11;
  Allocation a = const_agents_solve(inst, cfg);
  CHECK(a.disjoint());
  CHECK(a.complete(inst.items()));
  const double got = nsw_value(inst, a).nsw;
  const double opt = exact_opt(inst).opt_nsw;
  if (opt > 0.0) CHECK(got >= 0.2 * opt);
}

TEST_CASE("too many agents are refused") {
  Instance inst = gen_random_additive(9, 9, 1);
  GridSearchConfig cfg;
  CHECK_THROWS_AS((void)const_agents_solve(inst, cfg), std::invalid_argument);
}
