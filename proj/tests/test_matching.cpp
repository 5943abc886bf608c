#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "nsw/matching.hpp"
#include "nsw/rng.hpp"

using namespace nsw;

namespace {

WeightMatrix make_matrix(std::vector<std::vector<double>> w) {
  WeightMatrix W;
  W.w = std::move(w);
  for (int c = 0; c < static_cast<int>(W.w[0].size()); ++c)
    W.items.push_back(c);
  return W;
}

}  // namespace

TEST_CASE("simple assignment") {
  WeightMatrix W = make_matrix({{3.0, 1.0}, {2.0, 1.0}});
  Matching m = max_weight_matching(W);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(m.weight == doctest::Approx(4.0));
}

TEST_CASE("cardinality beats weight") {
  // Matching both agents forces the low-weight pairing even though agent 0
  // alone could grab 100.
  WeightMatrix W = make_matrix({{100.0, 1.0}, {99.0, kSentinel}});
  Matching m = max_weight_matching(W);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK(m.weight == doctest::Approx(100.0));
}

TEST_CASE("sentinel rows stay unmatched") {
  WeightMatrix W = make_matrix({{kSentinel, kSentinel}, {5.0, 2.0}});
  Matching m = max_weight_matching(W);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("ties break to the lexicographically smallest pair sequence") {
  // All-equal weights: agent 0 takes item 0, agent 1 item 1.
  WeightMatrix W = make_matrix({{1.0, 1.0}, {1.0, 1.0}});
  Matching m = max_weight_matching(W);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});

  // Same total either way; (0,0),(1,1) is lexicographically smaller.
  W = make_matrix({{2.0, 1.0}, {2.0, 1.0}});
  m = max_weight_matching(W);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});

  // Here (0,0),(1,1) and (0,1),(1,0) tie in weight again at 4.
  W = make_matrix({{1.0, 2.0}, {2.0, 3.0}, {kSentinel, kSentinel}});
  m = max_weight_matching(W);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
}

TEST_CASE("columns map back to item ids") {
  WeightMatrix W;
  W.items = {3, 7};
  W.w = {{1.0, 4.0}};
  Matching m = max_weight_matching(W);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 7}});
}

TEST_CASE("negative weights still matched when cardinality demands") {
  WeightMatrix W = make_matrix({{-5.0}, {kSentinel}});
  Matching m = max_weight_matching(W);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(m.weight == doctest::Approx(-5.0));
}

TEST_CASE("empty matrix") {
  WeightMatrix W;
  Matching m = max_weight_matching(W);
  CHECK(m.pairs.empty());
  CHECK(m.weight == 0.0);
}

TEST_CASE("fuzz against the exhaustive oracle") {
  Rng rng(12345);
  for (int trial = 0; trial < 400; ++trial) {
    WeightMatrix W = testing::random_matrix(rng, 5, 0.3);
    Matching got = max_weight_matching(W);
    testing::BruteBest want = testing::brute_matching(W);
    CHECK(static_cast<int>(got.pairs.size()) == want.cardinality);
    CHECK(got.weight == doctest::Approx(want.weight).epsilon(1e-9));
    // The oracle also enumerates in lexicographic order of forced choices,
    // so pair sequences must agree exactly on weight ties.
    std::vector<std::pair<int, int>> want_pairs;
    for (auto [r, c] : want.pairs) want_pairs.emplace_back(r, W.items[c]);
    CHECK(got.pairs == want_pairs);
  }
}

TEST_CASE("build_weights: singleton mode and sentinel for zero value") {
  Instance inst;
  inst.weights = {1.0, 2.0};
  inst.valuations = {Valuation::additive({4.0, 0.0, 1.0}),
                     Valuation::additive({2.0, 3.0, 5.0})};
  inst.item_count = 3;
  WeightState state;
  WeightMatrix W = build_weights(inst, {0, 1, 2}, WeightMode::kPhase1Singleton,
                                 state);
  CHECK(W.items == std::vector<int>{0, 1, 2});
  CHECK(W.w[0][0] == doctest::Approx(std::log(4.0)));
  CHECK(W.w[0][1] == kSentinel);
  CHECK(W.w[1][2] == doctest::Approx(2.0 * std::log(5.0)));
}

TEST_CASE("build_weights: keep-aside shifts the first-round argument") {
  Instance inst;
  inst.weights = {1.0};
  inst.valuations = {Valuation::additive({9.0, 1.0, 4.0})};
  inst.item_count = 3;
  std::vector<double> keep = {6.0};
  WeightState state;
  state.keep_aside = &keep;
  WeightMatrix W =
      build_weights(inst, {0, 1, 2}, WeightMode::kSmatchFirst, state);
  // n = 1: argument is v(j) + u / 1.
  CHECK(W.w[0][0] == doctest::Approx(std::log(9.0 + 6.0)));
  CHECK(W.w[0][1] == doctest::Approx(std::log(1.0 + 6.0)));
}

TEST_CASE("build_weights: cumulative modes use the running bundle") {
  Instance inst;
  inst.weights = {1.0};
  inst.valuations = {Valuation::budget_additive({4.0, 3.0, 2.0}, 5.0)};
  inst.item_count = 3;
  Allocation bundles = Allocation::empty(1);
  bundles.bundles[0] = {0};
  WeightState state;
  state.bundles = &bundles;
  WeightMatrix W =
      build_weights(inst, {1, 2}, WeightMode::kPhase2Cumulative, state);
  // v({0,1}) = min(7,5) = 5, v({0,2}) = min(6,5) = 5: both finite even
  // though the second marginal is only 1.
  CHECK(W.w[0][0] == doctest::Approx(std::log(5.0)));
  CHECK(W.w[0][1] == doctest::Approx(std::log(5.0)));

  // kSmatchLater adds singleton values instead.
  W = build_weights(inst, {1, 2}, WeightMode::kSmatchLater, state);
  CHECK(W.w[0][0] == doctest::Approx(std::log(4.0 + 3.0)));
}

TEST_CASE("build_weights: restricted rule blocks zero-valuers") {
  Instance inst;
  inst.weights = {1.0, 1.0};
  inst.valuations = {
      Valuation::restricted_additive({5.0, 5.0}, {1, 0}),
      Valuation::restricted_additive({5.0, 5.0}, {1, 1})};
  inst.item_count = 2;
  WeightState state;
  state.restricted_rule = true;
  WeightMatrix W = build_weights(inst, {0, 1}, WeightMode::kPhase1Singleton,
                                 state);
  // Item 1 is contested (agent 1 values it), so agent 0 is locked out.
  CHECK(W.w[0][1] == kSentinel);
  CHECK(std::isfinite(W.w[1][1]));
}
