#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "nsw/matching.hpp"
#include "nsw/rng.hpp"

namespace nsw::testing {

// Exhaustive max-cardinality-then-max-weight matching over finite edges,
// used as the oracle for the Hungarian engine. Weight summed in ascending
// agent order to mirror Matching::weight.
struct BruteBest {
  int cardinality = 0;
  double weight = 0.0;
  std::vector<std::pair<int, int>> pairs;  // (agent, column)
};

inline BruteBest brute_matching(const WeightMatrix& W) {
  const int R = W.rows();
  const int C = W.cols();
  BruteBest best;
  std::vector<int> choice(R, -1);
  std::vector<char> used(C, 0);
  auto consider = [&]() {
    int card = 0;
    double weight = 0.0;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < R; ++i) {
      if (choice[i] >= 0) {
        ++card;
        weight += W.w[i][choice[i]];
        pairs.emplace_back(i, choice[i]);
      }
    }
    const double tie = 1e-12 * (1.0 + std::fabs(best.weight));
    bool take = card > best.cardinality;
    if (!take && card == best.cardinality) {
      if (weight > best.weight + tie) {
        take = true;
      } else if (weight > best.weight - tie && pairs < best.pairs) {
        take = true;  // weight tie: keep the lexicographically smallest pairs
      }
    }
    if (take) {
      best.cardinality = card;
      best.weight = weight;
      best.pairs = std::move(pairs);
    }
  };
  std::function<void(int)> rec = [&](int i) {
    if (i == R) {
      consider();
      return;
    }
    rec(i + 1);  // agent i unmatched
    for (int c = 0; c < C; ++c) {
      if (used[c] || !std::isfinite(W.w[i][c])) continue;
      used[c] = 1;
      choice[i] = c;
      rec(i + 1);
      choice[i] = -1;
      used[c] = 0;
    }
  };
  best.weight = -1e300;
  best.cardinality = -1;
  rec(0);
  return best;
}

inline WeightMatrix random_matrix(Rng& rng, int max_dim,
                                  double sentinel_prob) {
  WeightMatrix W;
  const int rows = 1 + rng.uniform_int(max_dim);
  const int cols = 1 + rng.uniform_int(max_dim);
  for (int c = 0; c < cols; ++c) W.items.push_back(c);
  W.w.assign(rows, std::vector<double>(cols, kSentinel));
  for (int i = 0; i < rows; ++i) {
    for (int c = 0; c < cols; ++c) {
      if (!rng.bernoulli(sentinel_prob)) W.w[i][c] = rng.uniform(-3.0, 3.0);
    }
  }
  return W;
}

}  // namespace nsw::testing
