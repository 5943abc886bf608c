#include "nsw/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nsw/matching.hpp"
#include "nsw/reprematch.hpp"

namespace nsw {

namespace {

void insert_sorted(ItemList& bundle, int item) {
  bundle.insert(std::lower_bound(bundle.begin(), bundle.end(), item), item);
}

}  // namespace

Allocation single_matching_fill(const Instance& inst) {
  Allocation alloc = Allocation::empty(inst.agents());
  std::set<int> remaining;
  for (int j = 0; j < inst.items(); ++j) remaining.insert(j);
  const ItemList pool(remaining.begin(), remaining.end());
  const WeightMatrix W =
      build_weights(inst, pool, WeightMode::kPhase1Singleton, WeightState{});
  const Matching M = max_weight_matching(W);
  for (const auto& [agent, item] : M.pairs) {
    insert_sorted(alloc.bundles[agent], item);
    remaining.erase(item);
  }
  greedy_fill(inst, ItemList(remaining.begin(), remaining.end()), alloc);
  return alloc;
}

Allocation naive_repeated_matching(const Instance& inst) {
  const int n = inst.agents();
  Allocation alloc = Allocation::empty(n);
  std::set<int> remaining;
  for (int j = 0; j < inst.items(); ++j) remaining.insert(j);
  while (!remaining.empty()) {
    WeightState state;
    state.bundles = &alloc;
    const ItemList pool(remaining.begin(), remaining.end());
    const WeightMatrix W =
        build_weights(inst, pool, WeightMode::kSmatchLater, state);
    const Matching M = max_weight_matching(W);
    for (const auto& [agent, item] : M.pairs) {
      insert_sorted(alloc.bundles[agent], item);
      remaining.erase(item);
    }
    for (int c = 0; c < W.cols(); ++c) {
      bool any_finite = false;
      for (int i = 0; i < n && !any_finite; ++i) {
        any_finite = std::isfinite(W.w[i][c]);
      }
      if (!any_finite && remaining.count(W.items[c])) {
        insert_sorted(alloc.bundles[0], W.items[c]);
        remaining.erase(W.items[c]);
      }
    }
  }
  return alloc;
}

}  // namespace nsw
