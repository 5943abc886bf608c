#include "nsw/reprematch.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace nsw {

int phase_bound(int agents) {
  int rounds = 0;
  while ((1 << rounds) < agents) ++rounds;
  return rounds;
}

namespace {

void insert_sorted(ItemList& bundle, int item) {
  bundle.insert(std::lower_bound(bundle.begin(), bundle.end(), item), item);
}

}  // namespace

void greedy_fill(const Instance& inst, const ItemList& items,
                 Allocation& alloc) {
  const int n = inst.agents();
  ItemList order = items;
  std::sort(order.begin(), order.end());
  for (int j : order) {
    int best = 0;
    bool best_fixes_zero = false;
    double best_gain = -1.0;
    for (int i = 0; i < n; ++i) {
      const Valuation& v = inst.valuations[i];
      const double before = v.value(alloc.bundles[i]);
      ItemList with = alloc.bundles[i];
      with.push_back(j);
      const double after = v.value(with);
      const bool fixes_zero = before <= 0.0 && after > 0.0;
      double gain = 0.0;
      if (before > 0.0 && after > before) {
        gain = inst.weights[i] * (std::log(after) - std::log(before));
      }
      // An agent whose bundle is worthless jumps the queue if the item
      // helps; among those, prefer the larger weighted resulting value.
      const double key = fixes_zero ? inst.weights[i] * std::log(after) : gain;
      if ((fixes_zero && !best_fixes_zero) ||
          (fixes_zero == best_fixes_zero && key > best_gain)) {
        best = i;
        best_fixes_zero = fixes_zero;
        best_gain = key;
      }
    }
    insert_sorted(alloc.bundles[best], j);
  }
}

PhaseLedger reprematch_ledger(const Instance& inst) {
  const int n = inst.agents();
  PhaseLedger led;
  led.phase1_bundles.resize(n);
  led.phase2_bundles.resize(n);

  std::set<int> remaining;
  for (int j = 0; j < inst.items(); ++j) remaining.insert(j);

  for (int t = 0; t < phase_bound(n) && !remaining.empty(); ++t) {
    const ItemList pool(remaining.begin(), remaining.end());
    const WeightMatrix W =
        build_weights(inst, pool, WeightMode::kPhase1Singleton, WeightState{});
    const Matching M = max_weight_matching(W);
    if (M.pairs.empty()) break;
    for (const auto& [agent, item] : M.pairs) {
      insert_sorted(led.phase1_bundles[agent], item);
      remaining.erase(item);
    }
  }

  Allocation phase2{led.phase2_bundles};
  while (!remaining.empty()) {
    WeightState state;
    state.bundles = &phase2;
    const ItemList pool(remaining.begin(), remaining.end());
    const WeightMatrix W =
        build_weights(inst, pool, WeightMode::kPhase2Cumulative, state);
    const Matching M = max_weight_matching(W);
    if (M.pairs.empty()) break;  // leftovers nobody can absorb
    for (const auto& [agent, item] : M.pairs) {
      insert_sorted(phase2.bundles[agent], item);
      remaining.erase(item);
    }
  }
  led.phase2_bundles = phase2.bundles;

  // Phase 3: pool = released phase-1 items plus anything phase 2 could not
  // absorb; one rematch against the phase-2 bundles, then greedy fill.
  std::set<int> pool3 = remaining;
  for (const ItemList& b : led.phase1_bundles) pool3.insert(b.begin(), b.end());
  led.final = phase2;
  if (!pool3.empty()) {
    WeightState state;
    state.bundles = &phase2;
    const ItemList pool(pool3.begin(), pool3.end());
    const WeightMatrix W =
        build_weights(inst, pool, WeightMode::kPhase3Rematch, state);
    led.phase3_matching = max_weight_matching(W);
    for (const auto& [agent, item] : led.phase3_matching.pairs) {
      insert_sorted(led.final.bundles[agent], item);
      pool3.erase(item);
    }
    led.leftovers.assign(pool3.begin(), pool3.end());
    greedy_fill(inst, led.leftovers, led.final);
  }
  return led;
}

Allocation reprematch(const Instance& inst) {
  return reprematch_ledger(inst).final;
}

}  // namespace nsw
