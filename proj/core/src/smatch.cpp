#include "nsw/smatch.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace nsw {

namespace {

void check_variant(const Instance& inst, SmatchVariant variant) {
  for (const Valuation& v : inst.valuations) {
    bool ok = false;
    switch (variant) {
      case SmatchVariant::kAdditive:
        ok = v.family == Family::kAdditive ||
             v.family == Family::kRestrictedAdditive;
        break;
      case SmatchVariant::kMarginal:
        ok = v.family == Family::kBudgetAdditive || v.family == Family::kSplc;
        break;
      case SmatchVariant::kRestricted:
        ok = v.family == Family::kRestrictedAdditive;
        break;
    }
    if (!ok) {
      throw std::invalid_argument(
          "smatch variant incompatible with valuation family");
    }
  }
}

void insert_sorted(ItemList& bundle, int item) {
  bundle.insert(std::lower_bound(bundle.begin(), bundle.end(), item), item);
}

}  // namespace

SmatchTrace smatch_trace(const Instance& inst, SmatchVariant variant) {
  check_variant(inst, variant);
  const int n = inst.agents();
  SmatchTrace trace;
  trace.final = Allocation::empty(n);

  std::vector<double> keep(n);
  for (int i = 0; i < n; ++i) keep[i] = keepaside_value(inst, i);

  std::set<int> remaining;
  for (int j = 0; j < inst.items(); ++j) remaining.insert(j);

  int round = 0;
  while (!remaining.empty()) {
    WeightState state;
    state.restricted_rule = variant == SmatchVariant::kRestricted;
    WeightMode mode;
    if (round == 0) {
      mode = WeightMode::kSmatchFirst;
      state.keep_aside = &keep;
    } else if (variant == SmatchVariant::kMarginal) {
      mode = WeightMode::kPhase2Cumulative;
      state.bundles = &trace.final;
    } else {
      mode = WeightMode::kSmatchLater;
      state.bundles = &trace.final;
    }
    const ItemList pool(remaining.begin(), remaining.end());
    const WeightMatrix W = build_weights(inst, pool, mode, state);
    Matching M = max_weight_matching(W);
    for (const auto& [agent, item] : M.pairs) {
      insert_sorted(trace.final.bundles[agent], item);
      remaining.erase(item);
    }
    // Items every agent is blind to (all edges forbidden) park with agent 0.
    for (int c = 0; c < W.cols(); ++c) {
      bool any_finite = false;
      for (int i = 0; i < n && !any_finite; ++i) {
        any_finite = std::isfinite(W.w[i][c]);
      }
      if (!any_finite && remaining.count(W.items[c])) {
        insert_sorted(trace.final.bundles[0], W.items[c]);
        remaining.erase(W.items[c]);
      }
    }
    trace.rounds.push_back(std::move(M));
    ++round;
  }
  return trace;
}

Allocation smatch(const Instance& inst, SmatchVariant variant) {
  return smatch_trace(inst, variant).final;
}

}  // namespace nsw
