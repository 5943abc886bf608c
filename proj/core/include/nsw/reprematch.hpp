#pragma once

#include <vector>

#include "nsw/instance.hpp"
#include "nsw/matching.hpp"

namespace nsw {

struct PhaseLedger {
  std::vector<ItemList> phase1_bundles;  // released before phase 3
  std::vector<ItemList> phase2_bundles;
  Matching phase3_matching;
  ItemList leftovers;  // released items placed by the greedy fill
  Allocation final;
};

// Number of phase-1 rounds: ceil(log2 n).
int phase_bound(int agents);

// Phase 1: phase_bound(n) singleton-weight matchings. Phase 2: cumulative
// bundle-value matchings until no items remain. Phase 3: release the phase-1
// items, rematch once on cumulative weights, then fill the rest greedily by
// weighted log-gain (zero-value agents that would gain go first; ties to the
// lowest agent index).
Allocation reprematch(const Instance& inst);

PhaseLedger reprematch_ledger(const Instance& inst);

// Greedy fill shared with the baselines: assign each item in ascending order
// to the agent maximizing eta_i * (ln v_i(x_i ∪ {j}) - ln v_i(x_i)).
void greedy_fill(const Instance& inst, const ItemList& items,
                 Allocation& alloc);

}  // namespace nsw
