#pragma once

#include <vector>

#include "nsw/instance.hpp"
#include "nsw/matching.hpp"

namespace nsw {

enum class SmatchVariant {
  kAdditive,    // later rounds weigh eta_i * ln(v_i(x_i) + v_i(j))
  kMarginal,    // later rounds weigh eta_i * ln(v_i(x_i ∪ {j})) (BA / SPLC)
  kRestricted,  // additive weights + never give a wanted item to a 0-valuer
};

struct SmatchTrace {
  std::vector<Matching> rounds;
  Allocation final;
};

// Round 0 matches on eta_i * ln(v_i(j) + u_i/n) with u_i the keep-aside
// value; every later round rematches the remaining items until none are
// left. Items nobody can absorb (all edges forbidden) go to agent 0.
Allocation smatch(const Instance& inst, SmatchVariant variant);

SmatchTrace smatch_trace(const Instance& inst, SmatchVariant variant);

}  // namespace nsw
