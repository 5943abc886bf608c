#pragma once

#include "nsw/instance.hpp"

namespace nsw {

// One max-weight matching on singleton weights eta_i * ln v_i(j); leftovers
// go through the same greedy fill as reprematch.
Allocation single_matching_fill(const Instance& inst);

// Repeated matchings on eta_i * ln(v_i(x_i) + v_i(j)) until no items remain;
// unabsorbable items park with agent 0.
Allocation naive_repeated_matching(const Instance& inst);

}  // namespace nsw
