#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsw/instance.hpp"

namespace nsw {

struct EnvyWitness {
  int envier = -1;
  int envied = -1;
  std::string reason;
};

struct Ef1Result {
  bool passed = true;
  std::vector<EnvyWitness> witnesses;
};

// v_i(x_i) >= v_i(x_j), or some single item of x_j removes the envy.
// Unweighted predicate; entitlements play no role.
Ef1Result is_ef1(const Instance& inst, const Allocation& alloc);

// Per envied bundle x_i there is one common item g_i whose removal kills
// every agent's envy toward x_i (the existential precedes the universal).
Ef1Result is_strong_ef1(const Instance& inst, const Allocation& alloc);

struct FairnessReport {
  bool ef1 = false;
  bool strong_ef1 = false;
  std::optional<bool> po;
  std::vector<EnvyWitness> witnesses;
};

// EF1 + strong EF1; Pareto check only when with_po (exponential, delegates
// to the brute-force oracle).
FairnessReport fairness_report(const Instance& inst, const Allocation& alloc,
                               bool with_po = false);

}  // namespace nsw
