#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nsw/instance.hpp"

namespace nsw {

struct OracleLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration cap for the brute-force oracles; NSW_ORACLE_LIMIT overrides.
long long oracle_limit();

struct OptResult {
  Allocation best;
  double opt_nsw = 0.0;
  double opt_log_nsw = 0.0;
  long long explored = 0;
};

// Enumerates all n^m complete allocations (items as base-n digits, item 0
// most significant) and returns the log-NSW argmax. Allocations with
// zero-value agents order below all others by (zero count asc, log sum of
// the rest desc); ties keep the first, i.e. lexicographically smallest,
// encoding. Throws OracleLimitError when n^m > limit.
OptResult exact_opt(const Instance& inst, long long limit = oracle_limit());

// First enumerated complete allocation with v_i(x_i) >= slack * targets[i]
// for all agents, or nullopt.
std::optional<Allocation> feasible(const Instance& inst,
                                   const std::vector<double>& targets,
                                   double slack,
                                   long long limit = oracle_limit());

struct ParetoCheck {
  bool optimal = true;
  std::optional<Allocation> dominator;  // weakly dominates, one strict gain
};

ParetoCheck is_pareto_optimal(const Instance& inst, const Allocation& alloc,
                              long long limit = oracle_limit());

}  // namespace nsw
