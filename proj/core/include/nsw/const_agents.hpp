#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nsw/instance.hpp"

namespace nsw {

struct GridSearchConfig {
  double delta = 0.05;  // grid ratio: candidate values are powers of 1+delta
  double beta = 0.0;    // convergence pad; <= 0 picks delta * smallest grid value
  enum class Oracle { kExact, kRounded } oracle = Oracle::kExact;
  int sample_count = 2000;  // Monte Carlo samples for the rounded oracle
  std::uint64_t seed = 0;
};

// Fractional point in the allocation polytope: per item, total mass over
// agents at most 1.
struct FractionalAssignment {
  std::vector<std::vector<double>> y;  // [agent][item] in [0, 1]

  int agents() const { return static_cast<int>(y.size()); }
  int items() const { return y.empty() ? 0 : static_cast<int>(y[0].size()); }
};

struct ConvexDecomposition {
  // Coefficients are positive and sum to 1; allocations may be partial.
  std::vector<std::pair<double, Allocation>> terms;
};

// Geometric grid search for the NSW optimum: scale so every agent values the
// grand bundle at a common power of 1+delta, binary-search the product of
// target utilities over grid powers, and for each candidate product scan
// target vectors in lexicographic order against a feasibility oracle with
// slack 1-1/e. Returns the witness of the last feasible candidate, or a
// greedy fallback when nothing is feasible.
Allocation const_agents_solve(const Instance& inst,
                              const GridSearchConfig& cfg);

// Monte Carlo value of the multilinear extension at y_row: mean of
// val(random subset) with item j included independently w.p. y_row[j].
double multilinear_estimate(const Valuation& val,
                            const std::vector<double>& y_row, int samples,
                            std::uint64_t seed);

// Peels y into at most n*m + 1 indicator terms: repeatedly take, per item,
// the agent holding the largest residual mass, with the largest coefficient
// that keeps the residual nonnegative.
ConvexDecomposition decompose(const FractionalAssignment& y);

// Randomized swap rounding: merge the first two terms until equal, resolving
// each differing item toward the heavier term with probability
// beta_0/(beta_0+beta_1); repeat until one term remains. Preserves per-
// (agent, item) marginals in expectation. The result may be partial.
Allocation swap_round(const ConvexDecomposition& dec, std::uint64_t seed);

}  // namespace nsw
