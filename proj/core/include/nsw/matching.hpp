#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "nsw/instance.hpp"

namespace nsw {

// Forbidden edge: the weight formula's log argument was 0.
inline constexpr double kSentinel = -std::numeric_limits<double>::infinity();

// Agents x candidate-items weight matrix. Columns index into `items`, which
// maps back to item ids in the instance's space.
struct WeightMatrix {
  std::vector<int> items;              // column -> item id, ascending
  std::vector<std::vector<double>> w;  // [agent][column], finite or kSentinel

  int rows() const { return static_cast<int>(w.size()); }
  int cols() const { return static_cast<int>(items.size()); }
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (agent, item id), sorted by agent
  double weight = 0.0;                     // sum of edge weights in agent order
};

enum class WeightMode {
  kSmatchFirst,       // eta_i * ln(v_i(j) + u_i / n)
  kSmatchLater,       // eta_i * ln(v_i(x_i) + v_i(j))
  kPhase1Singleton,   // eta_i * ln(v_i(j))
  kPhase2Cumulative,  // eta_i * ln(v_i(x_i ∪ {j}))
  kPhase3Rematch,     // eta_i * ln(v_i(x_i ∪ {j})), x_i = final phase-2 bundle
};

struct WeightState {
  const std::vector<double>* keep_aside = nullptr;  // kSmatchFirst
  const Allocation* bundles = nullptr;              // bundle-dependent modes
  // Forbid giving a contested item (positive singleton value to someone) to
  // an agent valuing it 0.
  bool restricted_rule = false;
};

WeightMatrix build_weights(const Instance& inst, const ItemList& unallocated,
                           WeightMode mode, const WeightState& state);

// Among matchings of maximum cardinality over finite-weight edges, returns a
// maximum-weight one; ties resolved to the lexicographically smallest
// (agent, item) pair sequence. Deterministic.
Matching max_weight_matching(const WeightMatrix& W);

}  // namespace nsw
