#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsw/valuation.hpp"

namespace nsw {

struct InstanceMeta {
  std::string family;  // generator family, empty for hand-built instances
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
  std::optional<double> known_opt_nsw;  // closed-form optimum when available
};

// Agents with positive weights and one valuation oracle each, over items
// [0, m). For SPLC the item space is the expanded virtual-copy space.
struct Instance {
  std::vector<double> weights;
  std::vector<Valuation> valuations;
  int item_count = 0;
  InstanceMeta meta;

  int agents() const { return static_cast<int>(weights.size()); }
  int items() const { return item_count; }
  double weight_sum() const;
};

// Partition of items into per-agent bundles. Partial allocations are legal
// intermediate states; nsw_value() rejects them.
struct Allocation {
  std::vector<ItemList> bundles;

  static Allocation empty(int agents);
  int assigned_count() const;
  bool disjoint() const;
  bool complete(int item_count) const;
  // -1 when unassigned.
  std::vector<int> owner_of(int item_count) const;
};

struct RankedItems {
  int agent = 0;
  ItemList order;  // descending singleton value, ties by ascending index
};

struct NswValue {
  double nsw = 0.0;      // 0 when some agent has zero bundle value
  double log_nsw = 0.0;  // -inf in that case
};

// Throws std::invalid_argument naming the first violated invariant.
void validate_instance(const Instance& inst);

// Weighted geometric mean of bundle values, computed in log space.
// Requires a complete, disjoint allocation.
NswValue nsw_value(const Instance& inst, const Allocation& alloc);

RankedItems rank_items(const Instance& inst, int agent, const ItemList& items);

// u_i: the agent's value for its m-2n lowest-ranked items (0 when m <= 2n).
// BA caps the sum; SPLC ranks individual copy values.
double keepaside_value(const Instance& inst, int agent);

ItemList all_items(int item_count);

}  // namespace nsw
