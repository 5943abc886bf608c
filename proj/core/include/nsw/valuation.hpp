#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace nsw {

// Items are indices into [0, m). Bundles are sorted, duplicate-free lists.
using ItemList = std::vector<int>;

enum class Family {
  kAdditive,
  kRestrictedAdditive,
  kBudgetAdditive,
  kSplc,
  kCoverage,
  kXos,
  kSubadditiveHalves,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// One agent's valuation, queried through set-value and marginal-value calls.
// A tagged struct rather than a class hierarchy: the parameter blocks are
// small and serialization stays flat.
struct Valuation {
  Family family = Family::kAdditive;

  // kAdditive, kRestrictedAdditive, kBudgetAdditive: per-item values.
  std::vector<double> values;
  // kBudgetAdditive: utility cap.
  double cap = std::numeric_limits<double>::infinity();
  // kRestrictedAdditive: interest[j] != 0 iff values[j] may be nonzero.
  std::vector<char> interest;

  // kSplc: copy_values[j] lists the value of the k-th copy of original item
  // j, non-increasing in k. The valuation is queried over the expanded
  // virtual-item space; item_of_virtual maps a virtual index back to j.
  std::vector<std::vector<double>> copy_values;
  std::vector<int> item_of_virtual;

  // kCoverage: value of a bundle is the weight of the union of covers.
  std::vector<double> universe_weights;
  std::vector<std::vector<int>> covers;  // per item, indices into the universe

  // kXos: value of a bundle is the max over additive clauses.
  std::vector<std::vector<double>> clauses;

  // kSubadditiveHalves: v(S) = max(M, |S ∩ own| * M) for nonempty S, 0 at ∅.
  double big_m = 0.0;
  std::vector<char> own;

  int item_count() const;
  double value(const ItemList& bundle) const;
  double marginal(int item, const ItemList& bundle) const;
  double singleton(int item) const;
  bool additive_like() const;  // additive, restricted, BA, SPLC

  static Valuation additive(std::vector<double> values);
  static Valuation restricted_additive(const std::vector<double>& item_values,
                                       std::vector<char> interest);
  static Valuation budget_additive(std::vector<double> values, double cap);
  static Valuation splc(std::vector<std::vector<double>> copy_values);
  static Valuation coverage(std::vector<double> universe_weights,
                            std::vector<std::vector<int>> covers);
  static Valuation xos(std::vector<std::vector<double>> clauses);
  static Valuation subadditive_halves(double big_m, std::vector<char> own);
};

struct SubmodularityWitness {
  int item = -1;
  ItemList base;
  ItemList extra;
  double gain_on_superset = 0.0;  // marginal of `item` on base ∪ extra
  double gain_on_base = 0.0;      // marginal of `item` on base alone
};

struct SubmodularityCheck {
  bool passed = true;
  std::optional<SubmodularityWitness> witness;
};

// Samples random (h, S1, S2) triples and tests v(h | S1 ∪ S2) <= v(h | S1).
SubmodularityCheck check_submodular(const Valuation& val, int trials,
                                    std::uint64_t seed);

}  // namespace nsw
