#include "nsw/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nsw {

double Instance::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

Allocation Allocation::empty(int agents) {
  Allocation a;
  a.bundles.resize(agents);
  return a;
}

int Allocation::assigned_count() const {
  int c = 0;
  for (const auto& b : bundles) c += static_cast<int>(b.size());
  return c;
}

bool Allocation::disjoint() const {
  std::vector<int> seen;
  for (const auto& b : bundles) seen.insert(seen.end(), b.begin(), b.end());
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool Allocation::complete(int item_count) const {
  if (!disjoint()) return false;
  if (assigned_count() != item_count) return false;
  for (const auto& b : bundles) {
    for (int j : b) {
      if (j < 0 || j >= item_count) return false;
    }
  }
  return true;
}

std::vector<int> Allocation::owner_of(int item_count) const {
  std::vector<int> owner(item_count, -1);
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    for (int j : bundles[i]) {
      if (j >= 0 && j < item_count) owner[j] = static_cast<int>(i);
    }
  }
  return owner;
}

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

void validate_valuation(const Valuation& v, int m, int agent) {
  const std::string tag = "agent " + std::to_string(agent) + ": ";
  if (v.item_count() != m) fail(tag + "valuation item count != m");
  switch (v.family) {
    case Family::kAdditive:
    case Family::kRestrictedAdditive:
    case Family::kBudgetAdditive:
      for (int j = 0; j < m; ++j) {
        if (!(v.values[j] >= 0.0)) {
          fail(tag + "negative value for item " + std::to_string(j));
        }
      }
      if (v.family == Family::kBudgetAdditive && !(v.cap >= 0.0)) {
        fail(tag + "negative cap");
      }
      if (v.family == Family::kRestrictedAdditive &&
          v.interest.size() != v.values.size()) {
        fail(tag + "interest set size mismatch");
      }
      break;
    case Family::kSplc:
      for (std::size_t it = 0; it < v.copy_values.size(); ++it) {
        const auto& cv = v.copy_values[it];
        if (cv.empty()) fail(tag + "empty copy list");
        for (std::size_t k = 0; k < cv.size(); ++k) {
          if (!(cv[k] >= 0.0)) fail(tag + "negative copy value");
          if (k > 0 && cv[k] > cv[k - 1] + 1e-12) {
            fail(tag + "non-concave copy values for item " +
                 std::to_string(it));
          }
        }
      }
      break;
    case Family::kCoverage:
      for (double w : v.universe_weights) {
        if (!(w >= 0.0)) fail(tag + "negative universe weight");
      }
      for (const auto& cov : v.covers) {
        for (int e : cov) {
          if (e < 0 || e >= static_cast<int>(v.universe_weights.size())) {
            fail(tag + "cover element out of range");
          }
        }
      }
      break;
    case Family::kXos:
      for (const auto& clause : v.clauses) {
        if (static_cast<int>(clause.size()) != m) {
          fail(tag + "clause length != m");
        }
        for (double x : clause) {
          if (!(x >= 0.0)) fail(tag + "negative clause value");
        }
      }
      break;
    case Family::kSubadditiveHalves:
      if (!(v.big_m > 0.0)) fail(tag + "nonpositive M");
      break;
  }
}

}  // namespace

void validate_instance(const Instance& inst) {
  const int n = inst.agents();
  const int m = inst.items();
  if (n < 1) fail("agent count must be >= 1");
  if (m < 0) fail("negative item count");
  if (static_cast<int>(inst.valuations.size()) != n) {
    fail("valuations size != agent count");
  }
  for (int i = 0; i < n; ++i) {
    if (!(inst.weights[i] > 0.0) || !std::isfinite(inst.weights[i])) {
      fail("nonpositive weight for agent " + std::to_string(i));
    }
  }
  bool any_splc = false, all_splc = true;
  for (int i = 0; i < n; ++i) {
    validate_valuation(inst.valuations[i], m, i);
    if (inst.valuations[i].family == Family::kSplc) {
      any_splc = true;
    } else {
      all_splc = false;
    }
  }
  if (any_splc && !all_splc) fail("SPLC must be used by all agents or none");
  if (any_splc) {
    // Copy counts are an instance-level property: agents must agree.
    const auto& ref = inst.valuations[0].copy_values;
    for (int i = 1; i < n; ++i) {
      const auto& cv = inst.valuations[i].copy_values;
      if (cv.size() != ref.size()) fail("SPLC item counts differ across agents");
      for (std::size_t it = 0; it < ref.size(); ++it) {
        if (cv[it].size() != ref[it].size()) {
          fail("SPLC copy counts differ across agents");
        }
      }
    }
  }
}

NswValue nsw_value(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.bundles.size()) != inst.agents()) {
    throw std::invalid_argument("allocation agent count mismatch");
  }
  if (!alloc.disjoint()) throw std::invalid_argument("overlapping allocation");
  if (!alloc.complete(inst.items())) {
    throw std::invalid_argument("incomplete allocation");
  }
  const double wsum = inst.weight_sum();
  double log_sum = 0.0;
  bool zero = false;
  for (int i = 0; i < inst.agents(); ++i) {
    const double v = inst.valuations[i].value(alloc.bundles[i]);
    if (v <= 0.0) {
      zero = true;
    } else {
      log_sum += inst.weights[i] * std::log(v);
    }
  }
  if (zero) {
    return {0.0, -std::numeric_limits<double>::infinity()};
  }
  const double log_nsw = log_sum / wsum;
  return {std::exp(log_nsw), log_nsw};
}

RankedItems rank_items(const Instance& inst, int agent, const ItemList& items) {
  RankedItems r;
  r.agent = agent;
  r.order = items;
  const Valuation& v = inst.valuations[agent];
  std::vector<double> val(r.order.size());
  std::vector<int> idx(r.order.size());
  for (std::size_t k = 0; k < r.order.size(); ++k) {
    val[k] = v.singleton(r.order[k]);
    idx[k] = static_cast<int>(k);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (val[a] != val[b]) return val[a] > val[b];
    return r.order[a] < r.order[b];
  });
  ItemList sorted(r.order.size());
  for (std::size_t k = 0; k < idx.size(); ++k) sorted[k] = r.order[idx[k]];
  r.order = std::move(sorted);
  return r;
}

double keepaside_value(const Instance& inst, int agent) {
  const Valuation& v = inst.valuations[agent];
  if (!v.additive_like()) {
    throw std::invalid_argument("keepaside_value requires additive-like valuation");
  }
  const int n = inst.agents();
  const int m = inst.items();
  if (m <= 2 * n) return 0.0;

  // Per-unit values: item values for additive-like families, individual
  // copy values for SPLC (each copy treated as a separate item).
  std::vector<double> unit(m);
  if (v.family == Family::kSplc) {
    for (int j = 0; j < m; ++j) {
      int orig = v.item_of_virtual[j];
      int k = 0;
      // copy rank of virtual item j within its original item
      for (int p = 0; p < j; ++p) {
        if (v.item_of_virtual[p] == orig) ++k;
      }
      unit[j] = v.copy_values[orig][k];
    }
  } else {
    for (int j = 0; j < m; ++j) unit[j] = v.values[j];
  }
  std::vector<int> idx(m);
  for (int j = 0; j < m; ++j) idx[j] = j;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (unit[a] != unit[b]) return unit[a] > unit[b];
    return a < b;
  });
  double sum = 0.0;
  for (int p = 2 * n; p < m; ++p) sum += unit[idx[p]];
  if (v.family == Family::kBudgetAdditive) sum = std::min(sum, v.cap);
  return sum;
}

ItemList all_items(int item_count) {
  ItemList g(item_count);
  for (int j = 0; j < item_count; ++j) g[j] = j;
  return g;
}

}  // namespace nsw
