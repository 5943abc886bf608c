#include "nsw/exact.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>

namespace nsw {

long long oracle_limit() {
  if (const char* env = std::getenv("NSW_ORACLE_LIMIT")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 10'000'000;
}

namespace {

void check_limit(const Instance& inst, long long limit) {
  const int n = inst.agents();
  const int m = inst.items();
  if (m > 0 &&
      m * std::log(static_cast<double>(n)) >
          std::log(static_cast<double>(limit)) + 1e-12) {
    throw OracleLimitError("n^m = " + std::to_string(n) + "^" +
                           std::to_string(m) + " exceeds oracle limit " +
                           std::to_string(limit));
  }
}

// Depth-first sweep of all owner vectors in lexicographic order (item 0 most
// significant digit), with incremental per-agent values. `leaf` sees the
// bundles and finalized values; returning false stops the sweep.
class Enumerator {
 public:
  Enumerator(const Instance& inst,
             std::function<bool(const std::vector<ItemList>&,
                                const std::vector<double>&)>
                 leaf)
      : inst_(inst), leaf_(std::move(leaf)) {
    const int n = inst.agents();
    bundles_.resize(n);
    raw_.assign(n, 0.0);
    finalized_.assign(n, 0.0);
    fast_.assign(n, 0);
    held_.resize(n);
    for (int i = 0; i < n; ++i) {
      const Family f = inst.valuations[i].family;
      fast_[i] = f == Family::kAdditive || f == Family::kRestrictedAdditive ||
                 f == Family::kBudgetAdditive || f == Family::kSplc;
      if (f == Family::kSplc) {
        held_[i].assign(inst.valuations[i].copy_values.size(), 0);
      }
    }
  }

  long long run() {
    descend(0);
    return explored_;
  }

 private:
  bool descend(int item) {
    const int n = inst_.agents();
    if (item == inst_.items()) {
      ++explored_;
      for (int i = 0; i < n; ++i) {
        const Valuation& v = inst_.valuations[i];
        finalized_[i] = v.family == Family::kBudgetAdditive
                            ? std::min(raw_[i], v.cap)
                            : raw_[i];
      }
      return leaf_(bundles_, finalized_);
    }
    for (int i = 0; i < n; ++i) {
      const Valuation& v = inst_.valuations[i];
      const double old = raw_[i];
      bundles_[i].push_back(item);
      if (!fast_[i]) {
        raw_[i] = v.value(bundles_[i]);
      } else if (v.family == Family::kSplc) {
        const int orig = v.item_of_virtual[item];
        raw_[i] += v.copy_values[orig][held_[i][orig]++];
      } else {
        raw_[i] += v.values[item];
      }
      const bool keep_going = descend(item + 1);
      bundles_[i].pop_back();
      raw_[i] = old;
      if (fast_[i] && v.family == Family::kSplc) {
        --held_[i][v.item_of_virtual[item]];
      }
      if (!keep_going) return false;
    }
    return true;
  }

  const Instance& inst_;
  std::function<bool(const std::vector<ItemList>&, const std::vector<double>&)>
      leaf_;
  std::vector<ItemList> bundles_;
  std::vector<double> raw_, finalized_;
  std::vector<std::vector<int>> held_;
  std::vector<char> fast_;
  long long explored_ = 0;
};

}  // namespace

OptResult exact_opt(const Instance& inst, long long limit) {
  check_limit(inst, limit);
  const int n = inst.agents();
  OptResult out;
  int best_zeros = n + 1;
  double best_logsum = -std::numeric_limits<double>::infinity();
  bool have = false;
  Enumerator en(inst, [&](const std::vector<ItemList>& bundles,
                          const std::vector<double>& values) {
    int zeros = 0;
    double logsum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (values[i] <= 0.0) {
        ++zeros;
      } else {
        logsum += inst.weights[i] * std::log(values[i]);
      }
    }
    if (!have || zeros < best_zeros ||
        (zeros == best_zeros && logsum > best_logsum)) {
      have = true;
      best_zeros = zeros;
      best_logsum = logsum;
      out.best.bundles = bundles;
    }
    return true;
  });
  out.explored = en.run();
  if (best_zeros > 0) {
    out.opt_nsw = 0.0;
    out.opt_log_nsw = -std::numeric_limits<double>::infinity();
  } else {
    out.opt_log_nsw = best_logsum / inst.weight_sum();
    out.opt_nsw = std::exp(out.opt_log_nsw);
  }
  return out;
}

std::optional<Allocation> feasible(const Instance& inst,
                                   const std::vector<double>& targets,
                                   double slack, long long limit) {
  check_limit(inst, limit);
  const int n = inst.agents();
  std::optional<Allocation> witness;
  Enumerator en(inst, [&](const std::vector<ItemList>& bundles,
                          const std::vector<double>& values) {
    for (int i = 0; i < n; ++i) {
      const double need = slack * targets[i];
      if (values[i] < need - 1e-12 * (1.0 + std::fabs(need))) return true;
    }
    witness = Allocation{bundles};
    return false;
  });
  en.run();
  return witness;
}

ParetoCheck is_pareto_optimal(const Instance& inst, const Allocation& alloc,
                              long long limit) {
  check_limit(inst, limit);
  const int n = inst.agents();
  std::vector<double> base(n);
  for (int i = 0; i < n; ++i) {
    base[i] = inst.valuations[i].value(alloc.bundles[i]);
  }
  ParetoCheck out;
  Enumerator en(inst, [&](const std::vector<ItemList>& bundles,
                          const std::vector<double>& values) {
    bool strict = false;
    for (int i = 0; i < n; ++i) {
      if (values[i] < base[i]) return true;
      if (values[i] > base[i]) strict = true;
    }
    if (!strict) return true;
    out.optimal = false;
    out.dominator = Allocation{bundles};
    return false;
  });
  en.run();
  return out;
}

}  // namespace nsw
