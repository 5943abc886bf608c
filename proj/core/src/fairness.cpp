#include "nsw/fairness.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsw/exact.hpp"

namespace nsw {

namespace {

void require_complete(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.bundles.size()) != inst.agents() ||
      !alloc.complete(inst.items())) {
    throw std::invalid_argument("fairness checks need a complete allocation");
  }
}

double value_without(const Valuation& v, const ItemList& bundle, int drop) {
  ItemList rest;
  rest.reserve(bundle.size());
  for (int g : bundle) {
    if (g != drop) rest.push_back(g);
  }
  return v.value(rest);
}

}  // namespace

Ef1Result is_ef1(const Instance& inst, const Allocation& alloc) {
  require_complete(inst, alloc);
  const int n = inst.agents();
  Ef1Result out;
  for (int i = 0; i < n; ++i) {
    const Valuation& vi = inst.valuations[i];
    const double own = vi.value(alloc.bundles[i]);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const ItemList& other = alloc.bundles[j];
      if (own >= vi.value(other)) continue;
      bool fixed = false;
      for (int g : other) {
        if (own >= value_without(vi, other, g)) {
          fixed = true;
          break;
        }
      }
      if (!fixed) {
        out.passed = false;
        out.witnesses.push_back(
            {i, j, "envy survives every single-item removal"});
      }
    }
  }
  return out;
}

Ef1Result is_strong_ef1(const Instance& inst, const Allocation& alloc) {
  require_complete(inst, alloc);
  const int n = inst.agents();
  Ef1Result out;
  for (int i = 0; i < n; ++i) {
    const ItemList& mine = alloc.bundles[i];
    auto nobody_envies_after = [&](int drop) {
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const Valuation& vj = inst.valuations[j];
        const double rest =
            drop < 0 ? vj.value(mine) : value_without(vj, mine, drop);
        if (vj.value(alloc.bundles[j]) < rest) return false;
      }
      return true;
    };
    bool ok = mine.empty() ? nobody_envies_after(-1) : false;
    for (std::size_t k = 0; !ok && k < mine.size(); ++k) {
      ok = nobody_envies_after(mine[k]);
    }
    if (!ok) {
      out.passed = false;
      out.witnesses.push_back(
          {-1, i, "no common removable item clears all envy"});
    }
  }
  return out;
}

FairnessReport fairness_report(const Instance& inst, const Allocation& alloc,
                               bool with_po) {
  FairnessReport rep;
  Ef1Result e = is_ef1(inst, alloc);
  Ef1Result s = is_strong_ef1(inst, alloc);
  rep.ef1 = e.passed;
  rep.strong_ef1 = s.passed;
  rep.witnesses = std::move(e.witnesses);
  rep.witnesses.insert(rep.witnesses.end(), s.witnesses.begin(),
                       s.witnesses.end());
  if (with_po) rep.po = is_pareto_optimal(inst, alloc).optimal;
  return rep;
}

}  // namespace nsw
