#include "nsw/const_agents.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

#include "nsw/exact.hpp"
#include "nsw/reprematch.hpp"
#include "nsw/rng.hpp"

namespace nsw {

double multilinear_estimate(const Valuation& val,
                            const std::vector<double>& y_row, int samples,
                            std::uint64_t seed) {
  const int m = val.item_count();
  if (static_cast<int>(y_row.size()) != m) {
    throw std::invalid_argument("multilinear_estimate: row length mismatch");
  }
  for (double p : y_row) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("multilinear_estimate: entry outside [0,1]");
    }
  }
  Rng rng(seed);
  double total = 0.0;
  ItemList subset;
  for (int s = 0; s < samples; ++s) {
    subset.clear();
    for (int j = 0; j < m; ++j) {
      if (rng.bernoulli(y_row[j])) subset.push_back(j);
    }
    total += val.value(subset);
  }
  return total / samples;
}

ConvexDecomposition decompose(const FractionalAssignment& fa) {
  const int n = fa.agents();
  const int m = fa.items();
  const double eps = 1e-12;
  for (int j = 0; j < m; ++j) {
    double col = 0.0;
    for (int i = 0; i < n; ++i) {
      if (fa.y[i][j] < -eps || fa.y[i][j] > 1.0 + 1e-9) {
        throw std::invalid_argument("decompose: entry outside [0,1]");
      }
      col += fa.y[i][j];
    }
    if (col > 1.0 + 1e-9) {
      throw std::invalid_argument("decompose: item mass exceeds 1");
    }
  }

  ConvexDecomposition dec;
  std::vector<std::vector<double>> r = fa.y;
  double used = 0.0;
  while (used < 1.0 - eps) {
    Allocation a = Allocation::empty(n);
    double coeff = 1.0 - used;
    bool any = false;
    for (int j = 0; j < m; ++j) {
      int owner = -1;
      double best = eps;
      for (int i = 0; i < n; ++i) {
        if (r[i][j] > best) {
          best = r[i][j];
          owner = i;
        }
      }
      if (owner >= 0) {
        a.bundles[owner].push_back(j);
        coeff = std::min(coeff, best);
        any = true;
      }
    }
    if (!any) {
      dec.terms.emplace_back(1.0 - used, std::move(a));
      break;
    }
    for (int i = 0; i < n; ++i) {
      for (int j : a.bundles[i]) r[i][j] -= coeff;
    }
    dec.terms.emplace_back(coeff, std::move(a));
    used += coeff;
  }
  if (dec.terms.empty()) dec.terms.emplace_back(1.0, Allocation::empty(n));
  return dec;
}

Allocation swap_round(const ConvexDecomposition& dec, std::uint64_t seed) {
  if (dec.terms.empty()) {
    throw std::invalid_argument("swap_round: empty decomposition");
  }
  const int n = static_cast<int>(dec.terms.front().second.bundles.size());
  int m = 0;
  for (const auto& [c, a] : dec.terms) {
    for (const ItemList& b : a.bundles) {
      for (int j : b) m = std::max(m, j + 1);
    }
  }
  Rng rng(seed);
  auto owners = [&](const Allocation& a) { return a.owner_of(m); };

  double beta0 = dec.terms[0].first;
  std::vector<int> s0 = owners(dec.terms[0].second);
  for (std::size_t t = 1; t < dec.terms.size(); ++t) {
    const double beta1 = dec.terms[t].first;
    std::vector<int> s1 = owners(dec.terms[t].second);
    for (int j = 0; j < m; ++j) {
      if (s0[j] == s1[j]) continue;
      // Same matroid part when both assign item j; otherwise a lone
      // add/drop. Either way the winner's state is adopted.
      if (rng.bernoulli(beta0 / (beta0 + beta1))) {
        s1[j] = s0[j];
      } else {
        s0[j] = s1[j];
      }
    }
    beta0 += beta1;
  }
  Allocation out = Allocation::empty(n);
  for (int j = 0; j < m; ++j) {
    if (s0[j] >= 0) out.bundles[s0[j]].push_back(j);
  }
  return out;
}

namespace {

Valuation scale_valuation(Valuation v, double f) {
  for (double& x : v.values) x *= f;
  if (v.family == Family::kBudgetAdditive) v.cap *= f;
  for (auto& cv : v.copy_values) {
    for (double& x : cv) x *= f;
  }
  for (double& x : v.universe_weights) x *= f;
  for (auto& clause : v.clauses) {
    for (double& x : clause) x *= f;
  }
  v.big_m *= f;
  return v;
}

Allocation fill_everything(const Instance& inst) {
  Allocation a = Allocation::empty(inst.agents());
  greedy_fill(inst, all_items(inst.items()), a);
  return a;
}

// Best-effort heuristic oracle: a deterministic fractional point shaped by
// the targets, screened by the multilinear estimate, then swap-rounded.
std::optional<Allocation> rounded_oracle(const Instance& scaled,
                                         const std::vector<double>& targets,
                                         double slack,
                                         const GridSearchConfig& cfg,
                                         std::uint64_t salt) {
  const int n = scaled.agents();
  const int m = scaled.items();
  FractionalAssignment fa;
  fa.y.assign(n, std::vector<double>(m, 0.0));
  for (int j = 0; j < m; ++j) {
    double col = 0.0;
    std::vector<double> mass(n);
    for (int i = 0; i < n; ++i) {
      mass[i] = targets[i] * scaled.valuations[i].singleton(j);
      col += mass[i];
    }
    if (col <= 0.0) continue;
    for (int i = 0; i < n; ++i) fa.y[i][j] = mass[i] / col;
  }
  for (int i = 0; i < n; ++i) {
    const double est = multilinear_estimate(scaled.valuations[i], fa.y[i],
                                            cfg.sample_count,
                                            cfg.seed ^ (salt * 1000003u + i));
    if (est < slack * targets[i]) return std::nullopt;
  }
  const ConvexDecomposition dec = decompose(fa);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Allocation a = swap_round(dec, cfg.seed ^ (salt * 7919u + 31u * attempt));
    for (ItemList& b : a.bundles) std::sort(b.begin(), b.end());
    const std::vector<int> owner = a.owner_of(m);
    ItemList leftover;
    for (int j = 0; j < m; ++j) {
      if (owner[j] < 0) leftover.push_back(j);
    }
    greedy_fill(scaled, leftover, a);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      ok = scaled.valuations[i].value(a.bundles[i]) >= slack * targets[i];
    }
    if (ok) return a;
  }
  return std::nullopt;
}

}  // namespace

Allocation const_agents_solve(const Instance& inst,
                              const GridSearchConfig& cfg) {
  const int n = inst.agents();
  const int m = inst.items();
  if (!(cfg.delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  if (n > 8) {
    throw std::invalid_argument(
        "const_agents_solve: grid enumeration is exponential in the agent "
        "count; n > 8 refused");
  }
  if (m == 0) return Allocation::empty(n);

  std::vector<double> totals(n);
  for (int i = 0; i < n; ++i) {
    totals[i] = inst.valuations[i].value(all_items(m));
    if (totals[i] <= 0.0) return fill_everything(inst);  // NSW is 0 regardless
  }

  const double base = 1.0 + cfg.delta;
  const double lbase = std::log(base);
  const double top = *std::max_element(totals.begin(), totals.end());
  const int K = static_cast<int>(std::ceil(std::log(top) / lbase - 1e-9));
  const double max_value = std::pow(base, K);

  Instance scaled = inst;
  for (int i = 0; i < n; ++i) {
    scaled.valuations[i] =
        scale_valuation(inst.valuations[i], max_value / totals[i]);
  }

  double min_single = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const double s = scaled.valuations[i].singleton(j);
      if (s > 0.0) min_single = std::min(min_single, s);
    }
  }
  if (!std::isfinite(min_single)) return fill_everything(inst);
  const int k_min =
      static_cast<int>(std::floor(std::log(min_single) / lbase + 1e-9)) - 1;

  const int s_lo = n * k_min;
  const int s_hi = n * K;
  const double beta =
      cfg.beta > 0.0 ? cfg.beta : cfg.delta * std::pow(base, s_lo);
  const double slack = 1.0 - 1.0 / std::exp(1.0);
  const long long iter_cap = 64 * static_cast<long long>(std::ceil(
                                      s_hi - std::log(beta) / lbase) +
                                  1);

  // Scan target vectors (V_i) = (base^{k_i}) with sum of exponents s, each
  // k_i in [k_min, K], lexicographically; first feasible vector wins.
  std::uint64_t oracle_calls = 0;
  std::optional<Allocation> witness;
  auto probe = [&](int s) {
    std::vector<int> ks(n);
    std::vector<double> targets(n);
    std::function<bool(int, int)> scan = [&](int pos, int rem) {
      if (pos == n - 1) {
        if (rem < k_min || rem > K) return false;
        ks[pos] = rem;
        for (int i = 0; i < n; ++i) targets[i] = std::pow(base, ks[i]);
        ++oracle_calls;
        std::optional<Allocation> x =
            cfg.oracle == GridSearchConfig::Oracle::kExact
                ? feasible(scaled, targets, slack)
                : rounded_oracle(scaled, targets, slack, cfg, oracle_calls);
        if (x) witness = std::move(x);
        return x.has_value();
      }
      const int lo = std::max(k_min, rem - (n - 1 - pos) * K);
      const int hi = std::min(K, rem - (n - 1 - pos) * k_min);
      for (int k = lo; k <= hi; ++k) {
        ks[pos] = k;
        if (scan(pos + 1, rem - k)) return true;
      }
      return false;
    };
    return scan(0, s);
  };

  int s_opt = s_hi;
  int s_cap = s_hi;
  long long iters = 0;
  while (s_opt <= s_cap && iters++ < iter_cap) {
    const bool flag = probe(s_opt);
    double next;
    if (flag) {
      next = std::pow(base, s_opt) +
             (std::pow(base, s_cap) + beta - std::pow(base, s_opt)) / 2.0;
    } else {
      s_cap = s_opt;
      next = std::pow(base, s_opt) / 2.0;
    }
    s_opt = static_cast<int>(std::ceil(std::log(next) / lbase - 1e-9));
  }
  if (!witness) return fill_everything(inst);
  for (ItemList& b : witness->bundles) std::sort(b.begin(), b.end());
  return *witness;
}

}  // namespace nsw
