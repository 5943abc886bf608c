#include "nsw/matching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nsw {

namespace {

double mode_argument(const Instance& inst, int agent, int item, WeightMode mode,
                     const WeightState& state) {
  const Valuation& v = inst.valuations[agent];
  switch (mode) {
    case WeightMode::kSmatchFirst: {
      if (!state.keep_aside) {
        throw std::invalid_argument("kSmatchFirst needs keep_aside values");
      }
      return v.singleton(item) +
             (*state.keep_aside)[agent] / static_cast<double>(inst.agents());
    }
    case WeightMode::kSmatchLater: {
      if (!state.bundles) {
        throw std::invalid_argument("kSmatchLater needs current bundles");
      }
      return v.value(state.bundles->bundles[agent]) + v.singleton(item);
    }
    case WeightMode::kPhase1Singleton:
      return v.singleton(item);
    case WeightMode::kPhase2Cumulative:
    case WeightMode::kPhase3Rematch: {
      if (!state.bundles) {
        throw std::invalid_argument("cumulative mode needs current bundles");
      }
      ItemList with = state.bundles->bundles[agent];
      with.push_back(item);
      return v.value(with);
    }
  }
  throw std::invalid_argument("unknown weight mode");
}

}  // namespace

WeightMatrix build_weights(const Instance& inst, const ItemList& unallocated,
                           WeightMode mode, const WeightState& state) {
  WeightMatrix W;
  W.items = unallocated;
  std::sort(W.items.begin(), W.items.end());
  const int n = inst.agents();
  const int c = W.cols();
  W.w.assign(n, std::vector<double>(c, kSentinel));
  for (int i = 0; i < n; ++i) {
    for (int col = 0; col < c; ++col) {
      const double arg = mode_argument(inst, i, W.items[col], mode, state);
      if (arg > 0.0) W.w[i][col] = inst.weights[i] * std::log(arg);
    }
  }
  if (state.restricted_rule) {
    for (int col = 0; col < c; ++col) {
      bool contested = false;
      for (int i = 0; i < n; ++i) {
        if (inst.valuations[i].singleton(W.items[col]) > 0.0) {
          contested = true;
          break;
        }
      }
      if (!contested) continue;
      for (int i = 0; i < n; ++i) {
        if (inst.valuations[i].singleton(W.items[col]) <= 0.0) {
          W.w[i][col] = kSentinel;
        }
      }
    }
  }
  return W;
}

namespace {

// Min-cost assignment of every row to a distinct column (rows <= cols),
// augmenting-path Hungarian with potentials. O(rows^2 * cols).
struct Assignment {
  std::vector<int> row_to_col;
  std::vector<double> pot_row, pot_col;  // duals for reduced-cost queries
};

Assignment assignment_min(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  const int m = n ? static_cast<int>(a[0].size()) : 0;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  Assignment res;
  res.row_to_col.assign(n, -1);
  for (int j = 1; j <= m; ++j) {
    if (p[j]) res.row_to_col[p[j] - 1] = j - 1;
  }
  res.pot_row.assign(u.begin() + 1, u.end());
  res.pot_col.assign(v.begin() + 1, v.end());
  return res;
}

struct SolveResult {
  int cardinality = 0;
  double weight = 0.0;
  std::vector<int> row_to_col;  // -1 for unmatched / excluded rows
  Assignment raw;
  std::vector<int> active_rows;
};

// Solve max-cardinality-then-max-weight over the rows/cols not excluded.
// Benefit: finite edge -> w + big (cardinality dominates weight), per-row
// dummy columns -> 0 (unmatched), sentinel edge -> -big (never chosen).
SolveResult solve_subproblem(const WeightMatrix& W, double big,
                             const std::vector<char>& row_excluded,
                             const std::vector<char>& col_excluded) {
  const int R = W.rows();
  const int C = W.cols();
  SolveResult out;
  out.row_to_col.assign(R, -1);
  std::vector<int> ar, ac;
  for (int i = 0; i < R; ++i) {
    if (!row_excluded[i]) ar.push_back(i);
  }
  for (int c = 0; c < C; ++c) {
    if (!col_excluded[c]) ac.push_back(c);
  }
  out.active_rows = ar;
  const int nr = static_cast<int>(ar.size());
  const int nc = static_cast<int>(ac.size());
  if (nr == 0) return out;
  std::vector<std::vector<double>> cost(nr, std::vector<double>(nc + nr, 0.0));
  for (int i = 0; i < nr; ++i) {
    for (int c = 0; c < nc; ++c) {
      const double w = W.w[ar[i]][ac[c]];
      cost[i][c] = std::isfinite(w) ? -(w + big) : big;
    }
  }
  out.raw = assignment_min(cost);
  for (int i = 0; i < nr; ++i) {
    const int c = out.raw.row_to_col[i];
    if (c < nc && std::isfinite(W.w[ar[i]][ac[c]])) {
      out.row_to_col[ar[i]] = ac[c];
      ++out.cardinality;
    }
  }
  // Sum in ascending-agent order so the weight is reproducible bit-for-bit.
  for (int i = 0; i < R; ++i) {
    if (out.row_to_col[i] >= 0) out.weight += W.w[i][out.row_to_col[i]];
  }
  return out;
}

}  // namespace

Matching max_weight_matching(const WeightMatrix& W) {
  Matching result;
  const int R = W.rows();
  const int C = W.cols();
  if (R == 0 || C == 0) return result;

  double abs_sum = 0.0;
  for (int i = 0; i < R; ++i) {
    for (int c = 0; c < C; ++c) {
      if (std::isfinite(W.w[i][c])) abs_sum += std::fabs(W.w[i][c]);
    }
  }
  const double big = 4.0 * (1.0 + abs_sum);

  std::vector<char> row_done(R, 0), col_done(C, 0);
  const SolveResult base = solve_subproblem(W, big, row_done, col_done);
  const int target_card = base.cardinality;
  const double target_weight = base.weight;
  const double weight_eps = 1e-9 * (1.0 + std::fabs(target_weight));
  const double rc_eps = 1e-6 * (1.0 + big);

  // Lexicographic refinement: fix agents in order, preferring the smallest
  // item (matched beats unmatched) that still admits an optimal completion.
  int forced_card = 0;
  double forced_weight = 0.0;
  auto completes = [&](int agent, int col) {
    std::vector<char> re = row_done, ce = col_done;
    re[agent] = 1;
    double fw = forced_weight;
    int fc = forced_card;
    if (col >= 0) {
      ce[col] = 1;
      fw += W.w[agent][col];
      fc += 1;
    }
    const SolveResult sub = solve_subproblem(W, big, re, ce);
    return sub.cardinality + fc == target_card &&
           std::fabs(sub.weight + fw - target_weight) <= weight_eps;
  };

  for (int i = 0; i < R; ++i) {
    // Optimal-dual reduced costs prune columns that cannot sit in any
    // optimal matching; the completion test stays the arbiter.
    std::vector<char> pruned_out(C, 0);
    {
      int bi = -1;
      for (std::size_t k = 0; k < base.active_rows.size(); ++k) {
        if (base.active_rows[k] == i) bi = static_cast<int>(k);
      }
      if (bi >= 0) {
        for (int c = 0; c < C; ++c) {
          const double w = W.w[i][c];
          const double cost = std::isfinite(w) ? -(w + big) : big;
          const double rc = cost - base.raw.pot_row[bi] - base.raw.pot_col[c];
          if (rc > rc_eps) pruned_out[c] = 1;
        }
      }
    }
    int chosen = -2;
    for (int c = 0; c < C && chosen == -2; ++c) {
      if (col_done[c] || pruned_out[c] || !std::isfinite(W.w[i][c])) continue;
      if (completes(i, c)) chosen = c;
    }
    if (chosen == -2 && completes(i, -1)) chosen = -1;
    if (chosen == -2) {
      // Dual pruning was too aggressive (floating-point slack); rescan all.
      for (int c = 0; c < C && chosen == -2; ++c) {
        if (col_done[c] || !pruned_out[c] || !std::isfinite(W.w[i][c])) {
          continue;
        }
        if (completes(i, c)) chosen = c;
      }
    }
    if (chosen == -2) throw std::logic_error("matching refinement stuck");
    row_done[i] = 1;
    if (chosen >= 0) {
      col_done[chosen] = 1;
      forced_card += 1;
      forced_weight += W.w[i][chosen];
      result.pairs.emplace_back(i, W.items[chosen]);
      result.weight += W.w[i][chosen];
    }
  }
  return result;
}

}  // namespace nsw
