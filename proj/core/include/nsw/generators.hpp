#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nsw/instance.hpp"

namespace nsw {

// Two agents, m+1 items. Agent 0 values item 0 at M+eps and every other
// item at 1; agent 1 values item 0 at M and only the last item otherwise.
// eps < 0 picks the default 0.5 * M / m.
Instance gen_example1(int m, double M, double eps = -1.0);

// Two agents, m items (m even), v_i(S) = max(M, |S ∩ own_i| * M). Agent 0
// owns the odd indices, agent 1 the even ones, so ascending-index
// tie-breaking walks every matching into the wrong half.
Instance gen_subadditive_gap(int m, double M);

// Two agents, 2k items, two additive clauses each (k > 3); eps < 0 picks
// 1e-3 * M.
Instance gen_xos_gap(int k, double M, double eps = -1.0);

// n agents, `sets` blocks of n^2 items. Agent 0 has weight W and values the
// first n positions of each block at M; agent i >= 1 has weight 1, values
// those positions at M+eps and its own n-position block at M+eps_bar.
// eps < 0 picks 1e-3 * M; eps_bar < 0 picks eps / 2.
Instance gen_asym_tight(int n, int sets, double W, double M,
                        double eps = -1.0, double eps_bar = -1.0);

// Two agents, four items, values (2+eps, 2, eps, eps) vs (1, 1, 1, 1).
Instance gen_po_gap(double eps);

Instance gen_random_additive(int n, int m, std::uint64_t seed,
                             double lo = 0.0, double hi = 10.0,
                             bool symmetric = false);

Instance gen_random_restricted(int n, int m, std::uint64_t seed,
                               double interest_prob = 0.5, double lo = 0.0,
                               double hi = 10.0, bool symmetric = false);

Instance gen_random_ba(int n, int m, std::uint64_t seed, double lo = 0.0,
                       double hi = 10.0, bool symmetric = false);

// `m` original items, 1..max_copies copies each (copy counts shared across
// agents); the instance's item space is the expanded virtual-copy space.
Instance gen_random_splc(int n, int m, std::uint64_t seed, int max_copies = 3,
                         double lo = 0.0, double hi = 10.0,
                         bool symmetric = false);

Instance gen_random_coverage(int n, int m, std::uint64_t seed,
                             int universe = 8, int covers_per_item = 3,
                             bool symmetric = false);

// Name-based dispatcher for the CLI; throws std::invalid_argument for an
// unknown family or bad parameters. Missing params take the defaults above.
Instance generate(const std::string& family,
                  const std::map<std::string, double>& params,
                  std::uint64_t seed);

}  // namespace nsw
