#include "nsw/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "nsw/rng.hpp"

namespace nsw {

namespace {

void stamp(Instance& inst, const std::string& family,
           std::map<std::string, double> params, std::uint64_t seed) {
  inst.meta.family = family;
  inst.meta.params = std::move(params);
  inst.meta.seed = seed;
}

std::vector<double> draw_weights(Rng& rng, int n, bool symmetric) {
  std::vector<double> w(n, 1.0);
  if (!symmetric) {
    for (double& x : w) x = rng.uniform(0.5, 2.0);
  }
  return w;
}

}  // namespace

Instance gen_example1(int m, double M, double eps) {
  if (m < 2 || M <= 0.0) throw std::invalid_argument("example1 needs m >= 2, M > 0");
  if (eps < 0.0) eps = 0.5 * M / m;
  Instance inst;
  inst.item_count = m + 1;
  inst.weights = {1.0, 1.0};
  std::vector<double> a(m + 1, 1.0), b(m + 1, 0.0);
  a[0] = M + eps;
  b[0] = M;
  b[m] = 1.0;
  inst.valuations = {Valuation::additive(a), Valuation::additive(b)};
  stamp(inst, "example1", {{"m", double(m)}, {"M", M}, {"eps", eps}}, 0);
  // The serious contenders: agent 1 takes item 0, or items 0 and m, or only
  // item m, with agent 0 hoarding the rest.
  const double best = std::max(
      {double(m) * M, double(m - 1) * (M + 1.0), (M + eps + m - 1) * 1.0});
  inst.meta.known_opt_nsw = std::sqrt(best);
  return inst;
}

Instance gen_subadditive_gap(int m, double M) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("m must be even and >= 2");
  if (M <= 0.0) throw std::invalid_argument("M must be > 0");
  Instance inst;
  inst.item_count = m;
  inst.weights = {1.0, 1.0};
  std::vector<char> odd(m, 0), even(m, 0);
  for (int j = 0; j < m; ++j) (j % 2 ? odd : even)[j] = 1;
  inst.valuations = {Valuation::subadditive_halves(M, odd),
                     Valuation::subadditive_halves(M, even)};
  stamp(inst, "subadditive_gap", {{"m", double(m)}, {"M", M}}, 0);
  inst.meta.known_opt_nsw = m * M / 2.0;
  return inst;
}

Instance gen_xos_gap(int k, double M, double eps) {
  if (k <= 3) throw std::invalid_argument("xos_gap needs k > 3");
  if (M <= 0.0) throw std::invalid_argument("M must be > 0");
  if (eps < 0.0) eps = 1e-3 * M;
  const int m = 2 * k;
  Instance inst;
  inst.item_count = m;
  inst.weights = {1.0, 1.0};
  std::vector<double> a1(m, 0.0), a2(m, 0.0), b1(m, 0.0), b2(m, 0.0);
  for (int j = 0; j < k; ++j) a1[j] = M;
  for (int j = k; j < m; ++j) a2[j] = j <= k + 2 ? M + eps : eps;
  for (int j = k; j < m; ++j) b1[j] = M;
  for (int j = 0; j < k; ++j) b2[j] = j <= 2 ? M + eps : eps;
  inst.valuations = {Valuation::xos({a1, a2}), Valuation::xos({b1, b2})};
  stamp(inst, "xos_gap", {{"k", double(k)}, {"M", M}, {"eps", eps}}, 0);
  inst.meta.known_opt_nsw = k * M;
  return inst;
}

Instance gen_asym_tight(int n, int sets, double W, double M, double eps,
                        double eps_bar) {
  if (n < 2 || sets < 1 || W <= 0.0 || M <= 0.0) {
    throw std::invalid_argument("asym_tight needs n >= 2, sets >= 1, W, M > 0");
  }
  if (eps < 0.0) eps = 1e-3 * M;
  if (eps_bar < 0.0) eps_bar = eps / 2.0;
  if (!(eps > eps_bar && eps_bar > 0.0)) {
    throw std::invalid_argument("asym_tight needs eps > eps_bar > 0");
  }
  const int m = sets * n * n;
  Instance inst;
  inst.item_count = m;
  inst.weights.assign(n, 1.0);
  inst.weights[0] = W;
  for (int i = 0; i < n; ++i) {
    std::vector<double> v(m, 0.0);
    for (int s = 0; s < sets; ++s) {
      for (int pos = 0; pos < n * n; ++pos) {
        const int j = s * n * n + pos;
        if (i == 0) {
          if (pos < n) v[j] = M;
        } else {
          // Positions [i*n, (i+1)*n) form agent i's designated block.
          if (pos < n) {
            v[j] = M + eps;
          } else if (pos >= i * n && pos < (i + 1) * n) {
            v[j] = M + eps_bar;
          }
        }
      }
    }
    inst.valuations.push_back(Valuation::additive(std::move(v)));
  }
  stamp(inst, "asym_tight",
        {{"n", double(n)},
         {"sets", double(sets)},
         {"W", W},
         {"M", M},
         {"eps", eps},
         {"eps_bar", eps_bar}},
        0);
  // Block allocation: agent 0 gets sets*n items at M, agent i its block at
  // M+eps_bar.
  const double total = W + (n - 1);
  const double log_opt = (W * std::log(double(sets) * n * M) +
                          (n - 1) * std::log(double(sets) * n * (M + eps_bar))) /
                         total;
  inst.meta.known_opt_nsw = std::exp(log_opt);
  return inst;
}

Instance gen_po_gap(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  Instance inst;
  inst.item_count = 4;
  inst.weights = {1.0, 1.0};
  inst.valuations = {Valuation::additive({2.0 + eps, 2.0, eps, eps}),
                     Valuation::additive({1.0, 1.0, 1.0, 1.0})};
  stamp(inst, "po_gap", {{"eps", eps}}, 0);
  return inst;
}

Instance gen_random_additive(int n, int m, std::uint64_t seed, double lo,
                             double hi, bool symmetric) {
  Rng rng(seed);
  Instance inst;
  inst.item_count = m;
  inst.weights = draw_weights(rng, n, symmetric);
  for (int i = 0; i < n; ++i) {
    std::vector<double> v(m);
    for (double& x : v) x = rng.uniform(lo, hi);
    inst.valuations.push_back(Valuation::additive(std::move(v)));
  }
  stamp(inst, "random_additive",
        {{"n", double(n)}, {"m", double(m)}, {"lo", lo}, {"hi", hi},
         {"symmetric", symmetric ? 1.0 : 0.0}},
        seed);
  return inst;
}

Instance gen_random_restricted(int n, int m, std::uint64_t seed,
                               double interest_prob, double lo, double hi,
                               bool symmetric) {
  Rng rng(seed);
  Instance inst;
  inst.item_count = m;
  inst.weights = draw_weights(rng, n, symmetric);
  std::vector<double> global(m);
  for (double& x : global) x = rng.uniform(lo, hi);
  for (int i = 0; i < n; ++i) {
    std::vector<char> interest(m, 0);
    for (int j = 0; j < m; ++j) interest[j] = rng.bernoulli(interest_prob);
    inst.valuations.push_back(
        Valuation::restricted_additive(global, std::move(interest)));
  }
  stamp(inst, "random_restricted",
        {{"n", double(n)}, {"m", double(m)}, {"p", interest_prob},
         {"lo", lo}, {"hi", hi}, {"symmetric", symmetric ? 1.0 : 0.0}},
        seed);
  return inst;
}

Instance gen_random_ba(int n, int m, std::uint64_t seed, double lo, double hi,
                       bool symmetric) {
  Rng rng(seed);
  Instance inst;
  inst.item_count = m;
  inst.weights = draw_weights(rng, n, symmetric);
  for (int i = 0; i < n; ++i) {
    std::vector<double> v(m);
    double sum = 0.0;
    for (double& x : v) {
      x = rng.uniform(lo, hi);
      sum += x;
    }
    const double cap = rng.uniform(0.3, 0.8) * sum;
    inst.valuations.push_back(Valuation::budget_additive(std::move(v), cap));
  }
  stamp(inst, "random_ba",
        {{"n", double(n)}, {"m", double(m)}, {"lo", lo}, {"hi", hi},
         {"symmetric", symmetric ? 1.0 : 0.0}},
        seed);
  return inst;
}

Instance gen_random_splc(int n, int m, std::uint64_t seed, int max_copies,
                         double lo, double hi, bool symmetric) {
  if (max_copies < 1) throw std::invalid_argument("max_copies must be >= 1");
  Rng rng(seed);
  Instance inst;
  inst.weights = draw_weights(rng, n, symmetric);
  std::vector<int> copies(m);
  for (int& c : copies) c = 1 + rng.uniform_int(max_copies);
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<double>> cv(m);
    for (int j = 0; j < m; ++j) {
      cv[j].resize(copies[j]);
      for (double& x : cv[j]) x = rng.uniform(lo, hi);
      std::sort(cv[j].rbegin(), cv[j].rend());
    }
    inst.valuations.push_back(Valuation::splc(std::move(cv)));
  }
  inst.item_count = inst.valuations.front().item_count();
  stamp(inst, "random_splc",
        {{"n", double(n)}, {"m", double(m)}, {"max_copies", double(max_copies)},
         {"lo", lo}, {"hi", hi}, {"symmetric", symmetric ? 1.0 : 0.0}},
        seed);
  return inst;
}

Instance gen_random_coverage(int n, int m, std::uint64_t seed, int universe,
                             int covers_per_item, bool symmetric) {
  if (universe < 1 || covers_per_item < 1) {
    throw std::invalid_argument("coverage needs universe, covers_per_item >= 1");
  }
  Rng rng(seed);
  Instance inst;
  inst.item_count = m;
  inst.weights = draw_weights(rng, n, symmetric);
  for (int i = 0; i < n; ++i) {
    std::vector<double> uw(universe);
    for (double& x : uw) x = rng.uniform(0.0, 10.0);
    std::vector<std::vector<int>> covers(m);
    for (int j = 0; j < m; ++j) {
      std::set<int> pick;
      for (int t = 0; t < covers_per_item; ++t) {
        pick.insert(rng.uniform_int(universe));
      }
      covers[j].assign(pick.begin(), pick.end());
    }
    inst.valuations.push_back(
        Valuation::coverage(std::move(uw), std::move(covers)));
  }
  stamp(inst, "random_coverage",
        {{"n", double(n)}, {"m", double(m)}, {"universe", double(universe)},
         {"covers_per_item", double(covers_per_item)},
         {"symmetric", symmetric ? 1.0 : 0.0}},
        seed);
  return inst;
}

Instance generate(const std::string& family,
                  const std::map<std::string, double>& params,
                  std::uint64_t seed) {
  auto get = [&](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  const int n = static_cast<int>(get("n", 2));
  const int m = static_cast<int>(get("m", 6));
  const bool sym = get("symmetric", 0.0) != 0.0;
  if (family == "example1") {
    return gen_example1(m, get("M", 20.0), get("eps", -1.0));
  }
  if (family == "subadditive_gap") {
    return gen_subadditive_gap(m, get("M", 10.0));
  }
  if (family == "xos_gap") {
    return gen_xos_gap(static_cast<int>(get("k", 10)), get("M", 100.0),
                       get("eps", -1.0));
  }
  if (family == "asym_tight") {
    return gen_asym_tight(n, static_cast<int>(get("sets", 3)),
                          get("W", 100.0), get("M", 10.0), get("eps", -1.0),
                          get("eps_bar", -1.0));
  }
  if (family == "po_gap") return gen_po_gap(get("eps", 0.01));
  if (family == "random_additive") {
    return gen_random_additive(n, m, seed, get("lo", 0.0), get("hi", 10.0),
                               sym);
  }
  if (family == "random_restricted") {
    return gen_random_restricted(n, m, seed, get("p", 0.5), get("lo", 0.0),
                                 get("hi", 10.0), sym);
  }
  if (family == "random_ba") {
    return gen_random_ba(n, m, seed, get("lo", 0.0), get("hi", 10.0), sym);
  }
  if (family == "random_splc") {
    return gen_random_splc(n, m, seed, static_cast<int>(get("max_copies", 3)),
                           get("lo", 0.0), get("hi", 10.0), sym);
  }
  if (family == "random_coverage") {
    return gen_random_coverage(n, m, seed,
                               static_cast<int>(get("universe", 8)),
                               static_cast<int>(get("covers_per_item", 3)),
                               sym);
  }
  throw std::invalid_argument("unknown generator family: " + family);
}

}  // namespace nsw
