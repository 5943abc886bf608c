#include "nsw/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nsw/rng.hpp"

namespace nsw {

const char* family_name(Family f) {
  switch (f) {
    case Family::kAdditive: return "additive";
    case Family::kRestrictedAdditive: return "restricted_additive";
    case Family::kBudgetAdditive: return "budget_additive";
    case Family::kSplc: return "splc";
    case Family::kCoverage: return "coverage";
    case Family::kXos: return "xos";
    case Family::kSubadditiveHalves: return "subadditive_halves";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::kAdditive, Family::kRestrictedAdditive,
                   Family::kBudgetAdditive, Family::kSplc, Family::kCoverage,
                   Family::kXos, Family::kSubadditiveHalves}) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

int Valuation::item_count() const {
  switch (family) {
    case Family::kAdditive:
    case Family::kRestrictedAdditive:
    case Family::kBudgetAdditive:
      return static_cast<int>(values.size());
    case Family::kSplc:
      return static_cast<int>(item_of_virtual.size());
    case Family::kCoverage:
      return static_cast<int>(covers.size());
    case Family::kXos:
      return clauses.empty() ? 0 : static_cast<int>(clauses.front().size());
    case Family::kSubadditiveHalves:
      return static_cast<int>(own.size());
  }
  return 0;
}

namespace {

void check_bundle(const Valuation& v, const ItemList& bundle) {
  const int m = v.item_count();
  for (int j : bundle) {
    if (j < 0 || j >= m) throw std::out_of_range("item index out of range");
  }
}

}  // namespace

double Valuation::value(const ItemList& bundle) const {
  check_bundle(*this, bundle);
  switch (family) {
    case Family::kAdditive:
    case Family::kRestrictedAdditive: {
      double s = 0.0;
      for (int j : bundle) s += values[j];
      return s;
    }
    case Family::kBudgetAdditive: {
      double s = 0.0;
      for (int j : bundle) s += values[j];
      return std::min(s, cap);
    }
    case Family::kSplc: {
      // Count copies per original item; concavity makes the first l copy
      // values the value of holding l copies.
      std::vector<int> held(copy_values.size(), 0);
      for (int j : bundle) held[item_of_virtual[j]]++;
      double s = 0.0;
      for (std::size_t it = 0; it < copy_values.size(); ++it) {
        for (int k = 0; k < held[it]; ++k) s += copy_values[it][k];
      }
      return s;
    }
    case Family::kCoverage: {
      std::vector<char> covered(universe_weights.size(), 0);
      for (int j : bundle) {
        for (int e : covers[j]) covered[e] = 1;
      }
      double s = 0.0;
      for (std::size_t e = 0; e < covered.size(); ++e) {
        if (covered[e]) s += universe_weights[e];
      }
      return s;
    }
    case Family::kXos: {
      double best = 0.0;
      for (const auto& clause : clauses) {
        double s = 0.0;
        for (int j : bundle) s += clause[j];
        best = std::max(best, s);
      }
      return best;
    }
    case Family::kSubadditiveHalves: {
      if (bundle.empty()) return 0.0;
      int in_own = 0;
      for (int j : bundle) in_own += own[j] ? 1 : 0;
      return std::max(big_m, in_own * big_m);
    }
  }
  return 0.0;
}

double Valuation::marginal(int item, const ItemList& bundle) const {
  for (int j : bundle) {
    if (j == item) throw std::invalid_argument("item already in bundle");
  }
  ItemList with = bundle;
  with.push_back(item);
  return value(with) - value(bundle);
}

double Valuation::singleton(int item) const { return value({item}); }

bool Valuation::additive_like() const {
  return family == Family::kAdditive || family == Family::kRestrictedAdditive ||
         family == Family::kBudgetAdditive || family == Family::kSplc;
}

Valuation Valuation::additive(std::vector<double> values) {
  Valuation v;
  v.family = Family::kAdditive;
  v.values = std::move(values);
  return v;
}

Valuation Valuation::restricted_additive(const std::vector<double>& item_values,
                                         std::vector<char> interest) {
  Valuation v;
  v.family = Family::kRestrictedAdditive;
  v.interest = std::move(interest);
  v.values.resize(item_values.size());
  for (std::size_t j = 0; j < item_values.size(); ++j) {
    v.values[j] = v.interest[j] ? item_values[j] : 0.0;
  }
  return v;
}

Valuation Valuation::budget_additive(std::vector<double> values, double cap) {
  Valuation v;
  v.family = Family::kBudgetAdditive;
  v.values = std::move(values);
  v.cap = cap;
  return v;
}

Valuation Valuation::splc(std::vector<std::vector<double>> copy_values) {
  Valuation v;
  v.family = Family::kSplc;
  v.copy_values = std::move(copy_values);
  for (std::size_t it = 0; it < v.copy_values.size(); ++it) {
    for (std::size_t k = 0; k < v.copy_values[it].size(); ++k) {
      v.item_of_virtual.push_back(static_cast<int>(it));
    }
  }
  return v;
}

Valuation Valuation::coverage(std::vector<double> universe_weights,
                              std::vector<std::vector<int>> covers) {
  Valuation v;
  v.family = Family::kCoverage;
  v.universe_weights = std::move(universe_weights);
  v.covers = std::move(covers);
  return v;
}

Valuation Valuation::xos(std::vector<std::vector<double>> clauses) {
  Valuation v;
  v.family = Family::kXos;
  v.clauses = std::move(clauses);
  return v;
}

Valuation Valuation::subadditive_halves(double big_m, std::vector<char> own) {
  Valuation v;
  v.family = Family::kSubadditiveHalves;
  v.big_m = big_m;
  v.own = std::move(own);
  return v;
}

SubmodularityCheck check_submodular(const Valuation& val, int trials,
                                    std::uint64_t seed) {
  const int m = val.item_count();
  SubmodularityCheck result;
  if (m == 0) return result;
  Rng rng(seed);
  const double tol = 1e-9;
  for (int t = 0; t < trials; ++t) {
    int h = rng.uniform_int(m);
    ItemList s1, s2, both;
    for (int j = 0; j < m; ++j) {
      if (j == h) continue;
      bool in1 = rng.bernoulli(0.5);
      bool in2 = rng.bernoulli(0.5);
      if (in1) s1.push_back(j);
      if (in2) s2.push_back(j);
      if (in1 || in2) both.push_back(j);
    }
    double gain_on_superset = val.marginal(h, both);
    double gain_on_base = val.marginal(h, s1);
    if (gain_on_superset > gain_on_base + tol) {
      result.passed = false;
      result.witness = SubmodularityWitness{h, std::move(s1), std::move(s2),
                                            gain_on_superset, gain_on_base};
      return result;
    }
  }
  return result;
}

}  // namespace nsw
