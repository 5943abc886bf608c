#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsw/exact.hpp"
#include "nsw/fairness.hpp"
#include "nsw/generators.hpp"
#include "nsw/smatch.hpp"

using namespace nsw;

namespace {

Instance tiny(std::vector<std::vector<double>> values) {
  Instance inst;
  inst.item_count = static_cast<int>(values[0].size());
  inst.weights.assign(values.size(), 1.0);
  for (auto& row : values) inst.valuations.push_back(Valuation::additive(row));
  return inst;
}

}  // namespace

TEST_CASE("envy-free allocations are ef1") {
  Instance inst = tiny({{3.0, 1.0}, {1.0, 3.0}});
  Allocation a;
  a.bundles = {{0}, {1}};
  CHECK(is_ef1(inst, a).passed);
  CHECK(is_strong_ef1(inst, a).passed);
}

TEST_CASE("one removable item saves ef1") {
  // Agent 1 envies {0, 1} (worth 6 to it) but dropping item 0 fixes it.
  Instance inst = tiny({{3.0, 3.0, 1.0}, {4.0, 2.0, 2.0}});
  Allocation a;
  a.bundles = {{0, 1}, {2}};
  Ef1Result res = is_ef1(inst, a);
  CHECK(res.passed);
}

TEST_CASE("ef1 fails with a witness when no single removal helps") {
  Instance inst = tiny({{1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}});
  Allocation a;
  a.bundles = {{0, 1, 2}, {}};
  Ef1Result res = is_ef1(inst, a);
  CHECK_FALSE(res.passed);
  REQUIRE_FALSE(res.witnesses.empty());
  CHECK(res.witnesses[0].envier == 1);
  CHECK(res.witnesses[0].envied == 0);
}

TEST_CASE("strong ef1 needs a common removable item") {
  // Both agents 1 and 2 envy bundle {0, 1}. Agent 1's envy dies only
  // without item 0, agent 2's only without item 1: ef1 holds per pair but
  // no single item fixes the bundle for everyone.
  Instance inst = tiny({{1.0, 1.0, 9.0, 9.0},
                        {9.0, 1.0, 4.0, 0.0},
                        {1.0, 9.0, 0.0, 4.0}});
  Allocation a;
  a.bundles = {{0, 1}, {2}, {3}};
  CHECK(is_ef1(inst, a).passed);
  Ef1Result strong = is_strong_ef1(inst, a);
  CHECK_FALSE(strong.passed);
}

TEST_CASE("ef1 ignores entitlements") {
  Instance inst = tiny({{1.0, 1.0}, {1.0, 1.0}});
  inst.weights = {100.0, 1.0};
  Allocation a;
  a.bundles = {{0}, {1}};
  CHECK(is_ef1(inst, a).passed);
  a.bundles = {{0, 1}, {}};
  CHECK_FALSE(is_ef1(inst, a).passed);
}

TEST_CASE("fairness report with pareto check") {
  Instance inst = tiny({{3.0, 1.0}, {1.0, 2.0}});
  Allocation swapped;
  swapped.bundles = {{1}, {0}};
  FairnessReport rep = fairness_report(inst, swapped, true);
  CHECK(rep.ef1);
  REQUIRE(rep.po.has_value());
  CHECK_FALSE(*rep.po);

  rep = fairness_report(inst, swapped, false);
  CHECK_FALSE(rep.po.has_value());
}

TEST_CASE("symmetric nsw optima are ef1") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = gen_random_additive(3, 5, seed, 0.0, 10.0, true);
    OptResult res = exact_opt(inst);
    if (res.opt_nsw == 0.0) continue;
    CAPTURE(seed);
    CHECK(is_ef1(inst, res.best).passed);
  }
}

TEST_CASE("smatch outputs are strong ef1 on symmetric additive instances") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Instance inst = gen_random_additive(3, 7, seed, 0.5, 10.0, true);
    Allocation a = smatch(inst, SmatchVariant::kAdditive);
    CAPTURE(seed);
    CHECK(is_strong_ef1(inst, a).passed);
  }
}
