#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nsw/instance.hpp"

using namespace nsw;

namespace {

Instance two_agent_additive() {
  Instance inst;
  inst.weights = {1.0, 1.0};
  inst.valuations = {Valuation::additive({4.0, 1.0, 3.0}),
                     Valuation::additive({2.0, 5.0, 3.0})};
  inst.item_count = 3;
  return inst;
}

}  // namespace

TEST_CASE("allocation helpers") {
  Allocation a = Allocation::empty(2);
  CHECK(a.assigned_count() == 0);
  CHECK(a.disjoint());
  CHECK_FALSE(a.complete(1));
  a.bundles[0] = {0, 2};
  a.bundles[1] = {1};
  CHECK(a.assigned_count() == 3);
  CHECK(a.complete(3));
  auto owner = a.owner_of(4);
  CHECK(owner == std::vector<int>{0, 1, 0, -1});
  a.bundles[1] = {1, 2};
  CHECK_FALSE(a.disjoint());
}

TEST_CASE("nsw is the weighted geometric mean") {
  Instance inst = two_agent_additive();
  Allocation a = Allocation::empty(2);
  a.bundles = {{0, 2}, {1}};
  NswValue val = nsw_value(inst, a);
  CHECK(val.nsw == doctest::Approx(std::sqrt(7.0 * 5.0)));
  CHECK(val.log_nsw == doctest::Approx(0.5 * (std::log(7.0) + std::log(5.0))));

  // Asymmetric weights tilt the mean.
  inst.weights = {3.0, 1.0};
  val = nsw_value(inst, a);
  CHECK(val.nsw ==
        doctest::Approx(std::pow(std::pow(7.0, 3.0) * 5.0, 1.0 / 4.0)));
}

TEST_CASE("nsw of a zero-value bundle is zero") {
  Instance inst = two_agent_additive();
  inst.valuations[1] = Valuation::additive({2.0, 0.0, 3.0});
  Allocation a = Allocation::empty(2);
  a.bundles = {{0, 2}, {1}};
  NswValue val = nsw_value(inst, a);
  CHECK(val.nsw == 0.0);
  CHECK(std::isinf(val.log_nsw));
  CHECK(val.log_nsw < 0);
}

TEST_CASE("nsw rejects partial or overlapping allocations") {
  Instance inst = two_agent_additive();
  Allocation partial = Allocation::empty(2);
  partial.bundles = {{0}, {1}};
  CHECK_THROWS_AS((void)nsw_value(inst, partial), std::invalid_argument);
  Allocation overlap = Allocation::empty(2);
  overlap.bundles = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS((void)nsw_value(inst, overlap), std::invalid_argument);
}

TEST_CASE("validate catches malformed instances") {
  Instance inst = two_agent_additive();
  CHECK_NOTHROW(validate_instance(inst));

  Instance bad = inst;
  bad.weights[0] = 0.0;
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

  bad = inst;
  bad.valuations[0].values.pop_back();
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

  bad = inst;
  bad.valuations[0].values[1] = -1.0;
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

  // SPLC requires all agents to share the family and copy structure.
  Instance splc;
  splc.weights = {1.0, 1.0};
  splc.valuations = {Valuation::splc({{4.0, 2.0}}),
                     Valuation::additive({1.0, 1.0})};
  splc.item_count = 2;
  CHECK_THROWS_AS(validate_instance(splc), std::invalid_argument);
  splc.valuations[1] = Valuation::splc({{3.0, 3.0}});
  CHECK_NOTHROW(validate_instance(splc));
  splc.valuations[1] = Valuation::splc({{3.0, 3.0, 1.0}});
  splc.item_count = 3;
  CHECK_THROWS_AS(validate_instance(splc), std::invalid_argument);
}

TEST_CASE("rank orders by value with index tie-break") {
  Instance inst = two_agent_additive();
  inst.valuations[0] = Valuation::additive({3.0, 5.0, 3.0});
  RankedItems r = rank_items(inst, 0, {0, 1, 2});
  CHECK(r.order == ItemList{1, 0, 2});
}

TEST_CASE("keep-aside value") {
  // m <= 2n: nothing kept aside.
  Instance small = two_agent_additive();
  CHECK(keepaside_value(small, 0) == 0.0);

  // n = 1, m = 5: keep the 3 cheapest items.
  Instance inst;
  inst.weights = {1.0};
  inst.valuations = {Valuation::additive({9.0, 1.0, 4.0, 7.0, 2.0})};
  inst.item_count = 5;
  CHECK(keepaside_value(inst, 0) == doctest::Approx(1.0 + 2.0 + 4.0));

  // Budget-additive caps the kept sum.
  inst.valuations = {Valuation::budget_additive({9.0, 1.0, 4.0, 7.0, 2.0}, 5.0)};
  CHECK(keepaside_value(inst, 0) == doctest::Approx(5.0));

  // SPLC keeps the cheapest virtual copies.
  Instance splc;
  splc.weights = {1.0};
  splc.valuations = {Valuation::splc({{6.0, 2.0}, {5.0, 3.0, 1.0}})};
  splc.item_count = 5;
  CHECK(keepaside_value(splc, 0) == doctest::Approx(1.0 + 2.0 + 3.0));
}

TEST_CASE("all_items enumerates the range") {
  CHECK(all_items(3) == ItemList{0, 1, 2});
  CHECK(all_items(0).empty());
}
