#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "kernelcut/oracles.hpp"
#include "kernelcut/random.hpp"
#include "kernelcut/set_systems.hpp"

using namespace kernelcut;

namespace {

// Subsets of [0, n) as bit masks with at most / exactly `size` members.
std::vector<unsigned> masks(std::size_t n, std::size_t size, bool exact) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    auto c = static_cast<std::size_t>(__builtin_popcount(m));
    if (exact ? c == size : c <= size) out.push_back(m);
  }
  return out;
}

bool hitting_yes(const SetSystemInstance& inst) {
  for (unsigned m : masks(inst.universe.size(), inst.k, false)) {
    Rational weight = 0;
    std::vector<ElementId> chosen;
    for (std::size_t i = 0; i < inst.universe.size(); ++i)
      if (m >> i & 1) {
        weight += inst.weights[i];
        chosen.push_back(inst.universe[i]);
      }
    if (weight > inst.W) continue;
    bool all = std::all_of(inst.family.begin(), inst.family.end(), [&](const ElementSet& s) {
      return std::any_of(s.begin(), s.end(),
                         [&](ElementId e) { return std::find(chosen.begin(), chosen.end(), e) != chosen.end(); });
    });
    if (all) return true;
  }
  return false;
}

// Sets chosen by index recursion: exactly k (or at most k) pairwise disjoint
// sets of total weight >= W.
bool packing_yes(const SetSystemInstance& inst, bool at_most = false) {
  std::vector<ElementId> used;
  std::function<bool(std::size_t, std::uint64_t, Rational)> rec = [&](std::size_t from, std::uint64_t left,
                                                                     Rational weight) {
    if ((left == 0 || at_most) && weight >= inst.W) return true;
    if (left == 0) return false;
    for (std::size_t i = from; i < inst.family.size(); ++i) {
      const ElementSet& s = inst.family[i];
      if (std::any_of(s.begin(), s.end(),
                      [&](ElementId e) { return std::find(used.begin(), used.end(), e) != used.end(); }))
        continue;
      used.insert(used.end(), s.begin(), s.end());
      bool yes = rec(i + 1, left - 1, weight + inst.weights[i]);
      used.resize(used.size() - s.size());
      if (yes) return true;
    }
    return false;
  };
  return rec(0, inst.k, 0);
}

SetSystemInstance singletons(SetSystemVariant v, std::vector<Rational> weights, std::uint64_t k, Rational W) {
  SetSystemInstance inst;
  inst.variant = v;
  inst.d = 1;
  inst.k = k;
  inst.W = W;
  for (std::size_t i = 1; i <= weights.size(); ++i) {
    inst.universe.push_back(static_cast<ElementId>(i));
    inst.family.push_back({static_cast<ElementId>(i)});
  }
  inst.weights = std::move(weights);
  return inst;
}

}  // namespace

TEST(Sunflower, CommonCore) {
  std::vector<ElementSet> f{{1, 2}, {1, 3}, {1, 4}};
  auto s = find_sunflower(f, 2, 2);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->petals.size(), 3u);
  EXPECT_EQ(s->core, (ElementSet{1}));
  EXPECT_TRUE(is_sunflower(*s));
}

TEST(Sunflower, DisjointSetsHaveEmptyCore) {
  std::vector<ElementSet> f{{1, 2}, {3, 4}, {5, 6}};
  auto s = find_sunflower(f, 2, 2);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->core.empty());
  EXPECT_EQ(s->petal_indices, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Sunflower, AtTheThresholdNoneIsAcceptable) {
  // |F| = 2! * 2^2 = 8 sets, all 2-subsets of {1,2,3,4} plus two more: the
  // search may or may not succeed, but any answer must be a sunflower.
  std::vector<ElementSet> f{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {2, 5}};
  ASSERT_EQ(Integer(static_cast<unsigned long>(f.size())), sunflower_family_bound(2, 2));
  auto s = find_sunflower(f, 2, 2);
  if (s) EXPECT_TRUE(is_sunflower(*s));
}

TEST(Sunflower, AlwaysFoundAboveThreshold) {
  Random rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng.below(3);
    const std::uint64_t k = 1 + rng.below(3);
    auto inst = random_set_system(rng, SetSystemVariant::kHittingSet, d, k, 12, 60, 5);
    auto s = find_sunflower(inst.family, d, k);
    if (Integer(static_cast<unsigned long>(inst.family.size())) > sunflower_family_bound(d, k)) {
      ASSERT_TRUE(s.has_value()) << "trial " << trial;
    }
    if (!s) continue;
    EXPECT_EQ(s->petals.size(), k + 1);
    EXPECT_TRUE(is_sunflower(*s));
    for (std::size_t i = 0; i < s->petals.size(); ++i) EXPECT_EQ(inst.family[s->petal_indices[i]], s->petals[i]);
  }
}

TEST(Sunflower, WrongSetSizeRejected) {
  std::vector<ElementSet> f{{1, 2}, {3}};
  EXPECT_THROW(find_sunflower(f, 2, 1), ValidationError);
}

TEST(HittingSetKernel, SmallFamilyUnchanged) {
  auto inst = singletons(SetSystemVariant::kHittingSet, {Rational(1, 3), Rational(2, 3)}, 1, Rational(1, 2));
  auto k = kernelize_hitting_set(inst);
  EXPECT_EQ(k.instance.family, inst.family);
  EXPECT_EQ(k.report.rule_firings, 0u);
  EXPECT_EQ(hitting_yes(inst), hitting_yes(k.instance));
}

TEST(HittingSetKernel, FourSingletonsOneHit) {
  auto inst = singletons(SetSystemVariant::kHittingSet, {1, 1, 1, 1}, 1, 1);
  std::vector<Sunflower> flowers;
  auto k = kernelize_hitting_set(inst, &flowers);
  // Bound 1! * 2^1 = 2 sets; two deletions, each the last petal.
  EXPECT_EQ(k.instance.family, (std::vector<ElementSet>{{1}, {2}}));
  EXPECT_EQ(k.instance.universe, (std::vector<ElementId>{1, 2}));
  EXPECT_EQ(k.report.rule_firings, 2u);
  EXPECT_EQ(flowers.size(), 2u);
  EXPECT_FALSE(hitting_yes(inst));
  EXPECT_FALSE(hitting_yes(k.instance));
}

TEST(HittingSetKernel, RandomEquivalence) {
  Random rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t d = 1 + rng.below(3);
    const std::uint64_t k = 1 + rng.below(2);
    auto inst = random_set_system(rng, SetSystemVariant::kHittingSet, d, k, 8, 30, 9);
    if (rng.coin()) inst.weights[0] = rng.rational(9, 4, false);
    auto out = kernelize_hitting_set(inst);
    EXPECT_LE(Integer(static_cast<unsigned long>(out.instance.family.size())), sunflower_family_bound(d, k + 1));
    EXPECT_EQ(hitting_yes(inst), hitting_yes(out.instance)) << "trial " << trial;
    EXPECT_TRUE(out.report.bound_ok);
    for (const auto& w : out.instance.weights) EXPECT_EQ(w.get_den(), 1);
  }
}

TEST(HittingSetKernel, Validation) {
  auto inst = singletons(SetSystemVariant::kHittingSet, {1, -1}, 1, 1);
  EXPECT_THROW(kernelize_hitting_set(inst), ValidationError);
  inst = singletons(SetSystemVariant::kHittingSet, {1, 1}, 1, 1);
  inst.family.push_back({1});
  EXPECT_THROW(kernelize_hitting_set(inst), ValidationError);
  inst = singletons(SetSystemVariant::kSetPacking, {1, 1}, 1, 1);
  EXPECT_THROW(kernelize_hitting_set(inst), ValidationError);
}

TEST(SetPackingKernel, SmallFamilyUnchanged) {
  auto inst = singletons(SetSystemVariant::kSetPacking, {5, 3}, 2, 7);
  auto k = kernelize_set_packing(inst);
  EXPECT_EQ(k.instance.family, inst.family);
  EXPECT_EQ(k.report.rule_firings, 0u);
  EXPECT_TRUE(packing_yes(inst));
  EXPECT_TRUE(packing_yes(k.instance));
}

TEST(SetPackingKernel, ThreeSingletons) {
  // d = k = 1: bound 1, so the lightest sets go and {1} of weight 5 stays.
  auto inst = singletons(SetSystemVariant::kSetPacking, {5, 3, 2}, 1, 4);
  auto k = kernelize_set_packing(inst);
  EXPECT_EQ(k.instance.family, (std::vector<ElementSet>{{1}}));
  EXPECT_EQ(k.report.rule_firings, 2u);
  EXPECT_TRUE(packing_yes(inst));
  EXPECT_TRUE(packing_yes(k.instance));
}

TEST(SetPackingKernel, LightestPetalDeleted) {
  // d = 1, k = 2: bound 1! * 2^1 = 2 sets, a 3-sunflower drops its lightest petal.
  auto inst = singletons(SetSystemVariant::kSetPacking, {5, 1, 3, 2}, 2, 8);
  auto k = kernelize_set_packing(inst);
  EXPECT_EQ(k.instance.family, (std::vector<ElementSet>{{1}, {3}}));
  EXPECT_TRUE(packing_yes(inst));
  EXPECT_TRUE(packing_yes(k.instance));
}

TEST(SetPackingKernel, PetalInOptimalSolution) {
  // Five petals around core {1}, all of weight 2, each in an optimal packing
  // together with one of the 36 unit sets; the rule must keep the answer.
  SetSystemInstance inst;
  inst.variant = SetSystemVariant::kSetPacking;
  inst.d = 2;
  inst.k = 2;
  for (ElementId e = 1; e <= 18; ++e) inst.universe.push_back(e);
  for (ElementId j = 2; j <= 6; ++j) {
    inst.family.push_back({1, j});
    inst.weights.push_back(2);
  }
  for (ElementId a = 7; a <= 12; ++a)
    for (ElementId b = 13; b <= 18; ++b) {
      inst.family.push_back({a, b});
      inst.weights.push_back(1);
    }
  inst.W = 3;
  ASSERT_GT(Integer(static_cast<unsigned long>(inst.family.size())), sunflower_family_bound(2, 4));
  ASSERT_TRUE(packing_yes(inst));
  auto out = kernelize_set_packing(inst);
  EXPECT_GT(out.report.rule_firings, 0u);
  EXPECT_LE(Integer(static_cast<unsigned long>(out.instance.family.size())), sunflower_family_bound(2, 4));
  EXPECT_TRUE(packing_yes(out.instance));
  inst.W = 4;
  EXPECT_FALSE(packing_yes(inst));
  EXPECT_FALSE(packing_yes(kernelize_set_packing(inst).instance));
}

TEST(SetPackingKernel, RandomEquivalence) {
  Random rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t d = 1 + rng.below(2);
    const std::uint64_t k = 1 + rng.below(2);
    auto inst = random_set_system(rng, SetSystemVariant::kSetPacking, d, k, 10, 40, 9);
    std::vector<Sunflower> flowers;
    auto out = kernelize_set_packing(inst, &flowers);
    for (const auto& f : flowers) EXPECT_TRUE(is_sunflower(f));
    EXPECT_LE(Integer(static_cast<unsigned long>(out.instance.family.size())), sunflower_family_bound(d, d * k));
    EXPECT_EQ(packing_yes(inst), packing_yes(out.instance)) << "trial " << trial;
    EXPECT_EQ(solve_set_packing_brute(inst).has_value(), packing_yes(inst));
  }
}

// The kernel targets the exactly-k question; at-most-k agreement is checked
// here but is not part of its contract.
TEST(SetPackingKernel, AtMostKExperimental) {
  Random rng(47);
  int agree = 0, total = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = random_set_system(rng, SetSystemVariant::kSetPacking, 2, 2, 10, 40, 9);
    auto out = kernelize_set_packing(inst);
    EXPECT_EQ(solve_set_packing_brute(inst, PackingMode::kAtMostK).has_value(), packing_yes(inst, true));
    agree += packing_yes(inst, true) == packing_yes(out.instance, true);
    ++total;
  }
  EXPECT_EQ(agree, total);
}

TEST(SetPackingKernel, Deterministic) {
  Random rng(53);
  auto inst = random_set_system(rng, SetSystemVariant::kSetPacking, 2, 2, 10, 40, 9);
  auto a = kernelize_set_packing(inst);
  auto b = kernelize_set_packing(inst);
  EXPECT_EQ(a.instance, b.instance);
  EXPECT_EQ(a.report.trace, b.report.trace);
}
