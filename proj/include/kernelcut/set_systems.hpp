#pragma once

// Weighted d-Hitting Set(k) and Weighted d-Set Packing(k): sunflower-based
// reduction of the set family followed by weight compression.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kernelcut/errors.hpp"
#include "kernelcut/frank_tardos.hpp"
#include "kernelcut/numbers.hpp"
#include "kernelcut/report.hpp"

namespace kernelcut {

using ElementId = std::int64_t;
/// Sorted, duplicate-free.
using ElementSet = std::vector<ElementId>;

enum class SetSystemVariant { kHittingSet, kSetPacking };

struct SetSystemInstance {
  SetSystemVariant variant = SetSystemVariant::kHittingSet;
  std::size_t d = 1;
  std::uint64_t k = 0;
  Rational W = 0;
  std::vector<ElementId> universe;
  std::vector<ElementSet> family;
  /// Parallel to `universe` for hitting set, to `family` for set packing.
  RationalVector weights;

  bool operator==(const SetSystemInstance&) const = default;
};

struct Sunflower {
  /// Positions of the petals in the family that was searched.
  std::vector<std::size_t> petal_indices;
  std::vector<ElementSet> petals;
  ElementSet core;
};

inline std::string format_set(const ElementSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

inline void validate(const SetSystemInstance& inst) {
  if (inst.d == 0) throw ValidationError("set system: d must be at least 1");
  std::set<ElementId> universe(inst.universe.begin(), inst.universe.end());
  if (universe.size() != inst.universe.size())
    throw ValidationError("set system: universe lists an element twice");
  std::set<ElementSet> seen;
  for (const auto& s : inst.family) {
    if (s.size() != inst.d)
      throw ValidationError("set system: set " + format_set(s) + " does not have d elements");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("set system: set " + format_set(s) + " is not a sorted set");
    for (auto e : s)
      if (!universe.count(e))
        throw ValidationError("set system: element " + std::to_string(e) + " not in universe");
    if (!seen.insert(s).second)
      throw ValidationError("set system: duplicate set " + format_set(s));
  }
  const bool hitting = inst.variant == SetSystemVariant::kHittingSet;
  const std::size_t expected = hitting ? inst.universe.size() : inst.family.size();
  if (inst.weights.size() != expected)
    throw ValidationError("set system: wrong number of weights");
  if (hitting)
    for (const auto& w : inst.weights)
      if (w < 0) throw ValidationError("hitting set: element weights must be non-negative");
}

namespace detail {

inline std::optional<Sunflower> sunflower_search(const std::vector<ElementSet>& sets,
                                                 const std::vector<std::size_t>& ids,
                                                 std::size_t d, std::uint64_t petals) {
  // Greedy maximal pairwise-disjoint subfamily, in input order.
  std::set<ElementId> used;
  std::vector<std::size_t> disjoint;
  for (std::size_t i = 0; i < sets.size() && disjoint.size() < petals; ++i) {
    bool clash = false;
    for (auto e : sets[i]) clash = clash || used.count(e);
    if (clash) continue;
    disjoint.push_back(i);
    used.insert(sets[i].begin(), sets[i].end());
  }
  if (disjoint.size() >= petals) {
    Sunflower out;
    for (auto i : disjoint) {
      out.petal_indices.push_back(ids[i]);
      out.petals.push_back(sets[i]);
    }
    return out;
  }
  if (d <= 1) return std::nullopt;

  // Every set meets the disjoint family, so some element is frequent.
  std::map<ElementId, std::size_t> frequency;
  for (const auto& s : sets)
    for (auto e : s) ++frequency[e];
  ElementId pivot = frequency.begin()->first;
  std::size_t best = 0;
  for (const auto& [e, count] : frequency)
    if (count > best) {
      best = count;
      pivot = e;
    }

  std::vector<ElementSet> reduced;
  std::vector<std::size_t> reduced_ids;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!std::binary_search(sets[i].begin(), sets[i].end(), pivot)) continue;
    ElementSet rest;
    for (auto e : sets[i])
      if (e != pivot) rest.push_back(e);
    reduced.push_back(std::move(rest));
    reduced_ids.push_back(ids[i]);
  }
  auto inner = sunflower_search(reduced, reduced_ids, d - 1, petals);
  if (!inner) return std::nullopt;
  for (auto& petal : inner->petals) petal.insert(std::lower_bound(petal.begin(), petal.end(), pivot), pivot);
  inner->core.insert(std::lower_bound(inner->core.begin(), inner->core.end(), pivot), pivot);
  return inner;
}

}  // namespace detail

/// Looks for a (k+1)-sunflower in a family of distinct d-sets. Always succeeds
/// when |F| > d! k^d; may return nullopt otherwise.
inline std::optional<Sunflower> find_sunflower(std::span<const ElementSet> family, std::size_t d,
                                               std::uint64_t k) {
  for (const auto& s : family)
    if (s.size() != d) throw ValidationError("find_sunflower: set " + format_set(s) + " has wrong size");
  std::vector<ElementSet> sets(family.begin(), family.end());
  std::vector<std::size_t> ids(sets.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return detail::sunflower_search(sets, ids, d, k + 1);
}

/// True when all pairwise intersections of distinct petals equal the core.
inline bool is_sunflower(const Sunflower& s) {
  for (std::size_t i = 0; i < s.petals.size(); ++i)
    for (std::size_t j = i + 1; j < s.petals.size(); ++j) {
      ElementSet meet;
      std::set_intersection(s.petals[i].begin(), s.petals[i].end(), s.petals[j].begin(),
                            s.petals[j].end(), std::back_inserter(meet));
      if (meet != s.core) return false;
    }
  return true;
}

/// d! * base^d.
inline Integer sunflower_family_bound(std::size_t d, std::uint64_t base) {
  Integer f = 1;
  for (std::size_t i = 2; i <= d; ++i) f *= static_cast<unsigned long>(i);
  return f * power(Integer(static_cast<unsigned long>(base)), d);
}

inline std::size_t encoding_bits(const SetSystemInstance& inst) {
  std::size_t total = bits_of(inst.weights) + bit_length(inst.W);
  for (auto e : inst.universe) total += bit_length(Integer(static_cast<long>(e)));
  for (const auto& s : inst.family)
    for (auto e : s) total += bit_length(Integer(static_cast<long>(e)));
  return total;
}

namespace detail {

// Restricts the universe to elements that occur in the family.
inline std::vector<ElementId> occurring_elements(const std::vector<ElementId>& universe,
                                                 const std::vector<ElementSet>& family) {
  std::set<ElementId> present;
  for (const auto& s : family) present.insert(s.begin(), s.end());
  std::vector<ElementId> out;
  for (auto e : universe)
    if (present.count(e)) out.push_back(e);
  return out;
}

inline void compress_weights(SetSystemInstance& inst, KernelReport& report) {
  RationalVector joint = inst.weights;
  joint.push_back(inst.W);
  const Integer N(static_cast<unsigned long>(inst.k + 2));
  IntegerVector compressed = reduce_vector({joint, N});
  report.r = joint.size();
  report.N = N;
  report.bound_ok = report.bound_ok && within_compression_bound(compressed, report.r, N);
  inst.W = compressed.back();
  compressed.pop_back();
  inst.weights = to_rational(compressed);
}

inline std::vector<ElementSet> sets_at(const std::vector<ElementSet>& family,
                                       const std::vector<std::size_t>& alive) {
  std::vector<ElementSet> out;
  out.reserve(alive.size());
  for (auto i : alive) out.push_back(family[i]);
  return out;
}

}  // namespace detail

/// Family reduced to at most d!(k+1)^d sets by deleting a petal of a
/// (k+2)-sunflower, universe restricted to the remaining elements, weights
/// compressed with N = k + 2.
/// Every sunflower used is appended to `flowers` when given.
inline Kernel<SetSystemInstance> kernelize_hitting_set(const SetSystemInstance& inst,
                                                       std::vector<Sunflower>* flowers = nullptr) {
  validate(inst);
  if (inst.variant != SetSystemVariant::kHittingSet)
    throw ValidationError("kernelize_hitting_set: instance is not a hitting set instance");
  Kernel<SetSystemInstance> out;
  KernelReport& report = out.report;
  report.problem = "hitting-set";
  report.original_bits = encoding_bits(inst);

  const Integer bound = sunflower_family_bound(inst.d, inst.k + 1);
  std::vector<std::size_t> alive(inst.family.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  while (Integer(static_cast<unsigned long>(alive.size())) > bound) {
    auto flower = find_sunflower(detail::sets_at(inst.family, alive), inst.d, inst.k + 1);
    if (!flower) throw std::logic_error("kernelize_hitting_set: sunflower lemma violated");
    if (flowers) flowers->push_back(*flower);
    std::size_t victim = *std::max_element(flower->petal_indices.begin(), flower->petal_indices.end());
    ++report.rule_firings;
    report.note("delete set " + format_set(inst.family[alive[victim]]) + " (sunflower core " +
                format_set(flower->core) + ")");
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(victim));
  }

  SetSystemInstance& kernel = out.instance;
  kernel.variant = inst.variant;
  kernel.d = inst.d;
  kernel.k = inst.k;
  kernel.W = inst.W;
  kernel.family = detail::sets_at(inst.family, alive);
  kernel.universe = detail::occurring_elements(inst.universe, kernel.family);
  std::map<ElementId, Rational> weight_of;
  for (std::size_t i = 0; i < inst.universe.size(); ++i) weight_of[inst.universe[i]] = inst.weights[i];
  const std::set<ElementId> kept(kernel.universe.begin(), kernel.universe.end());
  for (auto e : inst.universe)
    if (!kept.count(e)) report.note("drop element " + std::to_string(e));
  for (auto e : kernel.universe) kernel.weights.push_back(weight_of[e]);

  detail::compress_weights(kernel, report);
  report.bound_ok = report.bound_ok && Integer(static_cast<unsigned long>(kernel.family.size())) <= bound;
  report.kernel_bits = encoding_bits(kernel);
  report.extra["family_bound"] = bound.get_str();
  return out;
}

/// Family reduced to at most d!(dk)^d sets by deleting the lightest petal of a
/// (dk+1)-sunflower; set weights compressed with N = k + 2.
inline Kernel<SetSystemInstance> kernelize_set_packing(const SetSystemInstance& inst,
                                                       std::vector<Sunflower>* flowers = nullptr) {
  validate(inst);
  if (inst.variant != SetSystemVariant::kSetPacking)
    throw ValidationError("kernelize_set_packing: instance is not a set packing instance");
  Kernel<SetSystemInstance> out;
  KernelReport& report = out.report;
  report.problem = "set-packing";
  report.original_bits = encoding_bits(inst);

  const std::uint64_t dk = inst.d * inst.k;
  const Integer bound = sunflower_family_bound(inst.d, dk);
  std::vector<std::size_t> alive(inst.family.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  while (Integer(static_cast<unsigned long>(alive.size())) > bound) {
    auto flower = find_sunflower(detail::sets_at(inst.family, alive), inst.d, dk);
    if (!flower) throw std::logic_error("kernelize_set_packing: sunflower lemma violated");
    if (flowers) flowers->push_back(*flower);
    // Lightest petal; among equal weights the one latest in the family.
    std::size_t victim = flower->petal_indices.front();
    for (auto p : flower->petal_indices) {
      const Rational& wp = inst.weights[alive[p]];
      const Rational& wv = inst.weights[alive[victim]];
      if (wp < wv || (wp == wv && p > victim)) victim = p;
    }
    ++report.rule_firings;
    report.note("delete set " + format_set(inst.family[alive[victim]]) + " of weight " +
                to_string(inst.weights[alive[victim]]) + " (sunflower core " +
                format_set(flower->core) + ")");
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(victim));
  }

  SetSystemInstance& kernel = out.instance;
  kernel.variant = inst.variant;
  kernel.d = inst.d;
  kernel.k = inst.k;
  kernel.W = inst.W;
  kernel.family = detail::sets_at(inst.family, alive);
  kernel.universe = detail::occurring_elements(inst.universe, kernel.family);
  for (auto i : alive) kernel.weights.push_back(inst.weights[i]);

  detail::compress_weights(kernel, report);
  report.bound_ok = report.bound_ok && Integer(static_cast<unsigned long>(kernel.family.size())) <= bound;
  report.kernel_bits = encoding_bits(kernel);
  report.extra["family_bound"] = bound.get_str();
  return out;
}

}  // namespace kernelcut
