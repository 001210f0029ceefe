#pragma once

// Seeded instance generators. Draws use std::mt19937_64 and a rejection
// sampler of our own, so a seed gives the same instance on every platform
// (the standard distributions are implementation-defined).

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "kernelcut/few_sizes.hpp"
#include "kernelcut/numbers.hpp"
#include "kernelcut/numeric_kernels.hpp"
#include "kernelcut/oracles.hpp"
#include "kernelcut/polyprog.hpp"
#include "kernelcut/set_systems.hpp"

namespace kernelcut {

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin(std::uint64_t num = 1, std::uint64_t den = 2) { return below(den) < num; }

  /// p/q with |p| <= max_abs (p >= 0 unless signed) and 1 <= q <= max_den.
  Rational rational(std::int64_t max_abs, std::int64_t max_den, bool allow_negative = true) {
    Integer p(static_cast<long>(between(allow_negative ? -max_abs : 0, max_abs)));
    Integer q(static_cast<long>(between(1, max_den)));
    Rational x(p, q);
    x.canonicalize();
    return x;
  }

  Rational nonzero_rational(std::int64_t max_abs, std::int64_t max_den, bool allow_negative = true) {
    Rational x;
    do x = rational(max_abs, max_den, allow_negative);
    while (x == 0);
    return x;
  }

 private:
  std::mt19937_64 engine_;
};

inline RationalVector random_rational_vector(Random& rng, std::size_t r, std::int64_t max_abs,
                                             std::int64_t max_den) {
  RationalVector w;
  for (std::size_t i = 0; i < r; ++i) w.push_back(rng.rational(max_abs, max_den));
  return w;
}

inline KnapsackInstance random_knapsack(Random& rng, std::size_t n, std::int64_t max_abs,
                                        std::int64_t max_den) {
  KnapsackInstance inst;
  Rational total_w = 0, total_p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    inst.w.push_back(rng.rational(max_abs, max_den, false));
    inst.p.push_back(rng.rational(max_abs, max_den, false));
    total_w += inst.w.back();
    total_p += inst.p.back();
  }
  // Targets land inside the range of achievable sums so answers vary.
  inst.W = total_w * rng.rational(1, 4, false) / 2 + rng.rational(1, 7, false);
  inst.P = total_p * rng.rational(1, 4, false) / 2;
  return inst;
}

inline SubsetSumInstance random_subset_sum(Random& rng, std::size_t n, std::int64_t max_value) {
  SubsetSumInstance inst;
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    inst.a.push_back(Integer(static_cast<long>(rng.between(0, max_value))));
    if (rng.coin()) total += inst.a.back();
  }
  inst.b = rng.coin(3, 4) ? total : total + rng.between(0, 3);
  return inst;
}

/// Distinct d-sets over ids 1..universe_size; weights are natural numbers
/// (hitting set: per element, packing: per set).
inline SetSystemInstance random_set_system(Random& rng, SetSystemVariant variant, std::size_t d,
                                           std::uint64_t k, std::size_t universe_size,
                                           std::size_t family_size, std::int64_t max_weight) {
  SetSystemInstance inst;
  inst.variant = variant;
  inst.d = d;
  inst.k = k;
  for (std::size_t i = 1; i <= universe_size; ++i) inst.universe.push_back(static_cast<ElementId>(i));
  std::set<ElementSet> seen;
  // Bounded attempts: small universes may hold fewer than family_size d-sets.
  for (std::size_t attempt = 0; inst.family.size() < family_size && attempt < 50 * family_size; ++attempt) {
    std::set<ElementId> s;
    while (s.size() < d) s.insert(static_cast<ElementId>(rng.between(1, static_cast<std::int64_t>(universe_size))));
    ElementSet set(s.begin(), s.end());
    if (seen.insert(set).second) inst.family.push_back(set);
  }
  const std::size_t count = variant == SetSystemVariant::kHittingSet ? universe_size : inst.family.size();
  Rational total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    inst.weights.push_back(Integer(static_cast<long>(rng.between(1, max_weight))));
    total += inst.weights.back();
  }
  inst.W = floor_of(total * Rational(static_cast<long>(k + 1), static_cast<long>(std::max<std::size_t>(count, 1))) *
                    rng.rational(3, 4, false) / 2);
  return inst;
}

/// Edges present with probability 1/2; weights in [1, max_weight] with
/// denominators up to max_den.
inline MaxCutInstance random_max_cut(Random& rng, std::size_t vertices, std::int64_t max_weight,
                                     std::int64_t max_den) {
  MaxCutInstance inst;
  inst.vertices = vertices;
  Rational total = 0;
  for (std::size_t u = 0; u < vertices; ++u)
    for (std::size_t v = u + 1; v < vertices; ++v)
      if (rng.coin()) {
        Rational w = 1 + rng.rational(max_weight - 1, max_den, false);
        inst.edges.push_back({u, v, w});
        total += w;
      }
  inst.W = std::max<Rational>(1, total * rng.rational(4, 4, false) / 4 + rng.rational(1, max_den, false));
  return inst;
}

inline BinPackingInstance random_bin_packing(Random& rng, std::size_t n, std::int64_t max_b, std::uint64_t max_k) {
  BinPackingInstance inst;
  inst.b = Integer(static_cast<long>(rng.between(1, max_b)));
  inst.k = static_cast<std::uint64_t>(rng.between(1, static_cast<std::int64_t>(max_k)));
  // A random cap on item sizes keeps instances with small totals common.
  const std::int64_t top = rng.between(1, inst.b.get_si());
  for (std::size_t i = 0; i < n; ++i) inst.items.push_back(Integer(static_cast<long>(rng.between(1, top))));
  return inst;
}

inline GroupedKnapsack random_grouped_knapsack(Random& rng, std::size_t k, std::size_t max_items,
                                               std::int64_t max_abs, std::int64_t max_den) {
  GroupedKnapsack inst;
  std::set<Rational> weights;
  Rational total = 0;
  while (inst.groups.size() < k) {
    Rational w = rng.nonzero_rational(max_abs, max_den, false);
    if (!weights.insert(w).second) continue;
    WeightGroup g{w, {}};
    const std::size_t n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_items)));
    for (std::size_t j = 0; j < n; ++j) g.values.push_back(rng.rational(max_abs, max_den, false));
    std::sort(g.values.begin(), g.values.end(), std::greater<>());
    total += w * static_cast<unsigned long>(n);
    inst.groups.push_back(std::move(g));
  }
  inst.W = total * rng.rational(4, 4, false) / 4;
  return inst;
}

inline GroupedSubsetSum random_grouped_subset_sum(Random& rng, std::size_t k, std::int64_t max_mult,
                                                  std::int64_t max_size) {
  GroupedSubsetSum inst;
  std::set<Integer> sizes;
  Integer reachable = 0;
  while (inst.classes.size() < k) {
    Integer s(static_cast<long>(rng.between(1, max_size)));
    if (!sizes.insert(s).second) continue;
    Integer mu(static_cast<long>(rng.between(1, max_mult)));
    reachable += s * Integer(static_cast<long>(rng.between(0, mu.get_si())));
    inst.classes.push_back({s, mu});
  }
  inst.target = rng.coin(2, 3) ? reachable : reachable + rng.between(0, max_size);
  return inst;
}

/// Distinct monomials of total degree <= d with nonzero rational
/// coefficients, graded-lex ordered.
inline Polynomial random_polynomial(Random& rng, std::size_t n, std::uint64_t d, std::size_t r,
                                    std::int64_t max_abs, std::int64_t max_den) {
  std::vector<Exponents> all;
  Exponents e(n, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i == n) {
      all.push_back(e);
      return;
    }
    for (std::uint64_t t = 0; t <= left; ++t) {
      e[i] = static_cast<std::uint32_t>(t);
      rec(i + 1, left - t);
    }
    e[i] = 0;
  };
  rec(0, d);
  Polynomial f{n, d, {}};
  r = std::min(r, all.size());
  while (f.terms.size() < r) {
    std::size_t pick = static_cast<std::size_t>(rng.below(all.size()));
    f.terms.push_back({all[pick], rng.nonzero_rational(max_abs, max_den)});
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  normalize(f);
  return f;
}

inline IppInstance random_ipp(Random& rng, std::size_t n, std::uint64_t d, std::size_t r, std::size_t m,
                              std::int64_t u, std::int64_t max_abs, std::int64_t max_den) {
  IppInstance inst;
  inst.variables = n;
  inst.degree = d;
  inst.u = Integer(static_cast<long>(u));
  inst.objective = random_polynomial(rng, n, d, static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(r))),
                                     max_abs, max_den);
  inst.z = rng.rational(max_abs, max_den);
  for (std::size_t i = 0; i < m; ++i) {
    inst.constraints.push_back(random_polynomial(
        rng, n, d, static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(r))), max_abs, max_den));
    inst.bounds.push_back(rng.rational(max_abs, max_den));
  }
  return inst;
}

inline CnfFormula random_cnf(Random& rng, std::size_t n, std::size_t m) {
  CnfFormula phi{n, {}};
  for (std::size_t j = 0; j < m; ++j) {
    std::array<int, 3> c{};
    for (int& lit : c) {
      lit = static_cast<int>(rng.between(1, static_cast<std::int64_t>(n)));
      if (rng.coin()) lit = -lit;
    }
    phi.clauses.push_back(c);
  }
  return phi;
}

}  // namespace kernelcut
