#pragma once

// Exhaustive reference solvers for every problem in the library, and the
// Gurari 3-SAT to Subset Sum reduction. Nothing here calls kernel code.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kernelcut/errors.hpp"
#include "kernelcut/few_sizes.hpp"
#include "kernelcut/numbers.hpp"
#include "kernelcut/numeric_kernels.hpp"
#include "kernelcut/set_systems.hpp"

namespace kernelcut {

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 20;

/// KERNELCUT_ENUM_CAP if set to a positive integer, else 2^20.
inline std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("KERNELCUT_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumCap;
}

namespace detail {

inline void require_within_cap(const Integer& count, std::uint64_t cap, const char* who) {
  if (count > Integer(std::to_string(cap)))
    throw RefusedScale(std::string(who) + ": " + count.get_str() + " candidates exceed cap " +
                       std::to_string(cap));
}

inline Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Counts visited nodes of a backtracking search and refuses past the cap.
class NodeBudget {
 public:
  NodeBudget(std::uint64_t cap, const char* who) : cap_(cap), who_(who) {}
  void tick() {
    if (++used_ > cap_) throw RefusedScale(std::string(who_) + ": search exceeded " + std::to_string(cap_) + " nodes");
  }

 private:
  std::uint64_t cap_;
  const char* who_;
  std::uint64_t used_ = 0;
};

}  // namespace detail

// ---------------------------------------------------------------- 3-SAT

/// Literal +i is v_i, -i is its negation, 1 <= i <= variables.
struct CnfFormula {
  std::size_t variables = 0;
  std::vector<std::array<int, 3>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

inline void validate(const CnfFormula& phi) {
  for (const auto& c : phi.clauses)
    for (int lit : c)
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > phi.variables)
        throw ValidationError("cnf: literal " + std::to_string(lit) + " out of range");
}

inline bool satisfies(const CnfFormula& phi, const std::vector<bool>& assignment) {
  for (const auto& c : phi.clauses) {
    bool sat = false;
    for (int lit : c) sat = sat || (assignment[std::abs(lit) - 1] == (lit > 0));
    if (!sat) return false;
  }
  return true;
}

/// A satisfying assignment if one exists.
inline std::optional<std::vector<bool>> solve_sat_brute(const CnfFormula& phi,
                                                        std::uint64_t cap = enumeration_cap()) {
  validate(phi);
  detail::require_within_cap(pow2(phi.variables), cap, "solve_sat_brute");
  std::vector<bool> x(phi.variables, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.variables); ++mask) {
    for (std::size_t i = 0; i < phi.variables; ++i) x[i] = (mask >> i) & 1;
    if (satisfies(phi, x)) return x;
  }
  return std::nullopt;
}

struct GurariOutput {
  /// Columns v1, not v1, ..., vn, not vn, y1, y1', ..., ym, ym'.
  IntegerVector numbers;
  Integer target;
  /// digits[row][column]; rows are the n variable equations, then the m
  /// clause equations. Row 0 is the most significant decimal digit.
  std::vector<std::vector<int>> digits;
  std::vector<int> target_digits;

  SubsetSumInstance as_subset_sum() const { return {numbers, target}; }
};

/// Each equation of v_i + not v_i = 1 and c_j1 + c_j2 + c_j3 + y_j + y_j' = 3
/// becomes one decimal digit; no column sum exceeds 5, so no carries occur.
inline GurariOutput gurari_reduce(const CnfFormula& phi) {
  validate(phi);
  const std::size_t n = phi.variables, m = phi.clauses.size();
  const std::size_t rows = n + m, columns = 2 * n + 2 * m;
  GurariOutput out;
  out.digits.assign(rows, std::vector<int>(columns, 0));
  out.target_digits.assign(rows, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out.digits[i][2 * i] = 1;
    out.digits[i][2 * i + 1] = 1;
    out.target_digits[i] = 1;
  }
  for (std::size_t j = 0; j < m; ++j) {
    auto& row = out.digits[n + j];
    for (int lit : phi.clauses[j]) {
      std::size_t v = static_cast<std::size_t>(std::abs(lit)) - 1;
      row[2 * v + (lit > 0 ? 0 : 1)] += 1;
    }
    row[2 * n + 2 * j] = 1;
    row[2 * n + 2 * j + 1] = 1;
    out.target_digits[n + j] = 3;
  }
  out.numbers.assign(columns, 0);
  out.target = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    out.target = out.target * 10 + out.target_digits[r];
    for (std::size_t c = 0; c < columns; ++c) out.numbers[c] = out.numbers[c] * 10 + out.digits[r][c];
  }
  return out;
}

/// Largest digit-row sum over all numbers.
inline int max_column_sum(const GurariOutput& g) {
  int best = 0;
  for (const auto& row : g.digits) {
    int s = 0;
    for (int d : row) s += d;
    best = std::max(best, s);
  }
  return best;
}

// ---------------------------------------------------------------- Subset Sum

/// Chosen indices summing to b, if any. Gray-code order, one addition per step.
inline std::optional<std::vector<std::size_t>> solve_subset_sum_brute(
    const SubsetSumInstance& inst, std::uint64_t cap = enumeration_cap()) {
  const std::size_t n = inst.a.size();
  detail::require_within_cap(pow2(n), cap, "solve_subset_sum_brute");
  auto pick = [&](std::uint64_t mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) chosen.push_back(i);
    return chosen;
  };
  Integer sum = 0;
  std::uint64_t gray = 0;
  if (sum == inst.b) return pick(gray);
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(step));
    gray ^= std::uint64_t{1} << bit;
    if ((gray >> bit) & 1)
      sum += inst.a[bit];
    else
      sum -= inst.a[bit];
    if (sum == inst.b) return pick(gray);
  }
  return std::nullopt;
}

/// Reachable-sums table over 0..b; refuses when b exceeds the cap.
inline bool solve_subset_sum_dp(const SubsetSumInstance& inst, std::uint64_t cap = enumeration_cap()) {
  if (inst.b < 0) return false;
  detail::require_within_cap(inst.b, cap, "solve_subset_sum_dp");
  const std::size_t b = inst.b.get_ui();
  std::vector<char> reach(b + 1, 0);
  reach[0] = 1;
  for (const auto& a : inst.a) {
    if (a > inst.b) continue;
    const std::size_t v = a.get_ui();
    for (std::size_t s = b + 1; s-- > v;)
      if (reach[s - v]) reach[s] = 1;
  }
  return reach[b] != 0;
}

// ---------------------------------------------------------------- Knapsack

struct KnapsackChoice {
  std::vector<bool> x;
  Rational weight = 0;
  Rational profit = 0;
};

/// A binary x with w.x <= W and p.x >= P, if any.
inline std::optional<KnapsackChoice> solve_knapsack_brute(const KnapsackInstance& inst,
                                                          std::uint64_t cap = enumeration_cap()) {
  const std::size_t n = inst.w.size();
  if (inst.p.size() != n) throw ValidationError("knapsack: w and p lengths differ");
  detail::require_within_cap(pow2(n), cap, "solve_knapsack_brute");
  KnapsackChoice c;
  c.x.assign(n, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    c.weight = 0;
    c.profit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      c.x[i] = (mask >> i) & 1;
      if (c.x[i]) {
        c.weight += inst.w[i];
        c.profit += inst.p[i];
      }
    }
    if (c.weight <= inst.W && c.profit >= inst.P) return c;
  }
  return std::nullopt;
}

/// Every binary x with w.x <= W, as bit masks in increasing order.
inline std::vector<std::uint64_t> feasible_masks(const RationalVector& w, const Rational& W,
                                                 std::uint64_t cap = enumeration_cap()) {
  const std::size_t n = w.size();
  detail::require_within_cap(pow2(n), cap, "feasible_masks");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s += w[i];
    if (s <= W) out.push_back(mask);
  }
  return out;
}

/// max v.x subject to w.x <= W over binary x; nullopt when even x = 0 is
/// infeasible.
inline std::optional<Rational> knapsack_optimum_brute(const RationalVector& w, const RationalVector& v,
                                                      const Rational& W, std::uint64_t cap = enumeration_cap()) {
  std::optional<Rational> best;
  for (std::uint64_t mask : feasible_masks(w, W, cap)) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if ((mask >> i) & 1) s += v[i];
    if (!best || s > *best) best = s;
  }
  return best;
}

inline std::optional<Rational> knapsack_optimum_brute(const GroupedKnapsack& inst,
                                                      std::uint64_t cap = enumeration_cap()) {
  RationalVector w, v;
  for (const auto& g : inst.groups)
    for (const auto& value : g.values) {
      w.push_back(g.weight);
      v.push_back(value);
    }
  return knapsack_optimum_brute(w, v, inst.W, cap);
}

/// Some 0 <= x_i <= mu_i with sum s_i x_i = t.
inline std::optional<IntegerVector> solve_grouped_subset_sum_brute(const GroupedSubsetSum& inst,
                                                                   std::uint64_t cap = enumeration_cap()) {
  Integer count = 1;
  for (const auto& c : inst.classes) count *= c.multiplicity + 1;
  detail::require_within_cap(count, cap, "solve_grouped_subset_sum_brute");
  IntegerVector x(inst.classes.size(), 0);
  std::function<bool(std::size_t, const Integer&)> rec = [&](std::size_t i, const Integer& sum) {
    if (i == x.size()) return sum == inst.target;
    for (x[i] = 0; x[i] <= inst.classes[i].multiplicity; ++x[i])
      if (rec(i + 1, sum + x[i] * inst.classes[i].size)) return true;
    return false;
  };
  if (rec(0, 0)) return x;
  return std::nullopt;
}

// ---------------------------------------------------------------- set systems

/// A set of at most k universe elements of weight <= W meeting every set.
inline std::optional<std::vector<ElementId>> solve_hitting_set_brute(const SetSystemInstance& inst,
                                                                     std::uint64_t cap = enumeration_cap()) {
  const std::size_t u = inst.universe.size();
  if (inst.weights.size() != u) throw ValidationError("hitting set: one weight per universe element");
  const std::size_t k = static_cast<std::size_t>(std::min<std::uint64_t>(inst.k, u));
  Integer count = 0;
  for (std::size_t i = 0; i <= k; ++i) count += detail::binomial(u, i);
  detail::require_within_cap(count, cap, "solve_hitting_set_brute");

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, const Rational&)> rec = [&](std::size_t next, const Rational& weight) {
    std::set<ElementId> picked;
    for (auto i : chosen) picked.insert(inst.universe[i]);
    bool hits_all = weight <= inst.W;
    for (std::size_t f = 0; hits_all && f < inst.family.size(); ++f) {
      bool hit = false;
      for (auto e : inst.family[f]) hit = hit || picked.count(e);
      hits_all = hit;
    }
    if (hits_all) return true;
    if (chosen.size() == k) return false;
    for (std::size_t i = next; i < u; ++i) {
      chosen.push_back(i);
      if (rec(i + 1, weight + inst.weights[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0, 0)) return std::nullopt;
  std::vector<ElementId> out;
  for (auto i : chosen) out.push_back(inst.universe[i]);
  return out;
}

enum class PackingMode { kExactlyK, kAtMostK };

/// Indices of pairwise disjoint sets (exactly k, or at most k) of total
/// weight >= W.
inline std::optional<std::vector<std::size_t>> solve_set_packing_brute(
    const SetSystemInstance& inst, PackingMode mode = PackingMode::kExactlyK,
    std::uint64_t cap = enumeration_cap()) {
  const std::size_t f = inst.family.size();
  if (inst.weights.size() != f) throw ValidationError("set packing: one weight per set");
  detail::NodeBudget budget(cap, "solve_set_packing_brute");
  std::vector<std::size_t> chosen;
  std::set<ElementId> used;
  std::function<bool(std::size_t, const Rational&)> rec = [&](std::size_t next, const Rational& weight) {
    budget.tick();
    const bool size_ok = mode == PackingMode::kAtMostK || chosen.size() == inst.k;
    if (size_ok && weight >= inst.W) return true;
    if (chosen.size() == inst.k) return false;
    for (std::size_t i = next; i < f; ++i) {
      bool disjoint = true;
      for (auto e : inst.family[i]) disjoint = disjoint && !used.count(e);
      if (!disjoint) continue;
      chosen.push_back(i);
      used.insert(inst.family[i].begin(), inst.family[i].end());
      if (rec(i + 1, weight + inst.weights[i])) return true;
      for (auto e : inst.family[i]) used.erase(e);
      chosen.pop_back();
    }
    return false;
  };
  if (rec(0, 0)) return chosen;
  return std::nullopt;
}

// ---------------------------------------------------------------- max cut

struct CutResult {
  std::vector<bool> side;
  Rational weight = 0;
};

/// Maximum cut over all 2^|V| vertex subsets.
inline CutResult max_cut_brute(const MaxCutInstance& inst, std::uint64_t cap = enumeration_cap()) {
  const std::size_t n = inst.vertices;
  detail::require_within_cap(pow2(n), cap, "max_cut_brute");
  CutResult best;
  best.side.assign(n, false);
  std::vector<bool> side(n, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) side[i] = (mask >> i) & 1;
    Rational w = 0;
    for (const auto& e : inst.edges)
      if (side[e.u] != side[e.v]) w += e.w;
    if (w > best.weight) best = {side, w};
  }
  return best;
}

inline bool solve_max_cut_brute(const MaxCutInstance& inst, std::uint64_t cap = enumeration_cap()) {
  return max_cut_brute(inst, cap).weight >= inst.W;
}

// ---------------------------------------------------------------- bin packing

/// A packing into exactly k bins of capacity b (bins may stay empty).
inline std::optional<std::vector<std::size_t>> solve_bin_packing_brute(
    const BinPackingInstance& inst, std::uint64_t cap = enumeration_cap()) {
  const std::size_t n = inst.items.size();
  for (const auto& a : inst.items)
    if (a > inst.b) return std::nullopt;
  detail::NodeBudget budget(cap, "solve_bin_packing_brute");
  const std::size_t bins = static_cast<std::size_t>(std::min<std::uint64_t>(inst.k, std::max<std::size_t>(n, 1)));
  IntegerVector load(bins, 0);
  std::vector<std::size_t> where(n, 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t opened) {
    budget.tick();
    if (i == n) return true;
    // Items go into an opened bin or the first unopened one.
    for (std::size_t j = 0; j < std::min(opened + 1, bins); ++j) {
      if (load[j] + inst.items[i] > inst.b) continue;
      load[j] += inst.items[i];
      where[i] = j;
      if (rec(i + 1, std::max(opened, j + 1))) return true;
      load[j] -= inst.items[i];
    }
    return false;
  };
  if (rec(0, 0)) return where;
  return std::nullopt;
}

}  // namespace kernelcut
