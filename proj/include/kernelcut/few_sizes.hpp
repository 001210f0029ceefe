#pragma once

// Knapsack with k distinct item weights (integer program over concave prefix
// sums) and Subset Sum with k distinct item sizes (compressed ILP plus binary
// splitting of the multiplicities).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "kernelcut/errors.hpp"
#include "kernelcut/frank_tardos.hpp"
#include "kernelcut/ilp.hpp"
#include "kernelcut/numbers.hpp"
#include "kernelcut/numeric_kernels.hpp"
#include "kernelcut/report.hpp"

namespace kernelcut {

struct WeightGroup {
  Rational weight;
  /// Item values, non-increasing.
  RationalVector values;

  bool operator==(const WeightGroup&) const = default;
};

struct GroupedKnapsack {
  std::vector<WeightGroup> groups;
  Rational W = 0;
  Rational P = 0;

  std::size_t items() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.values.size();
    return n;
  }
  bool operator==(const GroupedKnapsack&) const = default;
};

/// p(s) = slope * s + intercept.
struct LinearPiece {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& s) const { return slope * s + intercept; }
};

struct ConcaveEnvelope {
  /// prefix[s] = sum of the s largest values, s = 0..n.
  RationalVector prefix;
  /// Piece l (0-based) interpolates prefix at s = l and s = l + 1.
  std::vector<LinearPiece> pieces;

  /// min over all pieces at s; equals prefix[s] on 0..n.
  Rational evaluate(const Rational& s) const {
    if (pieces.empty()) return 0;
    Rational best = pieces.front()(s);
    for (const auto& p : pieces) best = std::min(best, p(s));
    return best;
  }
};

struct SizeClass {
  Integer size;
  Integer multiplicity;

  bool operator==(const SizeClass&) const = default;
};

struct GroupedSubsetSum {
  std::vector<SizeClass> classes;
  Integer target = 0;

  Integer items() const {
    Integer n = 0;
    for (const auto& c : classes) n += c.multiplicity;
    return n;
  }
  bool operator==(const GroupedSubsetSum&) const = default;
};

inline void validate_sorted_values(const RationalVector& values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[i - 1]) throw ValidationError("values must be non-increasing");
}

inline void validate(const GroupedKnapsack& inst) {
  std::set<Rational> weights;
  for (const auto& g : inst.groups) {
    if (g.values.empty()) throw ValidationError("grouped knapsack: empty weight group");
    validate_sorted_values(g.values);
    if (!weights.insert(g.weight).second)
      throw ValidationError("grouped knapsack: weight " + to_string(g.weight) + " listed twice");
  }
}

inline void validate(const GroupedSubsetSum& inst) {
  std::set<Integer> sizes;
  for (const auto& c : inst.classes) {
    if (c.size < 1) throw ValidationError("grouped subset sum: sizes must be positive");
    if (c.multiplicity < 1) throw ValidationError("grouped subset sum: multiplicities must be positive");
    if (!sizes.insert(c.size).second)
      throw ValidationError("grouped subset sum: size " + to_string(c.size) + " listed twice");
  }
  if (inst.target < 0) throw ValidationError("grouped subset sum: target must be non-negative");
}

inline ConcaveEnvelope build_envelope(const RationalVector& values) {
  validate_sorted_values(values);
  ConcaveEnvelope env;
  env.prefix.push_back(0);
  for (const auto& v : values) env.prefix.push_back(env.prefix.back() + v);
  for (std::size_t l = 0; l < values.size(); ++l)
    env.pieces.push_back({values[l], env.prefix[l] - values[l] * static_cast<unsigned long>(l)});
  return env;
}

/// Variable indices of a knapsack program: x_i at count[i], g_i at value[i].
struct KnapsackProgram {
  BoundedILP ilp;
  std::vector<std::size_t> count;
  std::vector<std::size_t> value;
  /// Values are scaled by this integer so every g_i is integral.
  Integer value_scale = 1;
};

/// max sum g_i  s.t.  sum w_i x_i <= W,  g_i <= p_i^(l)(x_i) for every piece,
/// x_i in {0..n_i}, g_i in {0..max f_i}. The objective divides by the value
/// scale, so the optimum equals the knapsack optimum.
inline KnapsackProgram build_knapsack_ilp(const GroupedKnapsack& inst) {
  validate(inst);
  KnapsackProgram prog;
  RationalVector all_values;
  for (const auto& g : inst.groups) all_values.insert(all_values.end(), g.values.begin(), g.values.end());
  prog.value_scale = lcm_of_denominators(all_values);
  const Rational scale(prog.value_scale);

  std::vector<ConcaveEnvelope> envelopes;
  for (std::size_t i = 0; i < inst.groups.size(); ++i) {
    envelopes.push_back(build_envelope(inst.groups[i].values));
    prog.count.push_back(prog.ilp.add_variable("x" + std::to_string(i + 1), 0,
                                               static_cast<unsigned long>(inst.groups[i].values.size())));
  }
  for (std::size_t i = 0; i < inst.groups.size(); ++i) {
    Rational top = *std::max_element(envelopes[i].prefix.begin(), envelopes[i].prefix.end());
    prog.value.push_back(prog.ilp.add_variable("g" + std::to_string(i + 1), 0, floor_of(top * scale)));
    prog.ilp.objective[prog.value.back()] = Rational(1) / scale;
  }

  auto& capacity = prog.ilp.add_constraint(inst.W);
  for (std::size_t i = 0; i < inst.groups.size(); ++i)
    capacity.coefficients[prog.count[i]] = inst.groups[i].weight;
  for (std::size_t i = 0; i < inst.groups.size(); ++i)
    for (const auto& piece : envelopes[i].pieces) {
      // g - scale*slope*x <= scale*intercept
      auto& c = prog.ilp.add_constraint(piece.intercept * scale);
      c.coefficients[prog.value[i]] = 1;
      c.coefficients[prog.count[i]] = -piece.slope * scale;
    }
  return prog;
}

struct KnapsackOptimum {
  Rational value;
  /// Items taken from each group (the largest values of the group).
  IntegerVector counts;
  bool reaches_target = false;
};

inline KnapsackOptimum solve_knapsack_few_weights(const GroupedKnapsack& inst,
                                                  const IlpOptions& options = {}) {
  KnapsackProgram prog = build_knapsack_ilp(inst);
  IlpResult res = solve_bounded_ilp(prog.ilp, options);
  // x = 0, g = 0 is always feasible when W >= 0.
  if (!res.feasible) return {0, IntegerVector(inst.groups.size(), 0), false};
  KnapsackOptimum out{res.value, {}, res.value >= inst.P};
  for (auto idx : prog.count) out.counts.push_back(res.assignment[idx]);
  return out;
}

/// Sizes of the items replacing mu copies of one size s: 2^j s for
/// j = 0..l with l the largest integer such that 2^(l+1) - 1 < mu, plus the
/// remainder (mu - (2^(l+1) - 1)) s.
inline IntegerVector binary_split(const Integer& size, const Integer& multiplicity) {
  IntegerVector out;
  Integer covered = 0, chunk = 1;
  while (covered + chunk < multiplicity) {
    out.push_back(chunk * size);
    covered += chunk;
    chunk *= 2;
  }
  out.push_back((multiplicity - covered) * size);
  return out;
}

/// s.x = t with 0 <= x_i <= mu_i, as a bounded ILP with the equality written
/// as two inequalities.
inline std::optional<IntegerVector> solve_grouped_subset_sum_ilp(const GroupedSubsetSum& inst,
                                                                 const IlpOptions& options = {}) {
  validate(inst);
  BoundedILP ilp;
  for (std::size_t i = 0; i < inst.classes.size(); ++i)
    ilp.add_variable("x" + std::to_string(i + 1), 0, inst.classes[i].multiplicity);
  auto& upper = ilp.add_constraint(inst.target);
  for (std::size_t i = 0; i < inst.classes.size(); ++i) upper.coefficients[i] = inst.classes[i].size;
  auto& lower = ilp.add_constraint(-inst.target);
  for (std::size_t i = 0; i < inst.classes.size(); ++i) lower.coefficients[i] = -inst.classes[i].size;
  IlpResult res = solve_bounded_ilp(ilp, options);
  if (!res.feasible) return std::nullopt;
  return res.assignment;
}

/// Outcome when the instance was decided instead of shrunk.
struct SolvedVerdict {
  bool yes = false;
};

using FewSizesResult = std::variant<SubsetSumInstance, SolvedVerdict>;

/// c in the item-count check  items <= c * k * log2(n).
inline constexpr std::uint64_t kSplitItemConstant = 2;

/// items <= c k log2(n), exactly: 2^items <= n^(c k). For n = 1 the
/// logarithm is taken as 1.
inline bool within_item_bound(std::size_t items, std::size_t k, const Integer& n,
                              std::uint64_t c = kSplitItemConstant) {
  if (n <= 1) return items <= c * k;
  return pow2(items) <= power(n, c * k);
}

inline Kernel<FewSizesResult> kernelize_subset_sum_few_sizes(const GroupedSubsetSum& inst,
                                                             const IlpOptions& options = {}) {
  validate(inst);
  Kernel<FewSizesResult> out;
  KernelReport& report = out.report;
  report.problem = "grouped-subset-sum";
  const std::size_t k = inst.classes.size();
  const Integer n = inst.items();
  report.original_bits = bit_length(inst.target);
  for (const auto& c : inst.classes) report.original_bits += bit_length(c.size) + bit_length(c.multiplicity);

  const std::uint64_t log_n = ceil_log2(n);
  const std::uint64_t k_log_k = k * ceil_log2(Integer(static_cast<unsigned long>(k)));
  report.extra["ceil_log2_n"] = std::to_string(log_n);
  report.extra["k_ceil_log2_k"] = std::to_string(k_log_k);

  if (log_n > k_log_k) {
    report.extra["branch"] = "solve";
    const bool yes = solve_grouped_subset_sum_ilp(inst, options).has_value();
    out.instance = SolvedVerdict{yes};
    report.note(std::string("decided directly: ") + (yes ? "yes" : "no"));
    return out;
  }

  report.extra["branch"] = "compress";
  // Signs of sum s_i x_i - t for 0 <= x_i <= mu_i: ||(x, -1)||_1 <= n + 1.
  CompressionRequest req{{}, n + 2};
  for (const auto& c : inst.classes) req.w.push_back(c.size);
  req.w.push_back(inst.target);
  IntegerVector joint = reduce_vector(req);
  report.r = joint.size();
  report.N = req.N;
  report.bound_ok = within_compression_bound(joint, report.r, report.N);

  SubsetSumInstance kernel;
  kernel.b = joint.back();
  for (std::size_t i = 0; i < k; ++i) {
    IntegerVector parts = binary_split(joint[i], inst.classes[i].multiplicity);
    kernel.a.insert(kernel.a.end(), parts.begin(), parts.end());
  }
  report.bound_ok = report.bound_ok && within_item_bound(kernel.a.size(), k, n);
  report.extra["items_out"] = std::to_string(kernel.a.size());
  report.extra["item_constant"] = std::to_string(kSplitItemConstant);
  report.kernel_bits = encoding_bits(kernel);
  out.instance = std::move(kernel);
  return out;
}

}  // namespace kernelcut
