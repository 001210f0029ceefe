#pragma once

// Knapsack(n), Subset Sum(n), Weighted Max Cut(W) and Additive One Bin
// Packing(k) kernels.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kernelcut/errors.hpp"
#include "kernelcut/frank_tardos.hpp"
#include "kernelcut/numbers.hpp"
#include "kernelcut/report.hpp"

namespace kernelcut {

struct KnapsackInstance {
  RationalVector w;
  RationalVector p;
  Rational W = 0;
  Rational P = 0;

  std::size_t n() const { return w.size(); }
  bool operator==(const KnapsackInstance&) const = default;
};

struct SubsetSumInstance {
  IntegerVector a;
  Integer b = 0;

  bool operator==(const SubsetSumInstance&) const = default;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational w = 1;

  bool operator==(const Edge&) const = default;
};

struct MaxCutInstance {
  std::size_t vertices = 0;
  std::vector<Edge> edges;
  Rational W = 1;

  bool operator==(const MaxCutInstance&) const = default;
};

struct BinPackingInstance {
  IntegerVector items;
  Integer b = 1;
  std::uint64_t k = 1;

  bool operator==(const BinPackingInstance&) const = default;
};

/// Either a packing (bin index per item, 0-based, at most k+1 bins) or the
/// verdict that k bins do not suffice.
struct PackingAnswer {
  std::optional<std::vector<std::size_t>> assignment;

  bool no_k_packing() const { return !assignment.has_value(); }
};

inline void validate(const KnapsackInstance& inst) {
  if (inst.w.size() != inst.p.size())
    throw ValidationError("knapsack: weight and profit vectors differ in length");
}

inline void validate(const SubsetSumInstance& inst) {
  for (const auto& x : inst.a)
    if (x < 0) throw ValidationError("subset sum: numbers must be non-negative");
  if (inst.b < 0) throw ValidationError("subset sum: target must be non-negative");
}

inline void validate(const MaxCutInstance& inst) {
  if (inst.W < 1) throw ValidationError("max cut: W must be at least 1");
  for (const auto& e : inst.edges) {
    if (e.u >= inst.vertices || e.v >= inst.vertices)
      throw ValidationError("max cut: edge endpoint out of range");
    if (e.u == e.v) throw ValidationError("max cut: self-loop");
    if (e.w < 1) throw ValidationError("max cut: edge weight below 1");
  }
}

inline void validate(const BinPackingInstance& inst) {
  if (inst.b < 1) throw ValidationError("bin packing: bin size must be positive");
  if (inst.k < 1) throw ValidationError("bin packing: k must be positive");
  for (const auto& a : inst.items)
    if (a < 1) throw ValidationError("bin packing: item sizes must be positive");
}

inline std::size_t encoding_bits(const KnapsackInstance& inst) {
  return bits_of(inst.w) + bits_of(inst.p) + bit_length(inst.W) + bit_length(inst.P);
}

inline std::size_t encoding_bits(const SubsetSumInstance& inst) {
  return bits_of(inst.a) + bit_length(inst.b);
}

inline std::size_t encoding_bits(const MaxCutInstance& inst) {
  std::size_t total = bit_length(inst.W) + bit_length(Integer(static_cast<unsigned long>(inst.vertices)));
  for (const auto& e : inst.edges)
    total += bit_length(e.w) + bit_length(Integer(static_cast<unsigned long>(e.u))) +
             bit_length(Integer(static_cast<unsigned long>(e.v)));
  return total;
}

inline std::size_t encoding_bits(const BinPackingInstance& inst) {
  return bits_of(inst.items) + bit_length(inst.b) +
         bit_length(Integer(static_cast<unsigned long>(inst.k)));
}

/// Constant c in the total-size check kernel_bits <= c * max(n, 1)^4.
inline constexpr std::uint64_t kKnapsackSizeConstant = 200;

inline Kernel<KnapsackInstance> kernelize_knapsack(const KnapsackInstance& inst) {
  validate(inst);
  const std::size_t n = inst.n();
  Kernel<KnapsackInstance> out;
  KernelReport& report = out.report;
  report.problem = "knapsack";
  report.original_bits = encoding_bits(inst);

  CompressedInequality weights = compress_inequality(inst.w, inst.W);
  // Keeps the full sign of p.x - P, so p.x >= P is preserved too.
  CompressedInequality profits = compress_inequality(inst.p, inst.P);
  out.instance = {to_rational(weights.w), to_rational(profits.w), weights.W, profits.W};

  report.r = n + 1;
  report.N = static_cast<unsigned long>(n + 2);
  IntegerVector all = weights.w;
  all.insert(all.end(), profits.w.begin(), profits.w.end());
  all.push_back(weights.W);
  all.push_back(profits.W);
  report.kernel_bits = encoding_bits(out.instance);
  const std::uint64_t m = std::max<std::uint64_t>(n, 1);
  report.bound_ok = within_compression_bound(all, report.r, report.N) &&
                    report.kernel_bits <= kKnapsackSizeConstant * m * m * m * m;
  report.extra["size_constant"] = std::to_string(kKnapsackSizeConstant);
  report.extra["per_number_bit_bound"] = std::to_string(compression_bit_bound(report.r, report.N));
  return out;
}

/// a.x = b is kept as the sign of a.x - b, one compression with N = n + 2.
inline Kernel<SubsetSumInstance> kernelize_subset_sum(const SubsetSumInstance& inst) {
  validate(inst);
  const std::size_t n = inst.a.size();
  Kernel<SubsetSumInstance> out;
  KernelReport& report = out.report;
  report.problem = "subset-sum";
  report.original_bits = encoding_bits(inst);

  CompressionRequest req{to_rational(inst.a), Integer(static_cast<unsigned long>(n + 2))};
  req.w.push_back(inst.b);
  IntegerVector joint = reduce_vector(req);
  report.r = n + 1;
  report.N = req.N;
  report.bound_ok = within_compression_bound(joint, report.r, report.N);
  out.instance.b = joint.back();
  joint.pop_back();
  out.instance.a = std::move(joint);
  report.kernel_bits = encoding_bits(out.instance);
  report.extra["items"] = std::to_string(n);
  return out;
}

inline Rational total_weight(const MaxCutInstance& inst) {
  Rational t = 0;
  for (const auto& e : inst.edges) t += e.w;
  return t;
}

/// side[v] == true for v in C.
inline Rational cut_weight(const MaxCutInstance& inst, const std::vector<bool>& side) {
  Rational t = 0;
  for (const auto& e : inst.edges)
    if (side[e.u] != side[e.v]) t += e.w;
  return t;
}

/// Places vertices in index order, each on the side that cuts more weight
/// towards the already placed vertices (ties go outside C). The result cuts
/// at least half of the total weight.
inline std::vector<bool> greedy_cut(const MaxCutInstance& inst) {
  std::vector<bool> in_c(inst.vertices, false);
  std::vector<std::vector<std::size_t>> incident(inst.vertices);
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    incident[inst.edges[i].u].push_back(i);
    incident[inst.edges[i].v].push_back(i);
  }
  for (std::size_t v = 0; v < inst.vertices; ++v) {
    Rational to_inside = 0, to_outside = 0;
    for (auto i : incident[v]) {
      const Edge& e = inst.edges[i];
      std::size_t other = e.u == v ? e.v : e.u;
      if (other >= v) continue;
      (in_c[other] ? to_inside : to_outside) += e.w;
    }
    in_c[v] = to_outside > to_inside;
  }
  return in_c;
}

/// Two vertices joined by one unit edge, W = 1.
inline MaxCutInstance canonical_max_cut_yes() { return {2, {{0, 1, 1}}, 1}; }

inline Kernel<MaxCutInstance> kernelize_max_cut(const MaxCutInstance& inst) {
  validate(inst);
  Kernel<MaxCutInstance> out;
  KernelReport& report = out.report;
  report.problem = "max-cut";
  report.original_bits = encoding_bits(inst);

  const Rational total = total_weight(inst);
  if (total >= 2 * inst.W) {
    ++report.rule_firings;
    report.note("total weight " + to_string(total) + " >= 2W: greedy cut suffices");
    out.instance = canonical_max_cut_yes();
    report.kernel_bits = encoding_bits(out.instance);
    return out;
  }

  const std::size_t m = inst.edges.size();
  CompressionRequest req{{}, Integer(static_cast<unsigned long>(m + 2))};
  for (const auto& e : inst.edges) req.w.push_back(e.w);
  req.w.push_back(inst.W);
  IntegerVector joint = reduce_vector(req);
  report.r = m + 1;
  report.N = req.N;
  report.bound_ok = within_compression_bound(joint, report.r, report.N);

  out.instance = inst;
  for (std::size_t i = 0; i < m; ++i) out.instance.edges[i].w = joint[i];
  out.instance.W = joint.back();
  report.kernel_bits = encoding_bits(out.instance);
  report.extra["edges"] = std::to_string(m);
  return out;
}

/// One item of size 2 with bin size 1 and k = 1.
inline BinPackingInstance canonical_bin_packing_no() { return {{2}, 1, 1}; }

struct BinPackingKernel {
  BinPackingInstance instance;
  KernelReport report;
  /// The input can certainly not be packed into k bins.
  bool no_k_packing = false;
  /// Input positions of the kept (large) items, parallel to instance.items.
  std::vector<std::size_t> kept;
};

/// Drops items smaller than b/(k+1) after the trivial rejections, then
/// compresses the kept sizes together with b using N = k(k+1) + 2.
inline BinPackingKernel kernelize_bin_packing(const BinPackingInstance& inst) {
  validate(inst);
  BinPackingKernel out;
  KernelReport& report = out.report;
  report.problem = "bin-packing";
  report.original_bits = encoding_bits(inst);
  const Integer k(static_cast<unsigned long>(inst.k));

  Integer total = 0;
  bool oversized = false;
  for (const auto& a : inst.items) {
    total += a;
    oversized = oversized || a > inst.b;
  }
  if (oversized || total > k * inst.b) {
    ++report.rule_firings;
    report.note(oversized ? "an item exceeds the bin size" : "total size exceeds k*b");
    out.no_k_packing = true;
    out.instance = canonical_bin_packing_no();
    report.kernel_bits = encoding_bits(out.instance);
    report.extra["no_k_packing"] = "true";
    return out;
  }

  RationalVector joint;
  for (std::size_t i = 0; i < inst.items.size(); ++i) {
    if (inst.items[i] * (k + 1) >= inst.b) {
      out.kept.push_back(i);
      joint.push_back(inst.items[i]);
    } else {
      ++report.rule_firings;
      report.note("drop small item #" + std::to_string(i) + " of size " + to_string(inst.items[i]));
    }
  }
  joint.push_back(inst.b);
  const Integer N = k * (k + 1) + 2;
  IntegerVector compressed = reduce_vector({joint, N});
  report.r = joint.size();
  report.N = N;
  report.bound_ok = within_compression_bound(compressed, report.r, N) &&
                    Integer(static_cast<unsigned long>(out.kept.size())) <= k * (k + 1);

  out.instance.k = inst.k;
  out.instance.b = compressed.back();
  compressed.pop_back();
  out.instance.items = std::move(compressed);
  report.kernel_bits = encoding_bits(out.instance);
  report.extra["kept_items"] = std::to_string(out.kept.size());
  report.extra["item_bound"] = Integer(k * (k + 1)).get_str();
  report.extra["no_k_packing"] = "false";
  // Per-item bound of the implemented (r, N) versus the O(k^3) total target.
  report.extra["per_number_bit_bound"] = std::to_string(compression_bit_bound(report.r, N));
  report.extra["target_total_bits_k3"] = Integer(k * k * k).get_str();
  return out;
}

namespace detail {

// Backtracking search for a packing of `items` into `bins` bins of size `cap`.
// Items are placed largest first; a new bin is opened only once per level.
class BinSearch {
 public:
  BinSearch(const IntegerVector& items, const Integer& cap, std::size_t bins)
      : items_(items), cap_(cap), loads_(bins, 0), assignment_(items.size(), 0), order_(items.size()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return items_[a] > items_[b]; });
  }

  std::optional<std::vector<std::size_t>> run() {
    if (place(0)) return assignment_;
    return std::nullopt;
  }

 private:
  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t item = order_[depth];
    for (std::size_t bin = 0; bin < loads_.size(); ++bin) {
      if (loads_[bin] + items_[item] > cap_) continue;
      bool fresh = loads_[bin] == 0;
      loads_[bin] += items_[item];
      assignment_[item] = bin;
      if (place(depth + 1)) return true;
      loads_[bin] -= items_[item];
      if (fresh) break;  // every later empty bin is equivalent
    }
    return false;
  }

  const IntegerVector& items_;
  const Integer& cap_;
  IntegerVector loads_;
  std::vector<std::size_t> assignment_;
  std::vector<std::size_t> order_;
};

}  // namespace detail

/// Packing into at most k+1 bins, or the verdict that k bins do not suffice.
inline PackingAnswer solve_additive_one(const BinPackingInstance& inst) {
  BinPackingKernel kernel = kernelize_bin_packing(inst);
  if (kernel.no_k_packing) return {};

  const std::size_t bins = inst.k + 1;
  auto large = detail::BinSearch(kernel.instance.items, kernel.instance.b, bins).run();
  if (!large) return {};

  std::vector<std::size_t> assignment(inst.items.size(), bins);
  IntegerVector loads(bins, 0);
  for (std::size_t j = 0; j < kernel.kept.size(); ++j) {
    const std::size_t item = kernel.kept[j];
    assignment[item] = (*large)[j];
    loads[(*large)[j]] += inst.items[item];
  }

  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < inst.items.size(); ++i)
    if (assignment[i] == bins) small.push_back(i);
  std::stable_sort(small.begin(), small.end(),
                   [&](std::size_t a, std::size_t b) { return inst.items[a] > inst.items[b]; });
  for (auto item : small) {
    std::size_t bin = 0;
    while (bin < bins && loads[bin] + inst.items[item] > inst.b) ++bin;
    if (bin == bins) throw std::logic_error("solve_additive_one: greedy add-back failed");
    assignment[item] = bin;
    loads[bin] += inst.items[item];
  }
  return {std::move(assignment)};
}

/// Every item assigned, every bin within b, at most `max_bins` bins used.
inline bool is_valid_packing(const BinPackingInstance& inst, const std::vector<std::size_t>& assignment,
                             std::size_t max_bins) {
  if (assignment.size() != inst.items.size()) return false;
  IntegerVector loads(max_bins, 0);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= max_bins) return false;
    loads[assignment[i]] += inst.items[i];
  }
  return std::all_of(loads.begin(), loads.end(), [&](const Integer& l) { return l <= inst.b; });
}

}  // namespace kernelcut
