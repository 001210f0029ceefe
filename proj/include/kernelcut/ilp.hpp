#pragma once

// Bounded integer linear programs solved exactly by enumeration of the
// integer box, optionally with bound propagation and branch-and-bound.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kernelcut/errors.hpp"
#include "kernelcut/numbers.hpp"

namespace kernelcut {

struct IlpVariable {
  std::string name;
  Integer lower = 0;
  Integer upper = 0;
};

/// sum_j coefficients[j] * x_j <= rhs
struct LinearConstraint {
  RationalVector coefficients;
  Rational rhs = 0;
};

/// maximize objective . x over the integer box subject to the constraints.
struct BoundedILP {
  std::vector<IlpVariable> variables;
  std::vector<LinearConstraint> constraints;
  RationalVector objective;

  std::size_t add_variable(std::string name, Integer lower, Integer upper) {
    variables.push_back({std::move(name), std::move(lower), std::move(upper)});
    objective.push_back(0);
    for (auto& c : constraints) c.coefficients.push_back(0);
    return variables.size() - 1;
  }

  LinearConstraint& add_constraint(Rational rhs) {
    constraints.push_back({RationalVector(variables.size(), 0), std::move(rhs)});
    return constraints.back();
  }
};

struct IlpOptions {
  /// Plain enumeration refuses boxes with more points than this; with
  /// branch-and-bound it caps the number of search nodes instead.
  std::uint64_t cap = std::uint64_t{1} << 20;
  bool branch_and_bound = true;
};

struct IlpResult {
  bool feasible = false;
  IntegerVector assignment;
  Rational value = 0;
  std::uint64_t nodes = 0;
};

inline void validate(const BoundedILP& ilp) {
  const std::size_t n = ilp.variables.size();
  if (ilp.objective.size() != n) throw ValidationError("ilp: objective length mismatch");
  for (const auto& v : ilp.variables)
    if (v.lower > v.upper) throw ValidationError("ilp: empty range for variable " + v.name);
  for (const auto& c : ilp.constraints)
    if (c.coefficients.size() != n) throw ValidationError("ilp: constraint length mismatch");
}

/// Number of integer points in the box.
inline Integer box_size(const BoundedILP& ilp) {
  Integer size = 1;
  for (const auto& v : ilp.variables) size *= v.upper - v.lower + 1;
  return size;
}

namespace detail {

class IlpSearch {
 public:
  IlpSearch(const BoundedILP& ilp, const IlpOptions& options)
      : ilp_(ilp), options_(options), n_(ilp.variables.size()), x_(n_), activity_(ilp.constraints.size(), 0) {
    // Minimum activity of each constraint over the box, per suffix.
    suffix_min_.assign(ilp.constraints.size(), RationalVector(n_ + 1, 0));
    for (std::size_t c = 0; c < ilp.constraints.size(); ++c)
      for (std::size_t j = n_; j-- > 0;) {
        const Rational& a = ilp.constraints[c].coefficients[j];
        const Integer& pick = a > 0 ? ilp.variables[j].lower : ilp.variables[j].upper;
        suffix_min_[c][j] = suffix_min_[c][j + 1] + a * pick;
      }
  }

  IlpResult run() {
    visit(0, 0);
    result_.nodes = nodes_;
    return result_;
  }

 private:
  void visit(std::size_t depth, const Rational& value) {
    if (++nodes_ > options_.cap && options_.branch_and_bound)
      throw RefusedScale("solve_bounded_ilp: node cap exceeded");
    // Bound on what the variables after this one can add, for any value of it.
    Rational rest = 0;
    if (options_.branch_and_bound && depth < n_) {
      std::optional<TailBound> tail = optimistic_tail(depth);
      if (!tail) return;
      if (result_.feasible && value + tail->total <= result_.value) return;
      rest = tail->total - tail->own;
    }
    if (depth == n_) {
      for (std::size_t c = 0; c < activity_.size(); ++c)
        if (activity_[c] > ilp_.constraints[c].rhs) return;
      if (!result_.feasible || value > result_.value) {
        result_.feasible = true;
        result_.value = value;
        result_.assignment = x_;
      }
      return;
    }

    Integer lo = ilp_.variables[depth].lower, hi = ilp_.variables[depth].upper;
    if (options_.branch_and_bound) {
      // a x <= rhs - activity - (minimum of the unfixed tail).
      for (std::size_t c = 0; c < activity_.size(); ++c) {
        const Rational& a = ilp_.constraints[c].coefficients[depth];
        Rational slack = ilp_.constraints[c].rhs - activity_[c] - suffix_min_[c][depth + 1];
        if (a > 0) {
          Integer cap = floor_of(slack / a);
          if (cap < hi) hi = cap;
        } else if (a < 0) {
          Integer cap = ceil_of(slack / a);
          if (cap > lo) lo = cap;
        } else if (slack < 0) {
          return;
        }
      }
    }
    if (lo > hi) return;

    const Rational& gain = ilp_.objective[depth];
    const bool descending = gain > 0;
    for (Integer t = descending ? hi : lo; descending ? t >= lo : t <= hi; descending ? --t : ++t) {
      x_[depth] = t;
      for (std::size_t c = 0; c < activity_.size(); ++c)
        activity_[c] += ilp_.constraints[c].coefficients[depth] * t;
      visit(depth + 1, value + gain * t);
      for (std::size_t c = 0; c < activity_.size(); ++c)
        activity_[c] -= ilp_.constraints[c].coefficients[depth] * t;
      if (options_.branch_and_bound && result_.feasible &&
          value + gain * t + rest <= result_.value)
        break;  // the remaining values of t only lower the objective
    }
  }

  // Best objective the unfixed variables could add, each one bounded
  // separately by every constraint given the others at their minimum
  // activity; nullopt when some variable has no admissible value.
  struct TailBound {
    Rational total;
    /// Share of the variable at `depth`.
    Rational own;
  };

  std::optional<TailBound> optimistic_tail(std::size_t depth) const {
    TailBound bound{0, 0};
    for (std::size_t j = depth; j < n_; ++j) {
      Integer lo = ilp_.variables[j].lower, hi = ilp_.variables[j].upper;
      for (std::size_t c = 0; c < activity_.size(); ++c) {
        const Rational& a = ilp_.constraints[c].coefficients[j];
        if (a == 0) continue;
        const Integer& own = a > 0 ? ilp_.variables[j].lower : ilp_.variables[j].upper;
        Rational slack = ilp_.constraints[c].rhs - activity_[c] - (suffix_min_[c][depth] - a * own);
        if (a > 0) {
          Integer cap = floor_of(slack / a);
          if (cap < hi) hi = cap;
        } else {
          Integer cap = ceil_of(slack / a);
          if (cap > lo) lo = cap;
        }
      }
      if (lo > hi) return std::nullopt;
      const Rational& gain = ilp_.objective[j];
      Rational best = gain > 0 ? gain * hi : gain * lo;
      if (j == depth) bound.own = best;
      bound.total += best;
    }
    return bound;
  }

  const BoundedILP& ilp_;
  const IlpOptions& options_;
  std::size_t n_;
  IntegerVector x_;
  RationalVector activity_;
  std::vector<RationalVector> suffix_min_;
  IlpResult result_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact optimum over the integer box; the first optimal point in search
/// order is returned. Throws RefusedScale when the box (plain enumeration) or
/// the node count (branch-and-bound) exceeds options.cap.
inline IlpResult solve_bounded_ilp(const BoundedILP& ilp, const IlpOptions& options = {}) {
  validate(ilp);
  if (!options.branch_and_bound && box_size(ilp) > Integer(std::to_string(options.cap)))
    throw RefusedScale("solve_bounded_ilp: box has more than " + std::to_string(options.cap) +
                       " points");
  return detail::IlpSearch(ilp, options).run();
}

}  // namespace kernelcut
