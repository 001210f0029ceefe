#pragma once

// LLL basis reduction over exact integers.
//
// The rational input basis is scaled by the common denominator of all of its
// entries, which scales the lattice uniformly and leaves the reduction
// unchanged. The reduction itself is the all-integer variant that tracks the
// Gram determinants d_i and the scaled Gram-Schmidt coefficients
// lambda_{i,j} = d_j * mu_{i,j}, so no rational arithmetic happens inside the
// main loop.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kernelcut/errors.hpp"
#include "kernelcut/numbers.hpp"

namespace kernelcut {

struct ReducedBasis {
  /// Reduced rows, same dimensions as the input basis.
  std::vector<RationalVector> rows;
  /// Unimodular transform: rows[i] = sum_j transform[i][j] * input[j].
  std::vector<IntegerVector> transform;
  /// Number of row exchanges performed.
  std::size_t swaps = 0;
};

inline const Rational& default_lll_delta() {
  static const Rational delta(3, 4);
  return delta;
}

namespace detail {

class IntegralLll {
 public:
  IntegralLll(std::vector<IntegerVector> basis, const Rational& delta)
      : b_(std::move(basis)),
        n_(b_.size()),
        h_(n_, IntegerVector(n_, 0)),
        d_(n_ + 1, 0),
        lambda_(n_, IntegerVector(n_, 0)),
        delta_num_(delta.get_num()),
        delta_den_(delta.get_den()) {
    for (std::size_t i = 0; i < n_; ++i) h_[i][i] = 1;
  }

  void run() {
    if (n_ == 0) return;
    d_[0] = 1;
    // 1-based indices below follow the textbook presentation; b_[k - 1] is b_k.
    std::size_t k = 2, kmax = 1;
    d_[1] = dot(b_[0], b_[0]);
    if (d_[1] == 0) throw DegenerateBasis("basis row 1 is zero");
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        extend_gram(k);
      }
      size_reduce(k, k - 1);
      if (lovasz_fails(k)) {
        swap_rows(k, kmax);
        if (k > 2) --k;
      } else {
        for (std::size_t l = k - 1; l-- > 1;) size_reduce(k, l);
        ++k;
      }
    }
  }

  std::vector<IntegerVector>& rows() { return b_; }
  std::vector<IntegerVector>& transform() { return h_; }
  std::size_t swaps() const { return swaps_; }

 private:
  Integer& lam(std::size_t i, std::size_t j) { return lambda_[i - 1][j - 1]; }

  void extend_gram(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      Integer u = dot(b_[k - 1], b_[j - 1]);
      for (std::size_t i = 1; i < j; ++i) u = (d_[i] * u - lam(k, i) * lam(j, i)) / d_[i - 1];
      if (j < k) {
        lam(k, j) = u;
      } else {
        if (u == 0)
          throw DegenerateBasis("basis row " + std::to_string(k) +
                                " is linearly dependent on the previous rows");
        d_[k] = u;
      }
    }
  }

  void size_reduce(std::size_t k, std::size_t l) {
    Integer twice = 2 * abs(lam(k, l));
    if (twice <= d_[l]) return;
    Integer q = round_of(Rational(lam(k, l), d_[l]));
    for (std::size_t c = 0; c < b_[k - 1].size(); ++c) b_[k - 1][c] -= q * b_[l - 1][c];
    for (std::size_t c = 0; c < n_; ++c) h_[k - 1][c] -= q * h_[l - 1][c];
    lam(k, l) -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lam(k, i) -= q * lam(l, i);
  }

  // Exchange when d_k d_{k-2} + lambda^2 < delta d_{k-1}^2.
  bool lovasz_fails(std::size_t k) {
    const Integer& l = lam(k, k - 1);
    Integer lhs = delta_den_ * (d_[k] * d_[k - 2] + l * l);
    Integer rhs = delta_num_ * d_[k - 1] * d_[k - 1];
    return lhs < rhs;
  }

  void swap_rows(std::size_t k, std::size_t kmax) {
    ++swaps_;
    std::swap(b_[k - 1], b_[k - 2]);
    std::swap(h_[k - 1], h_[k - 2]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam(k, j), lam(k - 1, j));
    Integer l = lam(k, k - 1);
    Integer big_b = (d_[k - 2] * d_[k] + l * l) / d_[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Integer t = lam(i, k);
      lam(i, k) = (d_[k] * lam(i, k - 1) - l * t) / d_[k - 1];
      lam(i, k - 1) = (big_b * t + l * lam(i, k)) / d_[k];
    }
    d_[k - 1] = big_b;
  }

  std::vector<IntegerVector> b_;
  std::size_t n_;
  std::vector<IntegerVector> h_;
  IntegerVector d_;
  std::vector<IntegerVector> lambda_;
  Integer delta_num_, delta_den_;
  std::size_t swaps_ = 0;
};

}  // namespace detail

/// LLL-reduces the rows of `basis` with exchange parameter `delta`.
///
/// Rows must be linearly independent; 1/4 < delta < 1. The result satisfies
/// |mu_ij| <= 1/2 and the Lovasz condition with `delta`, and the returned
/// transform is unimodular. Deterministic: every decision depends only on the
/// input.
inline ReducedBasis lll_reduce(const std::vector<RationalVector>& basis,
                               const Rational& delta = default_lll_delta()) {
  if (delta <= Rational(1, 4) || delta >= 1)
    throw ValidationError("lll_reduce: delta must satisfy 1/4 < delta < 1");
  const std::size_t rows = basis.size();
  if (rows == 0) return {};
  const std::size_t cols = basis.front().size();
  for (const auto& row : basis)
    if (row.size() != cols) throw ValidationError("lll_reduce: ragged basis");
  if (rows > cols) throw DegenerateBasis("more basis rows than coordinates");

  Integer scale = 1;
  for (const auto& row : basis) scale = lcm(scale, lcm_of_denominators(row));
  std::vector<IntegerVector> scaled(rows, IntegerVector(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Rational v = basis[i][j] * scale;
      scaled[i][j] = v.get_num();
    }

  detail::IntegralLll lll(std::move(scaled), delta);
  lll.run();

  ReducedBasis out;
  out.swaps = lll.swaps();
  out.transform = std::move(lll.transform());
  out.rows.assign(rows, RationalVector(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      out.rows[i][j] = Rational(lll.rows()[i][j], scale);
      out.rows[i][j].canonicalize();
    }
  return out;
}

}  // namespace kernelcut
