#pragma once

// Weight compression: replace a rational vector w by an integer vector that
// has the same sign against every integer vector b with ||b||_1 <= N - 1.
//
// Construction. Let v = w / ||w||_inf and approximate v simultaneously with
// accuracy 1/N: q v = p + e, ||e||_inf <= 1/N. For ||b||_1 <= N - 1 we get
// |e . b| < 1, so sign(w . b) = sign(p . b) whenever p . b != 0, and
// sign(w . b) = sign(e . b) otherwise. Repeating on e yields integer vectors
// p_1, ..., p_t such that sign(w . b) is the first nonzero sign among
// p_1 . b, ..., p_t . b. The coordinate where |v| = 1 is reproduced exactly,
// so the support shrinks every round and t <= r. Finally
//     w_bar = sum_i M^(t-i) p_i,   M = (N - 1) max_i ||p_i||_inf + 1,
// makes that lexicographic rule a plain sign test.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "kernelcut/diophantine.hpp"
#include "kernelcut/errors.hpp"
#include "kernelcut/numbers.hpp"

namespace kernelcut {

struct CompressionRequest {
  RationalVector w;
  /// Sign-preservation radius: all b with ||b||_1 <= N - 1 are covered.
  Integer N;
};

/// 2^(4r^3) * N^(r(r+2)).
inline Integer compression_bound(std::size_t r, const Integer& N) {
  const std::uint64_t rr = r;
  return pow2(4 * rr * rr * rr) * power(N, rr * (rr + 2));
}

/// True when every entry satisfies |x| <= 2^(4r^3) N^(r(r+2)).
inline bool within_compression_bound(const IntegerVector& xs, std::size_t r, const Integer& N) {
  const Integer bound = compression_bound(r, N);
  for (const auto& x : xs)
    if (abs(x) > bound) return false;
  return true;
}

/// Bit length of the bound above; every compressed entry has at most this
/// many bits (4r^3 + floor(r(r+2) log2 N) + 1).
inline std::size_t compression_bit_bound(std::size_t r, const Integer& N) {
  return bit_length(compression_bound(r, N));
}

/// Number of approximation rounds and the level vectors of the last call,
/// exposed for reporting.
struct CompressionTrace {
  std::vector<IntegerVector> levels;
  Integer multiplier;
};

inline IntegerVector reduce_vector(const CompressionRequest& req,
                                   CompressionTrace* trace = nullptr) {
  if (req.N < 1) throw ValidationError("reduce_vector: N must be at least 1");
  const std::size_t r = req.w.size();
  IntegerVector out(r, 0);

  if (req.N == 1) {
    // Only b = 0 is tested.
    for (std::size_t i = 0; i < r; ++i) out[i] = sign(req.w[i]);
    return out;
  }

  const Rational eps(Integer(1), req.N);
  RationalVector residual = req.w;
  std::vector<IntegerVector> levels;

  while (true) {
    std::size_t pivot = r;
    Rational largest = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (abs(residual[i]) > largest) {
        largest = abs(residual[i]);
        pivot = i;
      }
    if (pivot == r) break;

    std::vector<std::size_t> support;
    RationalVector alpha;
    for (std::size_t i = 0; i < r; ++i)
      if (i != pivot && residual[i] != 0) {
        support.push_back(i);
        alpha.push_back(residual[i] / largest);
      }

    SimultaneousApproximation approx = simultaneous_approx(alpha, eps);
    IntegerVector level(r, 0);
    level[pivot] = sign(residual[pivot]) * approx.q;
    for (std::size_t j = 0; j < support.size(); ++j) level[support[j]] = approx.p[j];

    RationalVector next(r, 0);
    for (std::size_t j = 0; j < support.size(); ++j)
      next[support[j]] = alpha[j] * approx.q - approx.p[j];
    residual = std::move(next);
    levels.push_back(std::move(level));
  }

  Integer widest = 0;
  for (const auto& level : levels) widest = std::max(widest, max_abs(level));
  const Integer multiplier = (req.N - 1) * widest + 1;
  for (const auto& level : levels)
    for (std::size_t i = 0; i < r; ++i) out[i] = out[i] * multiplier + level[i];

  Integer g = gcd_of(out);
  if (g > 1)
    for (auto& x : out) x /= g;

  if (trace) {
    trace->levels = std::move(levels);
    trace->multiplier = multiplier;
  }
  return out;
}

struct CompressedInequality {
  IntegerVector w;
  Integer W;
};

/// Integer (w_bar, W_bar) with w . x <= W  <=>  w_bar . x <= W_bar for every
/// binary x. Since the full sign of w . x - W is kept, >= and = are preserved
/// as well.
inline CompressedInequality compress_inequality(const RationalVector& w, const Rational& W) {
  CompressionRequest req{w, Integer(w.size() + 2)};
  req.w.push_back(W);
  IntegerVector joint = reduce_vector(req);
  CompressedInequality out;
  out.W = joint.back();
  joint.pop_back();
  out.w = std::move(joint);
  return out;
}

struct CompressionVerdict {
  bool pass = true;
  /// First b (enumeration order) whose signs differ.
  std::optional<IntegerVector> witness;
  std::uint64_t vectors_checked = 0;
};

namespace detail {

// Visits every b with ||b||_1 <= budget in lexicographic order of coordinates,
// each coordinate running 0, 1, -1, 2, -2, ...; stops when visit returns false.
inline bool for_each_l1_ball(std::size_t r, std::int64_t budget,
                             const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> b(r, 0);
  std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == r) return visit(b);
    b[i] = 0;
    if (!rec(i + 1, left)) return false;
    for (std::int64_t m = 1; m <= left; ++m) {
      for (std::int64_t s : {m, -m}) {
        b[i] = s;
        if (!rec(i + 1, left - m)) return false;
      }
    }
    b[i] = 0;
    return true;
  };
  return rec(0, budget);
}

}  // namespace detail

/// Default limit on (2N-1)^r for exhaustive verification.
inline constexpr std::uint64_t kDefaultVerifyCap = std::uint64_t{1} << 24;

/// Checks sign(w . b) == sign(w_bar . b) for every b with ||b||_1 <= N - 1.
inline CompressionVerdict verify_compression(const RationalVector& w, const IntegerVector& w_bar,
                                             const Integer& N,
                                             std::uint64_t cap = kDefaultVerifyCap) {
  if (w.size() != w_bar.size()) throw ValidationError("verify_compression: length mismatch");
  if (N < 1) throw ValidationError("verify_compression: N must be at least 1");
  const std::size_t r = w.size();
  if (power(Integer(2 * N - 1), r) > Integer(std::to_string(cap)))
    throw RefusedScale("verify_compression: (2N-1)^r exceeds the enumeration cap");

  // Integer-scaled copy of w so the inner loop has no rationals.
  Integer scale = lcm_of_denominators(w);
  IntegerVector scaled(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational v = w[i] * scale;
    scaled[i] = v.get_num();
  }

  CompressionVerdict verdict;
  Integer lhs, rhs;
  detail::for_each_l1_ball(r, N.get_si() - 1, [&](const std::vector<std::int64_t>& b) {
    ++verdict.vectors_checked;
    lhs = 0;
    rhs = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (b[i] == 0) continue;
      lhs += scaled[i] * b[i];
      rhs += w_bar[i] * b[i];
    }
    if (sgn(lhs) == sgn(rhs)) return true;
    verdict.pass = false;
    verdict.witness = IntegerVector(b.begin(), b.end());
    return false;
  });
  return verdict;
}

}  // namespace kernelcut
