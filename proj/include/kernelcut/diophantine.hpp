#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kernelcut/errors.hpp"
#include "kernelcut/lattice.hpp"
#include "kernelcut/numbers.hpp"

namespace kernelcut {

struct SimultaneousApproximation {
  IntegerVector p;
  Integer q;
};

/// 2^(n(n+1)/4) * eps^(-n) compared as q^4 <= 2^(n(n+1)) * eps^(-4n).
inline bool within_approximation_bound(const Integer& q, std::size_t n, const Rational& eps) {
  Rational rhs = Rational(pow2(n * (n + 1))) * power(Rational(1) / eps, 4 * n);
  return Rational(power(q, 4)) <= rhs;
}

namespace detail {

// Exchange parameter used for the approximation lattice. It leaves enough room
// between the LLL guarantee and the classical denominator bound to pick a
// rational scaling constant even when n(n+1)/4 is not an integer.
inline const Rational& approximation_lll_delta() {
  static const Rational delta(99, 100);
  return delta;
}

// D with (100/74)^(n(n+1)/4) <= D <= 2^(n(n+1)/4).
inline Rational approximation_scale(std::size_t n) {
  const std::uint64_t twice = n * (n + 1) / 2;  // 2 * n(n+1)/4
  Rational d(pow2(twice / 2));
  if (twice % 2 == 1) d *= Rational(7, 5);
  return d;
}

inline std::optional<SimultaneousApproximation> approximate_with_scale(
    const RationalVector& alpha, const Rational& eps, const Rational& scale) {
  const std::size_t n = alpha.size();
  std::vector<RationalVector> basis(n + 1, RationalVector(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
    basis[n][i] = alpha[i];
  }
  basis[n][n] = scale;

  ReducedBasis reduced = lll_reduce(basis, approximation_lll_delta());
  for (std::size_t row = 0; row < reduced.rows.size(); ++row) {
    const IntegerVector& h = reduced.transform[row];
    const Integer& q = h[n];
    if (q == 0 || !within_approximation_bound(abs(q), n, eps)) continue;
    bool close = true;
    for (std::size_t i = 0; i < n && close; ++i) close = abs(reduced.rows[row][i]) <= eps;
    if (!close) continue;
    // row = sum_i h_i e_i + q (alpha, scale), so q alpha_i - p_i = row_i with p_i = -h_i.
    int flip = q < 0 ? -1 : 1;
    SimultaneousApproximation out{IntegerVector(n), flip * q};
    for (std::size_t i = 0; i < n; ++i) out.p[i] = -flip * h[i];
    return out;
  }
  return std::nullopt;
}

}  // namespace detail

/// Finds q >= 1 and integers p with |q * alpha_i - p_i| <= eps for all i and
/// q <= 2^(n(n+1)/4) * eps^(-n).
///
/// When the exact common denominator of alpha already satisfies the bound it
/// is returned with zero error. Otherwise the answer is read off an
/// LLL-reduced basis of the lattice spanned by the unit vectors and
/// (alpha, eps^(n+1) / D); with D = approximation_scale(n) the first reduced
/// row is admissible.
inline SimultaneousApproximation simultaneous_approx(const RationalVector& alpha,
                                                     const Rational& eps) {
  if (eps <= 0 || eps >= 1)
    throw ValidationError("simultaneous_approx: eps must satisfy 0 < eps < 1");
  const std::size_t n = alpha.size();

  Integer common = lcm_of_denominators(alpha);
  if (within_approximation_bound(common, n, eps)) {
    SimultaneousApproximation exact{IntegerVector(n), common};
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = alpha[i] * common;
      exact.p[i] = v.get_num();
    }
    return exact;
  }

  // A lattice scaled without the 2^(n(n+1)/4) slack usually already yields an
  // admissible row, with much smaller numbers; the guaranteed scaling is the
  // fallback.
  for (const Rational& slack : {Rational(1), detail::approximation_scale(n)}) {
    if (auto found = detail::approximate_with_scale(alpha, eps, power(eps, n + 1) / slack))
      return *found;
  }
  // The first reduced row always qualifies; reaching here is a bug.
  throw std::logic_error("simultaneous_approx: reduced basis has no admissible row");
}

}  // namespace kernelcut
