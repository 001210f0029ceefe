#pragma once

// Sparse polynomials over bounded integer boxes: coefficient compression and
// compression of Integer Polynomial Programming instances.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kernelcut/errors.hpp"
#include "kernelcut/frank_tardos.hpp"
#include "kernelcut/numbers.hpp"
#include "kernelcut/report.hpp"

namespace kernelcut {

using Exponents = std::vector<std::uint32_t>;

struct Monomial {
  Exponents exponents;
  Rational coefficient;

  std::uint64_t degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
  }
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic: lower total degree first, then larger exponent
/// vectors first.
inline bool graded_lex_less(const Exponents& a, const Exponents& b) {
  auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return a > b;
}

struct Polynomial {
  std::size_t variables = 0;
  std::uint64_t degree = 0;
  std::vector<Monomial> terms;

  std::size_t r() const { return terms.size(); }
  bool operator==(const Polynomial&) const = default;
};

/// Sorts the terms into graded-lex order.
inline void normalize(Polynomial& f) {
  std::stable_sort(f.terms.begin(), f.terms.end(), [](const Monomial& a, const Monomial& b) {
    return graded_lex_less(a.exponents, b.exponents);
  });
}

/// Exponent vectors distinct and of length n, total degree <= d, nonzero
/// coefficients unless allow_zero is set.
inline void validate(const Polynomial& f, bool allow_zero = false) {
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    const auto& t = f.terms[i];
    if (t.exponents.size() != f.variables)
      throw ValidationError("polynomial: exponent vector has " + std::to_string(t.exponents.size()) +
                            " entries, expected " + std::to_string(f.variables));
    if (t.degree() > f.degree)
      throw ValidationError("polynomial: monomial degree exceeds " + std::to_string(f.degree));
    if (!allow_zero && t.coefficient == 0) throw ValidationError("polynomial: zero coefficient");
    for (std::size_t j = 0; j < i; ++j)
      if (f.terms[j].exponents == t.exponents) throw ValidationError("polynomial: repeated monomial");
  }
}

inline Integer monomial_value(const Exponents& e, std::span<const Integer> x) {
  Integer v = 1;
  for (std::size_t j = 0; j < e.size(); ++j) v *= power(x[j], e[j]);
  return v;
}

inline Rational eval(const Polynomial& f, std::span<const Integer> x) {
  if (x.size() != f.variables)
    throw ValidationError("eval: point has " + std::to_string(x.size()) + " coordinates, expected " +
                          std::to_string(f.variables));
  Rational v = 0;
  for (const auto& t : f.terms) v += t.coefficient * monomial_value(t.exponents, x);
  return v;
}

/// Every b_i = f_i(x) - f_i(y) lies in [-2u^d, 2u^d], so ||b||_1 <= 2ru^d.
inline Integer polynomial_radius(std::size_t r, std::uint64_t d, const Integer& u) {
  return 2 * Integer(static_cast<unsigned long>(r)) * power(u, d) + 1;
}

/// Same support, integer coefficients, and the same sign of f(x) - f(y) for
/// all x, y in {-u..u}^n.
inline Polynomial compress_polynomial(const Polynomial& f, const Integer& u) {
  if (u < 1) throw ValidationError("compress_polynomial: u must be at least 1");
  validate(f, true);
  Polynomial g = f;
  normalize(g);
  CompressionRequest req{{}, polynomial_radius(g.r(), g.degree, u)};
  for (const auto& t : g.terms) req.w.push_back(t.coefficient);
  IntegerVector w = reduce_vector(req);
  for (std::size_t i = 0; i < g.terms.size(); ++i) g.terms[i].coefficient = w[i];
  return g;
}

struct IppInstance {
  std::size_t variables = 0;
  std::uint64_t degree = 0;
  Integer u = 1;
  Polynomial objective;
  Rational z = 0;
  std::vector<Polynomial> constraints;
  RationalVector bounds;

  bool operator==(const IppInstance&) const = default;
};

inline void validate(const IppInstance& inst) {
  if (inst.u < 1) throw ValidationError("ipp: u must be at least 1");
  if (inst.constraints.size() != inst.bounds.size())
    throw ValidationError("ipp: constraint and bound counts differ");
  auto check = [&](const Polynomial& f) {
    if (f.variables != inst.variables || f.degree != inst.degree)
      throw ValidationError("ipp: polynomials must share n and d");
    validate(f, true);
  };
  check(inst.objective);
  for (const auto& g : inst.constraints) check(g);
}

namespace detail {

struct CompressedPair {
  Polynomial f;
  Rational bound;
  Integer N;
  IntegerVector coefficients;
};

// Compresses the predicate f(x) <= beta over the box. The lifted polynomial
// f'(x, y) = f(x) + (beta - f(0)) y satisfies f'(x, 0) - f'(0, 1) = f(x) - beta,
// with y in {0, 1} as an extra box variable. Lifting by beta alone would
// compare f(x) against beta + f(0).
inline CompressedPair compress_pair(const Polynomial& f, const Rational& beta, const Integer& u) {
  Polynomial lifted = f;
  normalize(lifted);
  Rational constant = 0;
  for (const auto& t : lifted.terms)
    if (t.degree() == 0) constant = t.coefficient;
  for (auto& t : lifted.terms) t.exponents.push_back(0);
  lifted.variables += 1;
  lifted.degree = std::max<std::uint64_t>(lifted.degree, 1);
  const Rational slope = beta - constant;
  if (slope != 0) {
    Exponents y(lifted.variables, 0);
    y.back() = 1;
    lifted.terms.push_back({y, slope});
    normalize(lifted);
  }

  Polynomial squeezed = compress_polynomial(lifted, u);
  CompressedPair out;
  out.N = polynomial_radius(lifted.r(), lifted.degree, u);
  out.f.variables = f.variables;
  out.f.degree = f.degree;
  Rational y_coefficient = 0, new_constant = 0;
  for (auto& t : squeezed.terms) {
    out.coefficients.push_back(t.coefficient.get_num());
    if (t.exponents.back() == 1) {
      y_coefficient = t.coefficient;
      continue;
    }
    t.exponents.pop_back();
    if (t.degree() == 0) new_constant = t.coefficient;
    out.f.terms.push_back(std::move(t));
  }
  out.bound = y_coefficient + new_constant;
  return out;
}

}  // namespace detail

struct IppKernel {
  IppInstance instance;
  KernelReport report;
};

inline std::size_t encoding_bits(const Polynomial& f) {
  std::size_t bits = 0;
  for (const auto& t : f.terms) {
    bits += bit_length(t.coefficient);
    for (auto e : t.exponents) bits += bit_length(Integer(static_cast<unsigned long>(e)));
  }
  return bits;
}

inline std::size_t encoding_bits(const IppInstance& inst) {
  std::size_t bits = encoding_bits(inst.objective) + bit_length(inst.z) + bit_length(inst.u) +
                     bit_length(Integer(static_cast<unsigned long>(inst.degree)));
  for (std::size_t i = 0; i < inst.constraints.size(); ++i)
    bits += encoding_bits(inst.constraints[i]) + bit_length(inst.bounds[i]);
  return bits;
}

/// Equivalent instance with integer coefficients: for every x in the box,
/// c(x) <= z iff c~(x) <= z~ and g_i(x) <= b_i iff g~_i(x) <= b~_i.
inline IppKernel compress_ipp(const IppInstance& inst) {
  validate(inst);
  IppKernel out;
  KernelReport& report = out.report;
  report.problem = "ipp";
  report.original_bits = encoding_bits(inst);
  out.instance.variables = inst.variables;
  out.instance.degree = inst.degree;
  out.instance.u = inst.u;

  auto record = [&](const detail::CompressedPair& pair, const std::string& label) {
    const std::size_t r = pair.coefficients.size();
    report.r = std::max(report.r, r);
    if (pair.N > report.N) report.N = pair.N;
    report.bound_ok = report.bound_ok && within_compression_bound(pair.coefficients, r, pair.N);
    report.note(label + ": r=" + std::to_string(r) + " N=" + pair.N.get_str());
  };

  auto objective = detail::compress_pair(inst.objective, inst.z, inst.u);
  record(objective, "objective");
  out.instance.objective = std::move(objective.f);
  out.instance.z = objective.bound;
  for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
    auto pair = detail::compress_pair(inst.constraints[i], inst.bounds[i], inst.u);
    record(pair, "constraint " + std::to_string(i + 1));
    out.instance.constraints.push_back(std::move(pair.f));
    out.instance.bounds.push_back(pair.bound);
  }
  report.rule_firings = 1 + inst.constraints.size();
  report.kernel_bits = encoding_bits(out.instance);
  return out;
}

namespace detail {

/// Visits every point of {-u..u}^n in lexicographic order with coordinate
/// values ordered 0, 1, -1, 2, -2, ...; stops when visit returns true.
inline bool for_each_box_point(std::size_t n, const Integer& u,
                               const std::function<bool(const IntegerVector&)>& visit) {
  IntegerVector x(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return visit(x);
    x[i] = 0;
    if (rec(i + 1)) return true;
    for (Integer t = 1; t <= u; ++t) {
      x[i] = t;
      if (rec(i + 1)) return true;
      x[i] = -t;
      if (rec(i + 1)) return true;
    }
    x[i] = 0;
    return false;
  };
  return rec(0);
}

}  // namespace detail

inline bool satisfies(const IppInstance& inst, std::span<const Integer> x) {
  if (eval(inst.objective, x) > inst.z) return false;
  for (std::size_t i = 0; i < inst.constraints.size(); ++i)
    if (eval(inst.constraints[i], x) > inst.bounds[i]) return false;
  return true;
}

struct IppAnswer {
  bool yes = false;
  std::optional<IntegerVector> witness;
};

inline constexpr std::uint64_t kDefaultBoxCap = std::uint64_t{1} << 20;

inline IppAnswer solve_ipp_brute(const IppInstance& inst, std::uint64_t cap = kDefaultBoxCap) {
  validate(inst);
  const Integer side = 2 * inst.u + 1;
  if (power(side, inst.variables) > Integer(std::to_string(cap)))
    throw RefusedScale("solve_ipp_brute: box (2u+1)^n exceeds " + std::to_string(cap));
  IppAnswer answer;
  detail::for_each_box_point(inst.variables, inst.u, [&](const IntegerVector& x) {
    if (!satisfies(inst, x)) return false;
    answer.yes = true;
    answer.witness = x;
    return true;
  });
  return answer;
}

}  // namespace kernelcut
