#include <gtest/gtest.h>

#include "kernelcut/polyprog.hpp"
#include "kernelcut/random.hpp"

using namespace kernelcut;

namespace {

std::vector<IntegerVector> box(std::size_t n, long u) {
  std::vector<IntegerVector> out{IntegerVector()};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IntegerVector> next;
    for (const auto& p : out)
      for (long t = -u; t <= u; ++t) {
        IntegerVector q = p;
        q.push_back(t);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

// Direct evaluation, independent of the library's eval.
Rational value(const Polynomial& f, const IntegerVector& x) {
  Rational v = 0;
  for (const auto& t : f.terms) {
    Rational m = t.coefficient;
    for (std::size_t j = 0; j < x.size(); ++j)
      for (std::uint32_t e = 0; e < t.exponents[j]; ++e) m *= x[j];
    v += m;
  }
  return v;
}

bool same_order(const Polynomial& f, const Polynomial& g, long u) {
  auto pts = box(f.variables, u);
  std::vector<Rational> fv, gv;
  for (const auto& p : pts) {
    fv.push_back(value(f, p));
    gv.push_back(value(g, p));
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (sgn(fv[i] - fv[j]) != sgn(gv[i] - gv[j])) return false;
  return true;
}

std::vector<bool> feasible(const IppInstance& inst) {
  std::vector<bool> out;
  for (const auto& x : box(inst.variables, inst.u.get_si())) {
    bool ok = value(inst.objective, x) <= inst.z;
    for (std::size_t i = 0; i < inst.constraints.size(); ++i) ok = ok && value(inst.constraints[i], x) <= inst.bounds[i];
    out.push_back(ok);
  }
  return out;
}

Polynomial poly(std::size_t n, std::uint64_t d, std::vector<Monomial> terms) {
  Polynomial f{n, d, std::move(terms)};
  normalize(f);
  return f;
}

}  // namespace

TEST(Polynomial, Eval) {
  IntegerVector x{2, 3};
  EXPECT_EQ(eval(poly(2, 2, {}), x), 0);
  EXPECT_EQ(eval(poly(2, 2, {{{1, 1}, 1}}), x), 6);
  EXPECT_EQ(eval(poly(2, 2, {{{2, 0}, 1}, {{0, 1}, -1}}), IntegerVector{-2, 1}), 3);
  EXPECT_THROW(eval(poly(2, 2, {}), IntegerVector{1}), ValidationError);
}

TEST(Polynomial, GradedLexOrder) {
  auto f = poly(2, 2, {{{0, 1}, 1}, {{2, 0}, 1}, {{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}});
  std::vector<Exponents> order;
  for (const auto& t : f.terms) order.push_back(t.exponents);
  EXPECT_EQ(order, (std::vector<Exponents>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}}));
}

TEST(Polynomial, Validation) {
  EXPECT_THROW(validate(poly(1, 1, {{{2}, 1}})), ValidationError);
  EXPECT_THROW(validate(poly(1, 2, {{{1}, 1}, {{1}, 2}})), ValidationError);
  EXPECT_THROW(validate(poly(1, 2, {{{1}, 0}})), ValidationError);
  EXPECT_THROW(validate(poly(2, 2, {{{1}, 1}})), ValidationError);
}

TEST(CompressPolynomial, Constant) {
  auto f = poly(1, 0, {{{0}, Rational(5, 3)}});
  auto g = compress_polynomial(f, 3);
  ASSERT_EQ(g.terms.size(), 1u);
  EXPECT_EQ(g.terms[0].coefficient.get_den(), 1);
  EXPECT_TRUE(same_order(f, g, 3));
}

TEST(CompressPolynomial, Linear) {
  auto f = poly(1, 1, {{{1}, Rational(1, 3)}});
  auto g = compress_polynomial(f, 2);
  EXPECT_GT(g.terms[0].coefficient, 0);
  EXPECT_TRUE(same_order(f, g, 2));
}

TEST(CompressPolynomial, TwoVariablesQuadratic) {
  auto f = poly(2, 2, {{{2, 0}, Rational(1, 2)}, {{0, 1}, Rational(-1, 3)}});
  auto g = compress_polynomial(f, 2);
  EXPECT_TRUE(same_order(f, g, 2));
  ASSERT_EQ(g.terms.size(), 2u);
  EXPECT_EQ(g.terms[0].exponents, f.terms[0].exponents);
  EXPECT_EQ(g.terms[1].exponents, f.terms[1].exponents);
}

TEST(CompressPolynomial, RandomSignsSupportAndBound) {
  Random rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(2);
    const std::uint64_t d = 1 + rng.below(2);
    const long u = 1 + static_cast<long>(rng.below(2));
    auto f = random_polynomial(rng, n, d, 1 + rng.below(4), 1000000, 1000000);
    auto g = compress_polynomial(f, u);
    EXPECT_TRUE(same_order(f, g, u)) << "trial " << trial;
    ASSERT_EQ(g.terms.size(), f.terms.size());
    IntegerVector coefficients;
    for (std::size_t i = 0; i < g.terms.size(); ++i) {
      EXPECT_EQ(g.terms[i].exponents, f.terms[i].exponents);
      EXPECT_EQ(g.terms[i].coefficient.get_den(), 1);
      coefficients.push_back(g.terms[i].coefficient.get_num());
    }
    EXPECT_TRUE(within_compression_bound(coefficients, g.r(), polynomial_radius(g.r(), d, u)));
  }
}

TEST(CompressPolynomial, RejectsBadRadius) {
  EXPECT_THROW(compress_polynomial(poly(1, 1, {}), 0), ValidationError);
}

TEST(CompressIpp, EmptyProgram) {
  IppInstance inst;
  inst.variables = 1;
  inst.degree = 1;
  inst.objective = poly(1, 1, {});
  auto k = compress_ipp(inst);
  EXPECT_TRUE(solve_ipp_brute(k.instance).yes);
  EXPECT_GE(k.instance.z, 0);
}

TEST(CompressIpp, OneVariableExample) {
  IppInstance inst;
  inst.variables = 1;
  inst.degree = 1;
  inst.u = 3;
  inst.objective = poly(1, 1, {{{1}, Rational(1, 7)}});
  inst.z = 0;
  inst.constraints.push_back(poly(1, 1, {{{1}, 1}}));
  inst.bounds.push_back(0);
  auto k = compress_ipp(inst);
  EXPECT_EQ(feasible(inst), feasible(k.instance));
  // x in {-3..0}
  EXPECT_EQ(feasible(inst), (std::vector<bool>{true, true, true, true, false, false, false}));
}

// A nonzero constant term must not shift the threshold.
TEST(CompressIpp, ConstantTermHandled) {
  IppInstance inst;
  inst.variables = 1;
  inst.degree = 2;
  inst.u = 2;
  inst.objective = poly(1, 2, {{{0}, 3}, {{2}, 1}});
  inst.z = 4;
  auto k = compress_ipp(inst);
  EXPECT_EQ(feasible(inst), feasible(k.instance));
  EXPECT_EQ(feasible(inst), (std::vector<bool>{false, true, true, true, false}));
}

TEST(CompressIpp, RandomFeasibleSets) {
  Random rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(2);
    const std::uint64_t d = 1 + rng.below(2);
    auto inst = random_ipp(rng, n, d, 4, rng.below(3), 1 + static_cast<long>(rng.below(2)), 1000, 1000);
    auto k = compress_ipp(inst);
    EXPECT_EQ(feasible(inst), feasible(k.instance)) << "trial " << trial;
    EXPECT_TRUE(k.report.bound_ok);
    EXPECT_EQ(solve_ipp_brute(inst).yes, solve_ipp_brute(k.instance).yes);
    EXPECT_EQ(k.instance, compress_ipp(inst).instance);
  }
}

TEST(SolveIpp, Examples) {
  IppInstance inst;
  inst.variables = 2;
  inst.degree = 1;
  inst.objective = poly(2, 1, {});
  auto yes = solve_ipp_brute(inst);
  EXPECT_TRUE(yes.yes);
  EXPECT_EQ(*yes.witness, (IntegerVector{0, 0}));
  inst.constraints.push_back(poly(2, 1, {}));
  inst.bounds.push_back(-1);
  EXPECT_FALSE(solve_ipp_brute(inst).yes);
}

TEST(SolveIpp, CapAndShapeErrors) {
  IppInstance inst;
  inst.variables = 8;
  inst.degree = 1;
  inst.u = 10;
  inst.objective = poly(8, 1, {});
  EXPECT_THROW(solve_ipp_brute(inst), RefusedScale);
  inst.objective = poly(7, 1, {});
  EXPECT_THROW(solve_ipp_brute(inst), ValidationError);
}
