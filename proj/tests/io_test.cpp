#include <gtest/gtest.h>

#include "kernelcut/io.hpp"
#include "kernelcut/random.hpp"

using namespace kernelcut;

namespace {

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ValidationError";
  return 0;
}

}  // namespace

TEST(Io, RoundTripEveryFormat) {
  Random rng(127);
  for (int trial = 0; trial < 20; ++trial) {
    auto w = random_rational_vector(rng, 1 + rng.below(5), 1000000, 1000000);
    EXPECT_EQ(parse_vector(serialize_vector(w)), w);
    auto ks = random_knapsack(rng, rng.below(6), 1000, 1000);
    EXPECT_EQ(parse_knapsack(serialize(ks)), ks);
    auto ss = random_subset_sum(rng, rng.below(6), 1000);
    EXPECT_EQ(parse_subset_sum(serialize(ss)), ss);
    auto hs = random_set_system(rng, SetSystemVariant::kHittingSet, 2, 2, 8, 10, 9);
    hs.weights[0] = Rational(7, 3);
    EXPECT_EQ(parse_set_system(serialize(hs)), hs);
    auto sp = random_set_system(rng, SetSystemVariant::kSetPacking, 3, 1, 9, 10, 9);
    EXPECT_EQ(parse_set_system(serialize(sp)), sp);
    auto mc = random_max_cut(rng, 1 + rng.below(6), 5, 4);
    EXPECT_EQ(parse_max_cut(serialize(mc)), mc);
    auto bp = random_bin_packing(rng, rng.below(6), 20, 3);
    EXPECT_EQ(parse_bin_packing(serialize(bp)), bp);
    auto gk = random_grouped_knapsack(rng, 1 + rng.below(3), 4, 30, 6);
    EXPECT_EQ(parse_grouped_knapsack(serialize(gk)), gk);
    auto gs = random_grouped_subset_sum(rng, 1 + rng.below(3), 8, 1000);
    EXPECT_EQ(parse_grouped_subset_sum(serialize(gs)), gs);
    auto f = random_polynomial(rng, 2, 2, rng.below(5), 1000, 1000);
    EXPECT_EQ(parse_polynomial(serialize(f)), f);
    auto ipp = random_ipp(rng, 2, 2, 3, rng.below(3), 2, 1000, 1000);
    EXPECT_EQ(parse_ipp(serialize(ipp)), ipp);
    auto phi = random_cnf(rng, 1 + rng.below(4), rng.below(4));
    auto back = parse_cnf(serialize(phi));
    EXPECT_EQ(back.variables, phi.variables);
    EXPECT_EQ(back.clauses, phi.clauses);
  }
}

TEST(Io, ProblemTag) {
  EXPECT_EQ(problem_tag("# note\nproblem max-cut version 1\nvertices 1\nW 1\n"), "max-cut");
  EXPECT_EQ(problem_tag("c comment\np cnf 1 1\n1 1 1 0\n"), "cnf");
}

TEST(Io, ExactRationalText) {
  KnapsackInstance inst{{Rational(-1, 2)}, {2}, Rational(1, 3), 0};
  std::string text = serialize(inst);
  EXPECT_NE(text.find("w -1/2\n"), std::string::npos);
  EXPECT_NE(text.find("W 1/3\n"), std::string::npos);
}

TEST(Io, EmptySubsetSum) {
  auto inst = parse_subset_sum("problem subset-sum version 1\na\nb 0\n");
  EXPECT_TRUE(inst.a.empty());
  EXPECT_EQ(inst.b, 0);
}

TEST(Io, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line([] { parse_subset_sum("problem subset-sum version 1\n# c\na 1 x\nb 2\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_subset_sum("problem subset-sum version 1\na 1\nb 2\nb 3\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_subset_sum("problem subset-sum version 1\na 1\nbogus 2\nb 1\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_knapsack("\nproblem knapsack version 1\nn 1\nw 1\np 1\nW 1\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_max_cut("problem max-cut version 1\nvertices 2\nW 1\nedge 0 1\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_polynomial("problem polynomial version 1\nvariables 2\ndegree 2\nterm 1 : 1\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_vector("problem knapsack version 1\nvalues 1\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_bin_packing("problem bin-packing version 2\nb 1\nk 1\nitems\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_subset_sum("problem subset-sum version 1\na 1/2\nb 1\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_cnf("p cnf 2 1\n1 2 0\n"); }), 2u);
}

TEST(Io, SemanticErrorsRejected) {
  EXPECT_THROW(parse_set_system("problem hitting-set version 1\nd 2\nk 1\nW 1\nelement 1 1\nset 1 2\n"),
               ValidationError);
  EXPECT_THROW(parse_grouped_subset_sum("problem grouped-subset-sum version 1\nt 1\nclass 2 1\nclass 2 3\n"),
               ValidationError);
  EXPECT_THROW(parse_subset_sum(""), ValidationError);
}

TEST(Io, CnfWithComments) {
  auto phi = parse_cnf("c hello\np cnf 3 2\n1 -2 3 0\nc mid\n-1 -1 2 0\n");
  EXPECT_EQ(phi.variables, 3u);
  ASSERT_EQ(phi.clauses.size(), 2u);
  EXPECT_EQ(phi.clauses[1], (std::array<int, 3>{-1, -1, 2}));
}
