#include "gpi/error.hpp"
#include "gpi/genmat.hpp"
#include "random_words.hpp"

#include <gtest/gtest.h>

using namespace gpi;

namespace {

ScalarPoly y(VarId k, std::uint32_t row, std::uint32_t col) {
  return ScalarPoly::of(ScalarMonomial::of(ScalarVar{k, row, col}));
}

Context z3(std::initializer_list<std::pair<VarId, std::uint32_t>> degs) {
  Context ctx(GradingTuple(cyclic_group(3)));
  for (auto [v, d] : degs) ctx.declare(v, Element{d});
  return ctx;
}

/// Naive n x n product used as the oracle for evaluation.
GenericMatrix naive_product(const GenericMatrix& a, const GenericMatrix& b) {
  GenericMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

}  // namespace

TEST(Generic, Examples) {
  GradingTuple g(cyclic_group(3));
  GenericMatrix d = generic(g, 1, Element{0});
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(d.at(i, i), y(1, i, i));
  EXPECT_EQ(d.nonzero_count(), 3u);
  GenericMatrix s = generic(g, 1, Element{1});
  EXPECT_EQ(s.at(0, 1), y(1, 0, 1));
  EXPECT_EQ(s.at(1, 2), y(1, 1, 2));
  EXPECT_EQ(s.at(2, 0), y(1, 2, 0));
  EXPECT_EQ(s.nonzero_count(), 3u);
  GenericMatrix one = generic(GradingTuple(cyclic_group(1)), 4, Element{0});
  EXPECT_EQ(one.dim(), 1u);
  EXPECT_EQ(one.at(0, 0), y(4, 0, 0));
}

TEST(EvalWord, DirectExamples) {
  Context ctx = z3({{1, 1}, {2, 2}, {3, 1}, {4, 1}, {5, 1}});
  EXPECT_EQ(eval_word_direct(ctx, {1}), generic(ctx.grading(), 1, Element{1}));
  GenericMatrix m = eval_word_direct(ctx, {1, 2});
  for (std::uint32_t j = 0; j < 3; ++j) EXPECT_EQ(m.at(j, j), y(1, j, (j + 1) % 3) * y(2, (j + 1) % 3, j));
  EXPECT_EQ(m.nonzero_count(), 3u);
  GenericMatrix t = eval_word_direct(ctx, {3, 4, 5});
  for (std::uint32_t j = 0; j < 3; ++j) {
    EXPECT_EQ(t.at(j, j), y(3, j, (j + 1) % 3) * y(4, (j + 1) % 3, (j + 2) % 3) * y(5, (j + 2) % 3, j));
  }
  EXPECT_EQ(eval_word_direct(ctx, {}), GenericMatrix::identity(3));
}

TEST(EvalWord, TwoFactorProductFormula) {
  // A_{k,h1} A_{l,h2} = sum_i y^k_{i,phi_h1(i)} y^l_{phi_h1(i), phi_h2(phi_h1(i))} e_{i, .}
  for (const auto& G : {cyclic_group(3), testutil::symmetric3()}) {
    GradingTuple g(G);
    for (auto h1 : G.elements())
      for (auto h2 : G.elements()) {
        Context ctx(g);
        ctx.declare(1, h1);
        ctx.declare(2, h2);
        GenericMatrix m = eval_word_closed(ctx, {1, 2});
        for (std::size_t i = 0; i < g.size(); ++i) {
          const auto a = static_cast<std::uint32_t>(g.phi(h1, i));
          const auto b = static_cast<std::uint32_t>(g.phi(h2, a));
          EXPECT_EQ(m.at(i, b), y(1, static_cast<std::uint32_t>(i), a) * y(2, a, b));
        }
      }
  }
}

TEST(EvalWord, ClosedFormMatchesProducts) {
  std::mt19937_64 rng(testutil::seed_from_env());
  for (const auto& G : {cyclic_group(2), cyclic_group(3), cyclic_group(4), testutil::symmetric3()}) {
    GradingTuple g(G);
    Context ctx = testutil::random_context(g, 4, rng);
    for (int i = 0; i < 60; ++i) {
      const Word w = testutil::random_word(4, 1 + rng() % 6, rng);
      GenericMatrix direct = generic(g, w[0], ctx.degree(w[0]));
      for (std::size_t k = 1; k < w.size(); ++k) direct = naive_product(direct, generic(g, w[k], ctx.degree(w[k])));
      const GenericMatrix closed = eval_word_closed(ctx, w);
      ASSERT_EQ(closed, direct) << to_string(w);
      ASSERT_EQ(eval_word_direct(ctx, w), direct);
      ASSERT_EQ(closed.nonzero_count(), g.size());
      // Every nonzero entry sits in a matrix unit of the word's degree.
      for (std::size_t r = 0; r < g.size(); ++r)
        for (std::size_t c = 0; c < g.size(); ++c)
          if (!closed.at(r, c).is_zero()) ASSERT_EQ(g.unit_degree(r, c), ctx.word_degree(w));
    }
  }
}

TEST(EvalPoly, Examples) {
  Context zero = z3({{1, 0}, {2, 0}});
  EXPECT_TRUE(eval_poly(zero, FreePoly{}).is_zero());
  EXPECT_TRUE(eval_poly(zero, bracket(Word{1}, Word{2})).is_zero());
  Context ctx = z3({{1, 1}, {2, 2}});
  GenericMatrix m = eval_poly(ctx, bracket(Word{1}, Word{2}));
  EXPECT_FALSE(m.is_zero());
  EXPECT_EQ(m.at(0, 0), y(1, 0, 1) * y(2, 1, 0) - y(2, 0, 2) * y(1, 2, 0));
}

TEST(EvalPoly, IsLinear) {
  std::mt19937_64 rng(testutil::seed_from_env() + 1);
  Context ctx = testutil::random_context(GradingTuple(cyclic_group(3)), 3, rng);
  for (int i = 0; i < 50; ++i) {
    const Word a = testutil::random_word(3, 1 + rng() % 4, rng);
    const Word b = testutil::random_word(3, 1 + rng() % 4, rng);
    const FreePoly p = FreePoly::monomial(a, 2) - FreePoly::monomial(b, 5);
    GenericMatrix expect(3);
    GenericMatrix ea = eval_word_direct(ctx, a);
    GenericMatrix eb = eval_word_direct(ctx, b);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        ScalarPoly v;
        for (const auto& [mono, coeff] : ea.at(r, c).terms()) v.add_term(mono, coeff * 2);
        for (const auto& [mono, coeff] : eb.at(r, c).terms()) v.add_term(mono, coeff * -5);
        expect.at(r, c) = v;
      }
    ASSERT_EQ(eval_poly(ctx, p), expect);
  }
}
