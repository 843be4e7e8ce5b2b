#include "gpi/dsl.hpp"
#include "gpi/error.hpp"
#include "random_words.hpp"

#include <gtest/gtest.h>

using namespace gpi;

namespace {

struct Pos {
  std::size_t line, column;
};

Pos error_at(std::string_view text) {
  try {
    dsl::parse_document(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return {0, 0};
}

}  // namespace

TEST(Parse, FullDocument) {
  const auto doc = dsl::parse_document(
      "# type 2\n"
      "group: Z3\n"
      "vars: x1:1 x2:2 x3:1\n"
      "poly: x1*x2*x3 - x3*x2*x1\n"
      "m: x1*x2*x3\n"
      "n: x3*x2*x1\n"
      "generator: type2 x1 | x2 | x3\n");
  EXPECT_EQ(doc.context.group().order(), 3u);
  EXPECT_EQ(doc.context.degree(2), Element{2});
  ASSERT_TRUE(doc.poly);
  EXPECT_EQ(*doc.poly, FreePoly::monomial({1, 2, 3}) - FreePoly::monomial({3, 2, 1}));
  EXPECT_EQ(*doc.m, (Word{1, 2, 3}));
  EXPECT_EQ(*doc.n, (Word{3, 2, 1}));
  ASSERT_TRUE(doc.generator);
  EXPECT_EQ(expand(*doc.generator), *doc.poly);
}

TEST(Parse, GroupForms) {
  EXPECT_EQ(dsl::parse_document("group: Z<4>\nvars: x1:3\n").context.group().order(), 4u);
  EXPECT_EQ(dsl::parse_document("group: Z_2\nvars: x1:1\n").context.group().order(), 2u);
  const auto doc = dsl::parse_document("group: table [[0,1],[1,0]]\ngrading: 1 0\nvars: x1:1\n");
  EXPECT_EQ(doc.context.grading().tuple(), (std::vector<Element>{Element{1}, Element{0}}));
}

TEST(Parse, Expressions) {
  const auto doc = dsl::parse_document("group: Z3\nvars: x1:0 x2:0 x3:1\n");
  const auto& ctx = doc.context;
  EXPECT_EQ(dsl::parse_poly("[x1, x2]", ctx), bracket(Word{1}, Word{2}));
  EXPECT_EQ(dsl::parse_poly("[x1*x2, x3] - 2*x3*x1", ctx),
            FreePoly::monomial({1, 2, 3}) - FreePoly::monomial({3, 1, 2}) - FreePoly::monomial({3, 1}, 2));
  EXPECT_EQ(dsl::parse_poly("(x1 + x2)*x3", ctx), FreePoly::monomial({1, 3}) + FreePoly::monomial({2, 3}));
  EXPECT_EQ(dsl::parse_poly("0", ctx), FreePoly{});
  EXPECT_EQ(dsl::parse_poly("123456789012345678901234567890*x1", ctx).terms().begin()->second,
            Integer("123456789012345678901234567890"));
  EXPECT_EQ(dsl::parse_word("x3*x1", ctx), (Word{3, 1}));
}

TEST(Parse, ErrorPositions) {
  auto p = error_at("group: Z3\nvars: x1:1\npoly: x1 + x9\n");
  EXPECT_EQ(p.line, 3u);
  EXPECT_EQ(p.column, 12u);
  p = error_at("group: Z3\nvars: x1:5\n");
  EXPECT_EQ(p.line, 2u);
  p = error_at("group: Z3\nvars: x1:1\nfoo: 1\n");
  EXPECT_EQ(p.line, 3u);
  EXPECT_EQ(p.column, 1u);
  p = error_at("group: Z3\nvars: x1:1\npoly: x1\npoly: x1\n");
  EXPECT_EQ(p.line, 4u);
  p = error_at("vars: x1:1\n");
  EXPECT_EQ(p.line, 1u);
  p = error_at("group: Z3\n");
  EXPECT_EQ(p.line, 1u);
  p = error_at("group: Z3\nvars: x1:1 x2:2\ngenerator: type1 x1 | x2\n");
  EXPECT_EQ(p.line, 3u);
  p = error_at("group: Z3\nvars: x1:1 x2:2\ngenerator: type2 x1 | | x2\n");
  EXPECT_EQ(p.line, 3u);
  p = error_at("group: Z3\nvars: x1:1\npoly: (x1\n");
  EXPECT_EQ(p.line, 3u);
  p = error_at("group: table [[0,1],[0,1]]\nvars: x1:1\n");
  EXPECT_EQ(p.line, 1u);
}

TEST(Parse, MissingFile) {
  EXPECT_THROW(dsl::parse_file("/nonexistent/input.gpi"), Error);
}

TEST(Format, RoundTrip) {
  std::mt19937_64 rng(testutil::seed_from_env());
  for (const auto& G : {cyclic_group(3), testutil::symmetric3()}) {
    GradingTuple grading(G);
    for (int i = 0; i < 40; ++i) {
      dsl::Document doc;
      const GeneratorKind kind = i % 2 ? GeneratorKind::Type2 : GeneratorKind::Type1;
      std::vector<std::size_t> lengths(kind == GeneratorKind::Type1 ? 2 : 3);
      for (auto& l : lengths) l = 1 + rng() % 3;
      auto [ctx, g] = testutil::random_generator(grading, kind, lengths, rng);
      doc.context = ctx;
      if (G.is_abelian()) doc.generator = g;
      FreePoly p = expand(g);
      p.add_term(testutil::random_word(ctx.max_var(), 2, rng), -7);
      doc.poly = p;
      doc.m = testutil::random_word(ctx.max_var(), 3, rng);
      const auto text = dsl::format_document(doc);
      ASSERT_EQ(dsl::parse_document(text), doc) << text;
    }
  }
}
