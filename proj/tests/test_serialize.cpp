#include "gpi/error.hpp"
#include "gpi/serialize.hpp"
#include "random_words.hpp"

#include <gtest/gtest.h>

using namespace gpi;
namespace gj = gpi::json;
using Json = nlohmann::json;

namespace {

Context ctx3(std::initializer_list<std::pair<VarId, std::uint32_t>> degs) {
  Context ctx(GradingTuple(cyclic_group(3)));
  for (auto [v, d] : degs) ctx.declare(v, Element{d});
  return ctx;
}

bool same_context(const Context& a, const Context& b) {
  return gj::context_json(a) == gj::context_json(b);
}

}  // namespace

TEST(Encoding, Integers) {
  EXPECT_EQ(gj::to_json(Integer(-5)), Json(-5));
  const Integer big("-98765432109876543210987654321");
  EXPECT_TRUE(gj::to_json(big).is_string());
  EXPECT_EQ(gj::integer_from_json(gj::to_json(big)), big);
  EXPECT_THROW(gj::integer_from_json(Json("12x")), Error);
  EXPECT_THROW(gj::integer_from_json(Json(1.5)), Error);
}

TEST(Encoding, PolyAndContext) {
  const FreePoly p = bracket(Word{1}, Word{2}) * Integer("100000000000000000000");
  EXPECT_EQ(gj::poly_from_json(gj::to_json(p)), p);
  const Context ctx = ctx3({{1, 1}, {2, 0}});
  EXPECT_TRUE(same_context(gj::context_from_json(gj::context_json(ctx)), ctx));
  const LieWord l = LieWord::bracket(LieWord::leaf(1), LieWord::bracket(LieWord::leaf(2), LieWord::leaf(1)));
  EXPECT_EQ(gj::lie_from_json(gj::to_json(l)), l);
  EXPECT_THROW(gj::word_from_json(Json{1, 0}), Error);
  EXPECT_THROW(gj::poly_from_json(Json{{{"coeff", 1}}}), Error);
}

TEST(Certificate, ChainRoundTrip) {
  std::mt19937_64 rng(testutil::seed_from_env());
  GradingTuple grading(cyclic_group(3));
  for (int i = 0; i < 30; ++i) {
    Context ctx = testutil::random_context(grading, 5, rng);
    const Word m = testutil::shuffled({1, 2, 3, 4, 5}, rng);
    const Word n = testutil::random_walk(ctx, m, 3, rng);
    const auto cert = gj::make_certificate(ctx, congruence_chain(ctx, m, n));
    const Json j = gj::to_json(cert);
    EXPECT_EQ(j["version"], 1);
    EXPECT_EQ(j["kind"], "chain");
    const auto back = gj::certificate_from_json(j);
    EXPECT_EQ(gj::dump(gj::to_json(back)), gj::dump(j));
    EXPECT_TRUE(gj::verify(back));
  }
}

TEST(Certificate, JCombinationAndReduction) {
  Context ctx = ctx3({{1, 1}, {2, 2}, {3, 1}});
  const auto jc = gj::make_certificate(ctx, express_in_J(ctx, FreePoly::monomial({1, 2, 3}) - FreePoly::monomial({3, 2, 1})));
  EXPECT_STREQ(gj::kind_name(jc), "jcomb");
  const auto jc2 = gj::certificate_from_json(gj::to_json(jc));
  EXPECT_EQ(gj::dump(gj::to_json(jc2)), gj::dump(gj::to_json(jc)));
  EXPECT_TRUE(gj::verify(jc2));

  std::mt19937_64 rng(testutil::seed_from_env() + 1);
  auto [rctx, g] = testutil::random_generator(GradingTuple(cyclic_group(3)), GeneratorKind::Type2, {5, 4, 2}, rng);
  const auto red = gj::make_certificate(gpi::z3::reduce(rctx, g));
  EXPECT_STREQ(gj::kind_name(red), "reduction");
  const Json j = gj::to_json(red);
  const auto back = gj::certificate_from_json(j);
  EXPECT_EQ(gj::dump(gj::to_json(back)), gj::dump(j));
  EXPECT_TRUE(gj::verify(back));
}

TEST(Certificate, FileRoundTrip) {
  Context ctx = ctx3({{1, 0}, {2, 0}});
  const auto cert = gj::make_certificate(ctx, congruence_chain(ctx, {1, 2}, {2, 1}));
  const auto path = std::filesystem::temp_directory_path() / "gpi_test_serialize.cert.Json";
  gj::write_certificate(path, cert);
  const auto back = gj::read_certificate(path);
  EXPECT_EQ(gj::dump(gj::to_json(back)), gj::dump(gj::to_json(cert)));
  std::filesystem::remove(path);
  EXPECT_THROW(gj::read_certificate(path), Error);
}

TEST(Certificate, MalformedInput) {
  Context ctx = ctx3({{1, 0}, {2, 0}});
  const Json good = gj::to_json(gj::make_certificate(ctx, congruence_chain(ctx, {1, 2}, {2, 1})));
  auto expect_bad = [](Json j) { EXPECT_THROW(gj::certificate_from_json(j), Error) << j.dump(); };
  Json j = good;
  j["version"] = 2;
  expect_bad(j);
  j = good;
  j["kind"] = "proof";
  expect_bad(j);
  j = good;
  j.erase("payload");
  expect_bad(j);
  j = good;
  j["vars"][0]["degree"] = 9;
  expect_bad(j);
  j = good;
  j["group"]["table"][0][0] = 1;
  expect_bad(j);
  expect_bad(Json::array());
  expect_bad(Json("chain"));
}

TEST(Certificate, TamperedChainFailsVerification) {
  Context ctx = ctx3({{1, 0}, {2, 0}, {3, 1}});
  Json j = gj::to_json(gj::make_certificate(ctx, congruence_chain(ctx, {1, 2, 3}, {2, 1, 3})));
  j["vars"][0]["degree"] = 1;
  j["vars"][1]["degree"] = 2;
  j["vars"][2]["degree"] = 0;
  EXPECT_FALSE(gj::verify(gj::certificate_from_json(j)));
}
