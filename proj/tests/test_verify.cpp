#include <gtest/gtest.h>

#include "orthoplex/centers.hpp"
#include "orthoplex/verify.hpp"

using namespace orthoplex;

namespace {

SuiteConfig small(const std::string& suite) {
  SuiteConfig c;
  c.suites = {suite};
  c.samples = 60;
  c.seed = 7;
  c.d_min = 2;
  c.d_max = 6;
  return c;
}

// Facet-volume weights applied to the wrong vertices.
Sphere reversed_incenter(const Simplex& s) {
  const std::vector<double> w = facet_volumes(s);
  Point c = Point::Zero(s.dim());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    c += w[w.size() - 1 - i] * s.vertex(i);
    total += w[i];
  }
  return {c / total, incenter(s).radius};
}

}  // namespace

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, Passes) {
  const SuiteReport r = run_suite(GetParam(), small(GetParam()));
  EXPECT_TRUE(r.pass) << to_json(r, false).dump(2);
  EXPECT_EQ(r.suite, GetParam());
  EXPECT_GT(r.checks, 0);
  EXPECT_FALSE(r.counterexample);
}

INSTANTIATE_TEST_SUITE_P(Suites, EverySuite, ::testing::ValuesIn(suite_names()));

TEST(Verify, SuiteNames) {
  const std::vector<std::string> want{"equivalences", "regularity", "euler", "rectangular", "parametrization"};
  EXPECT_EQ(suite_names(), want);
}

TEST(Verify, AllExpandsInOrder) {
  SuiteConfig c = small("all");
  c.samples = 20;
  const VerificationReport r = run_all(c);
  ASSERT_EQ(r.suites.size(), suite_names().size());
  for (std::size_t i = 0; i < r.suites.size(); ++i) EXPECT_EQ(r.suites[i].suite, suite_names()[i]);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.seed, 7u);
}

TEST(Verify, DeterministicDump) {
  SuiteConfig c = small("all");
  c.samples = 30;
  EXPECT_EQ(to_json(run_all(c), false).dump(), to_json(run_all(c), false).dump());
}

TEST(Verify, SeedChangesSamples) {
  SuiteConfig a = small("parametrization"), b = a;
  b.seed = 8;
  EXPECT_NE(to_json(run_all(a), false).dump(), to_json(run_all(b), false).dump());
}

TEST(Verify, TimingOnlyWhenRequested) {
  SuiteConfig c = small("euler");
  const Json j = to_json(run_suite("euler", c), false);
  EXPECT_EQ(j["elapsed_ms"], 0);
  for (const char* key : {"suite", "pass", "samples", "checks", "max_residual", "min_separation", "counterexample"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Verify, MutatedIncenterIsCaught) {
  SuiteConfig c = small("equivalences");
  c.incenter = reversed_incenter;
  const SuiteReport r = run_suite("equivalences", c);
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample);
  const Json& ce = *r.counterexample;
  EXPECT_EQ(ce["check"], "incenter_contract");
  ASSERT_TRUE(ce["residual"].is_number());
  const double residual = ce["residual"].get<double>();
  EXPECT_GT(residual, ce["threshold"].get<double>());
  EXPECT_NEAR(recheck(ce, c), residual, 1e-12 * std::max(1.0, residual));
  // The honest incenter satisfies the same payload.
  EXPECT_LT(recheck(ce, small("equivalences")), 1e-9);
}

TEST(Verify, Validation) {
  SuiteConfig c = small("euler");
  c.samples = 0;
  EXPECT_THROW(validate(c), InputError);
  c = small("euler");
  c.d_min = 1;
  EXPECT_THROW(validate(c), InputError);
  c = small("euler");
  c.d_min = 5;
  c.d_max = 4;
  EXPECT_THROW(validate(c), InputError);
  c = small("euler");
  c.d_max = 11;
  EXPECT_THROW(validate(c), InputError);
  EXPECT_NO_THROW(validate(small("euler")));
}

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(run_all(small("bogus")), InputError);
  EXPECT_THROW(run_suite("bogus", small("euler")), InputError);
}

TEST(Verify, RecheckRejectsBadPayloads) {
  EXPECT_THROW(recheck(Json::object()), InputError);
  EXPECT_THROW(recheck(Json{{"check", "nope"}}), InputError);
  EXPECT_THROW(recheck(Json{{"check", "incenter_contract"}, {"simplex", nullptr}}), InputError);
}
