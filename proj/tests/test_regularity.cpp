#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace syz;
using namespace syz::test;

namespace {

/// x_i -> random linear form, seeded.
Ideal<Fp> generic_change(const Ideal<Fp>& I, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& k = I.ring->field();
  std::vector<Polynomial<Fp>> images;
  for (std::size_t i = 0; i < I.ring->nvars(); ++i) {
    Polynomial<Fp> l(I.ring);
    for (std::size_t j = 0; j < I.ring->nvars(); ++j) l += variable(I.ring, j).scaled(detail::random_scalar(rng, k));
    images.push_back(l);
  }
  return apply_change(I, images);
}

}  // namespace

TEST(BayerStillman, TwistedCubic) {
  auto I = twisted_cubic(Fp(32003));
  EXPECT_EQ(bayer_stillman_test(I, 2).verdict, RegularityVerdict::regular);
  EXPECT_EQ(bayer_stillman_test(I, 3).verdict, RegularityVerdict::regular);
  auto low = bayer_stillman_test(I, 1);
  EXPECT_EQ(low.verdict, RegularityVerdict::not_regular);
  EXPECT_EQ(low.max_generator_degree, 2);
  EXPECT_EQ(low.trials_run, 0);
  EXPECT_EQ(regularity(I), 2);
}

TEST(BayerStillman, LinearForm) {
  auto r = fp_ring({"x0", "x1", "x2"});
  Ideal<Fp> I{r, Ps(r, {"x0"})};
  EXPECT_EQ(bayer_stillman_test(I, 1).verdict, RegularityVerdict::regular);
  EXPECT_EQ(bayer_stillman_test(I, 0).verdict, RegularityVerdict::not_regular);
}

TEST(BayerStillman, ColonConditionFails) {
  // Complete intersection of two cubics: generators in degree 3, regularity 5.
  auto r = fp_ring({"x", "y", "z"});
  Ideal<Fp> I{r, Ps(r, {"x^3", "y^3"})};
  EXPECT_EQ(regularity(I), 5);
  auto rep = bayer_stillman_test(I, 4);
  EXPECT_EQ(rep.verdict, RegularityVerdict::not_regular);
  EXPECT_EQ(rep.trials_run, 3);
  EXPECT_GE(rep.failed_at, 0);
  EXPECT_EQ(bayer_stillman_test(I, 5).verdict, RegularityVerdict::regular);
}

TEST(BayerStillman, Errors) {
  auto r = fp_ring({"x", "y"}, std::nullopt, 2);
  Ideal<Fp> I{r, Ps(r, {"x^2"})};
  BayerStillmanOptions o;
  o.trials = 4;
  EXPECT_THROW(bayer_stillman_test(I, 2, o), std::invalid_argument);
  o.trials = 0;
  EXPECT_THROW(bayer_stillman_test(I, 2, o), std::invalid_argument);
  EXPECT_THROW(bayer_stillman_test(I, -1), std::invalid_argument);
  EXPECT_THROW(bayer_stillman_test(Ideal<Fp>{r, Ps(r, {"x^2 + y"})}, 2), std::invalid_argument);
}

TEST(BayerStillman, SmallFieldIsInconclusive) {
  // Over F_2 there are only seven nonzero linear forms.
  auto r = fp_ring({"x", "y", "z"}, std::nullopt, 2);
  Ideal<Fp> I{r, Ps(r, {"x^3", "y^3"})};
  auto rep = bayer_stillman_test(I, 4);
  EXPECT_NE(rep.verdict, RegularityVerdict::regular);
}

TEST(BayerStillman, AgreesWithResolutionOnSuite) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto I = generic_change(suite_ideal(seed), seed + 1000);
    const int reg = regularity(I);
    BayerStillmanOptions o;
    o.seed = seed;
    EXPECT_EQ(bayer_stillman_test(I, reg, o).verdict, RegularityVerdict::regular) << "seed " << seed;
    EXPECT_EQ(bayer_stillman_test(I, reg - 1, o).verdict, RegularityVerdict::not_regular) << "seed " << seed;
  }
}

TEST(Regularity, InitialIdealInGenericCoordinates) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto I = generic_change(suite_ideal(seed), seed + 2000);
    auto in = initial_ideal(I);
    Ideal<Fp> M{I.ring, {}};
    for (const auto& m : in.generators()) M.gens.push_back(monomial(I.ring, m));
    EXPECT_EQ(regularity(M), regularity(I)) << "seed " << seed;
  }
}

TEST(Regularity, SatDefectBoundOnSuite) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto d = sat_defect(suite_ideal(seed));
    EXPECT_TRUE(d.within_bound()) << "seed " << seed << ": " << d.total << " > " << d.bound;
  }
}
