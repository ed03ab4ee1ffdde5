#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace syz;
using namespace syz::test;

namespace {

Ideal<QQ> lex_cubic() { return twisted_cubic(QQ{}, MonomialOrder::lex(4)); }

template <Field F>
void expect_syzygies_vanish(const std::vector<Polynomial<F>>& gens, const SyzygyResult<F>& r) {
  for (const auto& s : r.syzygies) EXPECT_TRUE(evaluate(s, gens, gens.front().space_handle()).is_zero()) << to_string(s);
  ASSERT_EQ(r.syzygies.size(), r.monomial_syzygies.size());
  for (std::size_t k = 0; k < r.syzygies.size(); ++k) {
    EXPECT_EQ(r.syzygies[k].lead_monomial(), r.monomial_syzygies[k].lead_monomial());
  }
}

template <Field F>
void expect_resolution_shape(const FreeResolution<F>& res) {
  ASSERT_EQ(res.maps.size(), res.modules.size());
  EXPECT_LE(res.length(), res.ring->nvars());
  for (std::size_t k = 0; k + 1 < res.maps.size(); ++k) {
    EXPECT_EQ(res.maps[k].cols, res.maps[k + 1].rows);
    EXPECT_TRUE((res.maps[k] * res.maps[k + 1]).is_zero()) << "step " << k;
  }
  if (res.minimal) {
    for (std::size_t k = 1; k < res.maps.size(); ++k) EXPECT_FALSE(res.maps[k].has_unit_entry()) << "step " << k;
  }
}

}  // namespace

TEST(Syzygies, TwistedCubicLexBasis) {
  auto I = lex_cubic();
  auto gb = buchberger(I.gens);
  ASSERT_EQ(gb.size(), 4u);
  auto r = syzygies(gb.elements);
  expect_syzygies_vanish(gb.elements, r);
  EXPECT_TRUE(is_groebner(r.syzygies));

  // y g1 - w g2 - x g3 and z g2 - y g3 + g4 lie in the syzygy module.
  auto ring = gb.space;
  auto M = r.module;
  auto s1 = from_components(M, {P(ring, "y"), P(ring, "-w"), P(ring, "-x"), P(ring, "0")});
  auto s2 = from_components(M, {P(ring, "0"), P(ring, "z"), P(ring, "-y"), P(ring, "1")});
  for (const auto& s : {s1, s2}) {
    EXPECT_TRUE(evaluate(s, gb.elements, ring).is_zero());
    EXPECT_TRUE(normal_form(s, r.syzygies).is_zero()) << to_string(s);
  }
}

TEST(Syzygies, SchreyerBasisOfCubicHasTwoElements) {
  auto I = twisted_cubic(QQ{});
  auto gb = buchberger(I.gens);
  ASSERT_EQ(gb.size(), 3u);
  auto r = syzygies(gb.elements);
  auto mgb = module_buchberger(r.syzygies);
  EXPECT_EQ(mgb.size(), 2u);
}

TEST(Syzygies, SingleGeneratorHasNone) {
  auto r = qq_ring({"x", "y"});
  auto s = syzygies(Ps(r, {"x^2 + y^2"}));
  EXPECT_TRUE(s.syzygies.empty());
}

TEST(Syzygies, TwoMonomials) {
  auto r = qq_ring({"x", "y", "z"});
  auto gens = Ps(r, {"3*x^2*y", "5*x*y^3*z"});
  auto s = syzygies(gens);
  ASSERT_EQ(s.syzygies.size(), 1u);
  auto c = components(s.syzygies[0]);
  // b x^C (a x^A) - a x^D (b x^B) up to scaling: 5*y^2*z e_1 - 3*x e_2.
  ASSERT_EQ(c[0].size(), 1u);
  ASSERT_EQ(c[1].size(), 1u);
  EXPECT_EQ(c[0].lead_monomial(), P(r, "y^2*z").lead_monomial());
  EXPECT_EQ(c[1].lead_monomial(), P(r, "x").lead_monomial());
  EXPECT_EQ(c[1].lead_coefficient() / c[0].lead_coefficient(), mpq_class(-3, 5));
  expect_syzygies_vanish(gens, s);
}

TEST(Syzygies, RejectsNonBasis) {
  auto r = qq_ring({"x", "y"}, MonomialOrder::lex(2));
  EXPECT_THROW(syzygies(Ps(r, {"x^2 + y^2", "x*y"})), std::invalid_argument);
  EXPECT_THROW(syzygies(std::vector<Polynomial<QQ>>{}), std::invalid_argument);
}

TEST(Syzygies, AllPairsGenerateTheSameModule) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto I = suite_ideal(seed);
    auto gb = buchberger(I.gens);
    auto few = syzygies(gb.elements);
    auto all = syzygies(gb.elements, true);
    EXPECT_LE(few.syzygies.size(), all.syzygies.size());
    expect_syzygies_vanish(gb.elements, all);
    for (const auto& s : all.syzygies) EXPECT_TRUE(normal_form(s, few.syzygies).is_zero());
  }
}

TEST(Syzygies, RandomSuiteProperties) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto I = suite_ideal(seed);
    auto gb = buchberger(I.gens);
    auto r = syzygies(gb.elements);
    expect_syzygies_vanish(gb.elements, r);
    if (r.syzygies.empty()) continue;
    EXPECT_TRUE(is_groebner(r.syzygies)) << "seed " << seed;
  }
}

TEST(ModuleGroebner, RankOneMatchesIdealCase) {
  auto I = lex_cubic();
  auto M = FreeModule<QQ>::make(I.ring, {0});
  std::vector<ModuleElement<QQ>> v;
  for (const auto& g : I.gens) v.push_back(as_module_element(M, g));
  auto mgb = module_buchberger(v);
  auto gb = buchberger(I.gens);
  ASSERT_EQ(mgb.size(), gb.size());
  for (std::size_t k = 0; k < gb.size(); ++k) EXPECT_EQ(to_string(components(mgb.elements[k])[0]), to_string(gb.elements[k]));
}

TEST(ModuleGroebner, DistinctComponentsAreAlreadyABasis) {
  auto r = qq_ring({"x", "y"});
  auto M = FreeModule<QQ>::make(r, {0, 0});
  auto a = from_components(M, {P(r, "x^2 + y^2"), P(r, "0")});
  auto b = from_components(M, {P(r, "0"), P(r, "x*y")});
  auto gb = module_buchberger(std::vector{a, b});
  EXPECT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb.stats.pairs_reduced, 0u);
}

TEST(Minimalize, DropsRedundantGenerators) {
  auto r = qq_ring({"x", "y"});
  EXPECT_EQ(strings(minimalize_generators(Ps(r, {"x^2", "x^2*y", "x*y"}))), (std::vector<std::string>{"x^2", "x*y"}));
  auto I = twisted_cubic(QQ{});
  EXPECT_EQ(minimalize_generators(I.gens), I.gens);
  auto J = mayr_meyer_j(1, Fp(32003));
  auto m = minimalize_generators(J.gens);
  ASSERT_GE(m.size(), 2u);
  EXPECT_EQ(m[0], J.gens[0]);
  EXPECT_EQ(m[1], J.gens[1]);
}

TEST(Resolution, TwistedCubic) {
  auto res = free_resolution(twisted_cubic(QQ{}));
  expect_resolution_shape(res);
  auto b = res.betti();
  EXPECT_EQ(b(0, 2), 3u);
  EXPECT_EQ(b(1, 3), 2u);
  EXPECT_EQ(b.total(0) + b.total(1), 5u);
  EXPECT_EQ(res.length(), 1u);
  EXPECT_EQ(regularity(res), 2);
  EXPECT_EQ(quotient_numerator_from_alternating_sum(b.alternating_sum()), (SeriesNumerator{1, 0, -3, 2}));
}

TEST(Resolution, BettiTableLayout) {
  auto res = free_resolution(twisted_cubic(QQ{}));
  EXPECT_EQ(res.betti().to_ascii(), "       0 1\ntotal: 3 2\n    2: 3 2\n");
}

TEST(Resolution, MonomialExample) {
  auto r = qq_ring({"x", "y"});
  auto res = free_resolution(Ps(r, {"x^2", "x*y", "y^3"}));
  expect_resolution_shape(res);
  auto b = res.betti();
  EXPECT_EQ(b(0, 2), 2u);
  EXPECT_EQ(b(0, 3), 1u);
  EXPECT_EQ(b(1, 3), 1u);
  EXPECT_EQ(b(1, 4), 1u);
  EXPECT_EQ(b.total(2), 0u);
  EXPECT_EQ(regularity(res), 3);
}

TEST(Resolution, PrincipalAndLinear) {
  auto r = qq_ring({"x", "y", "z"});
  auto res = free_resolution(Ps(r, {"x^3 + y*z^2"}));
  EXPECT_EQ(res.length(), 0u);
  EXPECT_EQ(regularity(res), 3);
  EXPECT_EQ(regularity(free_resolution(Ps(r, {"x"}))), 1);
}

TEST(Resolution, KoszulComplex) {
  auto r = qq_ring({"x", "y", "z"});
  auto res = free_resolution(Ps(r, {"x", "y", "z"}));
  expect_resolution_shape(res);
  auto b = res.betti();
  EXPECT_EQ(b(0, 1), 3u);
  EXPECT_EQ(b(1, 2), 3u);
  EXPECT_EQ(b(2, 3), 1u);
  EXPECT_EQ(regularity(res), 1);
}

TEST(Resolution, RedundantInputsAreDropped) {
  auto r = qq_ring({"x", "y"});
  auto res = free_resolution(Ps(r, {"x^2", "x^2*y", "x*y", "0", "y^3"}));
  EXPECT_EQ(res.betti().total(0), 3u);
}

TEST(Resolution, Errors) {
  auto r = qq_ring({"x", "y"});
  EXPECT_THROW(free_resolution(Ps(r, {"x^2 + y"})), std::invalid_argument);
  ResolutionOptions o;
  o.minimal = false;
  EXPECT_THROW(regularity(free_resolution(twisted_cubic(QQ{}), o)), std::invalid_argument);
  EXPECT_THROW(regularity(free_resolution(Ideal<QQ>{r, {}})), std::domain_error);
}

TEST(Resolution, DegreeCapMarksIncomplete) {
  ResolutionOptions o;
  o.degree_cap = 2;
  auto res = free_resolution(twisted_cubic(QQ{}), o);
  EXPECT_FALSE(res.complete);
  EXPECT_THROW(regularity(res), std::runtime_error);
}

TEST(Resolution, SchreyerResolutionIsExact) {
  ResolutionOptions o;
  o.minimal = false;
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto I = suite_ideal(seed);
    auto res = free_resolution(I, o);
    expect_resolution_shape(res);
    // Non-minimal Betti numbers dominate the minimal ones in each (i, j).
    auto minimal = free_resolution(I).betti();
    auto schreyer = res.betti();
    for (const auto& [k, v] : minimal.entries()) EXPECT_GE(schreyer(k.first, k.second), v) << "seed " << seed;
    // Both give the same K-polynomial.
    EXPECT_EQ(quotient_numerator_from_alternating_sum(minimal.alternating_sum()),
              quotient_numerator_from_alternating_sum(schreyer.alternating_sum()));
  }
}

TEST(Resolution, RandomSuiteMatchesOracle) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto I = suite_ideal(seed);
    auto res = free_resolution(I);
    expect_resolution_shape(res);
    const int dmax = 8;
    auto num = quotient_numerator_from_alternating_sum(res.betti().alternating_sum());
    auto hf = MonomialIdeal::hilbert_from_numerator(num, I.ring->nvars(), dmax);
    EXPECT_EQ(hf, oracle::hilbert_function(I.gens, I.ring, dmax)) << "seed " << seed;
    int maxdeg = 0;
    for (const auto& g : minimalize_generators(I.nonzero())) maxdeg = std::max(maxdeg, g.degree());
    EXPECT_GE(regularity(res), maxdeg);
  }
}

TEST(Resolution, BettiNumbersAreIntrinsic) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto I = suite_ideal(seed);
    auto b = free_resolution(I).betti();
    EXPECT_EQ(free_resolution(I.with_order(MonomialOrder::lex(I.ring->nvars()))).betti(), b) << "seed " << seed;
    // A different presentation: shuffled generators plus a redundant combination.
    Ideal<Fp> J = I;
    std::reverse(J.gens.begin(), J.gens.end());
    if (J.gens.size() >= 2 && J.gens[0].degree() == J.gens[1].degree()) J.gens.push_back(J.gens[0] + J.gens[1]);
    EXPECT_EQ(free_resolution(J).betti(), b) << "seed " << seed;
  }
}

TEST(Resolution, BorelFixedRegularityIsGeneratorDegree) {
  auto r = qq_ring({"x", "y", "z"});
  const std::vector<std::vector<std::string>> ideals = {
      {"x^2", "x*y", "y^2"}, {"x^2", "x*y", "x*z", "y^3"}, {"x", "y^2", "y*z^2"}, {"x^3", "x^2*y", "x*y^2", "y^3"}};
  for (const auto& g : ideals) {
    auto gens = Ps(r, g);
    std::vector<Monomial> ms;
    int d = 0;
    for (const auto& f : gens) {
      ms.push_back(f.lead_monomial());
      d = std::max(d, f.degree());
    }
    ASSERT_TRUE(is_borel_fixed(MonomialIdeal(3, ms)));
    EXPECT_EQ(regularity(free_resolution(gens)), d);
  }
}
