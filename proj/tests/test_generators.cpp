#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace syz;
using namespace syz::test;

TEST(TwistedCubic, Generators) {
  auto I = twisted_cubic(QQ{});
  EXPECT_EQ(I.ring->variables(), (std::vector<std::string>{"w", "x", "y", "z"}));
  EXPECT_EQ(strings(I.gens), (std::vector<std::string>{"w^2 - x*y", "w*y - x*z", "-y^2 + w*z"}));
}

TEST(MayrMeyer, LevelOne) {
  auto A = mayr_meyer(1, false, Fp(32003));
  EXPECT_EQ(A.ring->nvars(), 10u);
  EXPECT_EQ(A.gens.size(), 4u);
  EXPECT_EQ(to_string(A.gens[0]), "-F1*C1_1*B1_1^2 + S1*C1_1");
  auto H = mayr_meyer(1, true, Fp(32003));
  EXPECT_EQ(H.ring->nvars(), 11u);
  EXPECT_EQ(H.ring->variables().back(), "u");
  for (const auto& g : H.gens) {
    EXPECT_TRUE(g.is_homogeneous());
    EXPECT_EQ(g.degree(), 4);
  }
  EXPECT_EQ(to_string(H.gens[3]), "-F1*C4_1*B4_1^2 + S1*C4_1*u^2");
}

TEST(MayrMeyer, GeneratorCountsAndDegrees) {
  for (int n = 1; n <= 4; ++n) {
    const MayrMeyerSpec sp{n};
    auto A = mayr_meyer(n, false, Fp(32003));
    EXPECT_EQ(A.ring->nvars(), sp.nvars_affine());
    EXPECT_EQ(A.gens.size(), sp.generator_count());
    EXPECT_EQ(A.gens.size(), static_cast<std::size_t>(10 * n - 6));
    auto H = mayr_meyer(n, true, Fp(32003));
    for (const auto& g : H.gens) {
      EXPECT_LE(g.degree(), 4);
      EXPECT_EQ(g.size(), 2u);
      EXPECT_TRUE(g.is_homogeneous());
    }
    for (std::size_t k = 0; k < A.gens.size(); ++k) EXPECT_EQ(dehomogenize(H.gens[k], A.ring), A.gens[k]);
  }
}

TEST(MayrMeyer, VariableOrder) {
  const MayrMeyerSpec sp{2};
  EXPECT_EQ(sp.names(true), (std::vector<std::string>{"S1", "S2", "F1", "F2", "C1_1", "C2_1", "C3_1", "C4_1", "C1_2",
                                                        "C2_2", "C3_2", "C4_2", "B1_1", "B2_1", "B3_1", "B4_1", "B1_2",
                                                        "B2_2", "B3_2", "B4_2", "u"}));
}

TEST(MayrMeyer, LevelTwoTable) {
  auto A = mayr_meyer(2, false, QQ{});
  const std::vector<std::string> expected = {
      "-S1*C1_1 + S2",
      "-S1*C4_1 + F2",
      "-F1*C1_2*B3_1*B1_2 + F1*C1_2*B2_1",
      "-F1*C2_2*B3_1*B2_2 + F1*C2_2*B2_1",
  };
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(to_string(A.gens[k]), expected[k]);
  EXPECT_EQ(to_string(A.gens[6]), "F1*C1_1*B1_1 - S1*C2_1");
  EXPECT_EQ(to_string(A.gens[9]), "-F1*C4_1*B4_1 + S1*C3_1");
}

TEST(MayrMeyer, JIdealAndErrors) {
  auto J = mayr_meyer_j(1, Fp(32003));
  ASSERT_EQ(J.gens.size(), 6u);
  EXPECT_EQ(to_string(J.gens[0]), "S1");
  EXPECT_EQ(to_string(J.gens[1]), "F1");
  EXPECT_THROW(mayr_meyer(0, false, QQ{}), std::invalid_argument);
}

TEST(MayrMeyer, LevelOneMembership) {
  // S C_i - F C_i B_i^e lies in I_1^A exactly for e = 2.
  auto A = mayr_meyer(1, false, Fp(32003));
  const MayrMeyerSpec sp{1};
  auto v = [&](std::size_t i) { return variable(A.ring, i); };
  for (int i = 1; i <= 4; ++i) {
    const auto S = v(sp.S(1)), F = v(sp.F(1)), C = v(sp.C(i, 1)), B = v(sp.B(i, 1));
    for (unsigned e = 0; e <= 5; ++e) {
      auto g = S * C - F * C * pow(B, e);
      EXPECT_EQ(membership(g, A).member, e == 2) << "i " << i << " e " << e;
    }
    EXPECT_TRUE(membership(S * C - S * C, A).member);
    EXPECT_FALSE(membership(S * C - S * C * B, A).member);
  }
}

TEST(RandomIdeal, Deterministic) {
  auto a = random_ideal(42, 3, 3, 2, Fp(32003));
  auto b = random_ideal(42, 3, 3, 2, Fp(32003));
  EXPECT_EQ(strings(a.gens), strings(b.gens));
  auto c = random_ideal(43, 3, 3, 2, Fp(32003));
  EXPECT_NE(strings(a.gens), strings(c.gens));
  for (const auto& g : a.gens) {
    EXPECT_TRUE(g.is_homogeneous());
    EXPECT_EQ(g.degree(), 2);
    EXPECT_EQ(g.size(), 6u);
  }
  EXPECT_TRUE(random_ideal(1, 3, 0, 2, Fp(32003)).gens.empty());
  RandomIdealOptions sparse;
  sparse.terms = 2;
  for (const auto& g : random_ideal(7, 4, 5, 3, QQ{}, sparse).gens) EXPECT_EQ(g.size(), 2u);
  EXPECT_THROW(random_ideal(1, 0, 1, 2, QQ{}), std::invalid_argument);
}

TEST(RandomIdeal, MacaulayPropertyAgainstOracle) {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    auto I = random_ideal(seed, 4, 3, 2, Fp(32003));
    EXPECT_EQ(hilbert_function(I, 6), oracle::hilbert_function(I.gens, I.ring, 6));
  }
}
