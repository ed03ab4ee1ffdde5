#include "helpers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace syz;
using namespace syz::test;

namespace {

std::vector<Monomial> chain(const std::vector<std::string>& names, const RingPtr<QQ>& r) {
  std::vector<Monomial> out;
  for (const auto& n : names) out.push_back(P(r, n).lead_monomial());
  return out;
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int maxe) {
  std::uniform_int_distribution<int> d(0, maxe);
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, d(rng));
  return m;
}

}  // namespace

TEST(Order, LexChainOnDegreeTwo) {
  auto r = qq_ring({"w", "x", "y", "z"}, MonomialOrder::lex(4));
  auto c = chain({"w^2", "w*x", "w*y", "w*z", "x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}, r);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) EXPECT_TRUE(r->compare(c[i], c[i + 1]) > 0) << i;
}

TEST(Order, GrevlexChainOnDegreeTwo) {
  auto r = qq_ring({"w", "x", "y", "z"});
  auto c = chain({"w^2", "w*x", "x^2", "w*y", "x*y", "y^2", "w*z", "x*z", "y*z", "z^2"}, r);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) EXPECT_TRUE(r->compare(c[i], c[i + 1]) > 0) << i;
}

TEST(Order, EqualIffIdentical) {
  for (auto o : {MonomialOrder::lex(3), MonomialOrder::grevlex(3), MonomialOrder::elimination(3, 1),
                 MonomialOrder::weight({1, 2, 3})}) {
    Monomial a{1, 2, 0};
    EXPECT_EQ(o.compare(a, a), std::strong_ordering::equal);
    EXPECT_NE(o.compare(a, Monomial{0, 2, 1}), std::strong_ordering::equal);
  }
}

TEST(Order, DimensionMismatchThrows) {
  EXPECT_THROW(MonomialOrder::lex(3).compare(Monomial{1, 0}, Monomial{0, 1}), std::invalid_argument);
}

TEST(Order, WeightVectorAgreesWithLexInDegreeTwo) {
  auto w = MonomialOrder::weight({-16, -4, -1, 0});
  auto lex = MonomialOrder::lex(4);
  auto ms = monomials_of_degree(4, 2);
  for (const auto& a : ms) {
    for (const auto& b : ms) EXPECT_EQ(w.compare(a, b), lex.compare(a, b));
  }
}

TEST(Order, LexAndGrevlexAgreeInDegreeOneOnly) {
  auto lex = MonomialOrder::lex(3);
  auto grl = MonomialOrder::grevlex(3);
  for (const auto& a : monomials_of_degree(3, 1)) {
    for (const auto& b : monomials_of_degree(3, 1)) EXPECT_EQ(lex.compare(a, b), grl.compare(a, b));
  }
  bool differ = false;
  for (const auto& a : monomials_of_degree(3, 2)) {
    for (const auto& b : monomials_of_degree(3, 2)) differ |= lex.compare(a, b) != grl.compare(a, b);
  }
  EXPECT_TRUE(differ);
}

TEST(Order, MultiplicativeOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (auto o : {MonomialOrder::lex(5), MonomialOrder::grevlex(5), MonomialOrder::elimination(5, 2),
                 MonomialOrder::weight({3, -1, 0, 2, 5}), MonomialOrder::weight({1, 1, 1, 1, 1}, MonomialOrder::Kind::lex)}) {
    for (int t = 0; t < 2000; ++t) {
      auto a = random_monomial(rng, 5, 4), b = random_monomial(rng, 5, 4), c = random_monomial(rng, 5, 4);
      if (o.compare(a, b) <= 0) continue;
      EXPECT_TRUE(o.compare(a * c, b * c) > 0) << o.to_string();
    }
  }
}

TEST(Order, WeightWithDistinctValuesMatchesFunctional) {
  // Weights 1, 10, 100 separate every degree <= 3 monomial in 3 variables.
  auto o = MonomialOrder::weight({1, 10, 100});
  for (int d = 0; d <= 3; ++d) {
    for (const auto& a : monomials_of_degree(3, d)) {
      for (const auto& b : monomials_of_degree(3, d)) {
        const long wa = o.weight_of(a), wb = o.weight_of(b);
        EXPECT_EQ(o.compare(a, b), wb <=> wa);
      }
    }
  }
}

TEST(Order, ParseRoundTrip) {
  for (std::string s : {"lex", "grevlex", "elim:2", "weight:1,-2,3,0", "weight:1,1,1,1;lex"}) {
    EXPECT_EQ(MonomialOrder::parse(s, 4).to_string(), s);
  }
  EXPECT_THROW(MonomialOrder::parse("weight:1,2", 4), std::invalid_argument);
  EXPECT_THROW(MonomialOrder::parse("deglex", 4), std::invalid_argument);
}

TEST(Polynomial, LeadingTerm) {
  auto r = qq_ring({"x", "y"}, MonomialOrder::lex(2));
  EXPECT_EQ(to_string(Polynomial<QQ>::term(r, 1, P(r, "x^2 + y^2").lead_monomial())), "x^2");
  auto t = P(r, "3*x*y");
  EXPECT_EQ(t.lead().coeff, 3);
  auto rl = qq_ring({"w", "x", "y", "z"}, MonomialOrder::lex(4));
  EXPECT_EQ(monomial_to_string(P(rl, "w*z - y^2").lead_monomial(), rl->variables()), "w*z");
  auto rg = qq_ring({"w", "x", "y", "z"});
  EXPECT_EQ(monomial_to_string(P(rg, "w*z - y^2").lead_monomial(), rg->variables()), "y^2");
  EXPECT_THROW(Polynomial<QQ>(r).lead(), std::domain_error);
}

TEST(Polynomial, Arithmetic) {
  auto r = qq_ring({"x", "y"});
  auto f = P(r, "x + y");
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ(to_string(P(r, "(x+y)*(x-y)")), "x^2 - y^2");
  auto rl = qq_ring({"w", "x", "y", "z"}, MonomialOrder::lex(4));
  EXPECT_EQ(to_string(P(rl, "w*y - x*z").times(1, P(rl, "x").lead_monomial())), "w*x*y - x^2*z");
  EXPECT_EQ(to_string(P(r, "1/2*x - 3/4").scaled(4)), "2*x - 3");
}

TEST(Polynomial, RingMismatchThrows) {
  auto a = qq_ring({"x", "y"});
  auto b = qq_ring({"x", "y"}, MonomialOrder::lex(2));
  EXPECT_THROW(P(a, "x") + P(b, "x"), std::invalid_argument);
}

TEST(Polynomial, DistributesOnRandomSamples) {
  auto r = fp_ring({"a", "b", "c"});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-5, 5);
  auto random_poly = [&] {
    std::vector<Polynomial<Fp>::term_type> ts;
    for (int i = 0; i < 6; ++i) ts.push_back({r->field().from_int(coeff(rng)), random_monomial(rng, 3, 3)});
    return Polynomial<Fp>::from_terms(r, ts);
  };
  for (int t = 0; t < 100; ++t) {
    auto f = random_poly(), g = random_poly(), h = random_poly();
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ(f * g, g * f);
  }
}

TEST(Field, RationalsStayCanonical) {
  QQ k;
  auto a = k.parse("6/-4");
  EXPECT_EQ(k.to_string(a), "-3/2");
  EXPECT_THROW(k.parse("1/0"), std::domain_error);
}

TEST(Field, PrimeFieldInverse) {
  Fp k(32003);
  for (long long a : {1LL, 2LL, 17LL, 32002LL, 12345LL}) EXPECT_TRUE(k.is_one(k.mul(k.from_int(a), k.inv(k.from_int(a)))));
  EXPECT_EQ(k.to_string(k.from_int(-1)), "-1");
  EXPECT_THROW(Fp(32004), std::invalid_argument);
  EXPECT_THROW(Fp(1ULL << 31), std::invalid_argument);
}

TEST(Monomial, OverflowIsAnError) {
  Monomial a{65535};
  EXPECT_THROW(a * Monomial{1}, std::overflow_error);
  EXPECT_THROW(Monomial({-1}), std::invalid_argument);
}

TEST(Monomial, ManyVariables) {
  Monomial a(70), b(70);
  a.set(69, 3);
  b.set(0, 1);
  EXPECT_EQ((a * b).degree(), 4);
  EXPECT_TRUE(a.divides(a * b));
  EXPECT_TRUE(MonomialOrder::lex(70).compare(b, a) > 0);
}
