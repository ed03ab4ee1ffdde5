#pragma once

#include "syz/syz.hpp"

#include <random>
#include <string>
#include <vector>

namespace syz::test {

using QQ = Rationals;
using Fp = PrimeField;

inline RingPtr<QQ> qq_ring(std::vector<std::string> vars, std::optional<MonomialOrder> o = std::nullopt) {
  return PolynomialRing<QQ>::make(QQ{}, std::move(vars), std::move(o));
}

inline RingPtr<Fp> fp_ring(std::vector<std::string> vars, std::optional<MonomialOrder> o = std::nullopt,
                           std::uint64_t p = 32003) {
  return PolynomialRing<Fp>::make(Fp(p), std::move(vars), std::move(o));
}

template <Field F>
Polynomial<F> P(const RingPtr<F>& r, const std::string& s) {
  return parse_polynomial(s, r);
}

template <Field F>
std::vector<Polynomial<F>> Ps(const RingPtr<F>& r, const std::vector<std::string>& ss) {
  return parse_polynomials(r, ss);
}

template <Field F>
std::vector<std::string> strings(const std::vector<Polynomial<F>>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

/// Random suite member: 3-4 variables, 2-4 generators of degree 1-3 over F_32003.
inline Ideal<Fp> suite_ideal(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 17);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::size_t nvars = static_cast<std::size_t>(pick(3, 4));
  const int ngens = pick(2, 4);
  std::vector<int> degrees;
  for (int g = 0; g < ngens; ++g) degrees.push_back(pick(0, 6) == 0 ? 1 : pick(2, 3));
  RandomIdealOptions opts;
  opts.terms = pick(0, 1) ? 0 : static_cast<std::size_t>(pick(2, 4));
  return random_ideal(seed, nvars, degrees, Fp(32003), opts);
}

}  // namespace syz::test
