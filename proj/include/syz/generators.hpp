#pragma once

// Structured test ideals: the twisted cubic, the Mayr-Meyer family and
// seeded random homogeneous ideals.

#include "syz/ideal_ops.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

/// (w^2 - xy, wy - xz, wz - y^2) in k[w,x,y,z].
template <Field F>
Ideal<F> twisted_cubic(const F& k = F{}, std::optional<MonomialOrder> order = std::nullopt) {
  auto ring = PolynomialRing<F>::make(k, {"w", "x", "y", "z"}, order ? *order : MonomialOrder::grevlex(4));
  auto v = [&](std::size_t i) { return variable(ring, i); };
  const auto w = v(0), x = v(1), y = v(2), z = v(3);
  return {ring, {w * w - x * y, w * y - x * z, w * z - y * y}};
}

/// Variable names of the Mayr-Meyer family at level n:
/// S1..Sn, F1..Fn, then C{i}_{m} and B{i}_{m} level by level, then u.
struct MayrMeyerSpec {
  int n = 1;

  std::size_t nvars_affine() const { return 10 * static_cast<std::size_t>(n); }
  std::size_t generator_count() const { return 10 * static_cast<std::size_t>(n) - 6; }

  std::size_t S(int m) const { return static_cast<std::size_t>(m - 1); }
  std::size_t F(int m) const { return static_cast<std::size_t>(n + m - 1); }
  std::size_t C(int i, int m) const { return static_cast<std::size_t>(2 * n + 4 * (m - 1) + (i - 1)); }
  std::size_t B(int i, int m) const { return static_cast<std::size_t>(6 * n + 4 * (m - 1) + (i - 1)); }
  std::size_t u() const { return nvars_affine(); }

  std::vector<std::string> names(bool homogeneous) const {
    std::vector<std::string> out(nvars_affine());
    for (int m = 1; m <= n; ++m) {
      out[S(m)] = "S" + std::to_string(m);
      out[F(m)] = "F" + std::to_string(m);
      for (int i = 1; i <= 4; ++i) {
        out[C(i, m)] = "C" + std::to_string(i) + "_" + std::to_string(m);
        out[B(i, m)] = "B" + std::to_string(i) + "_" + std::to_string(m);
      }
    }
    if (homogeneous) out.push_back("u");
    return out;
  }
};

/// I_n^A, or its homogenization I_n^H with u appended last.
template <Field F>
Ideal<F> mayr_meyer(int n, bool homogeneous, const F& k = F{}) {
  if (n < 1) throw std::invalid_argument("mayr_meyer needs n >= 1");
  const MayrMeyerSpec sp{n};
  auto ring = PolynomialRing<F>::make(k, sp.names(false), MonomialOrder::grevlex(sp.nvars_affine()));
  // Monomials as (variable, exponent) lists.
  using Word = std::vector<std::pair<std::size_t, int>>;
  auto mono = [&](const Word& w) {
    Monomial m(sp.nvars_affine());
    for (auto [v, e] : w) m.set(v, m[v] + e);
    return monomial(ring, m);
  };
  auto binom = [&](const Word& a, const Word& b) { return mono(a) - mono(b); };

  Ideal<F> I{ring, {}};
  auto S = [&](int m) { return std::pair{sp.S(m), 1}; };
  auto Fv = [&](int m) { return std::pair{sp.F(m), 1}; };
  auto C = [&](int i, int m) { return std::pair{sp.C(i, m), 1}; };
  auto B = [&](int i, int m, int e = 1) { return std::pair{sp.B(i, m), e}; };
  for (int m = 2; m <= n; ++m) {
    I.gens.push_back(binom({S(m)}, {S(m - 1), C(1, m - 1)}));
    I.gens.push_back(binom({Fv(m)}, {S(m - 1), C(4, m - 1)}));
    for (int i = 1; i <= 4; ++i) {
      I.gens.push_back(binom({C(i, m), Fv(m - 1), B(2, m - 1)}, {C(i, m), B(i, m), Fv(m - 1), B(3, m - 1)}));
    }
  }
  for (int m = 1; m <= n - 1; ++m) {
    I.gens.push_back(binom({Fv(m), C(1, m), B(1, m)}, {S(m), C(2, m)}));
    I.gens.push_back(binom({Fv(m), C(2, m)}, {Fv(m), C(3, m)}));
    I.gens.push_back(binom({S(m), C(3, m), B(1, m)}, {S(m), C(2, m), B(4, m)}));
    I.gens.push_back(binom({S(m), C(3, m)}, {Fv(m), C(4, m), B(4, m)}));
  }
  for (int i = 1; i <= 4; ++i) I.gens.push_back(binom({C(i, 1), S(1)}, {C(i, 1), Fv(1), B(i, 1, 2)}));
  if (!homogeneous) return I;
  return homogenize(I, "u");
}

/// J_n^H = (S^(n), F^(n), I_n^H).
template <Field F>
Ideal<F> mayr_meyer_j(int n, const F& k = F{}) {
  auto I = mayr_meyer(n, true, k);
  const MayrMeyerSpec sp{n};
  Ideal<F> J{I.ring, {variable(I.ring, sp.S(n)), variable(I.ring, sp.F(n))}};
  J.gens.insert(J.gens.end(), I.gens.begin(), I.gens.end());
  return J;
}

struct RandomIdealOptions {
  /// Terms per generator; 0 means every monomial of the degree.
  std::size_t terms = 0;
  /// Coefficients are drawn from [-range, range] (reduced mod p), zero excluded.
  long long range = 1000;
};

/// One homogeneous polynomial per entry of `degrees`, in x0..x{n-1},
/// deterministic in the seed.
template <Field F>
Ideal<F> random_ideal(std::uint64_t seed, std::size_t nvars, const std::vector<int>& degrees, const F& k = F{},
                      const RandomIdealOptions& opts = {}, std::optional<MonomialOrder> order = std::nullopt) {
  if (nvars == 0) throw std::invalid_argument("random_ideal needs at least one variable");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  auto ring = PolynomialRing<F>::make(k, names, order ? *order : MonomialOrder::grevlex(nvars));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coeff(-opts.range, opts.range);
  Ideal<F> I{ring, {}};
  for (int degree : degrees) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<Monomial> chosen = monomials_of_degree(nvars, degree);
    if (opts.terms != 0 && opts.terms < chosen.size()) {
      std::shuffle(chosen.begin(), chosen.end(), rng);
      chosen.resize(opts.terms);
    }
    std::vector<typename Polynomial<F>::term_type> ts;
    for (const auto& m : chosen) {
      typename F::value_type c = k.zero();
      while (k.is_zero(c)) c = k.from_int(coeff(rng));
      ts.push_back({c, m});
    }
    I.gens.push_back(Polynomial<F>::from_terms(ring, std::move(ts)));
  }
  return I;
}

/// n_gens homogeneous polynomials of the given degree.
template <Field F>
Ideal<F> random_ideal(std::uint64_t seed, std::size_t nvars, std::size_t ngens, int degree, const F& k = F{},
                      const RandomIdealOptions& opts = {}, std::optional<MonomialOrder> order = std::nullopt) {
  return random_ideal(seed, nvars, std::vector<int>(ngens, degree), k, opts, std::move(order));
}

}  // namespace syz
