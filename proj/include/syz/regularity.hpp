#pragma once

// Castelnuovo-Mumford regularity: from a minimal resolution, and the
// randomized criterion of Bayer and Stillman. With J_0 = I and
// J_{i+1} = J_i + (y_i) for random linear forms y_0, ..., y_n, the ideal I
// is m-regular iff its minimal generators have degree <= m and, for every i,
//   (J_i : y_i)_m = (J_i)_m,
// with (J_{n+1})_m = S_m. In terms of D_i(d) = dim (J_i)_d the colon
// condition reads dim S_m - D_{i+1}(m+1) + D_i(m+1) = D_i(m), since
// (J_{i+1})_{m+1} = (J_i)_{m+1} + y_i S_m.

#include "syz/ideal_ops.hpp"
#include "syz/oracle.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

template <Field F>
int regularity(const Ideal<F>& I, const ResolutionOptions& opts = {}) {
  return regularity(free_resolution(I, opts));
}

enum class RegularityVerdict { regular, not_regular, inconclusive };

inline std::string to_string(RegularityVerdict v) {
  switch (v) {
    case RegularityVerdict::regular:
      return "regular";
    case RegularityVerdict::not_regular:
      return "not-regular";
    case RegularityVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct BayerStillmanOptions {
  int trials = 3;
  std::uint64_t seed = 1;
  /// Below this characteristic a failure of every trial is reported as inconclusive.
  std::uint64_t small_field = 100;
  oracle::Budget budget;
};

struct BayerStillmanReport {
  RegularityVerdict verdict = RegularityVerdict::inconclusive;
  int max_generator_degree = 0;
  int trials_run = 0;
  /// Index i of the first failing colon condition in the last trial (-1: none).
  int failed_at = -1;
};

template <Field F>
BayerStillmanReport bayer_stillman_test(const Ideal<F>& I, int m, const BayerStillmanOptions& opts = {}) {
  if (!I.is_homogeneous()) throw std::invalid_argument("bayer_stillman_test needs homogeneous generators");
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  const auto& k = I.ring->field();
  const std::size_t n = I.ring->nvars();
  const std::uint64_t p = k.characteristic();
  if (opts.trials < 1) throw std::invalid_argument("at least one trial required");
  if (p != 0) {
    // Number of nonzero linear forms.
    long double forms = 1;
    for (std::size_t i = 0; i < n; ++i) forms *= static_cast<long double>(p);
    if (forms - 1 < opts.trials) throw std::invalid_argument("field too small for the requested trials");
  }

  BayerStillmanReport rep;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.gens) {
    if (!g.is_zero()) gens.push_back(g);
  }
  for (const auto& g : minimalize_generators(gens)) rep.max_generator_degree = std::max(rep.max_generator_degree, g.degree());
  if (rep.max_generator_degree > m) {
    rep.verdict = RegularityVerdict::not_regular;
    return rep;
  }

  const auto ring = I.ring;
  const long long sm = static_cast<long long>(monomials_of_degree(n, m).size());
  std::mt19937_64 rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    ++rep.trials_run;
    std::vector<Polynomial<F>> J = gens;
    auto dim = [&](int d) { return static_cast<long long>(oracle::ideal_dim_in_degree(J, ring, d, opts.budget)); };
    long long dm = dim(m);
    long long dm1 = dim(m + 1);
    bool ok = true;
    rep.failed_at = -1;
    for (std::size_t i = 0; i < n && dm < sm; ++i) {
      Polynomial<F> y(ring);
      for (std::size_t v = 0; v < n; ++v) y += variable(ring, v).scaled(detail::random_scalar(rng, k));
      if (y.is_zero()) y = variable(ring, i);
      J.push_back(y);
      const long long next_m = dim(m);
      const long long next_m1 = dim(m + 1);
      if (sm - next_m1 + dm1 != dm) {
        ok = false;
        rep.failed_at = static_cast<int>(i);
        break;
      }
      dm = next_m;
      dm1 = next_m1;
    }
    if (ok && dm == sm) {
      rep.verdict = RegularityVerdict::regular;
      return rep;
    }
  }
  rep.verdict = (p != 0 && p < opts.small_field) ? RegularityVerdict::inconclusive : RegularityVerdict::not_regular;
  return rep;
}

}  // namespace syz
