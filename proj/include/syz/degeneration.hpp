#pragma once

// One-parameter degenerations by a weight vector W. A monomial x^A gets the
// weight W.A and smaller weight means larger in the induced order. For a
// polynomial f with least weight l, the family member is
//   g = sum_A a_A t^(W.A - l) x^A,
// so g at t = 1 is f and g at t = 0 is the initial form in_W(f). Computing a
// Groebner basis under weight(W, tiebreak) yields a flat family; t never
// appears in the arithmetic, only as bookkeeping on the result.

#include "syz/ideal_ops.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

inline long weight_of(const Monomial& m, const std::vector<long>& w) {
  if (w.size() != m.size()) throw std::invalid_argument("weight vector length must equal the variable count");
  long s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * m[i];
  return s;
}

/// W = (-d^(n-1), ..., -d, -1, 0) on n + 1 variables. On monomials of degree
/// below d the weight order agrees with lex; beyond that only the tiebreak
/// keeps the order total.
inline std::vector<long> lex_weights(std::size_t nvars, long d) {
  if (nvars == 0) throw std::invalid_argument("lex_weights needs at least one variable");
  if (d < 2) throw std::invalid_argument("lex_weights needs a degree bound of at least 2");
  std::vector<long> w(nvars, 0);
  long p = 1;
  for (std::size_t i = nvars - 1; i-- > 0;) {
    w[i] = -p;
    if (i > 0 && p > std::numeric_limits<long>::max() / d) throw std::overflow_error("lex_weights overflow");
    p *= d;
  }
  return w;
}

/// Sum of the terms of f of least weight.
template <Field F>
Polynomial<F> initial_form(const Polynomial<F>& f, const std::vector<long>& w) {
  if (f.is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
  long least = weight_of(f.lead_monomial(), w);
  for (const auto& t : f) least = std::min(least, weight_of(t.mono, w));
  std::vector<typename Polynomial<F>::term_type> ts;
  for (const auto& t : f) {
    if (weight_of(t.mono, w) == least) ts.push_back(t);
  }
  return Polynomial<F>::from_sorted(f.space_handle(), std::move(ts));
}

template <Field F>
struct FlatFamily {
  RingPtr<F> ring;
  std::vector<long> weights;
  /// The members at t = 1.
  std::vector<Polynomial<F>> generators;
  /// t-exponent of each term, aligned with the term order of generators[j].
  std::vector<std::vector<long>> t_exponents;
  /// Least weight of each generator.
  std::vector<long> baselines;

  /// Member j at t = 0, i.e. in_W of generator j.
  Polynomial<F> at_zero(std::size_t j) const {
    std::vector<typename Polynomial<F>::term_type> ts;
    for (std::size_t k = 0; k < generators[j].size(); ++k) {
      if (t_exponents[j][k] == 0) ts.push_back(generators[j].terms()[k]);
    }
    return Polynomial<F>::from_sorted(generators[j].space_handle(), std::move(ts));
  }

  Ideal<F> special_fiber() const {
    Ideal<F> out{ring, {}};
    for (std::size_t j = 0; j < generators.size(); ++j) out.gens.push_back(at_zero(j));
    return out;
  }

  Ideal<F> general_fiber() const { return {ring, generators}; }

  /// Member j with t written out, e.g. "w^2 - t^27*x*y".
  std::string to_string(std::size_t j) const {
    const auto& vars = ring->variables();
    std::string out;
    const auto& g = generators[j];
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto& t = g.terms()[k];
      std::string c = ring->field().to_string(t.coeff);
      const bool negative = c[0] == '-';
      if (negative) c.erase(0, 1);
      out += k == 0 ? (negative ? "-" : "") : (negative ? " - " : " + ");
      std::vector<std::string> parts;
      if (c != "1") parts.push_back(c);
      const long e = t_exponents[j][k];
      if (e == 1) parts.push_back("t");
      if (e > 1) parts.push_back("t^" + std::to_string(e));
      if (!t.mono.is_one()) parts.push_back(monomial_to_string(t.mono, vars));
      if (parts.empty()) parts.push_back("1");
      for (std::size_t p = 0; p < parts.size(); ++p) out += (p ? "*" : "") + parts[p];
    }
    return out.empty() ? "0" : out;
  }
};

/// The family built from the given polynomials as they are (no completion).
template <Field F>
FlatFamily<F> family_of(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const std::vector<long>& w) {
  if (w.size() != ring->nvars()) throw std::invalid_argument("weight vector length must equal the variable count");
  FlatFamily<F> fam;
  fam.ring = ring;
  fam.weights = w;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto gg = g.ring().same_as(*ring) ? g : g.reordered(ring);
    long least = weight_of(gg.lead_monomial(), w);
    for (const auto& t : gg) least = std::min(least, weight_of(t.mono, w));
    std::vector<long> exps;
    for (const auto& t : gg) exps.push_back(weight_of(t.mono, w) - least);
    fam.generators.push_back(gg);
    fam.t_exponents.push_back(std::move(exps));
    fam.baselines.push_back(least);
  }
  return fam;
}

/// Flat family of I: the reduced basis under weight(W, tiebreak).
template <Field F>
FlatFamily<F> flat_family(const Ideal<F>& I, const std::vector<long>& w,
                          MonomialOrder::Kind tiebreak = MonomialOrder::Kind::grevlex) {
  if (!I.is_homogeneous()) throw std::invalid_argument("flat_family needs homogeneous generators");
  auto basis = reduced_basis(I, MonomialOrder::weight(w, tiebreak));
  return family_of(basis.ring, basis.gens, w);
}

/// Applies W_1, W_2, ... in turn, each to the special fiber of the previous stage.
template <Field F>
std::vector<FlatFamily<F>> staged_flat_family(const Ideal<F>& I, const std::vector<std::vector<long>>& stages) {
  std::vector<FlatFamily<F>> out;
  Ideal<F> cur = I;
  for (const auto& w : stages) {
    out.push_back(flat_family(cur, w));
    cur = out.back().special_fiber();
  }
  return out;
}

struct FlatnessReport {
  bool flat = true;
  /// First degree where the two Hilbert functions differ.
  std::optional<int> first_bad_degree;
  int checked_through = 0;
  std::vector<long long> general;
  std::vector<long long> special;
};

/// Compares the Hilbert functions of the fibers at t = 1 and t = 0.
template <Field F>
FlatnessReport flatness_check(const FlatFamily<F>& fam, int degree_cap = 20) {
  FlatnessReport rep;
  rep.checked_through = degree_cap;
  if (fam.generators.empty()) {
    return rep;
  }
  rep.general = hilbert_function(fam.general_fiber(), degree_cap);
  rep.special = hilbert_function(fam.special_fiber(), degree_cap);
  for (int d = 0; d <= degree_cap; ++d) {
    if (rep.general[d] != rep.special[d]) {
      rep.flat = false;
      rep.first_bad_degree = d;
      break;
    }
  }
  return rep;
}

}  // namespace syz
