#pragma once

// Operations on ideals built from Groebner bases: initial ideals, Hilbert
// functions, elimination, saturation, ideal quotients, membership with
// certificates, Borel-fixedness and the saturation defect.

#include "syz/hilbert.hpp"
#include "syz/resolution.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

/// Groebner basis of I under `order` (I's own order if omitted). Zero
/// generators are dropped; the zero ideal gives an empty basis.
template <Field F>
GroebnerBasis<PolynomialRing<F>> groebner_basis(const Ideal<F>& I, std::optional<MonomialOrder> order = std::nullopt,
                                                GroebnerOptions opts = {}) {
  const auto ring = order && !(*order == I.ring->order()) ? I.ring->with_order(*order) : I.ring;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.gens) {
    if (!g.is_zero()) gens.push_back(g.ring().same_as(*ring) ? g : g.reordered(ring));
  }
  return groebner(ring, gens, opts);
}

template <Field F>
GroebnerBasis<PolynomialRing<F>> general_groebner_basis(const Ideal<F>& I, std::optional<MonomialOrder> order = std::nullopt,
                                                        GroebnerOptions opts = {});

/// The reduced Groebner basis as an ideal value. Inhomogeneous input goes
/// through general_groebner_basis.
template <Field F>
Ideal<F> reduced_basis(const Ideal<F>& I, std::optional<MonomialOrder> order = std::nullopt) {
  GroebnerOptions o;
  o.track_transform = false;
  auto gb = I.is_homogeneous() ? groebner_basis(I, order, o) : general_groebner_basis(I, order, o);
  return {gb.space, gb.elements};
}

/// True iff I and J are the same ideal (compared through reduced grevlex bases).
template <Field F>
bool same_ideal(const Ideal<F>& I, const Ideal<F>& J) {
  const auto o = MonomialOrder::grevlex(I.ring->nvars());
  const auto a = reduced_basis(I, o);
  const auto b = reduced_basis(J, o);
  return a.gens == change_order(b.gens, a.ring);
}

template <Field F>
MonomialIdeal initial_ideal(const Ideal<F>& I, std::optional<MonomialOrder> order = std::nullopt) {
  if (!I.is_homogeneous()) throw std::invalid_argument("initial_ideal needs homogeneous generators");
  GroebnerOptions o;
  o.track_transform = false;
  return MonomialIdeal::of_leads(groebner_basis(I, order, o));
}

/// dim_k (S/I)_d for d = 0..dmax, via in(I).
template <Field F>
std::vector<long long> hilbert_function(const Ideal<F>& I, int dmax, std::optional<MonomialOrder> order = std::nullopt) {
  return initial_ideal(I, order).hilbert_function(dmax);
}

/// Numerator of the Hilbert series of S/I.
template <Field F>
SeriesNumerator hilbert_numerator(const Ideal<F>& I) {
  return initial_ideal(I).numerator();
}

inline bool is_borel_fixed(const MonomialIdeal& m) {
  for (const auto& g : m.generators()) {
    for (std::size_t j = 1; j < m.nvars(); ++j) {
      if (g[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        Monomial h = g;
        h.set(j, g[j] - 1);
        h.set(i, g[i] + 1);
        if (!m.contains(h)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Homogenization

/// A variable name not already used by `ring`.
template <Field F>
std::string fresh_variable(const RingPtr<F>& ring, std::string base = "u") {
  std::string name = base;
  for (int i = 0; ring->index_of(name); ++i) name = base + "_" + std::to_string(i);
  return name;
}

/// The ring with one extra variable appended last (grevlex unless given).
template <Field F>
RingPtr<F> extend_ring(const RingPtr<F>& ring, const std::string& name, std::optional<MonomialOrder> order = std::nullopt) {
  auto vars = ring->variables();
  vars.push_back(name);
  return PolynomialRing<F>::make(ring->field(), std::move(vars),
                                 order ? std::move(*order) : MonomialOrder::grevlex(ring->nvars() + 1));
}

/// f^h = u^deg(f) f(x/u) in `target`, whose last variable is u.
template <Field F>
Polynomial<F> homogenize(const Polynomial<F>& f, const RingPtr<F>& target) {
  const std::size_t n = f.ring().nvars();
  if (target->nvars() != n + 1) throw std::invalid_argument("homogenize: target needs exactly one more variable");
  if (f.is_zero()) return Polynomial<F>(target);
  const int d = f.degree();
  std::vector<typename Polynomial<F>::term_type> ts;
  for (const auto& t : f) {
    Monomial m(n + 1);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    m.set(n, d - t.mono.degree());
    ts.push_back({t.coeff, std::move(m)});
  }
  return Polynomial<F>::from_terms(target, std::move(ts));
}

template <Field F>
Ideal<F> homogenize(const Ideal<F>& I, const std::string& name = "u", std::optional<MonomialOrder> order = std::nullopt) {
  auto target = extend_ring(I.ring, name, std::move(order));
  Ideal<F> out{target, {}};
  for (const auto& g : I.gens) out.gens.push_back(homogenize(g, target));
  return out;
}

/// Sets the last variable of f's ring to 1, landing in `target`.
template <Field F>
Polynomial<F> dehomogenize(const Polynomial<F>& f, const RingPtr<F>& target) {
  const std::size_t n = target->nvars();
  if (f.ring().nvars() != n + 1) throw std::invalid_argument("dehomogenize: source needs exactly one more variable");
  std::vector<typename Polynomial<F>::term_type> ts;
  for (const auto& t : f) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    ts.push_back({t.coeff, std::move(m)});
  }
  return Polynomial<F>::from_terms(target, std::move(ts));
}

// ---------------------------------------------------------------------------
// Saturation

/// f / x_v^a for the largest a with x_v^a | f.
template <Field F>
Polynomial<F> strip_variable(const Polynomial<F>& f, std::size_t v) {
  if (f.is_zero()) return f;
  int a = f.lead_monomial()[v];
  for (const auto& t : f) a = std::min(a, t.mono[v]);
  if (a == 0) return f;
  std::vector<typename Polynomial<F>::term_type> ts;
  for (const auto& t : f) {
    Monomial m = t.mono;
    m.set(v, m[v] - a);
    ts.push_back({t.coeff, std::move(m)});
  }
  return Polynomial<F>::from_sorted(f.space_handle(), std::move(ts));
}

/// (I : x_n^inf) for the last variable x_n, as a reduced grevlex basis.
template <Field F>
Ideal<F> saturate_variable(const Ideal<F>& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("saturate_variable needs homogeneous generators");
  const auto o = MonomialOrder::grevlex(I.ring->nvars());
  GroebnerOptions opts;
  opts.track_transform = false;
  auto gb = groebner_basis(I, o, opts);
  Ideal<F> stripped{gb.space, {}};
  for (const auto& g : gb.elements) stripped.gens.push_back(strip_variable(g, I.ring->nvars() - 1));
  return reduced_basis(stripped);
}

/// (I : f) for homogeneous I and f, as a reduced basis in I's ring.
///
/// In S e_0 + S e_1 with e_0 above e_1, the submodule generated by f e_0 + e_1
/// and g_i e_0 meets S e_1 in (I : f) e_1.
template <Field F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal quotient by zero");
  if (!f.is_homogeneous() || !I.is_homogeneous()) throw std::invalid_argument("ideal_quotient needs homogeneous input");
  const auto ring = I.ring;
  const auto fr = f.ring().same_as(*ring) ? f : f.reordered(ring);
  auto module = FreeModule<F>::make(ring, {0, fr.degree()});
  std::vector<ModuleElement<F>> gens;
  gens.push_back(from_components(module, {fr, one(ring)}));
  for (const auto& g : I.gens) {
    if (!g.is_zero()) gens.push_back(from_components(module, {g, Polynomial<F>(ring)}));
  }
  GroebnerOptions opts;
  opts.track_transform = false;
  auto gb = groebner(module, gens, opts);
  Ideal<F> out{ring, {}};
  for (const auto& e : gb.elements) {
    if (e.lead_monomial().comp == 1) out.gens.push_back(components(e)[1]);
  }
  return reduced_basis(out);
}

/// (I : f^inf), iterating (I : f) until it stabilizes.
template <Field F>
Ideal<F> ideal_quotient_stable(const Ideal<F>& I, const Polynomial<F>& f) {
  Ideal<F> cur = reduced_basis(I);
  while (true) {
    Ideal<F> next = ideal_quotient(cur, f);
    if (next.gens == cur.gens) return cur;
    cur = std::move(next);
  }
}

struct SaturationOptions {
  std::uint64_t seed = 1;
  int attempts = 6;
};

namespace detail {

template <Field F>
typename F::value_type random_scalar(std::mt19937_64& rng, const F& k) {
  if (k.characteristic() == 0) {
    std::uniform_int_distribution<long long> d(-50, 50);
    return k.from_int(d(rng));
  }
  const auto hi = std::min<std::uint64_t>(k.characteristic() - 1, 1u << 20);
  std::uniform_int_distribution<std::uint64_t> d(0, hi);
  return k.from_int(static_cast<long long>(d(rng)));
}

}  // namespace detail

/// A linear change of coordinates x_i -> images[i].
template <Field F>
struct LinearChange {
  std::vector<Polynomial<F>> forward;
  std::vector<Polynomial<F>> inverse;
};

/// x_i -> x_i (i < n), x_n -> (x_n - sum_{i<n} c_i x_i) / c_n, so that the
/// linear form l = sum c_i x_i becomes x_n. The inverse sends x_n back to l.
template <Field F>
LinearChange<F> last_variable_change(const RingPtr<F>& ring, const std::vector<typename F::value_type>& c) {
  const auto& k = ring->field();
  const std::size_t n = ring->nvars();
  if (c.size() != n || k.is_zero(c.back())) throw std::invalid_argument("linear form must involve the last variable");
  LinearChange<F> ch;
  Polynomial<F> l(ring), fwd = variable(ring, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    l += variable(ring, i).scaled(c[i]);
    if (i + 1 < n) fwd -= variable(ring, i).scaled(c[i]);
  }
  fwd = fwd.scaled(k.inv(c.back()));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ch.forward.push_back(variable(ring, i));
    ch.inverse.push_back(variable(ring, i));
  }
  ch.forward.push_back(fwd);
  ch.inverse.push_back(l);
  return ch;
}

template <Field F>
Ideal<F> apply_change(const Ideal<F>& I, const std::vector<Polynomial<F>>& images) {
  Ideal<F> out{I.ring, {}};
  for (const auto& g : I.gens) out.gens.push_back(substitute(g, images, I.ring));
  return out;
}

/// (I : l^inf) for the linear form l = sum c_i x_i.
template <Field F>
Ideal<F> saturate_by_linear_form(const Ideal<F>& I, const std::vector<typename F::value_type>& c) {
  const auto ring = I.ring->with_order(MonomialOrder::grevlex(I.ring->nvars()));
  const Ideal<F> J{ring, change_order(I.gens, ring)};
  auto ch = last_variable_change(ring, c);
  auto sat = saturate_variable(apply_change(J, ch.forward));
  return reduced_basis(apply_change(sat, ch.inverse));
}

/// sat I = (I : m^inf), computed as (I : l^inf) for random linear forms l.
/// Two independent forms must agree; otherwise new forms are drawn.
template <Field F>
Ideal<F> saturation(const Ideal<F>& I, const SaturationOptions& opts = {}) {
  if (!I.is_homogeneous()) throw std::invalid_argument("saturation needs homogeneous generators");
  const auto& k = I.ring->field();
  std::mt19937_64 rng(opts.seed);
  auto draw = [&] {
    std::vector<typename F::value_type> c;
    for (std::size_t i = 0; i < I.ring->nvars(); ++i) c.push_back(detail::random_scalar(rng, k));
    while (k.is_zero(c.back())) c.back() = detail::random_scalar(rng, k);
    return c;
  };
  for (int a = 0; a < opts.attempts; ++a) {
    auto s1 = saturate_by_linear_form(I, draw());
    auto s2 = saturate_by_linear_form(I, draw());
    if (s1.gens == s2.gens) return s1;
  }
  throw std::runtime_error("saturation: random coordinate changes kept disagreeing (field too small?)");
}

struct SatDefect {
  /// dim_k (sat I / I)_d, indexed by d.
  std::vector<long long> per_degree;
  long long total = 0;
  int regularity = 0;
  /// binom(reg + n, n + 1) with n + 1 variables.
  long long bound = 0;
  bool within_bound() const { return total <= bound; }
};

template <Field F>
SatDefect sat_defect(const Ideal<F>& I, const SaturationOptions& opts = {}) {
  const auto sat = saturation(I, opts);
  auto a = hilbert_numerator(I);
  auto b = hilbert_numerator(sat);
  SeriesNumerator diff(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) diff[i] -= b[i];
  // Divide by (1 - t)^nvars: each division is a running prefix sum.
  for (std::size_t v = 0; v < I.ring->nvars(); ++v) {
    for (std::size_t i = 1; i < diff.size(); ++i) diff[i] += diff[i - 1];
    if (!diff.empty() && diff.back() != 0) throw std::logic_error("sat I / I is not of finite length");
  }
  while (!diff.empty() && diff.back() == 0) diff.pop_back();
  SatDefect out;
  out.per_degree = diff;
  for (auto x : diff) out.total += x;
  const auto res = free_resolution(I);
  out.regularity = res.modules.empty() ? 0 : regularity(res);
  const long long n = static_cast<long long>(I.ring->nvars()) - 1;
  out.bound = MonomialIdeal::binomial(out.regularity + n, n + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

/// Reduced form of a Groebner basis in any order: drops elements whose lead
/// is divisible by another lead, tail-reduces the rest, makes them monic and
/// sorts by (degree, lead descending).
template <Field F>
std::vector<Polynomial<F>> interreduce(const std::vector<Polynomial<F>>& basis) {
  std::vector<Polynomial<F>> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].is_zero() || !basis[j].lead_monomial().divides(basis[i].lead_monomial())) continue;
      redundant = !(basis[j].lead_monomial() == basis[i].lead_monomial()) || j < i;
    }
    if (!redundant) kept.push_back(basis[i]);
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    const auto lead = Polynomial<F>::term(kept[i].space_handle(), kept[i].lead_coefficient(), kept[i].lead_monomial());
    auto tail = others.empty() ? kept[i].tail() : divide(kept[i].tail(), others).remainder;
    out.push_back((lead + tail).monic());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.ring().compare(a.lead_monomial(), b.lead_monomial()) > 0;
  });
  return out;
}

/// Groebner basis of any ideal. Inhomogeneous generators are homogenized by
/// a trailing variable under the extended order; the basis found there is
/// dehomogenized and interreduced. That path carries no transform. A weight
/// order is a well-order on an affine ring only if no weight is positive.
template <Field F>
GroebnerBasis<PolynomialRing<F>> general_groebner_basis(const Ideal<F>& I, std::optional<MonomialOrder> order,
                                                        GroebnerOptions opts) {
  if (I.is_homogeneous()) return groebner_basis(I, order, opts);
  const auto o = order ? *order : I.ring->order();
  if (o.kind() == MonomialOrder::Kind::weight &&
      std::any_of(o.weights().begin(), o.weights().end(), [](long w) { return w > 0; })) {
    throw std::invalid_argument("inhomogeneous input needs a weight order with all weights <= 0");
  }
  const auto target = I.ring->with_order(o);
  auto H = homogenize(I, fresh_variable(I.ring), o.extended());
  opts.track_transform = false;
  auto gb = groebner(H.ring, H.nonzero(), opts);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : gb.elements) gens.push_back(dehomogenize(g, target));
  GroebnerBasis<PolynomialRing<F>> out;
  out.space = target;
  out.elements = opts.reduce ? interreduce(gens) : gens;
  out.input_count = I.gens.size();
  out.reduced = opts.reduce;
  out.complete = gb.complete;
  out.stats = gb.stats;
  return out;
}

/// I intersected with k[x_k, ..., x_n]. Homogeneous input uses `order`
/// (default: the elimination order for the first k variables). Otherwise the
/// generators are homogenized, saturated by the homogenizing variable and
/// dehomogenized afterwards; the result then carries the elimination order
/// and `order` is not used.
template <Field F>
Ideal<F> eliminate(const Ideal<F>& I, std::size_t k, std::optional<MonomialOrder> order = std::nullopt) {
  const std::size_t n = I.ring->nvars();
  if (k > n) throw std::invalid_argument("cannot eliminate more variables than the ring has");
  auto keeps = [k](const Polynomial<F>& f) {
    for (const auto& t : f) {
      for (std::size_t i = 0; i < k; ++i) {
        if (t.mono[i] != 0) return false;
      }
    }
    return true;
  };
  if (I.is_homogeneous()) {
    const auto o = order ? *order : MonomialOrder::elimination(n, k);
    GroebnerOptions opts;
    opts.track_transform = false;
    auto gb = groebner_basis(I, o, opts);
    Ideal<F> out{gb.space, {}};
    for (const auto& g : gb.elements) {
      if (keeps(g)) out.gens.push_back(g);
    }
    return out;
  }
  const auto name = fresh_variable(I.ring);
  auto H = homogenize(I, name);
  auto Hs = saturate_variable(H);
  const auto elim_ring = H.ring->with_order(MonomialOrder::elimination(n + 1, k));
  auto E = eliminate(Ideal<F>{elim_ring, change_order(Hs.gens, elim_ring)}, k);
  const auto target = I.ring->with_order(MonomialOrder::elimination(n, k));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : E.gens) gens.push_back(dehomogenize(g, target));
  return {target, interreduce(gens)};
}

// ---------------------------------------------------------------------------
// Membership

template <Field F>
struct MembershipCertificate {
  bool member = false;
  /// g = sum_i coefficients[i] * generators[i] when member.
  std::vector<Polynomial<F>> coefficients;
  /// Largest degree among the nonzero coefficients; -1 if there are none.
  int max_coeff_degree = -1;
};

/// Decides g in I and, if so, writes g in terms of I's generators.
template <Field F>
MembershipCertificate<F> membership(const Polynomial<F>& g, const Ideal<F>& I) {
  const auto ring = I.ring;
  if (!g.ring().same_as(*ring)) throw std::invalid_argument("membership: polynomial and ideal live in different rings");
  MembershipCertificate<F> cert;
  const std::size_t r = I.gens.size();
  auto finish = [&](std::vector<Polynomial<F>> coeffs) {
    cert.member = true;
    cert.coefficients = std::move(coeffs);
    for (const auto& a : cert.coefficients) {
      if (!a.is_zero()) cert.max_coeff_degree = std::max(cert.max_coeff_degree, a.degree());
    }
    return cert;
  };
  if (g.is_zero()) return finish(std::vector<Polynomial<F>>(r, Polynomial<F>(ring)));

  if (I.is_homogeneous()) {
    auto gb = groebner(ring, I.gens, GroebnerOptions{});
    if (gb.elements.empty()) return cert;
    auto div = divide(g, gb.elements);
    if (!div.remainder.is_zero()) return cert;
    std::vector<Polynomial<F>> a(r, Polynomial<F>(ring));
    for (std::size_t e = 0; e < gb.elements.size(); ++e) {
      if (div.quotients[e].is_zero()) continue;
      for (std::size_t b = 0; b < r; ++b) {
        if (!gb.transform[e][b].is_zero()) a[b] += div.quotients[e] * gb.transform[e][b];
      }
    }
    return finish(std::move(a));
  }

  // Homogenize with u (last, grevlex); strip u from the basis so that it
  // generates the saturation by u; then u^E g^h = sum_e q_e u^(E - e_e) G_e.
  const auto name = fresh_variable(ring);
  auto H = homogenize(I, name);
  const auto hring = H.ring;
  const std::size_t u = hring->nvars() - 1;
  GroebnerOptions opts;
  opts.reduce = false;
  auto gb = groebner(hring, H.gens, opts);
  if (gb.elements.empty()) return cert;
  std::vector<Polynomial<F>> stripped;
  std::vector<int> powers;
  for (const auto& e : gb.elements) {
    stripped.push_back(strip_variable(e, u));
    powers.push_back(e.lead_monomial()[u] - stripped.back().lead_monomial()[u]);
  }
  auto gh = homogenize(g, hring);
  auto div = divide(gh, stripped);
  if (!div.remainder.is_zero()) return cert;
  const int E = *std::max_element(powers.begin(), powers.end());
  std::vector<Polynomial<F>> a(r, Polynomial<F>(hring));
  for (std::size_t e = 0; e < stripped.size(); ++e) {
    if (div.quotients[e].is_zero()) continue;
    auto q = div.quotients[e].times(hring->field().one(), Monomial::variable(hring->nvars(), u, E - powers[e]));
    for (std::size_t b = 0; b < r; ++b) {
      if (!gb.transform[e][b].is_zero()) a[b] += q * gb.transform[e][b];
    }
  }
  std::vector<Polynomial<F>> out;
  for (const auto& x : a) out.push_back(dehomogenize(x, ring));
  return finish(std::move(out));
}

}  // namespace syz
