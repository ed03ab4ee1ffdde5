#pragma once

#include "syz/element.hpp"

#include <map>
#include <vector>

namespace syz {

template <Field F>
using Polynomial = TermList<PolynomialRing<F>>;

template <Field F>
Polynomial<F> constant(const RingPtr<F>& ring, typename F::value_type c) {
  return Polynomial<F>::term(ring, std::move(c), ring->one());
}

template <Field F>
Polynomial<F> one(const RingPtr<F>& ring) {
  return constant(ring, ring->field().one());
}

template <Field F>
Polynomial<F> variable(const RingPtr<F>& ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
  return Polynomial<F>::term(ring, ring->field().one(), Monomial::variable(ring->nvars(), index));
}

template <Field F>
Polynomial<F> monomial(const RingPtr<F>& ring, const Monomial& m) {
  return Polynomial<F>::term(ring, ring->field().one(), m);
}

/// p * v for a ring element p and an element v of a ring or module over the same ring.
template <class Space>
TermList<Space> multiply(const Polynomial<typename Space::field_type>& p, const TermList<Space>& v) {
  if (!p.ring().same_as(v.ring())) throw std::invalid_argument("ring mismatch");
  if (p.is_zero() || v.is_zero()) return TermList<Space>(v.space_handle());
  if (p.size() == 1) return v.times(p.lead_coefficient(), p.lead_monomial());
  std::vector<typename TermList<Space>::term_type> out;
  out.reserve(p.size() * v.size());
  const auto& k = v.field();
  for (const auto& a : p) {
    for (const auto& b : v) out.push_back({k.mul(a.coeff, b.coeff), times(a.mono, b.mono)});
  }
  return TermList<Space>::from_terms(v.space_handle(), std::move(out));
}

template <Field F>
Polynomial<F> operator*(const Polynomial<F>& a, const Polynomial<F>& b) {
  return multiply(a, b);
}

template <Field F>
Polynomial<F> pow(const Polynomial<F>& f, unsigned e) {
  Polynomial<F> result = one(f.space_handle());
  Polynomial<F> base = f;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

/// f(images[0], ..., images[n]); all images live in `target`.
template <Field F>
Polynomial<F> substitute(const Polynomial<F>& f, const std::vector<Polynomial<F>>& images, const RingPtr<F>& target) {
  if (images.size() != f.ring().nvars()) throw std::invalid_argument("substitution needs one image per variable");
  std::vector<std::map<int, Polynomial<F>>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial<F>& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    return powers[i].emplace(e, pow(images[i], static_cast<unsigned>(e))).first->second;
  };
  Polynomial<F> result(target);
  for (const auto& t : f) {
    Polynomial<F> term = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.mono[i] != 0) term = term * power(i, t.mono[i]);
    }
    result += term;
  }
  return result;
}

/// The same polynomial viewed in a ring with identical variables but another order.
template <Field F>
Polynomial<F> change_order(const Polynomial<F>& f, const RingPtr<F>& ring) {
  if (ring->variables() != f.ring().variables() || !(ring->field() == f.field())) {
    throw std::invalid_argument("change_order needs the same variables and field");
  }
  return f.reordered(ring);
}

template <Field F>
std::vector<Polynomial<F>> change_order(const std::vector<Polynomial<F>>& fs, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(change_order(f, ring));
  return out;
}

/// An ideal given by a generator list; the ring is carried explicitly so that
/// the zero ideal is representable.
template <Field F>
struct Ideal {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> gens;

  bool is_homogeneous() const {
    return std::all_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_homogeneous(); });
  }

  /// Nonzero generators only.
  std::vector<Polynomial<F>> nonzero() const {
    std::vector<Polynomial<F>> out;
    for (const auto& g : gens) {
      if (!g.is_zero()) out.push_back(g);
    }
    return out;
  }

  Ideal with_order(const MonomialOrder& o) const {
    auto r = ring->with_order(o);
    return {r, change_order(gens, r)};
  }
};

}  // namespace syz
