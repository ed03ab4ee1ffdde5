#pragma once

// Division with remainder and quotients, and S-polynomials.
//
// The divisor is always the least index i whose lead divides the current lead:
//   R_F(g) = R_F(g - c x^A f_i)            if in(g) = c x^A in(f_i)
//   R_F(g) = in(g) + R_F(g - in(g))        otherwise
// and g = sum_i Q_F(g)_i f_i + R_F(g).

#include "syz/module.hpp"
#include "syz/polynomial.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace syz {

template <class Space>
struct DivisionResult {
  using field_type = typename Space::field_type;

  TermList<Space> remainder;
  std::vector<Polynomial<field_type>> quotients;
  std::size_t reduction_steps = 0;
};

namespace detail {

template <class Space>
std::optional<std::size_t> first_divisor(const typename Space::monomial_type& m,
                                         std::span<const TermList<Space>> divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divides(divisors[i].lead_monomial(), m)) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/// Divides `g` by the list `divisors`. With `top_only`, stops at the first
/// lead term that no divisor lead divides, and the remainder is what is left.
template <class Space>
DivisionResult<Space> divide(const TermList<Space>& g, std::span<const TermList<Space>> divisors,
                             bool top_only = false) {
  using F = typename Space::field_type;
  using PolyTerm = typename Polynomial<F>::term_type;
  for (const auto& f : divisors) {
    g.check_same_space(f);
    if (f.is_zero()) throw std::invalid_argument("division by the zero element");
  }
  const auto& k = g.field();
  std::vector<std::vector<PolyTerm>> q(divisors.size());
  std::vector<typename TermList<Space>::term_type> rem;
  DivisionResult<Space> result;
  TermList<Space> p = g;
  while (!p.is_zero()) {
    const auto& lt = p.lead();
    if (auto i = detail::first_divisor<Space>(lt.mono, divisors)) {
      const auto& f = divisors[*i];
      auto c = k.div(lt.coeff, f.lead_coefficient());
      auto m = cofactor(f.lead_monomial(), lt.mono);
      q[*i].push_back({c, m});
      p = p.minus_times(c, m, f);
      ++result.reduction_steps;
    } else if (top_only) {
      break;
    } else {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  // Quotient terms for a fixed divisor arrive in strictly decreasing order.
  const auto& ring = g.space().ring();
  result.quotients.reserve(divisors.size());
  for (auto& qi : q) result.quotients.push_back(Polynomial<F>::from_sorted(ring.ring_ptr(), std::move(qi)));
  if (top_only && rem.empty()) {
    result.remainder = std::move(p);
  } else {
    for (const auto& t : p) rem.push_back(t);
    result.remainder = TermList<Space>::from_sorted(g.space_handle(), std::move(rem));
  }
  return result;
}

template <class Space>
DivisionResult<Space> divide(const TermList<Space>& g, const std::vector<TermList<Space>>& divisors,
                             bool top_only = false) {
  return divide(g, std::span<const TermList<Space>>(divisors), top_only);
}

/// Coefficients of S(f, g) = b x^B f - c x^C g, where b x^B in(f) = c x^C in(g) = lcm.
template <class Space>
struct SPairFactors {
  using coeff_type = typename Space::field_type::value_type;
  coeff_type b;
  Monomial mb;
  coeff_type c;
  Monomial mc;
  typename Space::monomial_type lcm;
};

template <class Space>
std::optional<SPairFactors<Space>> spair_factors(const TermList<Space>& f, const TermList<Space>& g) {
  auto l = lcm_of(f.lead_monomial(), g.lead_monomial());
  if (!l) return std::nullopt;
  const auto& k = f.field();
  return SPairFactors<Space>{k.inv(f.lead_coefficient()), cofactor(f.lead_monomial(), *l),
                             k.inv(g.lead_coefficient()), cofactor(g.lead_monomial(), *l), *l};
}

/// S(f, g); std::nullopt when the leads lie in different summands.
template <class Space>
std::optional<TermList<Space>> s_polynomial(const TermList<Space>& f, const TermList<Space>& g) {
  f.check_same_space(g);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero element");
  auto s = spair_factors(f, g);
  if (!s) return std::nullopt;
  return f.times(s->b, s->mb).minus_times(s->c, s->mc, g);
}

}  // namespace syz
