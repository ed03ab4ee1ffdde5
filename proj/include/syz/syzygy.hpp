#pragma once

// Syzygies of a Groebner basis, and minimal generating sets.
//
// For a Groebner basis G = (g_0, ..., g_{r-1}) of a submodule of M_0, let M_1
// be the free module with basis e_i -> g_i carrying the Schreyer order. For
// i < j with leads in the same summand,
//   t_ij = b x^B e_i - c x^C e_j      (S(g_i, g_j) = b x^B g_i - c x^C g_j)
//   s_ij = t_ij - Q_G(S(g_i, g_j))
// and in(s_ij) = in(t_ij) = x^B e_i. Only the pairs whose lead x^B e_i is
// minimal among {x^B' e_i : j' > i} are kept; their leads still generate the
// initial module, so the s_ij form a Groebner basis of syz(G).

#include "syz/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace syz {

template <Field F>
ModulePtr<F> induced_schreyer_module(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  std::vector<Monomial> leads;
  std::vector<int> shifts;
  for (const auto& g : gens) {
    leads.push_back(g.lead_monomial());
    shifts.push_back(g.degree());
  }
  return FreeModule<F>::schreyer(ring, std::move(leads), std::move(shifts));
}

template <Field F>
ModulePtr<F> induced_schreyer_module(const ModulePtr<F>& parent, const std::vector<ModuleElement<F>>& gens) {
  std::vector<ModuleMonomial> leads;
  for (const auto& g : gens) leads.push_back(g.lead_monomial());
  return FreeModule<F>::schreyer(parent, std::move(leads));
}

/// sum_i comps(v)_i * gens_i, the image of v under e_i -> gens_i.
template <class Space>
TermList<Space> evaluate(const ModuleElement<typename Space::field_type>& v, const std::vector<TermList<Space>>& gens,
                         const std::shared_ptr<const Space>& target) {
  return combine(components(v), gens, target);
}

template <Field F>
struct SyzygyResult {
  /// Free module with basis e_i -> gens[i], Schreyer order.
  ModulePtr<F> module;
  std::vector<ModuleElement<F>> syzygies;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// t_ij for each kept pair.
  std::vector<ModuleElement<F>> monomial_syzygies;
};

/// Syzygies of a Groebner basis. With `all_pairs`, every pair with a defined
/// S-polynomial is used instead of the minimal subset.
template <class Space>
SyzygyResult<typename Space::field_type> syzygies(const std::vector<TermList<Space>>& gens, bool all_pairs = false) {
  using F = typename Space::field_type;
  using Poly = Polynomial<F>;
  if (gens.empty()) throw std::invalid_argument("syzygies of an empty list");
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero element in basis");
    gens.front().check_same_space(g);
  }
  const auto& space = gens.front().space_handle();
  const auto ring = gens.front().ring().ring_ptr();
  SyzygyResult<F> out;
  out.module = induced_schreyer_module(space, gens);
  const std::size_t r = gens.size();

  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::pair<std::size_t, Monomial>> cands;
    for (std::size_t j = i + 1; j < r; ++j) {
      if (auto l = lcm_of(gens[i].lead_monomial(), gens[j].lead_monomial())) {
        cands.emplace_back(j, cofactor(gens[i].lead_monomial(), *l));
      }
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = true;
      for (std::size_t b = 0; b < cands.size() && keep && !all_pairs; ++b) {
        if (a == b || !cands[b].second.divides(cands[a].second)) continue;
        keep = !(cands[b].second == cands[a].second) || cands[a].first < cands[b].first;
      }
      if (keep) out.pairs.emplace_back(i, cands[a].first);
    }
  }

  for (auto [i, j] : out.pairs) {
    auto f = *spair_factors(gens[i], gens[j]);
    auto spoly = gens[i].times(f.b, f.mb).minus_times(f.c, f.mc, gens[j]);
    auto div = divide(spoly, gens);
    if (!div.remainder.is_zero()) throw std::invalid_argument("syzygies: input is not a Groebner basis");
    std::vector<Poly> t(r, Poly(ring));
    t[i] = Poly::term(ring, f.b, f.mb);
    t[j] = Poly::term(ring, gens[i].field().neg(f.c), f.mc);
    auto tij = from_components(out.module, t);
    std::vector<Poly> s = t;
    for (std::size_t k = 0; k < r; ++k) s[k] -= div.quotients[k];
    auto sij = from_components(out.module, s);
    if (!(sij.lead_monomial() == tij.lead_monomial())) throw std::logic_error("in(s_ij) differs from in(t_ij)");
    out.syzygies.push_back(std::move(sij));
    out.monomial_syzygies.push_back(std::move(tij));
  }
  return out;
}

/// A minimal generating subset, processed by ascending degree then input index.
template <class Space>
std::vector<TermList<Space>> minimalize_generators(const std::vector<TermList<Space>>& gens) {
  if (gens.empty()) return {};
  GroebnerOptions o;
  o.reduce = false;
  o.track_transform = false;
  auto gb = groebner(gens.front().space_handle(), gens, o);
  std::vector<TermList<Space>> out;
  for (auto b : gb.minimal_generators) out.push_back(gens[b]);
  return out;
}

}  // namespace syz
