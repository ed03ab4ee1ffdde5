#pragma once

// Buchberger completion for homogeneous elements of a polynomial ring or a
// graded free module.
//
// Degree by degree: at degree d the S-pairs with lcm of degree d are reduced
// first (ordered by (i, j)), then the inputs of degree d (ordered by index).
// An input that does not reduce to zero is a minimal generator. Pairs are
// pruned with the Gebauer-Moeller form of the chain criterion, plus the
// coprime-lead criterion in the ring case. Each basis element carries its row
// of the transformation matrix over the inputs.

#include "syz/division.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace syz {

struct GroebnerOptions {
  bool reduce = true;
  bool reduce_incrementally = false;
  bool track_transform = true;
  bool use_criteria = true;
  std::optional<int> degree_cap;
  /// Shuffle the pairs of each degree with this seed instead of (i, j) order.
  std::optional<std::uint64_t> pair_seed;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_skipped = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
  int max_degree = 0;
};

template <class Space>
struct SPair {
  std::size_t i = 0;
  std::size_t j = 0;
  typename Space::monomial_type lcm;
  int sugar_degree = 0;
};

template <class Space>
struct GroebnerBasis {
  using space_type = Space;
  using field_type = typename Space::field_type;
  using element_type = TermList<Space>;
  using monomial_type = typename Space::monomial_type;
  using row_type = std::vector<Polynomial<field_type>>;

  std::shared_ptr<const Space> space;
  std::vector<element_type> elements;
  /// elements[a] = sum_b transform[a][b] * inputs[b]; empty when not tracked.
  std::vector<row_type> transform;
  /// Indices of the inputs that form a minimal generating set, in processing order.
  std::vector<std::size_t> minimal_generators;
  std::size_t input_count = 0;
  bool reduced = false;
  /// False when the degree cap stopped the computation.
  bool complete = true;
  GroebnerStats stats;

  const MonomialOrder& order() const { return space->ring().order(); }
  std::size_t size() const { return elements.size(); }

  std::vector<monomial_type> leads() const {
    std::vector<monomial_type> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.lead_monomial());
    return out;
  }
};

namespace detail {

template <class Space>
inline constexpr bool is_ring_space = std::is_same_v<Space, PolynomialRing<typename Space::field_type>>;

template <class Space>
class Completion {
 public:
  using F = typename Space::field_type;
  using Element = TermList<Space>;
  using Poly = Polynomial<F>;
  using Row = std::vector<Poly>;
  using Mono = typename Space::monomial_type;

  Completion(std::shared_ptr<const Space> space, const std::vector<Element>& inputs, const GroebnerOptions& opts)
      : space_(std::move(space)), inputs_(inputs), opts_(opts), k_(space_->field()) {
    for (const auto& f : inputs_) {
      if (!f.same_space(Element(space_))) throw std::invalid_argument("elements live in different rings or modules");
      if (!f.is_homogeneous()) throw std::invalid_argument("homogeneous input required");
    }
    ring_ = space_->ring().ring_ptr();
  }

  GroebnerBasis<Space> run() {
    result_.space = space_;
    result_.input_count = inputs_.size();
    std::vector<std::size_t> order;
    for (std::size_t b = 0; b < inputs_.size(); ++b) {
      if (!inputs_[b].is_zero()) order.push_back(b);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return inputs_[a].degree() < inputs_[b].degree(); });
    std::mt19937_64 rng(opts_.pair_seed.value_or(0));
    std::size_t next_input = 0;
    while (true) {
      std::optional<int> d;
      for (const auto& p : pending_) d = d ? std::min(*d, p.sugar_degree) : p.sugar_degree;
      if (next_input < order.size()) {
        const int din = inputs_[order[next_input]].degree();
        d = d ? std::min(*d, din) : din;
      }
      if (!d) break;
      if (opts_.degree_cap && *d > *opts_.degree_cap) {
        result_.complete = false;
        break;
      }
      result_.stats.max_degree = std::max(result_.stats.max_degree, *d);

      std::vector<SPair<Space>> batch;
      std::vector<SPair<Space>> rest;
      for (auto& p : pending_) (p.sugar_degree == *d ? batch : rest).push_back(std::move(p));
      pending_ = std::move(rest);
      if (opts_.pair_seed) {
        std::shuffle(batch.begin(), batch.end(), rng);
      } else {
        std::sort(batch.begin(), batch.end(),
                  [](const auto& a, const auto& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
      }
      for (const auto& p : batch) process_pair(p);

      while (next_input < order.size() && inputs_[order[next_input]].degree() == *d) {
        const std::size_t b = order[next_input++];
        Row row;
        if (opts_.track_transform) {
          row = zero_row();
          row[b] = one(ring_);
        }
        auto [h, r] = reduce_top(inputs_[b], std::move(row));
        if (!h.is_zero()) {
          result_.minimal_generators.push_back(b);
          insert(std::move(h), std::move(r));
        }
      }
    }
    finish();
    return std::move(result_);
  }

 private:
  Row zero_row() const { return Row(inputs_.size(), Poly(ring_)); }

  // row - sum_k q_k T_k
  void subtract_rows(Row& row, const std::vector<Poly>& q) const {
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k].is_zero()) continue;
      for (std::size_t b = 0; b < row.size(); ++b) {
        if (!rows_[k][b].is_zero()) row[b] -= q[k] * rows_[k][b];
      }
    }
  }

  std::pair<Element, Row> reduce_top(const Element& f, Row row) {
    auto div = divide(f, elements_, true);
    result_.stats.reduction_steps += div.reduction_steps;
    if (opts_.track_transform) subtract_rows(row, div.quotients);
    return {std::move(div.remainder), std::move(row)};
  }

  void process_pair(const SPair<Space>& p) {
    ++result_.stats.pairs_reduced;
    const auto& fi = elements_[p.i];
    const auto& fj = elements_[p.j];
    auto s = *spair_factors(fi, fj);
    Element spoly = fi.times(s.b, s.mb).minus_times(s.c, s.mc, fj);
    Row row;
    if (opts_.track_transform) {
      row = zero_row();
      for (std::size_t b = 0; b < row.size(); ++b) {
        row[b] = rows_[p.i][b].times(s.b, s.mb).minus_times(s.c, s.mc, rows_[p.j][b]);
      }
    }
    auto [h, r] = reduce_top(spoly, std::move(row));
    if (h.is_zero()) {
      ++result_.stats.zero_reductions;
      return;
    }
    insert(std::move(h), std::move(r));
  }

  void insert(Element h, Row row) {
    const auto c = k_.inv(h.lead_coefficient());
    h = h.scaled(c);
    if (opts_.track_transform) {
      for (auto& e : row) e = e.scaled(c);
    }
    if (opts_.reduce_incrementally && !elements_.empty()) {
      auto div = divide(h, elements_);
      result_.stats.reduction_steps += div.reduction_steps;
      h = std::move(div.remainder);
      if (opts_.track_transform) subtract_rows(row, div.quotients);
    }
    update_pairs(h);
    elements_.push_back(std::move(h));
    rows_.push_back(std::move(row));
  }

  void update_pairs(const Element& h) {
    const std::size_t t = elements_.size();
    const Mono& lt = h.lead_monomial();
    std::vector<SPair<Space>> cands;
    for (std::size_t i = 0; i < t; ++i) {
      if (auto l = lcm_of(elements_[i].lead_monomial(), lt)) {
        const int deg = space_->degree(*l);
        cands.push_back({i, t, std::move(*l), deg});
      }
    }
    result_.stats.pairs_created += cands.size();
    if (!opts_.use_criteria) {
      for (auto& p : cands) pending_.push_back(std::move(p));
      return;
    }
    // Old pairs whose lcm is strictly divisible through the new lead.
    std::vector<SPair<Space>> kept;
    for (auto& p : pending_) {
      const bool drop = divides(lt, p.lcm) && !(lcm_of(elements_[p.i].lead_monomial(), lt) == p.lcm) &&
                        !(lcm_of(elements_[p.j].lead_monomial(), lt) == p.lcm);
      if (drop) {
        ++result_.stats.pairs_skipped;
      } else {
        kept.push_back(std::move(p));
      }
    }
    pending_ = std::move(kept);

    auto is_coprime = [&](const SPair<Space>& p) {
      if constexpr (is_ring_space<Space>) {
        return coprime(elements_[p.i].lead_monomial(), lt);
      } else {
        return false;
      }
    };
    std::vector<SPair<Space>> accepted;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const auto& p = cands[a];
      bool ok = is_coprime(p);
      if (!ok) {
        ok = true;
        for (std::size_t b = a + 1; b < cands.size() && ok; ++b) ok = !divides(cands[b].lcm, p.lcm);
        for (std::size_t b = 0; b < accepted.size() && ok; ++b) ok = !divides(accepted[b].lcm, p.lcm);
      }
      if (ok) {
        accepted.push_back(p);
      } else {
        ++result_.stats.pairs_skipped;
      }
    }
    for (auto& p : accepted) {
      if (is_coprime(p)) {
        ++result_.stats.pairs_skipped;
      } else {
        pending_.push_back(std::move(p));
      }
    }
  }

  void finish() {
    const std::size_t n = elements_.size();
    if (opts_.reduce) {
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<Element> others;
        others.reserve(n - 1);
        for (std::size_t b = 0; b < n; ++b) {
          if (b != a) others.push_back(elements_[b]);
        }
        if (others.empty()) continue;
        auto div = divide(elements_[a], others);
        result_.stats.reduction_steps += div.reduction_steps;
        if (opts_.track_transform) {
          std::vector<Poly> q(n, Poly(ring_));
          for (std::size_t b = 0, o = 0; b < n; ++b) {
            if (b != a) q[b] = std::move(div.quotients[o++]);
          }
          subtract_rows(rows_[a], q);
        }
        elements_[a] = std::move(div.remainder);
      }
      result_.reduced = true;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      const int da = elements_[a].degree();
      const int db = elements_[b].degree();
      if (da != db) return da < db;
      return space_->compare(elements_[a].lead_monomial(), elements_[b].lead_monomial()) > 0;
    });
    for (auto a : perm) {
      result_.elements.push_back(std::move(elements_[a]));
      if (opts_.track_transform) result_.transform.push_back(std::move(rows_[a]));
    }
  }

  std::shared_ptr<const Space> space_;
  const std::vector<Element>& inputs_;
  GroebnerOptions opts_;
  const F& k_;
  RingPtr<F> ring_;
  std::vector<Element> elements_;
  std::vector<Row> rows_;
  std::vector<SPair<Space>> pending_;
  GroebnerBasis<Space> result_;
};

}  // namespace detail

/// Groebner basis of the submodule generated by `inputs` (zero inputs are
/// ignored; an empty list gives an empty basis).
template <class Space>
GroebnerBasis<Space> groebner(std::shared_ptr<const Space> space, const std::vector<TermList<Space>>& inputs,
                              const GroebnerOptions& opts = {}) {
  return detail::Completion<Space>(std::move(space), inputs, opts).run();
}

/// Groebner basis of an ideal under order `o`. The generators are re-sorted
/// into a ring carrying `o` if theirs differs.
template <Field F>
GroebnerBasis<PolynomialRing<F>> buchberger(const std::vector<Polynomial<F>>& gens, const MonomialOrder& o,
                                            const GroebnerOptions& opts = {}) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  auto ring = gens.front().ring().order() == o ? gens.front().ring().ring_ptr() : gens.front().ring().with_order(o);
  std::vector<Polynomial<F>> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) {
    gens.front().check_same_space(g);
    inputs.push_back(g.ring().order() == o ? g : g.reordered(ring));
  }
  return groebner(ring, inputs, opts);
}

template <Field F>
GroebnerBasis<PolynomialRing<F>> buchberger(const std::vector<Polynomial<F>>& gens, const GroebnerOptions& opts = {}) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  return buchberger(gens, gens.front().ring().order(), opts);
}

/// Module version: the order is the one carried by the module.
template <Field F>
GroebnerBasis<FreeModule<F>> module_buchberger(const std::vector<ModuleElement<F>>& gens,
                                               const GroebnerOptions& opts = {}) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : gens) {
    if (!g.same_space(gens.front())) throw std::invalid_argument("generators lie in different modules");
  }
  return groebner(gens.front().space_handle(), gens, opts);
}

/// True iff every defined S-pair reduces to zero under division by `fs`.
template <class Space>
bool is_groebner(const std::vector<TermList<Space>>& fs) {
  for (const auto& f : fs) {
    if (f.is_zero()) throw std::invalid_argument("zero element in basis");
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      auto s = s_polynomial(fs[i], fs[j]);
      if (s && !divide(*s, fs).remainder.is_zero()) return false;
    }
  }
  return true;
}

/// Drops pairs whose S-polynomial is known to reduce to zero: coprime leads
/// (ring case) and the chain criterion with strict lcm inequalities. The
/// survivors together with the coprime pairs still generate the module of
/// monomial syzygies.
template <class M>
std::vector<std::pair<std::size_t, std::size_t>> pair_filter(const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                                             const std::vector<M>& leads) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [i, j] : pairs) {
    auto lij = lcm_of(leads.at(i), leads.at(j));
    if (!lij) continue;
    if constexpr (std::is_same_v<M, Monomial>) {
      if (coprime(leads[i], leads[j])) continue;
    }
    bool chained = false;
    for (std::size_t k = 0; k < leads.size() && !chained; ++k) {
      if (k == i || k == j || !divides(leads[k], *lij)) continue;
      chained = !(lcm_of(leads[i], leads[k]) == lij) && !(lcm_of(leads[k], leads[j]) == lij);
    }
    if (!chained) out.emplace_back(i, j);
  }
  return out;
}

template <class Space>
TermList<Space> normal_form(const TermList<Space>& g, const std::vector<TermList<Space>>& basis) {
  if (basis.empty()) return g;
  return divide(g, basis).remainder;
}

template <class Space>
TermList<Space> normal_form(const TermList<Space>& g, const GroebnerBasis<Space>& gb) {
  return normal_form(g, gb.elements);
}

}  // namespace syz
