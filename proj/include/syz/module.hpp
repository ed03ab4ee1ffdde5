#pragma once

// Graded free modules S e_0 + ... + S e_{q-1} with deg(e_i) = shift_i, and
// their multiplicative module orders:
//
//   position-over-term  x^A e_i > x^B e_j  iff i < j, or i = j and x^A > x^B
//   term-over-position  x^A e_i > x^B e_j  iff x^A > x^B, or x^A = x^B and i < j
//   schreyer            x^A e_i > x^B e_j  iff x^A in(g_i) > x^B in(g_j) in the parent,
//                                          or the two are equal and i < j
//
// A Schreyer order whose parent chain ends in the ring is flattened into a
// key (x^A * total_i, chain_i, i) so that comparisons do not recurse.

#include "syz/polynomial.hpp"

#include <algorithm>
#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

template <Field F>
class FreeModule {
 public:
  using field_type = F;
  using monomial_type = ModuleMonomial;
  using ptr = std::shared_ptr<const FreeModule>;

  enum class OrderKind { position_over_term, term_over_position, schreyer };

  static ptr make(RingPtr<F> ring, std::vector<int> shifts, OrderKind kind = OrderKind::position_over_term) {
    if (kind == OrderKind::schreyer) throw std::invalid_argument("use FreeModule::schreyer for Schreyer orders");
    auto m = std::shared_ptr<FreeModule>(new FreeModule(std::move(ring), std::move(shifts), kind));
    return m;
  }

  /// Schreyer order over the ring: e_i is assigned the monomial `leads[i]`.
  static ptr schreyer(RingPtr<F> ring, std::vector<Monomial> leads, std::vector<int> shifts) {
    if (leads.size() != shifts.size()) throw std::invalid_argument("one lead per basis element required");
    auto m = std::shared_ptr<FreeModule>(new FreeModule(ring, std::move(shifts), OrderKind::schreyer));
    m->flat_ = true;
    m->total_ = std::move(leads);
    m->chain_.assign(m->total_.size(), {});
    return m;
  }

  /// Schreyer order induced by `parent` and the lead monomials of the images of the basis.
  static ptr schreyer(ptr parent, std::vector<ModuleMonomial> leads) {
    std::vector<int> shifts;
    shifts.reserve(leads.size());
    for (const auto& l : leads) shifts.push_back(parent->degree(l));
    auto m = std::shared_ptr<FreeModule>(new FreeModule(parent->ring_, std::move(shifts), OrderKind::schreyer));
    if (parent->flat_) {
      m->flat_ = true;
      for (const auto& l : leads) {
        m->total_.push_back(l.mono * parent->total_.at(l.comp));
        auto chain = parent->chain_.at(l.comp);
        chain.push_back(l.comp);
        m->chain_.push_back(std::move(chain));
      }
    } else {
      m->parent_ = std::move(parent);
      m->parent_leads_ = std::move(leads);
    }
    return m;
  }

  const RingPtr<F>& ring_ptr() const { return ring_; }
  const PolynomialRing<F>& ring() const { return *ring_; }
  const F& field() const { return ring_->field(); }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<int>& shifts() const { return shifts_; }
  int shift(std::size_t i) const { return shifts_.at(i); }
  OrderKind order_kind() const { return kind_; }

  int degree(const ModuleMonomial& m) const { return m.mono.degree() + shifts_[m.comp]; }

  std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
    const auto& o = ring_->order();
    switch (kind_) {
      case OrderKind::position_over_term:
        if (a.comp != b.comp) return b.comp <=> a.comp;
        return o.compare(a.mono, b.mono);
      case OrderKind::term_over_position: {
        const auto c = o.compare(a.mono, b.mono);
        if (c != 0) return c;
        return b.comp <=> a.comp;
      }
      case OrderKind::schreyer: {
        if (flat_) {
          const auto c = o.compare(a.mono * total_[a.comp], b.mono * total_[b.comp]);
          if (c != 0) return c;
          const auto& ca = chain_[a.comp];
          const auto& cb = chain_[b.comp];
          for (std::size_t i = 0; i < ca.size() && i < cb.size(); ++i) {
            if (ca[i] != cb[i]) return cb[i] <=> ca[i];
          }
          return b.comp <=> a.comp;
        }
        const auto c = parent_->compare(times(a.mono, parent_leads_[a.comp]), times(b.mono, parent_leads_[b.comp]));
        if (c != 0) return c;
        return b.comp <=> a.comp;
      }
    }
    return std::strong_ordering::equal;
  }

  bool same_as(const FreeModule& other) const {
    if (this == &other) return true;
    if (!ring_->same_as(*other.ring_) || shifts_ != other.shifts_ || kind_ != other.kind_) return false;
    if (kind_ != OrderKind::schreyer) return true;
    return flat_ == other.flat_ && total_ == other.total_ && chain_ == other.chain_ && parent_ == other.parent_ &&
           parent_leads_ == other.parent_leads_;
  }

 private:
  FreeModule(RingPtr<F> ring, std::vector<int> shifts, OrderKind kind)
      : ring_(std::move(ring)), shifts_(std::move(shifts)), kind_(kind) {
    if (shifts_.empty()) throw std::invalid_argument("free module must have rank >= 1");
  }

  RingPtr<F> ring_;
  std::vector<int> shifts_;
  OrderKind kind_;
  bool flat_ = false;
  std::vector<Monomial> total_;
  std::vector<std::vector<std::uint32_t>> chain_;
  ptr parent_;
  std::vector<ModuleMonomial> parent_leads_;
};

template <Field F>
using ModulePtr = std::shared_ptr<const FreeModule<F>>;

template <Field F>
using ModuleElement = TermList<FreeModule<F>>;

/// sum_i comps[i] e_i.
template <Field F>
ModuleElement<F> from_components(const ModulePtr<F>& module, const std::vector<Polynomial<F>>& comps) {
  if (comps.size() != module->rank()) throw std::invalid_argument("component count must equal module rank");
  std::vector<typename ModuleElement<F>::term_type> terms;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const auto& t : comps[i]) terms.push_back({t.coeff, ModuleMonomial{t.mono, static_cast<std::uint32_t>(i)}});
  }
  return ModuleElement<F>::from_terms(module, std::move(terms));
}

template <Field F>
std::vector<Polynomial<F>> components(const ModuleElement<F>& v) {
  const auto& module = v.space();
  std::vector<std::vector<typename Polynomial<F>::term_type>> parts(module.rank());
  for (const auto& t : v) parts[t.mono.comp].push_back({t.coeff, t.mono.mono});
  std::vector<Polynomial<F>> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial<F>::from_terms(module.ring_ptr(), std::move(p)));
  return out;
}

/// The basis vector e_i.
template <Field F>
ModuleElement<F> basis_vector(const ModulePtr<F>& module, std::size_t i) {
  return ModuleElement<F>::term(module, module->field().one(),
                                ModuleMonomial{module->ring().one(), static_cast<std::uint32_t>(i)});
}

/// View a polynomial as an element of a rank-1 module.
template <Field F>
ModuleElement<F> as_module_element(const ModulePtr<F>& module, const Polynomial<F>& f) {
  if (module->rank() != 1) throw std::invalid_argument("rank-1 module required");
  return from_components(module, std::vector<Polynomial<F>>{f});
}

/// Image of the vector of coefficients `coeffs` under e_i -> images[i].
template <class Space>
TermList<Space> combine(const std::vector<Polynomial<typename Space::field_type>>& coeffs,
                        const std::vector<TermList<Space>>& images, const std::shared_ptr<const Space>& target) {
  if (coeffs.size() != images.size()) throw std::invalid_argument("coefficient count must equal image count");
  std::vector<typename TermList<Space>::term_type> terms;
  const auto& k = target->field();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& a : coeffs[i]) {
      for (const auto& b : images[i]) terms.push_back({k.mul(a.coeff, b.coeff), times(a.mono, b.mono)});
    }
  }
  return TermList<Space>::from_terms(target, std::move(terms));
}

}  // namespace syz
