#pragma once

// TermList<Space>: a sparse, strictly descending list of nonzero terms over a
// space (a polynomial ring or a free module). Values are immutable once built;
// every operation returns a new canonical list.

#include "syz/ring.hpp"

#include <algorithm>
#include <compare>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace syz {

template <class C, class M>
struct BasicTerm {
  C coeff;
  M mono;
};

template <class Space>
class TermList {
 public:
  using space_type = Space;
  using field_type = typename Space::field_type;
  using coeff_type = typename field_type::value_type;
  using monomial_type = typename Space::monomial_type;
  using term_type = BasicTerm<coeff_type, monomial_type>;
  using space_ptr = std::shared_ptr<const Space>;

  TermList() = default;
  explicit TermList(space_ptr space) : space_(std::move(space)) {}

  /// Sorts, combines equal monomials and drops zero coefficients.
  static TermList from_terms(space_ptr space, std::vector<term_type> terms) {
    const Space& s = *space;
    std::sort(terms.begin(), terms.end(),
              [&](const term_type& a, const term_type& b) { return s.compare(a.mono, b.mono) > 0; });
    std::vector<term_type> out;
    out.reserve(terms.size());
    const auto& k = s.field();
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = k.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
    TermList r(std::move(space));
    r.terms_ = std::move(out);
    return r;
  }

  /// Trusts that `terms` are strictly descending with nonzero coefficients.
  static TermList from_sorted(space_ptr space, std::vector<term_type> terms) {
    TermList r(std::move(space));
    r.terms_ = std::move(terms);
    return r;
  }

  static TermList term(space_ptr space, coeff_type c, monomial_type m) {
    TermList r(std::move(space));
    if (!r.field().is_zero(c)) r.terms_.push_back({std::move(c), std::move(m)});
    return r;
  }

  const Space& space() const { return *space_; }
  const space_ptr& space_handle() const { return space_; }
  const auto& ring() const { return space_->ring(); }
  const field_type& field() const { return space_->field(); }
  const std::vector<term_type>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  const term_type& lead() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero element");
    return terms_.front();
  }
  const monomial_type& lead_monomial() const { return lead().mono; }
  const coeff_type& lead_coefficient() const { return lead().coeff; }

  /// Largest degree over all terms (shifts included for module elements).
  int degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero element");
    int d = space_->degree(terms_.front().mono);
    for (const auto& t : terms_) d = std::max(d, space_->degree(t.mono));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = space_->degree(terms_.front().mono);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const term_type& t) { return space_->degree(t.mono) == d; });
  }

  TermList operator-() const {
    TermList r(space_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field().neg(t.coeff), t.mono});
    return r;
  }

  TermList scaled(const coeff_type& c) const {
    TermList r(space_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, c), t.mono});
    return r;
  }

  /// c * m * this. Multiplicativity of the order keeps the terms sorted.
  TermList times(const coeff_type& c, const Monomial& m) const {
    TermList r(space_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, c), syz::times(m, t.mono)});
    return r;
  }

  TermList monic() const {
    if (terms_.empty()) return *this;
    return scaled(field().inv(lead_coefficient()));
  }

  /// this - c * m * other, by a single merge.
  TermList minus_times(const coeff_type& c, const Monomial& m, const TermList& other) const {
    check_same_space(other);
    return merge(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(), field().neg(c), &m);
  }

  friend TermList operator+(const TermList& a, const TermList& b) {
    a.check_same_space(b);
    return a.merge(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), a.field().one(), nullptr);
  }

  friend TermList operator-(const TermList& a, const TermList& b) {
    a.check_same_space(b);
    return a.merge(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), a.field().neg(a.field().one()),
                   nullptr);
  }

  TermList& operator+=(const TermList& b) { return *this = *this + b; }
  TermList& operator-=(const TermList& b) { return *this = *this - b; }

  /// The list without its leading term.
  TermList tail() const {
    TermList r(space_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  /// Same terms, re-sorted under a different (compatible) space.
  TermList reordered(space_ptr space) const { return from_terms(std::move(space), terms_); }

  friend bool operator==(const TermList& a, const TermList& b) {
    if (!a.same_space(b) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  bool same_space(const TermList& other) const {
    if (space_ == other.space_) return true;
    if (!space_ || !other.space_) return false;
    return space_->same_as(*other.space_);
  }

  void check_same_space(const TermList& other) const {
    if (!same_space(other)) throw std::invalid_argument("elements live in different rings or modules");
  }

 private:
  using iter = typename std::vector<term_type>::const_iterator;

  // a + c * (m * b); m == nullptr means m = 1.
  TermList merge(iter a, iter a_end, iter b, iter b_end, const coeff_type& c, const Monomial* m) const {
    const Space& s = *space_;
    const auto& k = s.field();
    TermList r(space_);
    r.terms_.reserve(static_cast<std::size_t>((a_end - a) + (b_end - b)));
    if (k.is_zero(c)) {
      r.terms_.assign(a, a_end);
      return r;
    }
    auto scaled_b = [&](iter it) -> term_type {
      return {k.mul(it->coeff, c), m ? syz::times(*m, it->mono) : it->mono};
    };
    std::optional<term_type> pending;
    while (a != a_end || b != b_end) {
      if (b != b_end && !pending) pending = scaled_b(b);
      if (b == b_end) {
        r.terms_.push_back(*a++);
        continue;
      }
      if (a == a_end) {
        r.terms_.push_back(std::move(*pending));
        pending.reset();
        ++b;
        continue;
      }
      const auto cmp = s.compare(a->mono, pending->mono);
      if (cmp > 0) {
        r.terms_.push_back(*a++);
      } else if (cmp < 0) {
        r.terms_.push_back(std::move(*pending));
        pending.reset();
        ++b;
      } else {
        auto sum = k.add(a->coeff, pending->coeff);
        if (!k.is_zero(sum)) r.terms_.push_back({std::move(sum), a->mono});
        ++a;
        ++b;
        pending.reset();
      }
    }
    return r;
  }

  space_ptr space_;
  std::vector<term_type> terms_;
};

}  // namespace syz
