#pragma once

#include "syz/field.hpp"
#include "syz/monomial.hpp"
#include "syz/order.hpp"

#include <algorithm>
#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace syz {

/// k[x_0, ..., x_n] with a fixed monomial order. Shared immutably via RingPtr.
template <Field F>
class PolynomialRing : public std::enable_shared_from_this<PolynomialRing<F>> {
 public:
  using field_type = F;
  using monomial_type = Monomial;

  static std::shared_ptr<const PolynomialRing> make(F field, std::vector<std::string> vars,
                                                    std::optional<MonomialOrder> order = std::nullopt) {
    return std::shared_ptr<const PolynomialRing>(
        new PolynomialRing(std::move(field), std::move(vars), std::move(order)));
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  std::shared_ptr<const PolynomialRing> with_order(MonomialOrder order) const {
    return make(field_, vars_, std::move(order));
  }

  std::shared_ptr<const PolynomialRing> ring_ptr() const { return this->shared_from_this(); }
  const PolynomialRing& ring() const { return *this; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }
  int degree(const Monomial& m) const { return m.degree(); }
  Monomial one() const { return Monomial(nvars()); }

  bool same_as(const PolynomialRing& other) const {
    return this == &other || (field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_);
  }

 private:
  PolynomialRing(F field, std::vector<std::string> vars, std::optional<MonomialOrder> order)
      : field_(std::move(field)),
        vars_(std::move(vars)),
        order_(order ? std::move(*order) : MonomialOrder::grevlex(vars_.size())) {
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.empty()) throw std::invalid_argument("empty variable name");
      if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
    }
    if (order_.nvars() != vars_.size()) throw std::invalid_argument("order defined over a different variable count");
  }

  F field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

template <Field F>
using RingPtr = std::shared_ptr<const PolynomialRing<F>>;

/// x^A e_comp in a free module.
struct ModuleMonomial {
  Monomial mono;
  std::uint32_t comp = 0;

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

// Uniform helpers so that the division and completion code works for both
// ring monomials and module monomials.

inline const Monomial& base_monomial(const Monomial& m) { return m; }
inline const Monomial& base_monomial(const ModuleMonomial& m) { return m.mono; }
inline std::uint32_t component_of(const Monomial&) { return 0; }
inline std::uint32_t component_of(const ModuleMonomial& m) { return m.comp; }

inline bool divides(const Monomial& a, const Monomial& b) { return a.divides(b); }
inline bool divides(const ModuleMonomial& a, const ModuleMonomial& b) {
  return a.comp == b.comp && a.mono.divides(b.mono);
}

/// b / a as a ring monomial; requires divides(a, b).
inline Monomial cofactor(const Monomial& a, const Monomial& b) { return a.cofactor(b); }
inline Monomial cofactor(const ModuleMonomial& a, const ModuleMonomial& b) { return a.mono.cofactor(b.mono); }

inline std::optional<Monomial> lcm_of(const Monomial& a, const Monomial& b) { return lcm(a, b); }
inline std::optional<ModuleMonomial> lcm_of(const ModuleMonomial& a, const ModuleMonomial& b) {
  if (a.comp != b.comp) return std::nullopt;
  return ModuleMonomial{lcm(a.mono, b.mono), a.comp};
}

inline Monomial times(const Monomial& m, const Monomial& t) { return m * t; }
inline ModuleMonomial times(const Monomial& m, const ModuleMonomial& t) { return {m * t.mono, t.comp}; }

}  // namespace syz
