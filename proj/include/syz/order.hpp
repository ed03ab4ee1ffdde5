#pragma once

// Multiplicative monomial orders.
//
// lex:          x^A > x^B iff the first nonzero entry of A - B is positive.
// grevlex:      compare total degree, then x^A > x^B iff the last nonzero entry of A - B is negative.
// elimination:  compare degree in the first k variables, ties broken by grevlex.
// weight:       x^A > x^B iff W.A < W.B, ties broken by lex or grevlex.

#include "syz/monomial.hpp"

#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syz {

class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, elimination, weight };

  static MonomialOrder lex(std::size_t nvars) { return MonomialOrder(Kind::lex, nvars); }
  static MonomialOrder grevlex(std::size_t nvars) { return MonomialOrder(Kind::grevlex, nvars); }

  static MonomialOrder elimination(std::size_t nvars, std::size_t k) {
    if (k > nvars) throw std::invalid_argument("cannot eliminate more variables than the ring has");
    MonomialOrder o(Kind::elimination, nvars);
    o.eliminate_ = k;
    return o;
  }

  static MonomialOrder weight(std::vector<long> w, Kind tiebreak = Kind::grevlex) {
    if (tiebreak != Kind::lex && tiebreak != Kind::grevlex) {
      throw std::invalid_argument("weight tiebreak must be lex or grevlex");
    }
    MonomialOrder o(Kind::weight, w.size());
    o.weights_ = std::move(w);
    o.tiebreak_ = tiebreak;
    return o;
  }

  /// Parses "lex", "grevlex", "elim:k" or "weight:w0,w1,...[;lex]".
  static MonomialOrder parse(std::string_view text, std::size_t nvars) {
    if (text == "lex") return lex(nvars);
    if (text == "grevlex" || text == "revlex") return grevlex(nvars);
    if (text.starts_with("elim:")) {
      return elimination(nvars, std::stoul(std::string(text.substr(5))));
    }
    if (text.starts_with("weight:")) {
      std::string body(text.substr(7));
      Kind tie = Kind::grevlex;
      if (auto semi = body.find(';'); semi != std::string::npos) {
        const std::string t = body.substr(semi + 1);
        if (t == "lex") {
          tie = Kind::lex;
        } else if (t != "grevlex") {
          throw std::invalid_argument("unknown weight tiebreak '" + t + "'");
        }
        body.resize(semi);
      }
      std::vector<long> w;
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) w.push_back(std::stol(item));
      if (w.size() != nvars) {
        throw std::invalid_argument("weight vector has " + std::to_string(w.size()) + " entries, ring has " +
                                    std::to_string(nvars) + " variables");
      }
      return weight(std::move(w), tie);
    }
    throw std::invalid_argument("unknown monomial order '" + std::string(text) + "'");
  }

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t eliminated() const { return eliminate_; }
  const std::vector<long>& weights() const { return weights_; }
  Kind tiebreak() const { return tiebreak_; }

  long weight_of(const Monomial& m) const {
    long s = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) s += weights_[i] * m[i];
    return s;
  }

  /// `greater` means a > b in this order.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != nvars_ || b.size() != nvars_) throw std::invalid_argument("monomial dimension mismatch");
    switch (kind_) {
      case Kind::lex:
        return compare_lex(a, b);
      case Kind::grevlex:
        return compare_grevlex(a, b);
      case Kind::elimination: {
        int da = 0, db = 0;
        for (std::size_t i = 0; i < eliminate_; ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da <=> db;
        return compare_grevlex(a, b);
      }
      case Kind::weight: {
        const long wa = weight_of(a), wb = weight_of(b);
        if (wa != wb) return wb <=> wa;
        return tiebreak_ == Kind::lex ? compare_lex(a, b) : compare_grevlex(a, b);
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// The same kind of order on one more variable appended last (weight 0).
  /// On monomials of equal total degree it restricts to this order on the
  /// old variables, which is what homogenization needs.
  MonomialOrder extended() const {
    MonomialOrder o = *this;
    ++o.nvars_;
    if (kind_ == Kind::weight) o.weights_.push_back(0);
    return o;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::lex:
        return "lex";
      case Kind::grevlex:
        return "grevlex";
      case Kind::elimination:
        return "elim:" + std::to_string(eliminate_);
      case Kind::weight: {
        std::string s = "weight:";
        for (std::size_t i = 0; i < weights_.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(weights_[i]);
        }
        if (tiebreak_ == Kind::lex) s += ";lex";
        return s;
      }
    }
    return {};
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, std::size_t n) : kind_(k), nvars_(n) {}

  static std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  static std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::size_t nvars_;
  std::size_t eliminate_ = 0;
  std::vector<long> weights_;
  Kind tiebreak_ = Kind::grevlex;
};

}  // namespace syz
