#pragma once

// Dense exponent vectors with a cached total degree.

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

class Monomial {
 public:
  using exponent_type = std::uint16_t;
  static constexpr std::uint32_t max_exponent = std::numeric_limits<exponent_type>::max();

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

  Monomial(std::initializer_list<int> exps) : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

  explicit Monomial(std::span<const int> exps) : exps_(exps.size(), 0) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent");
      if (static_cast<std::uint32_t>(exps[i]) > max_exponent) throw std::overflow_error("exponent overflow");
      exps_[i] = static_cast<exponent_type>(exps[i]);
      degree_ += exps[i];
    }
  }

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const exponent_type> exponents() const { return {exps_.data(), exps_.size()}; }

  void set(std::size_t i, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (static_cast<std::uint32_t>(e) > max_exponent) throw std::overflow_error("exponent overflow");
    degree_ += e - exps_[i];
    exps_[i] = static_cast<exponent_type>(e);
  }

  Monomial& operator*=(const Monomial& other) {
    check_size(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      const std::uint32_t e = std::uint32_t{exps_[i]} + other.exps_[i];
      if (e > max_exponent) throw std::overflow_error("exponent overflow");
      exps_[i] = static_cast<exponent_type>(e);
    }
    degree_ += other.degree_;
    return *this;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// other / this; requires divides(other).
  Monomial cofactor(const Monomial& other) const {
    Monomial q(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) throw std::domain_error("monomial does not divide");
      q.exps_[i] = static_cast<exponent_type>(other.exps_[i] - exps_[i]);
    }
    q.degree_ = other.degree_ - degree_;
    return q;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_size(b);
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      m.degree_ += m.exps_[i];
    }
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_size(b);
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      m.degree_ += m.exps_[i];
    }
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ &&
           std::equal(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
  }

  std::size_t hash() const {
    std::size_t h = exps_.size();
    for (auto e : exps_) h = h * 1000003u ^ e;
    return h;
  }

  void check_size(const Monomial& other) const {
    if (other.exps_.size() != exps_.size()) throw std::invalid_argument("monomial dimension mismatch");
  }

 private:
  boost::container::small_vector<exponent_type, 16> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree `d` in `nvars` variables, in lex-descending order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

}  // namespace syz
