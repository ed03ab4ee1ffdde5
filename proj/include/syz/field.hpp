#pragma once

// Coefficient fields: exact rationals (GMP) and prime fields Z/p with p < 2^31.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace syz {

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a,
                         const typename F::value_type& b, long long n, std::string_view s) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.parse(s) } -> std::same_as<typename F::value_type>;
  { f.add(a, b) } -> std::same_as<typename F::value_type>;
  { f.sub(a, b) } -> std::same_as<typename F::value_type>;
  { f.mul(a, b) } -> std::same_as<typename F::value_type>;
  { f.div(a, b) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.is_one(a) } -> std::same_as<bool>;
  { f.equal(a, b) } -> std::same_as<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.name() } -> std::same_as<std::string>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
};

/// The field Q. Values are kept canonical (lowest terms, positive denominator).
class Rationals {
 public:
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long n) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
    return value_type(z);
  }

  /// Accepts "123", "-7" or "3/4".
  value_type parse(std::string_view text) const {
    value_type q;
    if (q.set_str(std::string(text), 10) != 0) {
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
  }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type div(const value_type& a, const value_type& b) const {
    if (b == 0) throw std::domain_error("division by zero in Q");
    return a / b;
  }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("inverse of zero in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
  std::uint64_t characteristic() const { return 0; }

  bool operator==(const Rationals&) const { return true; }
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace detail

/// Z/p for a prime p < 2^31. Residues live in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("modulus must be < 2^31");
    if (!detail::is_prime(p)) {
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
  }

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  /// Accepts an optionally signed decimal integer of any length.
  value_type parse(std::string_view text) const {
    bool negative = false;
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
      negative = text[0] == '-';
      i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("malformed integer literal");
    std::uint64_t r = 0;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
      }
      r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
    }
    auto v = static_cast<value_type>(r);
    return negative ? neg(v) : v;
  }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }

  // Extended Euclid.
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero in Fp");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = t - q * new_t;
      std::swap(t, new_t);
      r = r - q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool equal(value_type a, value_type b) const { return a == b; }

  /// Symmetric representative, so that p-1 prints as -1.
  std::string to_string(value_type a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  std::string name() const { return "Fp:" + std::to_string(p_); }
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace syz
