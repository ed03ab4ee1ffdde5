#pragma once

// Monomial ideals and Hilbert functions.
//
// The Hilbert series of S/M is N(t) / (1 - t)^n. The numerator is found by
// splitting on a pivot p = x^e:
//   N(M) = N(M + (p)) + t^e N(M : p)
// down to ideals generated by pairwise coprime monomials, where
// N = prod (1 - t^deg g).

#include "syz/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

/// Integer polynomial in t, coefficient of t^k at index k.
using SeriesNumerator = std::vector<long long>;

class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto& g : gens) {
      if (g.size() != nvars) throw std::invalid_argument("monomial dimension mismatch");
    }
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return MonomialOrder::lex(a.size()).compare(a, b) > 0;
    });
    for (auto& g : gens) {
      const bool redundant =
          std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
      if (!redundant) gens_.push_back(std::move(g));
    }
  }

  /// Leads of a Groebner basis.
  template <class Space>
  static MonomialIdeal of_leads(const GroebnerBasis<Space>& gb) {
    std::vector<Monomial> leads;
    for (const auto& e : gb.elements) leads.push_back(base_monomial(e.lead_monomial()));
    return MonomialIdeal(gb.space->ring().nvars(), std::move(leads));
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  /// (M : m), generated by g / gcd(g, m).
  MonomialIdeal quotient(const Monomial& m) const {
    std::vector<Monomial> out;
    for (const auto& g : gens_) {
      Monomial q(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) q.set(i, std::max(0, g[i] - m[i]));
      out.push_back(std::move(q));
    }
    return MonomialIdeal(nvars_, std::move(out));
  }

  MonomialIdeal plus(const Monomial& m) const {
    auto g = gens_;
    g.push_back(m);
    return MonomialIdeal(nvars_, std::move(g));
  }

  /// Numerator of the Hilbert series of S/M.
  SeriesNumerator numerator() const {
    std::map<std::vector<Monomial::exponent_type>, SeriesNumerator> memo;
    return numerator_rec(*this, memo);
  }

  /// dim_k (S/M)_d for d = 0..dmax.
  std::vector<long long> hilbert_function(int dmax) const { return hilbert_from_numerator(numerator(), nvars_, dmax); }

  /// dim_k (S/M)_d by listing standard monomials; only for small cases.
  long long count_standard_monomials(int d) const {
    long long n = 0;
    for (const auto& m : monomials_of_degree(nvars_, d)) n += contains(m) ? 0 : 1;
    return n;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

  static std::vector<long long> hilbert_from_numerator(const SeriesNumerator& num, std::size_t nvars, int dmax) {
    std::vector<long long> out;
    for (int d = 0; d <= dmax; ++d) {
      long long v = 0;
      for (std::size_t k = 0; k < num.size() && static_cast<int>(k) <= d; ++k) {
        if (num[k] == 0) continue;
        v += num[k] * binomial(d - static_cast<long long>(k) + static_cast<long long>(nvars) - 1,
                               static_cast<long long>(nvars) - 1);
      }
      out.push_back(v);
    }
    return out;
  }

  static long long binomial(long long n, long long k) {
    if (k < 0) return n == -1 && k == -1 ? 1 : 0;  // (1-t)^0: coefficient of t^d is [d == 0]
    if (n < k || n < 0) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

 private:
  static void add_into(SeriesNumerator& a, const SeriesNumerator& b, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  }

  static SeriesNumerator numerator_rec(const MonomialIdeal& m,
                                       std::map<std::vector<Monomial::exponent_type>, SeriesNumerator>& memo) {
    if (m.gens_.empty()) return {1};
    std::vector<Monomial::exponent_type> key;
    for (const auto& g : m.gens_) {
      auto e = g.exponents();
      key.insert(key.end(), e.begin(), e.end());
    }
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Pairwise coprime generators: product formula.
    std::vector<int> used(m.nvars_, 0);
    bool coprime_all = true;
    for (const auto& g : m.gens_) {
      for (std::size_t i = 0; i < m.nvars_; ++i) {
        if (g[i] == 0) continue;
        if (used[i]++) coprime_all = false;
      }
    }
    SeriesNumerator result;
    if (coprime_all) {
      result = {1};
      for (const auto& g : m.gens_) {
        SeriesNumerator next(result.size() + g.degree(), 0);
        for (std::size_t i = 0; i < result.size(); ++i) {
          next[i] += result[i];
          next[i + g.degree()] -= result[i];
        }
        result = std::move(next);
      }
    } else {
      // Pivot on the variable shared by the most generators.
      std::size_t var = 0;
      for (std::size_t i = 1; i < m.nvars_; ++i) {
        if (used[i] > used[var]) var = i;
      }
      int e = 0;
      for (const auto& g : m.gens_) {
        if (g[var] > 0 && g[var] < g.degree()) e = e == 0 ? g[var] : std::min(e, static_cast<int>(g[var]));
      }
      if (e == 0) throw std::logic_error("pivot selection failed");
      const auto p = Monomial::variable(m.nvars_, var, e);
      result = numerator_rec(m.plus(p), memo);
      add_into(result, numerator_rec(m.quotient(p), memo), e);
    }
    while (result.size() > 1 && result.back() == 0) result.pop_back();
    memo.emplace(std::move(key), result);
    return result;
  }

  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

inline std::string to_string(const MonomialIdeal& m, const std::vector<std::string>& vars) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    if (i) s += ", ";
    std::string t;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      const int e = m.generators()[i][v];
      if (e == 0) continue;
      if (!t.empty()) t += "*";
      t += vars.at(v);
      if (e > 1) t += "^" + std::to_string(e);
    }
    s += t.empty() ? "1" : t;
  }
  return s + ")";
}

/// K-polynomial 1 - sum_i (-1)^i beta_ij t^j of S/I from a resolution's alternating sum.
inline SeriesNumerator quotient_numerator_from_alternating_sum(const std::vector<long>& alt) {
  SeriesNumerator n(std::max<std::size_t>(alt.size(), 1), 0);
  n[0] = 1;
  for (std::size_t j = 0; j < alt.size(); ++j) n[j] -= alt[j];
  while (n.size() > 1 && n.back() == 0) n.pop_back();
  return n;
}

}  // namespace syz
