#pragma once

// Degree-truncated linear algebra on Macaulay matrices. Deliberately naive:
// dense rows, exact elimination, no reuse of Groebner machinery. Used as an
// independent check of the symbolic routines.

#include "syz/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace syz::oracle {

struct Budget {
  /// Upper bound on rows * columns of a single matrix.
  std::size_t max_entries = 40'000'000;
};

template <Field F>
class MacaulayMatrix {
 public:
  using value_type = typename F::value_type;

  /// Rows: all degree-d monomial multiples of the nonzero generators.
  /// Columns: degree-d monomials, decreasing under `order`.
  MacaulayMatrix(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring, int d, const MonomialOrder& order,
                 const Budget& budget = {})
      : field_(ring->field()), degree_(d) {
    columns_ = monomials_of_degree(ring->nvars(), d);
    std::sort(columns_.begin(), columns_.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t c = 0; c < columns_.size(); ++c) index.emplace(columns_[c], c);
    std::size_t nrows = 0;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw std::invalid_argument("oracle needs homogeneous generators");
      if (g.degree() <= d) nrows += monomials_of_degree(ring->nvars(), d - g.degree()).size();
    }
    if (nrows * std::max<std::size_t>(columns_.size(), 1) > budget.max_entries) {
      throw std::length_error("degree " + std::to_string(d) + " exceeds the oracle memory budget");
    }
    for (const auto& g : gens) {
      if (g.is_zero() || g.degree() > d) continue;
      for (const auto& m : monomials_of_degree(ring->nvars(), d - g.degree())) {
        std::vector<value_type> row(columns_.size(), field_.zero());
        for (const auto& t : g) row[index.at(m * t.mono)] = t.coeff;
        rows_.push_back(std::move(row));
      }
    }
  }

  const std::vector<Monomial>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }

  /// Row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> echelon() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns_.size() && r < rows_.size(); ++c) {
      std::size_t p = r;
      while (p < rows_.size() && field_.is_zero(rows_[p][c])) ++p;
      if (p == rows_.size()) continue;
      std::swap(rows_[r], rows_[p]);
      const auto inv = field_.inv(rows_[r][c]);
      for (std::size_t j = c; j < columns_.size(); ++j) rows_[r][j] = field_.mul(rows_[r][j], inv);
      for (std::size_t i = r + 1; i < rows_.size(); ++i) {
        if (field_.is_zero(rows_[i][c])) continue;
        const auto f = rows_[i][c];
        for (std::size_t j = c; j < columns_.size(); ++j) {
          if (!field_.is_zero(rows_[r][j])) rows_[i][j] = field_.sub(rows_[i][j], field_.mul(f, rows_[r][j]));
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  void append_row(const Polynomial<F>& g) {
    std::vector<value_type> row(columns_.size(), field_.zero());
    for (const auto& t : g) {
      auto it = std::find(columns_.begin(), columns_.end(), t.mono);
      if (it == columns_.end()) throw std::invalid_argument("polynomial is not of the matrix degree");
      row[static_cast<std::size_t>(it - columns_.begin())] = t.coeff;
    }
    rows_.push_back(std::move(row));
  }

 private:
  F field_;
  int degree_;
  std::vector<Monomial> columns_;
  std::vector<std::vector<value_type>> rows_;
};

/// dim_k I_d.
template <Field F>
std::size_t ideal_dim_in_degree(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring, int d,
                                const Budget& budget = {}) {
  MacaulayMatrix<F> m(gens, ring, d, ring->order(), budget);
  return m.echelon().size();
}

/// True iff the homogeneous g lies in I_{deg g}.
template <Field F>
bool membership_in_degree(const Polynomial<F>& g, const std::vector<Polynomial<F>>& gens, const Budget& budget = {}) {
  if (g.is_zero()) return true;
  if (!g.is_homogeneous()) throw std::invalid_argument("oracle membership needs a homogeneous polynomial");
  const auto ring = g.ring().ring_ptr();
  MacaulayMatrix<F> m(gens, ring, g.degree(), ring->order(), budget);
  const auto before = m.echelon().size();
  m.append_row(g);
  return m.echelon().size() == before;
}

/// in(I)_d under `order`: the pivot columns of the echelon form.
template <Field F>
std::vector<Monomial> initial_ideal_in_degree(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring, int d,
                                              const MonomialOrder& order, const Budget& budget = {}) {
  MacaulayMatrix<F> m(gens, ring, d, order, budget);
  std::vector<Monomial> out;
  for (auto c : m.echelon()) out.push_back(m.columns()[c]);
  return out;
}

/// dim_k (S/I)_d for d = 0..dmax.
template <Field F>
std::vector<long long> hilbert_function(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring, int dmax,
                                        const Budget& budget = {}) {
  std::vector<long long> out;
  for (int d = 0; d <= dmax; ++d) {
    const auto total = static_cast<long long>(monomials_of_degree(ring->nvars(), d).size());
    out.push_back(total - static_cast<long long>(ideal_dim_in_degree(gens, ring, d, budget)));
  }
  return out;
}

}  // namespace syz::oracle
