#pragma once

// Graded free resolutions of homogeneous ideals, Betti tables and regularity.
//
// Minimal: at step k the candidate syzygies are run through the completion
// engine in F_{k-1}; the inputs that survive are a minimal generating set and
// become the basis of F_k. The syzygies of the resulting Groebner basis are
// pulled back to the minimal generators through the transformation matrix.
//
// Schreyer: the syzygies s_ij of a Groebner basis are again a Groebner basis,
// so the construction iterates directly. Each level is sorted so that leads
// in a common summand decrease in lex order, which forces termination.

#include "syz/syzygy.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

template <Field F>
struct PolyMatrix {
  RingPtr<F> ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial<F>> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(RingPtr<F> r, std::size_t nr, std::size_t nc)
      : ring(std::move(r)), rows(nr), cols(nc), entries(nr * nc, Polynomial<F>(ring)) {}

  Polynomial<F>& at(std::size_t i, std::size_t j) { return entries.at(i * cols + j); }
  const Polynomial<F>& at(std::size_t i, std::size_t j) const { return entries.at(i * cols + j); }

  /// Matrix whose j-th column holds the components of columns[j].
  static PolyMatrix from_columns(const RingPtr<F>& r, std::size_t nrows, const std::vector<ModuleElement<F>>& columns) {
    PolyMatrix m(r, nrows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      auto c = components(columns[j]);
      for (std::size_t i = 0; i < nrows; ++i) m.at(i, j) = c[i].reordered(r);
    }
    return m;
  }

  static PolyMatrix row(const RingPtr<F>& r, const std::vector<Polynomial<F>>& entries) {
    PolyMatrix m(r, 1, entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) m.at(0, j) = entries[j].reordered(r);
    return m;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
    PolyMatrix c(a.ring, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
      for (std::size_t k = 0; k < a.cols; ++k) {
        const auto& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols; ++j) {
          if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
        }
      }
    }
    return c;
  }

  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.is_zero(); });
  }

  /// True if some entry is a nonzero constant.
  bool has_unit_entry() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const auto& e) { return !e.is_zero() && e.size() == 1 && e.lead_monomial().is_one(); });
  }
};

/// beta_{i,j}: number of basis elements of degree j in step i (I at step 0).
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const std::vector<std::vector<int>>& shifts) {
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      for (int j : shifts[i]) ++beta_[{static_cast<int>(i), j}];
    }
  }

  std::size_t operator()(int i, int j) const {
    auto it = beta_.find({i, j});
    return it == beta_.end() ? 0 : it->second;
  }
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return beta_; }
  bool empty() const { return beta_.empty(); }

  /// Largest homological index with a nonzero entry.
  int length() const {
    int l = -1;
    for (const auto& [k, v] : beta_) l = std::max(l, k.first);
    return l;
  }

  std::size_t total(int i) const {
    std::size_t s = 0;
    for (const auto& [k, v] : beta_) {
      if (k.first == i) s += v;
    }
    return s;
  }

  /// sum_i (-1)^i beta_{i,j} t^j, indexed by j.
  std::vector<long> alternating_sum() const {
    std::vector<long> c;
    for (const auto& [k, v] : beta_) {
      if (static_cast<std::size_t>(k.second) >= c.size()) c.resize(k.second + 1, 0);
      c[k.second] += (k.first % 2 ? -1 : 1) * static_cast<long>(v);
    }
    return c;
  }

  /// Staircase layout: columns are steps i, rows are j - i, '.' marks zero.
  std::string to_ascii() const {
    if (beta_.empty()) return "(zero)\n";
    const int len = length();
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [k, v] : beta_) {
      const int r = k.second - k.first;
      lo = first ? r : std::min(lo, r);
      hi = first ? r : std::max(hi, r);
      first = false;
    }
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> cells;
    labels.push_back("");
    cells.emplace_back();
    for (int i = 0; i <= len; ++i) cells.back().push_back(std::to_string(i));
    labels.push_back("total:");
    cells.emplace_back();
    for (int i = 0; i <= len; ++i) cells.back().push_back(std::to_string(total(i)));
    for (int r = lo; r <= hi; ++r) {
      labels.push_back(std::to_string(r) + ":");
      cells.emplace_back();
      for (int i = 0; i <= len; ++i) {
        const auto v = (*this)(i, i + r);
        cells.back().push_back(v ? std::to_string(v) : ".");
      }
    }
    std::size_t lw = 0;
    for (const auto& l : labels) lw = std::max(lw, l.size());
    std::vector<std::size_t> cw(len + 1, 0);
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) cw[i] = std::max(cw[i], row[i].size());
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
      std::string line = std::string(lw - labels[r].size(), ' ') + labels[r];
      for (std::size_t i = 0; i < cells[r].size(); ++i) {
        line += " " + std::string(cw[i] - cells[r][i].size(), ' ') + cells[r][i];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
    return out.str();
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::size_t> beta_;
};

struct ResolutionOptions {
  bool minimal = true;
  std::optional<int> degree_cap;
};

template <Field F>
struct FreeResolution {
  RingPtr<F> ring;
  /// modules[k] = F_k; maps[k] : F_k -> F_{k-1} (F_{-1} = S), with
  /// rank(F_{k-1}) rows and rank(F_k) columns.
  std::vector<ModulePtr<F>> modules;
  std::vector<PolyMatrix<F>> maps;
  bool minimal = true;
  /// False when a degree cap cut the computation short.
  bool complete = true;

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }

  std::vector<std::vector<int>> shifts() const {
    std::vector<std::vector<int>> s;
    for (const auto& m : modules) s.push_back(m->shifts());
    return s;
  }

  BettiTable betti() const { return BettiTable(shifts()); }
};

namespace detail {

// Pulls the syzygies of gb.elements back to syzygies of the minimal inputs,
// as elements of `target` (basis e_p -> inputs[minimal[p]]).
template <class Space>
std::vector<ModuleElement<typename Space::field_type>> pull_back(const GroebnerBasis<Space>& gb,
                                                                 const ModulePtr<typename Space::field_type>& target) {
  using F = typename Space::field_type;
  using Poly = Polynomial<F>;
  std::vector<ModuleElement<F>> out;
  if (gb.elements.empty()) return out;
  const auto ring = gb.space->ring().ring_ptr();
  std::vector<long> position(gb.input_count, -1);
  for (std::size_t p = 0; p < gb.minimal_generators.size(); ++p) position[gb.minimal_generators[p]] = static_cast<long>(p);
  for (const auto& row : gb.transform) {
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (position[b] < 0 && !row[b].is_zero()) throw std::logic_error("transform uses a non-minimal input");
    }
  }
  auto syz = syzygies(gb.elements);
  for (const auto& s : syz.syzygies) {
    auto comps = components(s);
    std::vector<Poly> image(gb.minimal_generators.size(), Poly(ring));
    for (std::size_t a = 0; a < comps.size(); ++a) {
      if (comps[a].is_zero()) continue;
      for (std::size_t p = 0; p < image.size(); ++p) {
        const auto& t = gb.transform[a][gb.minimal_generators[p]];
        if (!t.is_zero()) image[p] += comps[a] * t;
      }
    }
    auto v = from_components(target, image);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

template <class Space>
bool lex_lead_greater(const TermList<Space>& a, const TermList<Space>& b) {
  const auto& ma = base_monomial(a.lead_monomial());
  const auto& mb = base_monomial(b.lead_monomial());
  const auto c = MonomialOrder::lex(ma.size()).compare(ma, mb);
  if (c != 0) return c > 0;
  return component_of(a.lead_monomial()) < component_of(b.lead_monomial());
}

template <Field F>
FreeResolution<F> minimal_resolution(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                     const ResolutionOptions& opts) {
  FreeResolution<F> res;
  res.ring = ring;
  res.minimal = true;
  GroebnerOptions go;
  go.reduce = false;
  go.degree_cap = opts.degree_cap;

  auto gb0 = groebner(ring, gens, go);
  res.complete = gb0.complete;
  if (gb0.minimal_generators.empty()) return res;
  std::vector<Polynomial<F>> g0;
  for (auto b : gb0.minimal_generators) g0.push_back(gens[b]);
  res.modules.push_back(induced_schreyer_module(ring, g0));
  res.maps.push_back(PolyMatrix<F>::row(ring, g0));
  auto next = pull_back(gb0, res.modules.back());

  const std::size_t max_steps = ring->nvars() + 2;
  while (!next.empty() && res.complete) {
    if (res.modules.size() > max_steps) throw std::logic_error("resolution longer than the number of variables");
    const auto prev = res.modules.back();
    auto gb = groebner(prev, next, go);
    res.complete = gb.complete;
    if (gb.minimal_generators.empty()) break;
    std::vector<ModuleElement<F>> gk;
    for (auto b : gb.minimal_generators) gk.push_back(next[b]);
    res.modules.push_back(induced_schreyer_module(prev, gk));
    res.maps.push_back(PolyMatrix<F>::from_columns(ring, prev->rank(), gk));
    next = pull_back(gb, res.modules.back());
  }
  return res;
}

template <Field F>
FreeResolution<F> schreyer_resolution(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                      const ResolutionOptions& opts) {
  FreeResolution<F> res;
  res.ring = ring;
  res.minimal = false;
  GroebnerOptions go;
  go.track_transform = false;
  go.degree_cap = opts.degree_cap;
  auto gb = groebner(ring, gens, go);
  res.complete = gb.complete;
  auto g = gb.elements;
  if (g.empty()) return res;
  std::stable_sort(g.begin(), g.end(), lex_lead_greater<PolynomialRing<F>>);
  res.modules.push_back(induced_schreyer_module(ring, g));
  res.maps.push_back(PolyMatrix<F>::row(ring, g));
  auto syz = syzygies(g);
  std::vector<ModuleElement<F>> level = syz.syzygies;
  const std::size_t max_steps = ring->nvars() + 2;
  while (!level.empty()) {
    if (res.modules.size() > max_steps) throw std::logic_error("resolution longer than the number of variables");
    if (opts.degree_cap) {
      for (const auto& v : level) {
        if (v.degree() > *opts.degree_cap) {
          res.complete = false;
          return res;
        }
      }
    }
    std::stable_sort(level.begin(), level.end(), lex_lead_greater<FreeModule<F>>);
    const auto prev = res.modules.back();
    auto next = syzygies(level);
    res.modules.push_back(next.module);
    res.maps.push_back(PolyMatrix<F>::from_columns(ring, prev->rank(), level));
    level = std::move(next.syzygies);
  }
  return res;
}

}  // namespace detail

/// Free resolution of the ideal generated by `gens` (homogeneous).
template <Field F>
FreeResolution<F> free_resolution(const std::vector<Polynomial<F>>& gens, const ResolutionOptions& opts = {}) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const auto ring = gens.front().ring().ring_ptr();
  return opts.minimal ? detail::minimal_resolution(ring, gens, opts) : detail::schreyer_resolution(ring, gens, opts);
}

template <Field F>
FreeResolution<F> free_resolution(const Ideal<F>& I, const ResolutionOptions& opts = {}) {
  return opts.minimal ? detail::minimal_resolution(I.ring, I.nonzero(), opts) : detail::schreyer_resolution(I.ring, I.nonzero(), opts);
}

/// reg(I) = max_i (max shift at step i) - i, over a minimal resolution.
template <Field F>
int regularity(const FreeResolution<F>& res) {
  if (!res.minimal) throw std::invalid_argument("regularity needs a minimal resolution");
  if (!res.complete) throw std::runtime_error("regularity of an incomplete resolution");
  if (res.modules.empty()) throw std::domain_error("regularity of the zero ideal");
  int reg = 0;
  bool first = true;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (int s : res.modules[i]->shifts()) {
      const int v = s - static_cast<int>(i);
      reg = first ? v : std::max(reg, v);
      first = false;
    }
  }
  return reg;
}

}  // namespace syz
