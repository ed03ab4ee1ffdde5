#pragma once

// Text format for polynomials and ideal files.
//
//   # comment
//   field QQ            (or: field Fp:32003)
//   ring w x y z
//   f1 = w^2 - x*y
//
// Expressions use + - * ^ and parentheses. Multiplication is always written
// out. Coefficients are integers, or a/b for rationals.

#include "syz/module.hpp"
#include "syz/polynomial.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace syz {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

template <Field F>
class ExprParser {
 public:
  using Poly = Polynomial<F>;

  ExprParser(std::string_view text, const RingPtr<F>& ring, int line, int column0)
      : s_(text), ring_(ring), line_(line), col0_(column0) {}

  Poly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) {
      if (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(') {
        fail("missing '*' (implicit multiplication is not allowed)");
      }
      fail(std::string("unexpected '") + s_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col0_ + static_cast<int>(pos_) + 1, msg);
  }

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip();
    Poly acc(ring_);
    bool first = true;
    while (true) {
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (accept('+')) {
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Poly term() {
    Poly p = power();
    while (accept('*')) p = p * power();
    return p;
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponents are not allowed");
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      const std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 5 || std::stoul(digits) > Monomial::max_exponent) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ == s_.size()) fail("operand expected");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("')' expected");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& k = ring_->field();
      auto num = k.parse(digits());
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("denominator expected");
        const std::size_t at = pos_;
        auto den = k.parse(digits());
        if (k.is_zero(den)) {
          pos_ = at;
          fail("zero denominator");
        }
        num = k.div(num, den);
      }
      return constant(ring_, num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  const RingPtr<F>& ring_;
  int line_;
  int col0_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a single polynomial. `line` and `column0` locate the text in a file.
template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring, int line = 1, int column0 = 0) {
  return detail::ExprParser<F>(text, ring, line, column0).parse();
}

template <Field F>
std::vector<Polynomial<F>> parse_polynomials(const RingPtr<F>& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial<F>> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

namespace detail {

template <class Terms, class MonoPrinter>
std::string terms_to_string(const Terms& terms, const auto& field, MonoPrinter mono) {
  if (terms.begin() == terms.end()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    std::string c = field.to_string(t.coeff);
    const bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string m = mono(t.mono);
    if (m == "1") {
      out += c;
    } else if (c == "1") {
      out += m;
    } else {
      out += c + "*" + m;
    }
    first = false;
  }
  return out;
}

}  // namespace detail

template <Field F>
std::string to_string(const Polynomial<F>& f) {
  const auto& vars = f.ring().variables();
  return detail::terms_to_string(f, f.field(), [&](const Monomial& m) { return monomial_to_string(m, vars); });
}

/// Module elements print as a bracketed component list, e.g. [y, -w, -x, 0].
template <Field F>
std::string to_string(const ModuleElement<F>& v) {
  auto comps = components(v);
  std::string out = "[";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ", ";
    out += to_string(comps[i]);
  }
  return out + "]";
}

/// Field declared in an ideal file: exactly one of "QQ" or "Fp:p".
struct FieldSpec {
  std::uint64_t modulus = 0;  // 0 means QQ

  bool is_rational() const { return modulus == 0; }
  std::string to_string() const { return modulus == 0 ? "QQ" : "Fp:" + std::to_string(modulus); }

  static FieldSpec parse(std::string_view text) {
    if (text == "QQ" || text == "Q") return {};
    if (text.starts_with("Fp:")) {
      const std::string digits(text.substr(3));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12) {
        throw std::invalid_argument("malformed field '" + std::string(text) + "'");
      }
      const std::uint64_t p = std::stoull(digits);
      PrimeField check(p);
      return {p};
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected QQ or Fp:p)");
  }
};

/// The header of an ideal file, read before the coefficient field is fixed.
struct IdealFileHeader {
  std::optional<FieldSpec> field;
  std::vector<std::string> variables;
};

template <Field F>
struct IdealFile {
  RingPtr<F> ring;
  std::vector<std::string> names;
  std::vector<Polynomial<F>> generators;
};

namespace detail {

struct SourceLine {
  int number;
  std::string text;  // comment stripped
};

inline std::vector<SourceLine> source_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    out.push_back({n, line});
  }
  return out;
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

inline int column_of(std::size_t pos) { return static_cast<int>(pos) + 1; }

}  // namespace detail

inline IdealFileHeader parse_ideal_header(std::string_view text) {
  IdealFileHeader h;
  bool have_ring = false;
  for (const auto& [n, line] : detail::source_lines(text)) {
    auto w = detail::words(line);
    if (w.empty()) continue;
    if (w[0] == "field") {
      if (w.size() != 2) throw ParseError(n, 1, "expected 'field QQ' or 'field Fp:p'");
      if (h.field) throw ParseError(n, 1, "field declared twice");
      try {
        h.field = FieldSpec::parse(w[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(n, detail::column_of(line.find(w[1])), e.what());
      }
    } else if (w[0] == "ring") {
      if (have_ring) throw ParseError(n, 1, "ring declared twice");
      if (w.size() < 2) throw ParseError(n, 1, "ring needs at least one variable");
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!detail::is_identifier(w[i])) {
          throw ParseError(n, detail::column_of(line.find(w[i])), "bad variable name '" + w[i] + "'");
        }
      }
      h.variables.assign(w.begin() + 1, w.end());
      have_ring = true;
    } else if (!have_ring) {
      throw ParseError(n, 1, "'ring' declaration must precede polynomials");
    }
  }
  if (!have_ring) throw ParseError(1, 1, "missing 'ring' declaration");
  return h;
}

/// Parses a whole ideal file over `field`; the ring gets order `order`.
template <Field F>
IdealFile<F> parse_ideal_file(std::string_view text, const F& field, std::optional<MonomialOrder> order = std::nullopt) {
  const auto header = parse_ideal_header(text);
  IdealFile<F> file;
  try {
    file.ring = PolynomialRing<F>::make(field, header.variables, std::move(order));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
  for (const auto& [n, line] : detail::source_lines(text)) {
    auto w = detail::words(line);
    if (w.empty() || w[0] == "field" || w[0] == "ring") continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(n, 1, "expected 'name = polynomial'");
    std::string name = line.substr(0, eq);
    const auto b = name.find_first_not_of(" \t");
    const auto e = name.find_last_not_of(" \t");
    name = b == std::string::npos ? "" : name.substr(b, e - b + 1);
    if (!detail::is_identifier(name)) throw ParseError(n, 1, "bad polynomial name '" + name + "'");
    file.names.push_back(name);
    file.generators.push_back(
        parse_polynomial<F>(std::string_view(line).substr(eq + 1), file.ring, n, static_cast<int>(eq) + 1));
  }
  return file;
}

/// Canonical text of an ideal file. Names default to f1, f2, ...
template <Field F>
std::string print_ideal_file(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                             const std::vector<std::string>& names = {}) {
  std::string out = "field " + ring->field().name() + "\nring";
  for (const auto& v : ring->variables()) out += " " + v;
  out += "\n";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out += (i < names.size() ? names[i] : "f" + std::to_string(i + 1)) + " = " + to_string(gens[i]) + "\n";
  }
  return out;
}

}  // namespace syz
