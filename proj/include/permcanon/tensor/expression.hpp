#pragma once

// Tensor monomials and sums in the text syntax
//   R[-b,1,d,1] R[-c,b,a,c] - F[a,-b]*F[b,-a]
// A leading minus on an index marks it covariant.

#include <cctype>
#include <string>
#include <vector>

#include "permcanon/errors.hpp"

namespace permcanon::tensor {

struct IndexAtom {
  enum class Kind { abstract, component };
  Kind kind = Kind::abstract;
  std::string name;  ///< abstract indices only
  long value = 0;    ///< components only
  bool up = true;

  bool is_component() const noexcept { return kind == Kind::component; }
  friend bool operator==(const IndexAtom&, const IndexAtom&) = default;
};

inline IndexAtom abstract_index(std::string name, bool up = true) {
  return {IndexAtom::Kind::abstract, std::move(name), 0, up};
}
inline IndexAtom component_index(long value, bool up = true) { return {IndexAtom::Kind::component, {}, value, up}; }

struct Factor {
  std::string head;
  std::vector<IndexAtom> indices;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// sign * product of factors; `zero` for the literal 0.
struct Monomial {
  int sign = 1;
  bool zero = false;
  std::vector<Factor> factors;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Expression {
  std::vector<Monomial> terms;
};

inline std::string to_string(const IndexAtom& i) {
  std::string s = i.up ? "" : "-";
  return s + (i.is_component() ? std::to_string(i.value) : i.name);
}

inline std::string to_string(const Factor& f) {
  std::string s = f.head + "[";
  for (std::size_t k = 0; k < f.indices.size(); ++k) s += (k ? "," : "") + to_string(f.indices[k]);
  return s + "]";
}

/// Factors joined by single spaces, "-" prefix for sign -1, "0" for zero.
inline std::string to_string(const Monomial& m) {
  if (m.zero) return "0";
  std::string s = m.sign < 0 ? "-" : "";
  for (std::size_t k = 0; k < m.factors.size(); ++k) s += (k ? " " : "") + to_string(m.factors[k]);
  if (m.factors.empty()) s += "1";
  return s;
}

/// Nonzero terms joined by " + " / " - "; "0" when nothing survives.
inline std::string to_string(const Expression& e) {
  std::string out;
  for (const auto& t : e.terms) {
    if (t.zero) continue;
    Monomial pos = t;
    pos.sign = 1;
    if (out.empty())
      out = to_string(t);
    else
      out += (t.sign < 0 ? " - " : " + ") + to_string(pos);
  }
  return out.empty() ? "0" : out;
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expression expression() {
    Expression e;
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      e.terms.push_back(term(sign));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+', '-' or a factor", pos_);
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return e;
  }

 private:
  Monomial term(int sign) {
    Monomial m;
    m.sign = sign;
    skip_ws();
    if (!at_end() && peek() == '0' && (pos_ + 1 == s_.size() || !std::isalnum(uc(s_[pos_ + 1])))) {
      ++pos_;
      m.zero = true;
      return m;
    }
    m.factors.push_back(factor());
    for (;;) {
      skip_ws();
      if (at_end() || peek() == '+' || peek() == '-') return m;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
      m.factors.push_back(factor());
    }
  }

  Factor factor() {
    Factor f;
    if (at_end() || !std::isalpha(uc(peek()))) throw ParseError("expected a tensor head", pos_);
    f.head = identifier();
    skip_ws();
    if (at_end() || peek() != '[') throw ParseError("expected '['", pos_);
    ++pos_;
    skip_ws();
    if (!at_end() && peek() == ']') throw ParseError("a tensor needs at least one index", pos_);
    for (;;) {
      f.indices.push_back(index());
      skip_ws();
      if (at_end()) throw ParseError("unterminated index list", pos_);
      if (peek() == ']') {
        ++pos_;
        return f;
      }
      if (peek() != ',') throw ParseError("expected ',' or ']'", pos_);
      ++pos_;
    }
  }

  IndexAtom index() {
    skip_ws();
    bool up = true;
    if (!at_end() && peek() == '-') {
      up = false;
      ++pos_;
    }
    if (at_end()) throw ParseError("expected an index", pos_);
    if (std::isdigit(uc(peek()))) {
      const std::size_t start = pos_;
      long v = 0;
      while (!at_end() && std::isdigit(uc(peek()))) {
        v = v * 10 + (peek() - '0');
        if (v > 1'000'000'000) throw ParseError("component index too large", start);
        ++pos_;
      }
      if (!at_end() && std::isalpha(uc(peek()))) throw ParseError("malformed index", start);
      return component_index(v, up);
    }
    if (!std::isalpha(uc(peek()))) throw ParseError("expected an index", pos_);
    return abstract_index(identifier(), up);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(uc(peek())) || peek() == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  static unsigned char uc(char c) { return static_cast<unsigned char>(c); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(uc(peek()))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError carrying the 0-based column of the problem.
inline Expression parse_expression(std::string_view text) { return detail::Parser(text).expression(); }

}  // namespace permcanon::tensor
