#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "cforge/cpoly.hpp"
#include "cforge/ncpoly.hpp"

namespace cforge {

namespace detail {

/// Hand-rolled tokenizer for the polynomial grammar. Whitespace is
/// insignificant; errors carry the character position.
class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) { skip_ws(); }

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    skip_ws();
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c))
      throw Error(ErrorCode::Syntax,
                  std::string("expected ") + what + " at position " +
                      std::to_string(pos_),
                  pos_);
  }

  bool peek_digit() const { return std::isdigit(static_cast<unsigned char>(peek())); }
  bool peek_alpha() const { return std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'; }

  std::string number() {
    if (!peek_digit())
      throw Error(ErrorCode::Syntax,
                  "expected number at position " + std::to_string(pos_), pos_);
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string s(text_.substr(start, pos_ - start));
    skip_ws();
    return s;
  }

  std::string identifier() {
    if (!peek_alpha())
      throw Error(ErrorCode::Syntax,
                  "expected identifier at position " + std::to_string(pos_),
                  pos_);
    std::size_t start = pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    std::string s(text_.substr(start, pos_ - start));
    skip_ws();
    return s;
  }

  int small_uint(const char* what) {
    std::size_t p = pos_;
    std::string s = number();
    if (s.size() > 6)
      throw Error(ErrorCode::Overflow,
                  std::string(what) + " too large at position " +
                      std::to_string(p),
                  p);
    return std::stoi(s);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class F>
typename F::Elem parse_coefficient(Tokenizer& tok, const F& field) {
  std::size_t p = tok.pos();
  BigInt num(tok.number());
  if (tok.accept('/')) {
    std::size_t pd = tok.pos();
    BigInt den(tok.number());
    if (den <= 0)
      throw Error(ErrorCode::Syntax,
                  "denominator must be positive at position " +
                      std::to_string(pd),
                  pd);
    return field.from_fraction(num, den);
  }
  (void)p;
  return field.from_fraction(num, BigInt(1));
}

}  // namespace detail

/// Parses the commutative polynomial grammar:
///   expression ::= '-'? term (('+'|'-') term)*
///   term       ::= coefficient ('*' factor)* | factor ('*' factor)*
///   factor     ::= identifier ('^' nonneg-integer)?
/// Every identifier must appear in `names`.
template <class F>
CPoly<F> parse_cpoly(std::string_view text,
                     const std::vector<std::string>& names, const F& field) {
  int n = static_cast<int>(names.size());
  detail::Tokenizer tok(text);
  CPoly<F> result(field, n);
  bool negate = tok.accept('-');
  for (;;) {
    typename F::Elem coeff = field.one();
    Exps exps(n, 0);
    bool saw_factor = false;
    if (tok.peek_digit()) {
      coeff = detail::parse_coefficient(tok, field);
      saw_factor = true;
      while (tok.accept('*')) {
        std::size_t p = tok.pos();
        std::string id = tok.identifier();
        auto it = std::find(names.begin(), names.end(), id);
        if (it == names.end())
          throw Error(ErrorCode::UnknownIdentifier,
                      "unknown identifier '" + id + "' at position " +
                          std::to_string(p),
                      p);
        int e = 1;
        if (tok.accept('^')) e = tok.small_uint("exponent");
        exps[it - names.begin()] += e;
      }
    } else {
      do {
        std::size_t p = tok.pos();
        std::string id = tok.identifier();
        auto it = std::find(names.begin(), names.end(), id);
        if (it == names.end())
          throw Error(ErrorCode::UnknownIdentifier,
                      "unknown identifier '" + id + "' at position " +
                          std::to_string(p),
                      p);
        int e = 1;
        if (tok.accept('^')) e = tok.small_uint("exponent");
        exps[it - names.begin()] += e;
        saw_factor = true;
      } while (tok.accept('*'));
    }
    if (!saw_factor)
      throw Error(ErrorCode::Syntax,
                  "expected term at position " + std::to_string(tok.pos()),
                  tok.pos());
    result.add_term(exps, negate ? field.neg(coeff) : coeff);
    if (tok.accept('+')) {
      negate = false;
    } else if (tok.accept('-')) {
      negate = true;
    } else {
      break;
    }
  }
  if (!tok.at_end())
    throw Error(ErrorCode::Syntax,
                "unexpected input at position " + std::to_string(tok.pos()),
                tok.pos());
  return result;
}

/// Default commuting variable names x1..xn.
inline std::vector<std::string> x_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

/// Generator name "a[j1,...,jn]" for exponent vector J.
inline std::string generator_name(const Exps& J) {
  std::string s = "a[";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(J[i]);
  }
  s += "]";
  return s;
}

namespace detail {

inline std::string monomial_string(const Exps& e,
                                   const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

/// Joins (coeff string, monomial string) pairs with signs. The sign is
/// read off the coefficient string's leading '-'.
inline std::string join_terms(
    const std::vector<std::pair<std::string, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, mono] : parts) {
    std::string c = coeff;
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

}  // namespace detail

/// Canonical printing: terms in descending deglex order.
template <class F>
std::string print_cpoly(const CPoly<F>& p,
                        const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> parts;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    parts.emplace_back(p.field().to_string(it->second),
                       detail::monomial_string(it->first, names));
  return detail::join_terms(parts);
}

template <class F>
std::string print_cpoly(const CPoly<F>& p) {
  return print_cpoly(p, x_names(p.var_count()));
}

inline std::string word_string(const Word& w, const std::vector<Exps>& gens) {
  std::string s;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += generator_name(gens[w[i]]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

template <class F>
std::string print_ncpoly(const NCPoly<F>& p, const std::vector<Exps>& gens) {
  std::vector<std::pair<std::string, std::string>> parts;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    parts.emplace_back(p.field().to_string(it->second),
                       word_string(it->first, gens));
  return detail::join_terms(parts);
}

/// Parses a free-algebra polynomial. Generators are written
/// "a[j1,...,jn]"; when every generator has weight 1 the aliases
/// a1..an are also accepted.
template <class F>
NCPoly<F> parse_ncpoly(std::string_view text, const std::vector<Exps>& gens,
                       const F& field) {
  int n = gens.empty() ? 0 : static_cast<int>(gens[0].size());
  bool weight_one = !gens.empty() && total_degree(gens[0]) == 1;
  auto lookup = [&](const Exps& J, std::size_t p) -> int {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == J) return static_cast<int>(i);
    throw Error(ErrorCode::UnknownIdentifier,
                "unknown generator '" + generator_name(J) + "' at position " +
                    std::to_string(p),
                p);
  };

  detail::Tokenizer tok(text);
  NCPoly<F> result(field);
  bool negate = tok.accept('-');
  for (;;) {
    typename F::Elem coeff = field.one();
    Word word;
    bool saw_factor = false;
    auto parse_factor = [&] {
      std::size_t p = tok.pos();
      std::string id = tok.identifier();
      int idx = -1;
      if (id == "a" && tok.accept('[')) {
        Exps J;
        J.push_back(tok.small_uint("index"));
        while (tok.accept(',')) J.push_back(tok.small_uint("index"));
        tok.expect(']', "']'");
        if (static_cast<int>(J.size()) != n)
          throw Error(ErrorCode::ArityMismatch,
                      "generator index length mismatch at position " +
                          std::to_string(p),
                      p);
        idx = lookup(J, p);
      } else if (weight_one && id.size() > 1 && id[0] == 'a') {
        int vi = 0;
        for (std::size_t k = 1; k < id.size(); ++k) {
          if (!std::isdigit(static_cast<unsigned char>(id[k])))
            throw Error(ErrorCode::UnknownIdentifier,
                        "unknown identifier '" + id + "' at position " +
                            std::to_string(p),
                        p);
          vi = vi * 10 + (id[k] - '0');
        }
        if (vi < 1 || vi > n)
          throw Error(ErrorCode::UnknownIdentifier,
                      "generator index out of range at position " +
                          std::to_string(p),
                      p);
        Exps J(n, 0);
        J[vi - 1] = 1;
        idx = lookup(J, p);
      } else {
        throw Error(ErrorCode::UnknownIdentifier,
                    "unknown identifier '" + id + "' at position " +
                        std::to_string(p),
                    p);
      }
      int e = 1;
      if (tok.accept('^')) e = tok.small_uint("exponent");
      for (int k = 0; k < e; ++k) word.push_back(idx);
    };
    if (tok.peek_digit()) {
      coeff = detail::parse_coefficient(tok, field);
      saw_factor = true;
      while (tok.accept('*')) parse_factor();
    } else {
      do {
        parse_factor();
        saw_factor = true;
      } while (tok.accept('*'));
    }
    if (!saw_factor)
      throw Error(ErrorCode::Syntax,
                  "expected term at position " + std::to_string(tok.pos()),
                  tok.pos());
    result.add_term(word, negate ? field.neg(coeff) : coeff);
    if (tok.accept('+')) {
      negate = false;
    } else if (tok.accept('-')) {
      negate = true;
    } else {
      break;
    }
  }
  if (!tok.at_end())
    throw Error(ErrorCode::Syntax,
                "unexpected input at position " + std::to_string(tok.pos()),
                tok.pos());
  return result;
}

}  // namespace cforge
