#pragma once

/// Plain-text polynomial notation, e.g. "x0^2*x1 - 3*x2^3" or "1/2*x0 + x1".
///
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | 'x' index ['^' integer]
///
/// Whitespace is ignored between tokens. Parsing requires the result to be
/// homogeneous; an input denoting zero ("0", "x0 - x0") yields the zero
/// polynomial of the degree its monomials carry (degree 0 for a bare "0").

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "starconf/poly.hpp"

namespace starconf {

class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  struct Term {
    mpz_class num = 1;
    mpz_class den = 1;
    std::vector<unsigned> exponents;
  };

  std::vector<Term> parse(std::size_t vars) {
    vars_ = vars;
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = (get() == '-');
    for (;;) {
      Term t = parse_term();
      if (negative) t.num = -t.num;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negative = (op == '-');
    }
    return terms;
  }

 private:
  Term parse_term() {
    Term t;
    t.exponents.assign(vars_, 0);
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num(read_digits());
        mpz_class den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          get();
          skip_ws();
          den = mpz_class(read_digits());
          if (den == 0) fail("zero denominator");
        }
        t.num *= num;
        t.den *= den;
      } else if (c == 'x') {
        get();
        const unsigned long index = std::stoul(read_digits());
        if (index >= vars_) fail("variable x" + std::to_string(index) + " outside x0..x" + std::to_string(vars_ - 1));
        unsigned long power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          skip_ws();
          power = std::stoul(read_digits());
        }
        t.exponents[index] += static_cast<unsigned>(power);
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') return t;
      get();
    }
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t vars_ = 0;
};

}  // namespace detail

template <ExactField K>
HomogeneousPoly<K> parse_poly(const K& field, std::size_t vars, std::string_view text) {
  const auto terms = detail::PolyParser(text).parse(vars);
  unsigned degree = 0;
  bool have_degree = false;
  for (const auto& t : terms) {
    if (t.num == 0) continue;
    const unsigned d = Monomial{t.exponents}.degree();
    if (have_degree && d != degree) throw ParseError("inhomogeneous polynomial \"" + std::string(text) + "\"");
    degree = d;
    have_degree = true;
  }
  if (!have_degree && !terms.empty()) degree = Monomial{terms.front().exponents}.degree();
  HomogeneousPoly<K> p(field, vars, degree);
  for (const auto& t : terms) {
    if (t.num == 0) continue;
    typename HomogeneousPoly<K>::Terms single;
    single.emplace(Monomial{t.exponents}, field.from_fraction(t.num, t.den));
    p = p + HomogeneousPoly<K>(field, vars, degree, single);
  }
  return p;
}

/// Inverse of parse_poly for rational coefficients; prime-field coefficients
/// print as their residue in [0, p).
template <ExactField K>
std::string format_poly(const HomogeneousPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    const bool constant = m.degree() == 0;
    if (coeff != "1" || constant) factors.push_back(coeff);
    for (std::size_t k = 0; k < m.exponents.size(); ++k) {
      if (m.exponents[k] == 0) continue;
      std::string f = "x" + std::to_string(k);
      if (m.exponents[k] > 1) f += "^" + std::to_string(m.exponents[k]);
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace starconf
