#pragma once

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pfg/polynomial.hpp"

namespace pfg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

// Terms are printed in descending lex order on the canonical variable index,
// independent of the ring's active order, so output is stable across orders.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  return false;
}

inline std::string signed_coeff(const Rationals& k, const mpq_class& c, bool& negative) {
  negative = sgn(c) < 0;
  mpq_class a = abs(c);
  return k.is_one(a) ? std::string() : a.get_str();
}

inline std::string signed_coeff(const PrimeField& k, std::uint32_t c, bool& negative) {
  std::uint32_t p = k.characteristic();
  std::uint32_t a = c;
  negative = false;
  if (p > 2 && c > p / 2) {
    negative = true;
    a = p - c;
  }
  return a == 1 ? std::string() : std::to_string(a);
}

}  // namespace detail

template <class K>
std::string render_monomial(const PolyRing<K>& ring, const Monomial& m) {
  std::string out;
  auto emit = [&](int idx) {
    int e = m.exponent(idx);
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += ring.name(idx);
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (int i = 0; i < ring.tags(); ++i) emit(i);
  for (int i = ring.tags() + ring.x_count(); i < ring.nvars(); ++i) emit(i);
  for (int i = ring.tags(); i < ring.tags() + ring.x_count(); ++i) emit(i);
  return out;
}

template <class K>
std::string render(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  std::vector<const Term<K>*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [](const Term<K>* a, const Term<K>* b) { return detail::lex_greater(a->m, b->m); });
  std::string out;
  bool first = true;
  for (const auto* t : terms) {
    bool neg = false;
    std::string c = detail::signed_coeff(ring.field(), t->c, neg);
    std::string mono = render_monomial(ring, t->m);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += c.empty() ? "1" : c;
    } else {
      if (!c.empty()) out += c + "*";
      out += mono;
    }
  }
  return out;
}

/// Recursive-descent parser for the rendering grammar:
///   poly  := ['+'|'-'] term (('+'|'-') term)*
///   term  := factor ('*' factor)*
///   factor:= integer ['/' integer] | var ['^' integer]
///   var   := 'x_(' i ',' j ')' | 't_' i | 'w_' k
template <class K>
class PolynomialParser {
 public:
  PolynomialParser(typename PolyRing<K>::Ptr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Polynomial<K> parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty input", pos_);
    Polynomial<K> acc(ring_);
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      Polynomial<K> t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  int small_integer() {
    std::size_t at = pos_;
    mpz_class v = integer();
    if (v > 1000000) throw ParseError("index too large", at);
    return static_cast<int>(v.get_si());
  }

  Polynomial<K> term() {
    Polynomial<K> acc = Polynomial<K>::constant(ring_, 1);
    while (true) {
      acc = acc * factor();
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return acc;
  }

  Polynomial<K> factor() {
    skip();
    std::size_t at = pos_;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return Polynomial<K>::constant(ring_, ring_->field().from_fraction(num, den));
    }
    int idx = -1;
    if (c == 'x') {
      ++pos_;
      expect('_');
      expect('(');
      int i = small_integer();
      expect(',');
      int j = small_integer();
      expect(')');
      idx = resolve(Variable::x(i, j), at);
    } else if (c == 't') {
      ++pos_;
      expect('_');
      idx = resolve(Variable::t(small_integer()), at);
    } else if (c == 'w') {
      ++pos_;
      expect('_');
      int k = small_integer();
      if (k < 1 || k > ring_->tags()) throw ParseError("unknown variable w_" + std::to_string(k), at);
      idx = k - 1;
    } else {
      throw ParseError("unexpected character", at);
    }
    int e = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      std::size_t ep = pos_;
      e = small_integer();
      if (e > 255) throw ParseError("exponent too large", ep);
    }
    return Polynomial<K>::monomial(ring_, ring_->var_monomial(idx, e), ring_->field().one());
  }

  int resolve(const Variable& v, std::size_t at) {
    try {
      return ring_->index(v);
    } catch (const StructuralError& e) {
      throw ParseError(e.what(), at);
    }
  }

  typename PolyRing<K>::Ptr ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class K>
Polynomial<K> parse_polynomial(typename PolyRing<K>::Ptr ring, std::string_view text) {
  return PolynomialParser<K>(std::move(ring), text).parse();
}

}  // namespace pfg
