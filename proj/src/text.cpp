#include "dklein/text.hpp"

#include <cctype>
#include <string>

#include "dklein/errors.hpp"

namespace dklein {

namespace {

/* ---------------------------------------------------------------- parsing */

constexpr long kMaxExponent = 100000;

template <class Adapter>
class Parser {
 public:
  Parser(Adapter& ad, const std::string& s) : ad_(ad), s_(s) {}

  typename Adapter::Value run() {
    auto v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  using V = typename Adapter::Value;

  Adapter& ad_;
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error(what + " at position " + std::to_string(pos_) + " in '" +
                      s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::string digits() {
    skip();
    std::string out;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      out += s_[pos_++];
    if (out.empty()) fail("expected digits");
    return out;
  }

  V expr() {
    V acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = ad_.add(acc, term());
      } else if (c == '-') {
        ++pos_;
        acc = ad_.add(acc, ad_.neg(term()));
      } else {
        break;
      }
    }
    return acc;
  }

  V term() {
    V acc = unary();
    while (peek() == '*') {
      ++pos_;
      acc = ad_.mul(acc, unary());
    }
    return acc;
  }

  V unary() {
    bool negative = false;
    for (;;) {
      char c = peek();
      if (c == '-') {
        negative = !negative;
        ++pos_;
      } else if (c == '+') {
        ++pos_;
      } else {
        break;
      }
    }
    V v = primary();
    return negative ? ad_.neg(v) : v;
  }

  V primary() {
    V v = atom();
    if (peek() == '^') {
      ++pos_;
      long e = 0;
      try {
        e = std::stol(digits());
      } catch (const std::out_of_range&) {
        fail("exponent out of range");
      }
      if (e > kMaxExponent) fail("exponent out of range");
      v = pow(v, e);
    }
    return v;
  }

  V pow(V base, long e) {
    V acc = ad_.one();
    while (e > 0) {
      if (e & 1) acc = ad_.mul(acc, base);
      e >>= 1;
      if (e) base = ad_.mul(base, base);
    }
    return acc;
  }

  V atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      if (peek() == '/') {
        ++pos_;
        mpz_class den(digits());
        if (den == 0) fail("zero denominator");
        return ad_.value(make_rational(num, den));
      }
      return ad_.value(Rational(num));
    }
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (c == 'i') return ad_.value(Scalar::i());
      return ad_.var(c);
    }
    fail("expected a number, variable or '('");
  }
};

struct ScalarAdapter {
  using Value = Scalar;
  Value one() { return Scalar(1); }
  Value value(const Scalar& c) { return c; }
  Value value(const Rational& r) { return Scalar(r); }
  Value var(char c) {
    throw parse_error(std::string("variable '") + c +
                      "' not allowed in a scalar");
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value neg(const Value& a) { return -a; }
  Value mul(const Value& a, const Value& b) { return a * b; }
};

struct PolyAdapter {
  using Value = Poly;
  char seen = 0;
  Value one() { return Poly(Scalar(1)); }
  Value value(const Scalar& c) { return Poly(c); }
  Value value(const Rational& r) { return Poly(Scalar(r)); }
  Value var(char c) {
    if (c != 't' && c != 's')
      throw parse_error(std::string("unexpected variable '") + c +
                        "' in a polynomial");
    if (seen && seen != c)
      throw parse_error("polynomial mixes variables");
    seen = c;
    return Poly::variable();
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value neg(const Value& a) { return -a; }
  Value mul(const Value& a, const Value& b) { return a * b; }
};

struct ElementAdapter {
  using Value = Element;
  const AlgebraSpec& spec;
  Value one() { return Element::scalar(Scalar(1)); }
  Value value(const Scalar& c) { return Element::scalar(c); }
  Value value(const Rational& r) { return Element::scalar(Scalar(r)); }
  Value var(char c) {
    char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lc != 'u' && lc != 'v' && lc != 'w')
      throw parse_error(std::string("unexpected variable '") + c +
                        "' in an element");
    return Element::generator(lc);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value neg(const Value& a) { return -a; }
  Value mul(const Value& a, const Value& b) { return dklein::mul(spec, a, b); }
};

struct CPolyAdapter {
  using Value = CPoly;
  Value one() { return CPoly::scalar(Scalar(1)); }
  Value value(const Scalar& c) { return CPoly::scalar(c); }
  Value value(const Rational& r) { return CPoly::scalar(Scalar(r)); }
  Value var(char c) {
    if (c != 'X' && c != 'Y' && c != 'Z')
      throw parse_error(std::string("unexpected variable '") + c +
                        "' in a commutative polynomial");
    return CPoly::variable(c);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value neg(const Value& a) { return -a; }
  Value mul(const Value& a, const Value& b) { return a * b; }
};

/* --------------------------------------------------------------- printing */

std::string rational_text(const Rational& r) { return r.get_str(); }

/* Appends "[sign]coeff*mono" to out; mono may be empty for constant terms. */
void append_term(std::string& out, const Scalar& c, const std::string& mono) {
  std::string piece;
  if (mono.empty()) {
    piece = to_text(c);
  } else if (c == Scalar(1)) {
    piece = mono;
  } else if (c == Scalar(-1)) {
    piece = "-" + mono;
  } else if (c.re.get_num() == 0 || c.im.get_num() == 0) {
    piece = to_text(c) + "*" + mono;
  } else {
    piece = "(" + to_text(c) + ")*" + mono;
  }
  if (out.empty())
    out = piece;
  else if (piece[0] == '-')
    out += piece;
  else
    out += "+" + piece;
}

std::string power_text(char var, int e) {
  if (e == 0) return "";
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

std::string monomial_text(const std::array<char, 3>& names,
                          const std::array<int, 3>& exps) {
  std::string out;
  for (int k = 0; k < 3; ++k) {
    std::string p = power_text(names[k], exps[k]);
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  ScalarAdapter ad;
  return Parser(ad, text).run();
}

Poly parse_poly(const std::string& text) {
  PolyAdapter ad;
  return Parser(ad, text).run();
}

Element parse_element(const AlgebraSpec& spec, const std::string& text) {
  ElementAdapter ad{spec};
  return Parser(ad, text).run();
}

CPoly parse_cpoly(const std::string& text) {
  CPolyAdapter ad;
  return Parser(ad, text).run();
}

std::string to_text(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.re.get_num() != 0) out = rational_text(s.re);
  if (s.im.get_num() != 0) {
    std::string im;
    if (s.im == 1)
      im = "i";
    else if (s.im == -1)
      im = "-i";
    else
      im = rational_text(s.im) + "*i";
    if (out.empty())
      out = im;
    else if (im[0] == '-')
      out += im;
    else
      out += "+" + im;
  }
  return out;
}

std::string to_text(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar& c = p.coeff(k);
    if (c.is_zero()) continue;
    append_term(out, c, power_text(var, k));
  }
  return out;
}

std::string to_text(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    append_term(out, c, monomial_text({'u', 'v', 'w'}, {m.i, m.j, m.k}));
  }
  return out;
}

std::string to_text(const CPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    append_term(out, c, monomial_text({'X', 'Y', 'Z'}, m));
  }
  return out;
}

}  // namespace dklein
