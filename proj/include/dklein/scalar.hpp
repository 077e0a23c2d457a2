#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "dklein/errors.hpp"

namespace dklein {

using Rational = mpq_class;

/* Builds a canonical rational from a numerator/denominator pair. */
Rational make_rational(const mpz_class& num, const mpz_class& den);

/* Gaussian rational a + b*i.  Components are always in lowest terms with
 * positive denominators (mpq_class keeps them canonical), so structural
 * equality is value equality. */
struct Scalar {
  Rational re, im;

  Scalar() : re(0), im(0) {}
  Scalar(long n) : re(n), im(0) {}  // NOLINT: implicit by design
  Scalar(Rational r) : re(std::move(r)), im(0) {}
  Scalar(Rational a, Rational b) : re(std::move(a)), im(std::move(b)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }
  Rational norm() const { return re * re + im * im; }  // a^2 + b^2

  Scalar inv() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re + b.re, a.im + b.im);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re - b.re, a.im - b.im);
  }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inv();
  }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }
  /* Arbitrary total order so Scalars can key ordered containers. */
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (int c = cmp(a.re, b.re); c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }
};

/* Exact square root of a nonnegative rational, if one exists in ℚ. */
std::optional<Rational> sqrt_exact(const Rational& r);

/* Exact square root in ℚ(i), if one exists.  The representative returned has
 * positive real part, or positive imaginary part when the real part is 0. */
std::optional<Scalar> sqrt_exact(const Scalar& z);

}  // namespace dklein
