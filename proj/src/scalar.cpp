#include "dklein/scalar.hpp"

namespace dklein {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw division_by_zero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw division_by_zero();
  Rational n = norm();
  return Scalar(re / n, -im / n);
}

std::optional<Rational> sqrt_exact(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (r == 0) return Rational(0);
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

std::optional<Scalar> sqrt_exact(const Scalar& z) {
  if (z.is_zero()) return Scalar(0);
  if (z.im == 0) {
    if (sgn(z.re) > 0) {
      auto r = sqrt_exact(z.re);
      if (!r) return std::nullopt;
      return Scalar(*r);
    }
    auto r = sqrt_exact(Rational(-z.re));
    if (!r) return std::nullopt;
    return Scalar(Rational(0), *r);  // sqrt of a negative rational is b*i
  }
  /* General case: |z| must be rational and (|z|+re)/2 a rational square;
   * then sqrt(z) = x + (im/2x)*i with x = sqrt((|z|+re)/2) > 0. */
  auto m = sqrt_exact(z.norm());
  if (!m) return std::nullopt;
  auto x = sqrt_exact(Rational((*m + z.re) / 2));
  if (!x || *x == 0) return std::nullopt;
  Scalar root(*x, Rational(z.im / (2 * *x)));
  if (root * root != z) return std::nullopt;
  return root;
}

}  // namespace dklein
