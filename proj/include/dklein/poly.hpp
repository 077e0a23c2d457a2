#pragma once

#include <utility>
#include <vector>

#include "dklein/scalar.hpp"

namespace dklein {

/* Dense univariate polynomial over Scalar.  coeff index = exponent; the
 * highest stored coefficient is nonzero (zero polynomial = empty vector).
 * The formal variable (t or s) is contextual, not stored. */
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Scalar& c) { c_.push_back(c); trim(); }

  static Poly variable() { return monomial(1); }
  static Poly monomial(int k, const Scalar& c = Scalar(1));
  static Poly from_coeffs(std::vector<Scalar> coeffs);

  bool is_zero() const { return c_.empty(); }
  /* Degree of the zero polynomial is -1 by convention. */
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& coeff(int k) const;
  const Scalar& leading() const;
  bool is_monic() const { return !is_zero() && leading() == Scalar(1); }

  Scalar evaluate(const Scalar& x) const;
  Poly compose(const Poly& inner) const;  // this(inner)

  /* Euclidean division: returns (quotient, remainder). */
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  const std::vector<Scalar>& coeffs() const { return c_; }

 private:
  std::vector<Scalar> c_;
  void trim();
};

/* f(t) -> f(-s(s+1)). */
Poly subst_neg_s_s1(const Poly& f);

/* Splits into (even-exponent part, odd-exponent part). */
std::pair<Poly, Poly> parity_split(const Poly& f);

/* The correspondence between a monic Q of degree n >= 3 and the unique P
 * with leading term n*t^(n-1) making Q(-s(s+1)) + (s+1)*P(-s(s+1)) even:
 * the n odd-power coefficients give a linear system for P's coefficients. */
Poly solve_p_from_q(const Poly& q);

/* Inverse direction: Q monic of degree deg(P)+1 with zero constant term. */
Poly solve_q_from_p(const Poly& p);

/* rho(p) = (p(-s)-p(s))/2s,  mu(p) = (p(-(s+1))-p(s+1))/2(s+1). */
std::pair<Poly, Poly> rho_mu(const Poly& p);

/* The unique (alpha(f), beta(f)) with
 *   subst_neg_s_s1(alpha(f)) - s*subst_neg_s_s1(beta(f))
 *     = rho(subst_neg_s_s1(f)).
 * Linear in f. */
std::pair<Poly, Poly> alpha_beta(const Poly& f);

/* Binomial-sum polynomial pair (p_m, q_m), m >= 2. */
std::pair<Poly, Poly> pq_polys(int m);

/* Commutative polynomial in two slots S and T; S is reserved for an
 * ad-operator and T for a left multiplication when applied to algebra
 * elements.  Stored dense: c[a][b] = coefficient of S^a T^b. */
class OpPoly {
 public:
  OpPoly() = default;
  static OpPoly constant(const Scalar& c);
  static OpPoly S();
  static OpPoly T();

  bool is_zero() const { return c_.empty(); }
  int deg_s() const { return static_cast<int>(c_.size()) - 1; }
  /* Degree in T of the coefficient of S^a (a T-polynomial); -1 if zero. */
  int deg_t_at(int a) const;
  Scalar coeff(int a, int b) const;

  friend OpPoly operator+(const OpPoly& x, const OpPoly& y);
  friend OpPoly operator*(const OpPoly& x, const OpPoly& y);
  friend OpPoly operator*(const Scalar& c, const OpPoly& x);
  friend bool operator==(const OpPoly& x, const OpPoly& y) {
    return x.c_ == y.c_;
  }

  const std::vector<std::vector<Scalar>>& rows() const { return c_; }

 private:
  std::vector<std::vector<Scalar>> c_;
  void trim();
};

/* F_0 = S;  F_m = S^2 - 2m^2 S + m^2(m^2-1) + 4m^2 T  for m >= 1. */
OpPoly f_poly(int m);

/* Expanded product F_0 * F_1 * ... * F_m. */
OpPoly f_product(int m);

}  // namespace dklein
