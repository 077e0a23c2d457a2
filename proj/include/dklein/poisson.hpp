#pragma once

#include <array>
#include <map>

#include "dklein/algebra.hpp"

namespace dklein {

/* Commutative polynomial in X, Y, Z over Scalar. */
class CPoly {
 public:
  using Exps = std::array<int, 3>;

  CPoly() = default;
  static CPoly scalar(const Scalar& c) { return term({0, 0, 0}, c); }
  static CPoly variable(char name);  // 'X', 'Y' or 'Z'
  static CPoly term(const Exps& e, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, Scalar>& terms() const { return terms_; }
  void add_term(const Exps& e, const Scalar& c);

  CPoly derivative(int axis) const;

  friend CPoly operator+(const CPoly& f, const CPoly& g);
  friend CPoly operator-(const CPoly& f, const CPoly& g);
  friend CPoly operator-(const CPoly& f);
  friend CPoly operator*(const CPoly& f, const CPoly& g);
  friend CPoly operator*(const Scalar& c, const CPoly& f);
  friend bool operator==(const CPoly& f, const CPoly& g) {
    return f.terms_ == g.terms_;
  }
  friend bool operator!=(const CPoly& f, const CPoly& g) { return !(f == g); }

 private:
  std::map<Exps, Scalar> terms_;
};

/* {f,g}_phi with {X,Y} = dphi/dZ, {X,Z} = -dphi/dY, {Y,Z} = dphi/dX,
 * extended as a biderivation (Jacobian-determinant formula). */
CPoly bracket_phi(const CPoly& f, const CPoly& g, const CPoly& phi);

/* Eagerly rewrites Z^2 -> z2_image until every Z-exponent is 0 or 1. */
CPoly reduce_z2(const CPoly& f, const CPoly& z2_image);

/* Bracket on C[X,Y,Z]/(XY^2+Z^2): structure constants {X,Y} = 2Z,
 * {X,Z} = -2XY, {Y,Z} = Y^2; result reduced via Z^2 -> -XY^2. */
CPoly bracket_gr_limit(const CPoly& f, const CPoly& g);

/* M-fold application of {x, .} in the quotient ring. */
CPoly hamiltonian_iterate(const CPoly& x, const CPoly& y, int m);

/* The n-dependent symbol-side data: phi = X^n + XY^2 + Z^2. */
CPoly phi_poly(int n);

/* Checks gr[x,y] = {gr x, gr y}_phi at standard degree deg x + deg y - 2,
 * reading "equal" as: the degree-(dx+dy-2) part of [x,y] has symbol equal to
 * the bracket of the top symbols (for kind=D computed modulo Z^2 = -X^n-XY^2),
 * and if that bracket vanishes then [x,y] has strictly smaller degree. */
bool semiclassical_check(const AlgebraSpec& spec, const Element& x,
                         const Element& y);

}  // namespace dklein
