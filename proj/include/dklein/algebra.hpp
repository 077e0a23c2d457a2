#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dklein/poly.hpp"

namespace dklein {

enum class AlgebraKind { H, D };

/* Presentation data for one algebra.  For kind=D the partner polynomial P is
 * derived from Q at construction and the compatibility between them is part
 * of the type's invariant (unchecked() exists for negative controls). */
class AlgebraSpec {
 public:
  /* kind=H: qp is P with leading term n*t^(n-1);
   * kind=D: qp is Q, monic of degree n >= 3. */
  static AlgebraSpec make(AlgebraKind kind, const Poly& qp, const Scalar& gamma);

  /* Testing hook: stores Q and P verbatim without the compatibility check. */
  static AlgebraSpec unchecked(AlgebraKind kind, Poly q, Poly p, Scalar gamma);

  AlgebraKind kind() const { return kind_; }
  const Poly& p() const { return p_; }
  const Poly& q() const;
  const Scalar& gamma() const { return gamma_; }
  int n() const { return n_; }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.kind_ == b.kind_ && a.q_ == b.q_ && a.p_ == b.p_ &&
           a.gamma_ == b.gamma_;
  }

 private:
  AlgebraSpec() = default;
  AlgebraKind kind_ = AlgebraKind::H;
  Poly q_, p_;
  Scalar gamma_;
  int n_ = 0;
};

/* Basis monomial u^i v^j w^k (for D-algebra elements k is 0 or 1). */
struct Monomial {
  int i = 0, j = 0, k = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/* Limit-filtration degree, ordered lexicographically. */
struct LimitDegree {
  long a = 0, b = 0;
  friend auto operator<=>(const LimitDegree&, const LimitDegree&) = default;
};

/* Normal-form element: finite Monomial -> Scalar map, no zero coefficients. */
class Element {
 public:
  Element() = default;
  static Element scalar(const Scalar& c);
  static Element generator(char name);  // 'u', 'v' or 'w'
  static Element term(const Monomial& m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  void add_term(const Monomial& m, const Scalar& c);

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator-(const Element& x);
  friend Element operator*(const Scalar& c, const Element& x);
  friend bool operator==(const Element& x, const Element& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const Element& x, const Element& y) {
    return !(x == y);
  }

 private:
  std::map<Monomial, Scalar> terms_;
};

/* Normalizes a formal sum of generator words (letters 'u','v','w').  This is
 * the rewrite engine; strategy is leftmost violating pair unless rightmost
 * is requested (the diamond check runs both). */
Element reduce_words(const AlgebraSpec& spec,
                     std::map<std::string, Scalar> agenda,
                     bool rightmost = false);

/* Re-normalizes an element (identity on canonical forms). */
Element reduce(const AlgebraSpec& spec, const Element& x);

Element mul(const AlgebraSpec& spec, const Element& x, const Element& y);
Element commutator(const AlgebraSpec& spec, const Element& x, const Element& y);
Element power(const AlgebraSpec& spec, const Element& x, int e);

/* f(g) for a scalar polynomial f evaluated at an algebra element g. */
Element poly_at(const AlgebraSpec& spec, const Poly& f, const Element& g);

/* Evaluates op(S, T) with S = (z -> [f,z]) and T = (z -> f*z) applied to x;
 * the two slots commute, so evaluation order is immaterial. */
Element apply_op_poly(const AlgebraSpec& spec, const OpPoly& op,
                      const Element& f, const Element& x);

/* Replaces the generators u, v, w of x by images[0..2] in the target spec. */
Element substitute(const AlgebraSpec& target, const Element& x,
                   const std::array<Element, 3>& images);

/* Weighted degree: u -> 4, v -> 2n-2, w -> 2n.  Throws on zero. */
int degree_standard(const AlgebraSpec& spec, const Element& x);

/* Limit-filtration degree (j+eps, 2i+eps); requires w-exponents <= 1. */
LimitDegree degree_limit(const Element& x);

/* The unique monomial attaining degree_limit, with its coefficient. */
std::pair<Monomial, Scalar> limit_leading_term(const Element& x);

struct DiamondEntry {
  std::string overlap;
  Element left, right;
  bool ok = false;
};
struct DiamondReport {
  std::vector<DiamondEntry> entries;
  bool all_ok() const;
};

/* Resolves every critical overlap word both ways and compares normal forms. */
DiamondReport check_diamond(const AlgebraSpec& spec);

/* Omega = Q(u) + u v^2 + w^2 - 2 w v - gamma v in an H-algebra; Q must be the
 * partner of the spec's P up to an additive constant. */
Element center_element(const AlgebraSpec& spec, const Poly& q);

/* True iff [x,u] = [x,v] = 0 (sufficient: w = [u,v]/2). */
bool is_central(const AlgebraSpec& spec, const Element& x);

}  // namespace dklein
