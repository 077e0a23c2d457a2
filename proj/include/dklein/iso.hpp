#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dklein/algebra.hpp"

namespace dklein {

/* Parameters (Q, gamma) of a D-algebra.  Plain data; the operations validate
 * monicity/degree where they require it. */
struct DParams {
  Poly q;
  Scalar gamma;

  int n() const { return q.degree(); }
  /* Cubic-case accessors: Q = t^3 + A t^2 + B t + C. */
  Scalar A() const { return q.coeff(2); }
  Scalar B() const { return q.coeff(1); }
  Scalar C() const { return q.coeff(0); }

  friend bool operator==(const DParams& a, const DParams& b) {
    return a.q == b.q && a.gamma == b.gamma;
  }
  friend bool operator!=(const DParams& a, const DParams& b) {
    return !(a == b);
  }
};

/* A homomorphism certificate: images of the source generators u, v, w as
 * elements of the target algebra.  All witnesses produced by this module are
 * verified at construction; verify_homomorphism re-checks any candidate. */
struct IsoWitness {
  std::string name;
  DParams source, target;
  std::array<Element, 3> images;
};

/* Substitutes the images into all four defining relations of the source
 * algebra (its Q, P, gamma) and reduces in the target algebra. */
bool verify_homomorphism(const IsoWitness& w);

/* Rescales to monic parameters: xi^2 = 1/leading(Q), choosing the root with
 * positive real part (or positive imaginary part if the real part is zero).
 * Returns the normalized parameters and xi. */
std::pair<DParams, Scalar> normalize_monic(const Poly& qraw,
                                           const Scalar& gamma);

/* Witness for the rescaling isomorphism from (qraw, gamma) to its
 * normalization: u -> u, v -> v/xi, w -> w/xi. */
IsoWitness scale_witness(const Poly& qraw, const Scalar& gamma);

/* Witness for the rescaling by an arbitrary nonzero xi:
 * (Q, gamma) -> (xi^2 Q, xi gamma). */
IsoWitness scaling_witness(const DParams& source, const Scalar& xi);

IsoWitness identity_witness(const DParams& p);
IsoWitness theta(const DParams& p);
IsoWitness psi(const DParams& p);      // requires n = 3
IsoWitness psi_inv(const DParams& p);  // requires n = 3

/* w2 after w1 (w1.target must equal w2.source). */
IsoWitness compose(const IsoWitness& w2, const IsoWitness& w1);

/* All parameter/witness pairs reachable from p: {Id, Ψ, Ψ², Θ, Θ∘Ψ, Θ∘Ψ²}
 * for n = 3 and {Id, Θ} for n >= 4, duplicates merged (first name wins). */
std::vector<std::pair<DParams, IsoWitness>> orbit(const DParams& p);

/* Decision procedure; inputs must be monic (normalize first if needed). */
std::optional<IsoWitness> is_isomorphic_D(const DParams& p1,
                                          const DParams& p2);

struct AutGroup {
  std::string name;  // "trivial", "Z2(Θ)", "Z2(Θ∘Ψ)", "Z2(Θ∘Ψ²)", "S3"
  int order = 1;
  std::vector<IsoWitness> generators;
};
AutGroup automorphism_group(const DParams& p);

/* Invariants separating isomorphism classes: (Q's coefficients, gamma^2) for
 * n >= 4; for n = 3 the symmetric 4-tuple built from k = B - 4(A^2/16 - 1):
 * (k(k^2+9*gamma^2), k^2-3*gamma^2, 6C-AB, A). */
struct ModuliPoint {
  int deg = 0;
  std::vector<Scalar> coords;

  friend bool operator==(const ModuliPoint& a, const ModuliPoint& b) {
    return a.deg == b.deg && a.coords == b.coords;
  }
  friend bool operator!=(const ModuliPoint& a, const ModuliPoint& b) {
    return !(a == b);
  }
};
ModuliPoint moduli_invariants(const DParams& p);

struct HVerdict {
  bool isomorphic = false;
  std::optional<std::string> case_label;  // "(i)", "(ii)", "(iii)" when n = 3
  /* Transport of the verdict to the D-level orbit (constant shift matched);
   * its target Q may differ from solve_q_from_p(P2) by the constant term. */
  std::optional<IsoWitness> d_witness;
};

/* Classification of H(P1,gamma1) vs H(P2,gamma2): equality of P and gamma up
 * to sign for n >= 4; the three-case closed forms in X = P.coeff(1),
 * Y = P.coeff(0) for n = 3. */
HVerdict is_isomorphic_H(const Poly& p1, const Scalar& gamma1, const Poly& p2,
                         const Scalar& gamma2);

}  // namespace dklein
