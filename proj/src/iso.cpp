#include "dklein/iso.hpp"

#include <algorithm>

#include "dklein/errors.hpp"
#include "dklein/text.hpp"

namespace dklein {

namespace {

Scalar rat(long n, long d = 1) { return Scalar(make_rational(n, d)); }
Scalar irat(long n, long d = 1) {
  return Scalar(Rational(0), make_rational(n, d));
}

void require_dparams(const DParams& p, const char* who) {
  if (p.q.degree() < 3)
    throw precondition_error(std::string(who) + ": deg Q must be >= 3");
  if (!p.q.is_monic())
    throw precondition_error(std::string(who) + ": Q must be monic");
}

/* Partner polynomial of Q for possibly non-monic Q (the compatibility
 * condition is linear, so P scales with Q's leading coefficient). */
Poly partner_p(const Poly& q) {
  if (q.is_monic()) return solve_p_from_q(q);
  Scalar c = q.leading();
  return c * solve_p_from_q(c.inv() * q);
}

/* Target algebra for reductions; tolerates non-monic Q (scaling witnesses)
 * by pairing it with its partner explicitly. */
AlgebraSpec target_spec(const DParams& p) {
  if (p.q.is_monic()) return AlgebraSpec::make(AlgebraKind::D, p.q, p.gamma);
  return AlgebraSpec::unchecked(AlgebraKind::D, p.q, partner_p(p.q), p.gamma);
}

IsoWitness make_verified(std::string name, DParams source, DParams target,
                         std::array<Element, 3> images) {
  IsoWitness w{std::move(name), std::move(source), std::move(target),
               std::move(images)};
  if (!verify_homomorphism(w))
    throw invariant_violation("witness '" + w.name +
                              "' fails the defining relations");
  return w;
}

/* Affine images used by the order-3 symmetry and its inverse; sgn = +1 gives
 * the forward map, sgn = -1 the inverse.  c = 1 + A/4 where A = Q.coeff(2). */
std::array<Element, 3> psi_images(const DParams& p, int sgn) {
  Scalar c = rat(1) + rat(1, 4) * p.A();
  Element u = Element::generator('u');
  Element v = Element::generator('v');
  Element w = Element::generator('w');
  Scalar s(sgn);
  Element fu = rat(-1, 2) * u + (s * irat(-1, 2)) * v - Element::scalar(c);
  Element fv = (s * irat(-3, 2)) * u + rat(-1, 2) * v +
               Element::scalar(s * Scalar(-1) * Scalar::i() * c);
  return {fu, fv, w};
}

DParams psi_params(const DParams& p, int sgn) {
  Scalar A = p.A(), B = p.B(), C = p.C(), g = p.gamma;
  Scalar i = Scalar::i(), s(sgn);
  Scalar a2 = rat(1, 16) * A * A;  // A^2/16
  Scalar B2 = rat(6) * (a2 - rat(1)) + s * (irat(3, 2) * g) - rat(1, 2) * B;
  Scalar C2 =
      C - A * (rat(1, 4) * B - s * (irat(1, 4) * g) + rat(1) - a2);
  Scalar g2 = (sgn > 0)
                  ? i * (rat(2) * (rat(1) - a2) + rat(1, 2) * B +
                         irat(1, 2) * g)
                  : i * (rat(2) * (a2 - rat(1)) - rat(1, 2) * B) -
                        rat(1, 2) * g;
  std::vector<Scalar> cs(p.q.coeffs().begin(), p.q.coeffs().end());
  cs[0] = C2;
  cs[1] = B2;  // A and the leading 1 are unchanged
  return DParams{Poly::from_coeffs(cs), g2};
}

}  // namespace

bool verify_homomorphism(const IsoWitness& w) {
  const Poly& qs = w.source.q;
  if (qs.degree() < 3 || qs.leading().is_zero()) return false;
  if (w.target.q.degree() < 3) return false;
  Poly ps = partner_p(qs);
  AlgebraSpec target = target_spec(w.target);
  const Element& F = w.images[0];
  const Element& G = w.images[1];
  const Element& H = w.images[2];
  const Scalar& g = w.source.gamma;

  Element r1 = commutator(target, F, G) - rat(2) * H;
  if (!r1.is_zero()) return false;
  Element r2 = commutator(target, F, H) + rat(2) * mul(target, F, G) -
               rat(2) * H - Element::scalar(g);
  if (!r2.is_zero()) return false;
  Element r3 = commutator(target, G, H) - mul(target, G, G) -
               poly_at(target, ps, F);
  if (!r3.is_zero()) return false;
  Element gg = mul(target, G, G);
  Element r4 = poly_at(target, qs, F) + mul(target, F, gg) +
               mul(target, H, H) - rat(2) * mul(target, H, G) - g * G;
  return r4.is_zero();
}

std::pair<DParams, Scalar> normalize_monic(const Poly& qraw,
                                           const Scalar& gamma) {
  if (qraw.degree() < 3)
    throw precondition_error("normalize_monic: deg Q must be >= 3");
  Scalar c = qraw.leading();
  auto xi = sqrt_exact(c.inv());
  if (!xi)
    throw precondition_error(
        "normalize_monic: 1/leading(Q) has no square root in Q(i)");
  Scalar xi2 = *xi * *xi;
  return {DParams{xi2 * qraw, *xi * gamma}, *xi};
}

IsoWitness scaling_witness(const DParams& source, const Scalar& xi) {
  if (source.q.degree() < 3)
    throw precondition_error("scaling_witness: deg Q must be >= 3");
  if (xi.is_zero()) throw precondition_error("scaling_witness: xi must be nonzero");
  DParams target{(xi * xi) * source.q, xi * source.gamma};
  Scalar inv = xi.inv();
  std::array<Element, 3> images = {Element::generator('u'),
                                   inv * Element::generator('v'),
                                   inv * Element::generator('w')};
  return make_verified("Scale(" + to_text(xi) + ")", source, target,
                       std::move(images));
}

IsoWitness scale_witness(const Poly& qraw, const Scalar& gamma) {
  auto [norm, xi] = normalize_monic(qraw, gamma);
  IsoWitness w = scaling_witness(DParams{qraw, gamma}, xi);
  if (!(w.target == norm))
    throw invariant_violation("scale witness misses the normalization");
  return w;
}

IsoWitness identity_witness(const DParams& p) {
  require_dparams(p, "identity_witness");
  return make_verified("Id", p, p,
                       {Element::generator('u'), Element::generator('v'),
                        Element::generator('w')});
}

IsoWitness theta(const DParams& p) {
  require_dparams(p, "theta");
  DParams target{p.q, -p.gamma};
  return make_verified("Θ", p, target,
                       {Element::generator('u'),
                        Scalar(-1) * Element::generator('v'),
                        Scalar(-1) * Element::generator('w')});
}

IsoWitness psi(const DParams& p) {
  require_dparams(p, "psi");
  if (p.n() != 3) throw precondition_error("psi: requires deg Q = 3");
  return make_verified("Ψ", p, psi_params(p, +1), psi_images(p, +1));
}

IsoWitness psi_inv(const DParams& p) {
  require_dparams(p, "psi_inv");
  if (p.n() != 3) throw precondition_error("psi_inv: requires deg Q = 3");
  return make_verified("Ψ²", p, psi_params(p, -1), psi_images(p, -1));
}

IsoWitness compose(const IsoWitness& w2, const IsoWitness& w1) {
  if (!(w1.target == w2.source))
    throw precondition_error("compose: w1.target != w2.source");
  AlgebraSpec target = target_spec(w2.target);
  std::array<Element, 3> images;
  for (int k = 0; k < 3; ++k)
    images[k] = substitute(target, w1.images[k], w2.images);
  std::string name;
  if (w1.name == "Id")
    name = w2.name;
  else if (w2.name == "Id")
    name = w1.name;
  else
    name = w2.name + "∘" + w1.name;
  return make_verified(std::move(name), w1.source, w2.target,
                       std::move(images));
}

std::vector<std::pair<DParams, IsoWitness>> orbit(const DParams& p) {
  require_dparams(p, "orbit");
  std::vector<IsoWitness> candidates;
  candidates.push_back(identity_witness(p));
  if (p.n() == 3) {
    candidates.push_back(psi(p));
    candidates.push_back(psi_inv(p));
  }
  size_t rotations = candidates.size();
  for (size_t k = 0; k < rotations; ++k) {
    const IsoWitness& w = candidates[k];
    candidates.push_back(compose(theta(w.target), w));
  }
  std::vector<std::pair<DParams, IsoWitness>> out;
  for (auto& w : candidates) {
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const auto& e) { return e.first == w.target; });
    if (!seen) out.emplace_back(w.target, w);
  }
  return out;
}

std::optional<IsoWitness> is_isomorphic_D(const DParams& p1,
                                          const DParams& p2) {
  require_dparams(p1, "is_isomorphic_D");
  require_dparams(p2, "is_isomorphic_D");
  if (p1.n() != p2.n()) return std::nullopt;
  for (auto& [params, witness] : orbit(p1))
    if (params == p2) return witness;
  return std::nullopt;
}

AutGroup automorphism_group(const DParams& p) {
  require_dparams(p, "automorphism_group");
  Scalar g = p.gamma;
  AutGroup out;
  auto theta_like = [&](const IsoWitness& rot, const std::string& label) {
    IsoWitness w = compose(theta(rot.target), rot);
    if (!(w.target == p))
      throw invariant_violation("automorphism candidate does not fix the parameters");
    out.name = label;
    out.order = 2;
    out.generators = {std::move(w)};
  };
  if (p.n() >= 4) {
    if (g.is_zero()) {
      out.name = "Z2(Θ)";
      out.order = 2;
      out.generators = {theta(p)};
    } else {
      out.name = "trivial";
      out.order = 1;
    }
    return out;
  }
  Scalar k = p.B() - rat(1, 4) * p.A() * p.A() + rat(4);
  Scalar ig = Scalar::i() * g;
  if (g.is_zero() && k.is_zero()) {
    IsoWitness rot = psi(p);
    if (!(rot.target == p))
      throw invariant_violation("order-3 symmetry does not fix the parameters");
    out.name = "S3";
    out.order = 6;
    out.generators = {std::move(rot), theta(p)};
  } else if (g.is_zero()) {
    out.name = "Z2(Θ)";
    out.order = 2;
    out.generators = {theta(p)};
  } else if (k == ig) {
    theta_like(psi(p), "Z2(Θ∘Ψ)");
  } else if (k == -ig) {
    theta_like(psi_inv(p), "Z2(Θ∘Ψ²)");
  } else {
    out.name = "trivial";
    out.order = 1;
  }
  /* Orbit-stabilizer cross-check: |Aut| * |orbit| = 6 in the cubic case. */
  if (p.n() == 3 &&
      out.order * static_cast<int>(orbit(p).size()) != 6)
    throw invariant_violation("automorphism order contradicts the orbit size");
  return out;
}

ModuliPoint moduli_invariants(const DParams& p) {
  require_dparams(p, "moduli_invariants");
  ModuliPoint out;
  out.deg = p.n();
  if (p.n() >= 4) {
    for (int k = 0; k < p.n(); ++k) out.coords.push_back(p.q.coeff(k));
    out.coords.push_back(p.gamma * p.gamma);
    return out;
  }
  Scalar A = p.A(), B = p.B(), C = p.C(), g = p.gamma;
  Scalar k = B - rat(1, 4) * A * A + rat(4);
  Scalar g2 = g * g;
  out.coords = {k * (k * k + rat(9) * g2), k * k - rat(3) * g2,
                rat(6) * C - A * B, A};
  return out;
}

HVerdict is_isomorphic_H(const Poly& p1, const Scalar& gamma1, const Poly& p2,
                         const Scalar& gamma2) {
  auto check_h = [](const Poly& p, const char* who) {
    int n = p.degree() + 1;
    if (n < 3 || !(p.leading() == Scalar(n)))
      throw precondition_error(std::string(who) +
                               ": P must have leading term n*t^(n-1), n >= 3");
    return n;
  };
  int n1 = check_h(p1, "is_isomorphic_H(p1)");
  int n2 = check_h(p2, "is_isomorphic_H(p2)");
  HVerdict out;
  if (n1 != n2) return out;

  /* Transport to D-parameters: any constant shift of the partner Q presents
   * the same H-algebra, so verdicts compare Q's non-constant part only. */
  DParams d1{solve_q_from_p(p1), gamma1};
  Poly q2 = solve_q_from_p(p2);
  auto matches = [&](const DParams& cand) {
    if (!(cand.gamma == gamma2)) return false;
    for (int k = 1; k < cand.q.degree(); ++k)
      if (!(cand.q.coeff(k) == q2.coeff(k))) return false;
    return true;
  };
  auto attach_witness = [&]() {
    for (auto& [params, witness] : orbit(d1))
      if (matches(params)) {
        out.d_witness = witness;
        return;
      }
    throw invariant_violation(
        "closed-form verdict has no matching orbit member");
  };

  if (n1 >= 4) {
    if (!(p1 == p2)) return out;
    if (gamma2 == gamma1 || gamma2 == -gamma1) {
      out.isomorphic = true;
      attach_witness();
    }
    return out;
  }

  Scalar X1 = p1.coeff(1), Y1 = p1.coeff(0);
  Scalar X2 = p2.coeff(1), Y2 = p2.coeff(0);
  if (!(X1 == X2)) return out;
  Scalar i = Scalar::i();
  Scalar x32 = rat(1, 32) * X1 * X1;  // X^2/32
  Scalar yi = rat(3) * (x32 + irat(1, 2) * gamma1) - rat(1, 2) * Y1;
  Scalar gi = i * (rat(1, 2) * Y1 - x32) - rat(1, 2) * gamma1;
  Scalar yii = rat(3) * (x32 - irat(1, 2) * gamma1) - rat(1, 2) * Y1;
  Scalar gii = Scalar(-1) * i * (rat(1, 2) * Y1 - x32) - rat(1, 2) * gamma1;

  if (Y2 == Y1 && (gamma2 == gamma1 || gamma2 == -gamma1)) {
    out.isomorphic = true;
    out.case_label = "(iii)";
  } else if (Y2 == yi && (gamma2 == gi || gamma2 == -gi)) {
    out.isomorphic = true;
    out.case_label = "(i)";
  } else if (Y2 == yii && (gamma2 == gii || gamma2 == -gii)) {
    out.isomorphic = true;
    out.case_label = "(ii)";
  }
  if (out.isomorphic) attach_witness();
  return out;
}

}  // namespace dklein
