#include <array>

#include "doctest.h"
#include "dklein/iso.hpp"
#include "dklein/text.hpp"

using namespace dklein;

namespace {

DParams dp(const std::string& q, const std::string& gamma) {
  return DParams{parse_poly(q), parse_scalar(gamma)};
}

/* Numbers a + b*j with j^2 = 3 and a, b gaussian rationals; just enough
 * arithmetic to track the eigenvalue computation below. */
struct Ext3 {
  Scalar a, b;
  friend Ext3 operator*(const Ext3& x, const Ext3& y) {
    return {x.a * y.a + Scalar(3) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const Ext3& x, const Ext3& y) {
    return x.a == y.a && x.b == y.b;
  }
};

Scalar k_of(const DParams& p) {
  return p.B() - Scalar(make_rational(1, 4)) * p.A() * p.A() + Scalar(4);
}

}  // namespace

TEST_CASE("gamma flip") {
  IsoWitness th = theta(dp("t^4", "1"));
  CHECK(th.name == "Θ");
  CHECK(th.target == dp("t^4", "-1"));
  CHECK(to_text(th.images[0]) == "u");
  CHECK(to_text(th.images[1]) == "-v");
  CHECK(to_text(th.images[2]) == "-w");
  CHECK(verify_homomorphism(th));
  IsoWitness sq = compose(theta(th.target), th);
  CHECK(sq.name == "Θ∘Θ");
  CHECK(sq.target == dp("t^4", "1"));
}

TEST_CASE("a corrupted witness fails verification") {
  IsoWitness th = theta(dp("t^3", "1"));
  th.images[2] = -th.images[2];  // w -> w instead of w -> -w
  CHECK(!verify_homomorphism(th));
}

TEST_CASE("order-3 map on cubic parameters") {
  IsoWitness w = psi(dp("t^3", "0"));
  CHECK(w.name == "Ψ");
  CHECK(w.target == dp("t^3-6*t", "2*i"));
  CHECK(verify_homomorphism(w));
  IsoWitness w2 = psi_inv(dp("t^3", "0"));
  CHECK(w2.target == dp("t^3-6*t", "-2*i"));
  CHECK_THROWS_AS(psi(dp("t^4", "0")), precondition_error);
}

TEST_CASE("parameter map fixed point") {
  DParams fixed = dp("t^3-4*t", "0");
  CHECK(psi(fixed).target == fixed);
  CHECK(psi_inv(fixed).target == fixed);
}

TEST_CASE("the order-3 map cubes to the identity") {
  for (auto params : {dp("t^3+2*t^2-t+3", "1+i"), dp("t^3+i*t", "1/2"),
                      dp("t^3-5", "0")}) {
    DParams once = psi(params).target;
    DParams twice = psi(once).target;
    DParams thrice = psi(twice).target;
    CHECK(thrice == params);
    CHECK(twice == psi_inv(params).target);
    // Conjugating by the gamma flip inverts it.
    DParams conj = theta(psi(theta(params).target).target).target;
    CHECK(conj == psi_inv(params).target);
  }
}

TEST_CASE("orbits of cubic parameters") {
  auto orb = orbit(dp("t^3", "0"));
  REQUIRE(orb.size() == 3);
  CHECK(orb[0].first == dp("t^3", "0"));
  CHECK(orb[0].second.name == "Id");
  CHECK(orb[1].first == dp("t^3-6*t", "2*i"));
  CHECK(orb[1].second.name == "Ψ");
  CHECK(orb[2].first == dp("t^3-6*t", "-2*i"));
  CHECK(orb[2].second.name == "Ψ²");
  CHECK(orbit(dp("t^3-4*t", "0")).size() == 1);
  CHECK(orbit(dp("t^3", "1")).size() == 6);
}

TEST_CASE("orbits in degree at least four") {
  CHECK(orbit(dp("t^5", "3")).size() == 2);
  CHECK(orbit(dp("t^5+t", "0")).size() == 1);
  auto orb = orbit(dp("t^4", "1"));
  REQUIRE(orb.size() == 2);
  CHECK(orb[1].first == dp("t^4", "-1"));
  CHECK(orb[1].second.name == "Θ");
}

TEST_CASE("isomorphism decision with witnesses") {
  auto w = is_isomorphic_D(dp("t^3", "0"), dp("t^3-6*t", "-2*i"));
  REQUIRE(w.has_value());
  CHECK(w->name == "Ψ²");
  CHECK(verify_homomorphism(*w));
  CHECK(!is_isomorphic_D(dp("t^3", "0"), dp("t^3", "1")).has_value());
  CHECK(!is_isomorphic_D(dp("t^3", "0"), dp("t^4", "0")).has_value());
  auto th = is_isomorphic_D(dp("t^4", "1"), dp("t^4", "-1"));
  REQUIRE(th.has_value());
  CHECK(th->name == "Θ");
  CHECK_THROWS_AS(is_isomorphic_D(dp("2*t^3", "0"), dp("t^3", "0")),
                  precondition_error);
}

TEST_CASE("automorphism groups by stratum") {
  AutGroup s3 = automorphism_group(dp("t^3-4*t", "0"));
  CHECK(s3.name == "S3");
  CHECK(s3.order == 6);
  REQUIRE(s3.generators.size() == 2);
  CHECK(s3.generators[0].name == "Ψ");
  CHECK(s3.generators[1].name == "Θ");

  AutGroup z2 = automorphism_group(dp("t^3", "0"));
  CHECK(z2.name == "Z2(Θ)");
  CHECK(z2.order == 2);

  AutGroup tw = automorphism_group(dp("t^3+(-4+i)*t", "1"));
  CHECK(tw.name == "Z2(Θ∘Ψ)");
  CHECK(tw.order == 2);
  REQUIRE(tw.generators.size() == 1);
  CHECK(tw.generators[0].target == dp("t^3+(-4+i)*t", "1"));
  CHECK(verify_homomorphism(tw.generators[0]));

  AutGroup tw2 = automorphism_group(dp("t^3+(-4-i)*t", "1"));
  CHECK(tw2.name == "Z2(Θ∘Ψ²)");

  CHECK(automorphism_group(dp("t^3", "1")).name == "trivial");
  CHECK(automorphism_group(dp("t^4", "0")).name == "Z2(Θ)");
  CHECK(automorphism_group(dp("t^4", "1")).name == "trivial");
}

TEST_CASE("moduli invariants") {
  ModuliPoint m = moduli_invariants(dp("t^3", "0"));
  CHECK(m.deg == 3);
  REQUIRE(m.coords.size() == 4);
  CHECK(to_text(m.coords[0]) == "64");
  CHECK(to_text(m.coords[1]) == "16");
  CHECK(to_text(m.coords[2]) == "0");
  CHECK(to_text(m.coords[3]) == "0");
  // Constant along an orbit.
  for (const auto& member : orbit(dp("t^3+2*t^2-t+3", "1+i")))
    CHECK(moduli_invariants(member.first) ==
          moduli_invariants(dp("t^3+2*t^2-t+3", "1+i")));
  // gamma enters only through its square in high degree.
  CHECK(moduli_invariants(dp("t^5+t", "3")) ==
        moduli_invariants(dp("t^5+t", "-3")));
  CHECK(moduli_invariants(dp("t^5+t", "3")) !=
        moduli_invariants(dp("t^5+t", "2")));
  CHECK(moduli_invariants(dp("t^3", "0")) !=
        moduli_invariants(dp("t^3", "1")));
}

TEST_CASE("monic normalization") {
  auto [n1, xi1] = normalize_monic(parse_poly("4*t^3"), Scalar(2));
  CHECK(n1 == dp("t^3", "1"));
  CHECK(xi1 == Scalar(make_rational(1, 2)));
  auto [n2, xi2] = normalize_monic(parse_poly("-t^3"), Scalar(3));
  CHECK(n2 == dp("t^3", "3*i"));
  CHECK(xi2 == Scalar::i());
  auto [n3, xi3] = normalize_monic(parse_poly("t^3+t"), Scalar(1));
  CHECK(n3 == dp("t^3+t", "1"));
  CHECK(xi3 == Scalar(1));
  CHECK_THROWS_AS(normalize_monic(parse_poly("2*t^3"), Scalar(0)),
                  precondition_error);
}

TEST_CASE("scaling witnesses") {
  IsoWitness s = scale_witness(parse_poly("4*t^3"), Scalar(2));
  CHECK(s.name == "Scale(1/2)");
  CHECK(s.source == dp("4*t^3", "2"));
  CHECK(s.target == dp("t^3", "1"));
  CHECK(verify_homomorphism(s));

  IsoWitness up = scaling_witness(dp("t^3", "1"), Scalar(2));
  CHECK(up.target == dp("4*t^3", "2"));
  CHECK(verify_homomorphism(up));
  IsoWitness round = compose(up, s);
  CHECK(round.source == dp("4*t^3", "2"));
  CHECK(round.target == dp("4*t^3", "2"));
  CHECK_THROWS_AS(scaling_witness(dp("t^3", "0"), Scalar(0)),
                  precondition_error);
}

TEST_CASE("h-level verdicts in the cubic case") {
  Poly p = parse_poly("3*t^2+8*t+8");
  HVerdict flip = is_isomorphic_H(p, Scalar(1), p, Scalar(-1));
  CHECK(flip.isomorphic);
  CHECK(*flip.case_label == "(iii)");
  REQUIRE(flip.d_witness.has_value());
  CHECK(flip.d_witness->name == "Θ");

  // X = 8: the partner parameters (Y2, gamma2) of (8, 1) under the
  // order-3 move are (2+3/2*i, -1/2+2*i), conjugated for the inverse move.
  HVerdict rot = is_isomorphic_H(p, Scalar(1),
                                 parse_poly("3*t^2+8*t+2+3/2*i"),
                                 parse_scalar("-1/2+2*i"));
  CHECK(rot.isomorphic);
  CHECK(*rot.case_label == "(i)");
  REQUIRE(rot.d_witness.has_value());
  CHECK(verify_homomorphism(*rot.d_witness));

  HVerdict rot2 = is_isomorphic_H(p, Scalar(1),
                                  parse_poly("3*t^2+8*t+2-3/2*i"),
                                  parse_scalar("-1/2-2*i"));
  CHECK(rot2.isomorphic);
  CHECK(*rot2.case_label == "(ii)");

  CHECK(!is_isomorphic_H(p, Scalar(1), parse_poly("3*t^2+8*t+9"), Scalar(1))
             .isomorphic);
  CHECK(!is_isomorphic_H(p, Scalar(0), parse_poly("3*t^2+9*t+8"), Scalar(0))
             .isomorphic);
  CHECK_THROWS_AS(is_isomorphic_H(parse_poly("t^2"), Scalar(0), p, Scalar(0)),
                  precondition_error);
}

TEST_CASE("h-level verdicts in higher degree") {
  Poly p = parse_poly("4*t^3+20*t^2+56*t+56");
  HVerdict v = is_isomorphic_H(p, Scalar(1), p, Scalar(-1));
  CHECK(v.isomorphic);
  CHECK(!v.case_label.has_value());
  REQUIRE(v.d_witness.has_value());
  CHECK(v.d_witness->name == "Θ");
  CHECK(!is_isomorphic_H(p, Scalar(1), p, Scalar(2)).isomorphic);
  CHECK(!is_isomorphic_H(p, Scalar(1), p + Poly(Scalar(1)), Scalar(1))
             .isomorphic);
}

TEST_CASE("eigenvalue of the order-3 move on the linear invariants") {
  // Over j = sqrt(3):  k - j*gamma is scaled by -1/2 - (i/2) j and
  // k + j*gamma by -1/2 + (i/2) j.
  Ext3 omega_bar{parse_scalar("-1/2"), parse_scalar("-1/2*i")};
  Ext3 omega{parse_scalar("-1/2"), parse_scalar("1/2*i")};
  for (auto params : {dp("t^3", "0"), dp("t^3+2*t^2-t+3", "1+i"),
                      dp("t^3+i*t", "1/2"), dp("t^3-t^2+4*t-1", "-2")}) {
    DParams next = psi(params).target;
    Ext3 x1{k_of(params), -params.gamma};
    Ext3 x2{k_of(params), params.gamma};
    CHECK(Ext3{k_of(next), -next.gamma} == omega_bar * x1);
    CHECK(Ext3{k_of(next), next.gamma} == omega * x2);
  }
}
