#include "doctest.h"
#include "dklein/poisson.hpp"
#include "dklein/text.hpp"

using namespace dklein;

namespace {
CPoly C(const std::string& text) { return parse_cpoly(text); }
const CPoly X = CPoly::variable('X');
const CPoly Y = CPoly::variable('Y');
const CPoly Z = CPoly::variable('Z');
}  // namespace

TEST_CASE("commutative polynomial basics") {
  CPoly f = C("X^2*Y-2*Z+1");
  CHECK(f.derivative(0) == C("2*X*Y"));
  CHECK(f.derivative(1) == C("X^2"));
  CHECK(f.derivative(2) == C("-2"));
  CHECK(f - f == CPoly());
  CHECK(X * Y == Y * X);
  CHECK(phi_poly(3) == C("X^3+X*Y^2+Z^2"));
  CHECK(phi_poly(4) == C("X^4+X*Y^2+Z^2"));
}

TEST_CASE("jacobian bracket on the generators") {
  CPoly phi = phi_poly(3);
  CHECK(bracket_phi(X, Y, phi) == C("2*Z"));
  CHECK(bracket_phi(X, Z, phi) == C("-2*X*Y"));
  CHECK(bracket_phi(Y, Z, phi) == C("3*X^2+Y^2"));
  CHECK(bracket_phi(Y, X, phi) == C("-2*Z"));
  CHECK(bracket_phi(X, X, phi).is_zero());
}

TEST_CASE("bracket is a biderivation") {
  CPoly phi = phi_poly(4);
  CPoly f = C("X*Z+Y");
  CPoly g = C("X^2-Z");
  CPoly h = C("Y*Z+3");
  CHECK(bracket_phi(f, g * h, phi) ==
        bracket_phi(f, g, phi) * h + g * bracket_phi(f, h, phi));
  CHECK(bracket_phi(f + g, h, phi) ==
        bracket_phi(f, h, phi) + bracket_phi(g, h, phi));
}

TEST_CASE("jacobi identity") {
  for (int n : {3, 4}) {
    CPoly phi = phi_poly(n);
    CPoly f = C("X^2*Y");
    CPoly g = C("Z");
    CPoly h = C("X*Y+Z");
    CPoly jac = bracket_phi(f, bracket_phi(g, h, phi), phi) +
                bracket_phi(g, bracket_phi(h, f, phi), phi) +
                bracket_phi(h, bracket_phi(f, g, phi), phi);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("phi is a casimir") {
  for (int n : {3, 4, 5}) {
    CPoly phi = phi_poly(n);
    for (const char* ft : {"X", "Y", "Z", "X*Y*Z-2*Z^2+Y"})
      CHECK(bracket_phi(phi, C(ft), phi).is_zero());
  }
}

TEST_CASE("z-square reduction") {
  CPoly image = C("-X^3-X*Y^2");
  CHECK(reduce_z2(C("Z^2"), image) == image);
  CHECK(reduce_z2(C("Z^3+Z"), image) == C("-X^3*Z-X*Y^2*Z+Z"));
  CHECK(reduce_z2(C("X*Y+Z"), image) == C("X*Y+Z"));
  CHECK(reduce_z2(C("Z^4"), image) == image * image);
}

TEST_CASE("limit bracket structure constants") {
  CHECK(bracket_gr_limit(X, Y) == C("2*Z"));
  CHECK(bracket_gr_limit(X, Z) == C("-2*X*Y"));
  CHECK(bracket_gr_limit(Y, Z) == C("Y^2"));
  // {X^a Y^b, X^c Y^d} = 2(ad-bc) X^(a+c-1) Y^(b+d-1) Z.
  struct Quad { int a, b, c, d; };
  for (Quad t : {Quad{2, 1, 1, 3}, Quad{1, 0, 0, 2}, Quad{3, 2, 2, 1}}) {
    CPoly lhs = bracket_gr_limit(C("X^" + std::to_string(t.a) +
                                   "*Y^" + std::to_string(t.b)),
                                 C("X^" + std::to_string(t.c) +
                                   "*Y^" + std::to_string(t.d)));
    CPoly rhs = Scalar(2 * (t.a * t.d - t.b * t.c)) *
                CPoly::term({t.a + t.c - 1, t.b + t.d - 1, 1}, Scalar(1));
    CHECK(lhs == rhs);
  }
  // Jacobi holds in the quotient ring as well.
  CPoly jac = bracket_gr_limit(X, bracket_gr_limit(Y, C("X*Z"))) +
              bracket_gr_limit(Y, bracket_gr_limit(C("X*Z"), X)) +
              bracket_gr_limit(C("X*Z"), bracket_gr_limit(X, Y));
  CHECK(jac.is_zero());
}

TEST_CASE("hamiltonian iteration") {
  CPoly x = C("X^2*Y");
  CPoly y = C("Z");
  CHECK(hamiltonian_iterate(x, y, 0) == y);
  CHECK(hamiltonian_iterate(x, y, 1) == bracket_gr_limit(x, y));
  CHECK(hamiltonian_iterate(x, y, 2) ==
        bracket_gr_limit(x, bracket_gr_limit(x, y)));
}

TEST_CASE("semiclassical comparison on basic pairs") {
  AlgebraSpec d3 = AlgebraSpec::make(AlgebraKind::D, parse_poly("t^3"),
                                     Scalar(0));
  AlgebraSpec d4 = AlgebraSpec::make(AlgebraKind::D, parse_poly("t^4+t"),
                                     Scalar::i());
  AlgebraSpec h3 = AlgebraSpec::make(AlgebraKind::H,
                                     parse_poly("3*t^2+8*t+8"), Scalar(2));
  for (const AlgebraSpec& spec : {d3, d4, h3}) {
    for (auto [a, b] : {std::pair<const char*, const char*>{"u", "v"},
                        {"u", "w"},
                        {"v", "w"},
                        {"u^2", "v*w"},
                        {"u*v", "w+v"}}) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(semiclassical_check(spec, parse_element(spec, a),
                                parse_element(spec, b)));
    }
  }
}

TEST_CASE("cpoly text round-trips") {
  const char* samples[] = {"0", "X^2*Y-2*Z+1", "(1+i)*X*Z-1/2*Y^3",
                           "-X+Y-Z+7"};
  for (const char* s : samples) {
    CPoly f = C(s);
    CHECK(parse_cpoly(to_text(f)) == f);
  }
  CHECK(to_text(C("Y*X")) == "X*Y");
  CHECK_THROWS_AS(parse_cpoly("X*t"), parse_error);
}
