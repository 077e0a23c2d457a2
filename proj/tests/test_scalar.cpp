#include "doctest.h"
#include "dklein/scalar.hpp"
#include "dklein/text.hpp"

using namespace dklein;

namespace {
Scalar sc(long re_n, long re_d, long im_n, long im_d) {
  return Scalar(make_rational(re_n, re_d), make_rational(im_n, im_d));
}
}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  Scalar a = sc(1, 1, 2, 1);   // 1+2i
  Scalar b = sc(3, 1, -1, 1);  // 3-i
  CHECK(a * b == sc(5, 1, 5, 1));
  CHECK(a + b == sc(4, 1, 1, 1));
  CHECK(a - b == sc(-2, 1, 3, 1));
  CHECK(-a == sc(-1, 1, -2, 1));
  CHECK(a.conj() == sc(1, 1, -2, 1));
  CHECK(a.norm() == 5);
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("inverse and division") {
  Scalar a = sc(1, 1, 1, 1);  // 1+i
  CHECK(a.inv() == sc(1, 2, -1, 2));
  CHECK(a * a.inv() == Scalar(1));
  CHECK(sc(5, 1, 5, 1) / a == sc(5, 1, 0, 1));
  CHECK_THROWS_AS(Scalar(0).inv(), division_by_zero);
  CHECK_THROWS_AS(a / Scalar(0), division_by_zero);
}

TEST_CASE("components stay in lowest terms") {
  Scalar a(make_rational(2, 4));
  CHECK(a == Scalar(make_rational(1, 2)));
  CHECK(a.re.get_den() == 2);
}

TEST_CASE("exact rational square roots") {
  CHECK(*sqrt_exact(Rational(9)) == 3);
  CHECK(*sqrt_exact(make_rational(9, 4)) == make_rational(3, 2));
  CHECK(*sqrt_exact(Rational(0)) == 0);
  CHECK(!sqrt_exact(Rational(2)).has_value());
  CHECK(!sqrt_exact(make_rational(1, 2)).has_value());
}

TEST_CASE("exact gaussian square roots pick the canonical branch") {
  // (1+i)^2 = 2i and the representative with positive real part is chosen.
  CHECK(*sqrt_exact(sc(0, 1, 2, 1)) == sc(1, 1, 1, 1));
  CHECK(*sqrt_exact(sc(0, 1, -2, 1)) == sc(1, 1, -1, 1));
  // Real part zero: positive imaginary part.
  CHECK(*sqrt_exact(Scalar(-1)) == Scalar::i());
  CHECK(*sqrt_exact(Scalar(-4)) == sc(0, 1, 2, 1));
  // (2+i)^2 = 3+4i.
  CHECK(*sqrt_exact(sc(3, 1, 4, 1)) == sc(2, 1, 1, 1));
  CHECK(*sqrt_exact(Scalar(4)) == Scalar(2));
  CHECK(!sqrt_exact(sc(1, 1, 1, 1)).has_value());  // norm 2 is not a square
  CHECK(!sqrt_exact(Scalar(2)).has_value());
}

TEST_CASE("scalar text: canonical forms") {
  CHECK(to_text(Scalar(0)) == "0");
  CHECK(to_text(Scalar(1)) == "1");
  CHECK(to_text(Scalar(-1)) == "-1");
  CHECK(to_text(Scalar::i()) == "i");
  CHECK(to_text(-Scalar::i()) == "-i");
  CHECK(to_text(sc(1, 2, 0, 1)) == "1/2");
  CHECK(to_text(sc(0, 1, -2, 1)) == "-2*i");
  CHECK(to_text(sc(1, 1, 1, 1)) == "1+i");
  CHECK(to_text(sc(1, 2, -3, 1)) == "1/2-3*i");
  CHECK(to_text(sc(-2, 1, 1, 3)) == "-2+1/3*i");
}

TEST_CASE("scalar text: parsing") {
  CHECK(parse_scalar("0") == Scalar(0));
  CHECK(parse_scalar("-7") == Scalar(-7));
  CHECK(parse_scalar("1/2+3*i") == sc(1, 2, 3, 1));
  CHECK(parse_scalar("i") == Scalar::i());
  CHECK(parse_scalar("-i") == -Scalar::i());
  CHECK(parse_scalar("2*i*i") == Scalar(-2));
  CHECK(parse_scalar("(1+i)^2") == sc(0, 1, 2, 1));
  CHECK(parse_scalar("3-2*i") == sc(3, 1, -2, 1));
  CHECK(parse_scalar(" 1 + i ") == sc(1, 1, 1, 1));
  CHECK_THROWS_AS(parse_scalar(""), parse_error);
  CHECK_THROWS_AS(parse_scalar("1//2"), parse_error);
  CHECK_THROWS_AS(parse_scalar("1+"), parse_error);
  CHECK_THROWS_AS(parse_scalar("t"), parse_error);
  CHECK_THROWS_AS(parse_scalar("2i"), parse_error);  // '*' is mandatory
  CHECK_THROWS_AS(parse_scalar("1/0"), parse_error);
}

TEST_CASE("scalar text round-trips") {
  const Scalar samples[] = {Scalar(0),       Scalar(5),        Scalar(-3),
                            Scalar::i(),     -Scalar::i(),     sc(1, 2, 0, 1),
                            sc(0, 1, 7, 2),  sc(-4, 3, -5, 6), sc(1, 1, 1, 1),
                            sc(-1, 1, 2, 7), sc(22, 7, -1, 1)};
  for (const Scalar& s : samples) CHECK(parse_scalar(to_text(s)) == s);
}
