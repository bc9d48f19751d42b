#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nearassoc/field.hpp"

using namespace nearassoc;

TEST_CASE("rational arithmetic is exact and normalized") {
  const FieldContext q = FieldContext::rationals();
  CHECK(Scalar::of_rational(q, Rational(2, 4)).str() == "1/2");
  CHECK(Scalar::of_rational(q, Rational(-3) / Rational(-6)).str() == "1/2");
  CHECK(Scalar::of_rational(q, Rational(3) / Rational(-4)).str() == "-3/4");

  const Scalar third = Scalar::parse(q, "1/3");
  const Scalar sixth = Scalar::parse(q, "1/6");
  CHECK((third + sixth).str() == "1/2");
  CHECK((third - third).is_zero());
  CHECK((third * Scalar::of_int(q, 3)).is_one());
  CHECK((Scalar::one(q) / third).str() == "3");

  // no drift at magnitudes far beyond double precision
  const Scalar big = Scalar::parse(q, "100000000000000000000");
  CHECK((big + Scalar::one(q) - big).is_one());
  CHECK((big * big).str() == "10000000000000000000000000000000000000000");
}

TEST_CASE("rational parsing rejects malformed text") {
  const FieldContext q = FieldContext::rationals();
  for (const char* bad : {"", "abc", "1.5", "1/0", "1/", "/2", "2/-3x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Scalar::parse(q, bad), Error);
  }
  try {
    Scalar::parse(q, "oops");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("division by zero is refused") {
  const FieldContext q = FieldContext::rationals();
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), Error);
  CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), Error);
  try {
    (void)Scalar::zero(q).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
}

TEST_CASE("quadratic extension arithmetic") {
  const FieldContext k = FieldContext::quadratic(2);
  const Scalar rt = Scalar::quadratic(k, Rational(0), Rational(1));
  CHECK((rt * rt).str() == "2");

  // (1 + rt)(1 - rt) = 1 - 2 = -1
  const Scalar u = Scalar::one(k) + rt;
  const Scalar v = Scalar::one(k) - rt;
  CHECK((u * v).str() == "-1");

  // inverse via the norm: 1/(1 + rt) = rt - 1
  CHECK(u.inverse() == rt - Scalar::one(k));
  CHECK((u * u.inverse()).is_one());

  CHECK(rt.str() == "0+1*rt");
  CHECK((-rt).str() == "0-1*rt");
  CHECK(Scalar::quadratic(k, Rational(1, 2), Rational(-3, 4)).str() == "1/2-3/4*rt");
  CHECK(Scalar::parse(k, "1/2-3/4*rt") == Scalar::quadratic(k, Rational(1, 2), Rational(-3, 4)));
  CHECK(Scalar::parse(k, "5") == Scalar::of_int(k, 5));
}

TEST_CASE("quadratic context validation") {
  for (long long d : {0LL, 1LL, 4LL, 9LL, 12LL, -4LL}) {
    CAPTURE(d);
    CHECK_THROWS_AS(FieldContext::quadratic(d), Error);
  }
  // square-free values, including negative ones, are fine
  CHECK(FieldContext::quadratic(2).d() == 2);
  CHECK(FieldContext::quadratic(-1).d() == -1);
  CHECK(FieldContext::quadratic(10).describe() == "Q(rt 10)");
}

TEST_CASE("prime field arithmetic") {
  const FieldContext f7 = FieldContext::prime(7);
  CHECK(f7.characteristic() == 7);
  CHECK(Scalar::of_int(f7, 10).residue() == 3);
  CHECK(Scalar::of_int(f7, -1).residue() == 6);
  CHECK(Scalar::of_int(f7, 3).inverse().residue() == 5);

  // Fermat: a^7 = a for every residue
  for (unsigned a = 0; a < 7; ++a) {
    Scalar x = Scalar::of_int(f7, a);
    Scalar pow = Scalar::one(f7);
    for (int i = 0; i < 7; ++i) pow *= x;
    CHECK(pow == x);
  }

  // residues serialize as plain integers; fractions reduce via of_rational
  CHECK(Scalar::of_rational(f7, Rational(1, 2)) == Scalar::of_int(f7, 4));
  CHECK_THROWS_AS(Scalar::of_rational(f7, Rational(1, 7)), Error);  // 7 not invertible
  CHECK_THROWS_AS(Scalar::parse(f7, "1/2"), Error);  // literals are residues only
}

TEST_CASE("prime context validation") {
  for (unsigned p : {0u, 1u, 4u, 6u, 253u, 257u}) {
    CAPTURE(p);
    CHECK_THROWS_AS(FieldContext::prime(p), Error);
  }
  CHECK(FieldContext::prime(2).p() == 2);
  CHECK(FieldContext::prime(251).p() == 251);
}

TEST_CASE("values from different fields never mix") {
  const Scalar a = Scalar::one(FieldContext::rationals());
  const Scalar b = Scalar::one(FieldContext::prime(5));
  const Scalar c = Scalar::one(FieldContext::quadratic(2));
  const Scalar d = Scalar::one(FieldContext::quadratic(3));
  CHECK_THROWS_AS((void)(a + b), Error);
  CHECK_THROWS_AS((void)(c * d), Error);
  CHECK_THROWS_AS((void)(a == c), Error);
  try {
    (void)(c + d);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ContextMismatch);
  }
}

TEST_CASE("square roots resolve in-field or not at all") {
  const FieldContext q = FieldContext::rationals();
  auto r = sqrt_in_field(Scalar::parse(q, "9/4"));
  REQUIRE(r.has_value());
  CHECK(r->str() == "3/2");
  CHECK(!sqrt_in_field(Scalar::of_int(q, 2)).has_value());
  CHECK(!sqrt_in_field(Scalar::of_int(q, -1)).has_value());
  CHECK(sqrt_in_field(Scalar::zero(q))->is_zero());

  const FieldContext k2 = FieldContext::quadratic(2);
  auto s = sqrt_in_field(Scalar::of_int(k2, 8));  // 2*rt(2) squares to 8
  REQUIRE(s.has_value());
  CHECK((*s) * (*s) == Scalar::of_int(k2, 8));
  CHECK(!sqrt_in_field(Scalar::of_int(k2, 3)).has_value());

  const FieldContext f7 = FieldContext::prime(7);
  for (unsigned a = 0; a < 7; ++a) {
    auto root = sqrt_in_field(Scalar::of_int(f7, a));
    const bool residue_is_square = (a == 0 || a == 1 || a == 2 || a == 4);
    CHECK(root.has_value() == residue_is_square);
    if (root) CHECK((*root) * (*root) == Scalar::of_int(f7, a));
  }
}
