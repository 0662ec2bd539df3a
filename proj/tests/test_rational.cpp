#include <doctest.h>

#include "mpbern/rational.hpp"

using mpbern::Rational;

TEST_CASE("parse and print are canonical") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("+7").str() == "7");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK_THROWS(Rational::parse("4/-2"));
}

TEST_CASE("parse rejects malformed tokens") {
  for (const char* bad : {"", "1/", "/2", "1.5", " 1", "1 ", "a", "1/2/3", "--1", "1/0"}) {
    CAPTURE(bad);
    CHECK_THROWS(Rational::parse(bad));
  }
}

TEST_CASE("round trip through text is lossless") {
  for (long p = -12; p <= 12; ++p) {
    for (long q = 1; q <= 9; ++q) {
      const Rational v{mpz_class(p), mpz_class(q)};
      CHECK(Rational::parse(v.str()) == v);
    }
  }
}

TEST_CASE("field arithmetic") {
  const Rational a(mpz_class(1), mpz_class(3));
  const Rational b(mpz_class(-5), mpz_class(7));
  CHECK(a + b == Rational(mpz_class(-8), mpz_class(21)));
  CHECK(a - b == Rational(mpz_class(22), mpz_class(21)));
  CHECK(a * b == Rational(mpz_class(-5), mpz_class(21)));
  CHECK(a / b == Rational(mpz_class(-7), mpz_class(15)));
  CHECK((a / b) * b == a);
  CHECK(-a == Rational(mpz_class(-1), mpz_class(3)));
  CHECK(b < a);
  CHECK(a.inverse() == Rational(3));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), mpbern::DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), mpbern::DivisionByZero);
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), mpbern::DivisionByZero);
  CHECK_THROWS_AS(mpbern::rational_arith(1, 0, mpbern::ArithOp::div), mpbern::DivisionByZero);
}

TEST_CASE("powers") {
  const Rational h(mpz_class(-2), mpz_class(3));
  CHECK(h.pow(0) == Rational(1));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(h.pow(3) == Rational(mpz_class(-8), mpz_class(27)));
  CHECK(h.pow(-2) == Rational(mpz_class(9), mpz_class(4)));
  CHECK_THROWS_AS(Rational(0).pow(-1), mpbern::DivisionByZero);
}

TEST_CASE("rational_arith dispatch") {
  using mpbern::ArithOp;
  CHECK(mpbern::rational_arith(3, 4, ArithOp::add) == Rational(7));
  CHECK(mpbern::rational_arith(3, 4, ArithOp::sub) == Rational(-1));
  CHECK(mpbern::rational_arith(3, 4, ArithOp::mul) == Rational(12));
  CHECK(mpbern::rational_arith(3, 4, ArithOp::div) == Rational(mpz_class(3), mpz_class(4)));
}
