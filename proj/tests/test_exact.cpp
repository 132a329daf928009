#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "doctest.h"
#include "polygeo/exact.hpp"

using namespace polygeo;
using Dec = boost::multiprecision::cpp_dec_float_100;

namespace {

// floor(x * 10^40) via 100-digit floats, rendered the same way to_decimal does.
std::string decimal_oracle(long a, long b, long c, long d) {
  const Dec x = (Dec(a) + Dec(b) * sqrt(Dec(d))) / Dec(c);
  const bool negative = x < 0;
  const Dec scaled = boost::multiprecision::trunc(abs(x) * boost::multiprecision::pow(Dec(10), 40));
  std::string digits = scaled.str(0, std::ios_base::fixed);
  if (const auto dot = digits.find('.'); dot != std::string::npos) digits.resize(dot);
  const Integer f{digits};
  const Integer scale = boost::multiprecision::pow(Integer(10), 40);
  std::string tail = Integer(f % scale).str();
  tail.insert(0, 40 - tail.size(), '0');
  const bool exact = b == 0 && Integer(Integer(a) * scale % c) == 0;
  std::string out = exact ? "" : "~";
  if (negative) out += '-';
  return out + Integer(f / scale).str() + "." + tail;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("field identities") {
    const Quad phi = constants::phi();
    CHECK(phi + phi.conjugate() == Quad(1));
    CHECK(phi + Quad(0) == phi);
    CHECK(phi + phi == Quad(1, 1, 1, 5));
    CHECK(phi * phi == phi + Quad(1));
    CHECK(phi.inverse() == phi - Quad(1));
    CHECK(constants::sqrt2() * constants::sqrt2() == Quad(2));
  }

  TEST_CASE("canonical form") {
    CHECK(Quad(2, 2, 4, 5) == constants::phi());
    CHECK(Quad(0, 1, 1, 8) == Quad(0, 2, 1, 2));
    CHECK(Quad(3, 0, 6, 7) == Quad(Rational(1, 2)));
    CHECK(Quad(0, 1, 1, 9) == Quad(3));
    const Quad x(-4, 6, -8, 12);
    CHECK(x.c() > 0);
    CHECK(x.d() == 3);
    CHECK(x == Quad(2, -6, 4, 3));
  }

  TEST_CASE("comparisons") {
    CHECK(compare(constants::phi(), Quad(Rational(8, 5))) == std::strong_ordering::greater);
    CHECK(compare(constants::sqrt2(), constants::sqrt2()) == std::strong_ordering::equal);
    CHECK(compare(constants::sqrt2(), Quad(Rational(3, 2))) == std::strong_ordering::less);
    // 140/99 < sqrt2 < 99/70 from the Pell pair
    CHECK(Quad(Rational(140, 99)) < constants::sqrt2());
    CHECK(constants::sqrt2() < Quad(Rational(99, 70)));
  }

  TEST_CASE("floor and frac") {
    CHECK(frac(constants::phi()) == Quad(-1, 1, 2, 5));
    CHECK(frac(Quad(Rational(3, 2))) == Quad(Rational(1, 2)));
    CHECK(floor(Quad(2) * constants::phi()) == 3);
    CHECK(floor(Quad(-1) * constants::phi()) == -2);
    CHECK(floor(Quad(Rational(-3, 2))) == -2);
    CHECK(Quad(Rational(-3, 2)).ceil() == -1);
    CHECK(constants::sqrt3().ceil() == 2);
  }

  TEST_CASE("decimal rendering matches a 100-digit oracle") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-1000, 1000), den(1, 500);
    for (long d : {2L, 3L, 5L, 7L}) {
      for (int t = 0; t < 200; ++t) {
        const long a = coef(rng), b = coef(rng), c = den(rng);
        const Quad x(a, b, c, d);
        CHECK_MESSAGE(x.to_decimal(40) == decimal_oracle(a, b, c, d), a, " ", b, " ", c, " ", d);
      }
    }
    CHECK(Quad(Rational(1, 2)).to_decimal(40) == "0.5000000000000000000000000000000000000000");
    CHECK(Quad(Rational(-1, 3)).to_decimal(4) == "~-0.3333");
    CHECK(Quad(Rational(-7, 4)).to_decimal(2) == "-1.75");
  }

  TEST_CASE("arithmetic properties on random values") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-50, 50), den(1, 30);
    for (int t = 0; t < 500; ++t) {
      const Quad x(coef(rng), coef(rng), den(rng), 5);
      const Quad y(coef(rng), coef(rng), den(rng), 5);
      CHECK((x + y) - y == x);
      CHECK(x * y == y * x);
      if (y.sign() != 0) CHECK((x / y) * y == x);
      const Integer f = floor(x);
      CHECK(Quad(Rational(f)) <= x);
      CHECK(x < Quad(Rational(f + 1)));
      CHECK(Quad(0) <= frac(x));
      CHECK(frac(x) < Quad(1));
      CHECK(abs(x).sign() >= 0);
      // order agrees with doubles when the values are well separated
      if (std::abs(x.to_double() - y.to_double()) > 1e-9) CHECK((x < y) == (x.to_double() < y.to_double()));
      // x (a + b sqrt d) has the integer sign test as ground truth
      CHECK(x.sign() == surd_sign(x.a(), x.b(), x.d()));
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(constants::phi() + constants::sqrt2(), Error);
    try {
      (void)(constants::phi() * constants::sqrt3());
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MixedRadicand);
    }
    try {
      (void)(Quad(1) / Quad(0));
      FAIL("expected division error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZero);
    }
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_quadratic("quad:1,2"), Error);
  }

  TEST_CASE("parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("17") == Rational(17));
    CHECK(parse_rational("0.010") == Rational(1, 100));
    CHECK(parse_rational("0.09") == Rational(9, 100));
    CHECK(parse_rational("007/08") == Rational(7, 8));
    CHECK(parse_quadratic("phi") == constants::phi());
    CHECK(parse_quadratic("sqrt2") == constants::sqrt2());
    CHECK(parse_quadratic("quad:1,1,2,5") == constants::phi());
    CHECK(parse_quadratic("2/6") == Quad(Rational(1, 3)));
    CHECK(parse_quadratic(constants::sqrt3().to_string()) == constants::sqrt3());
  }

  TEST_CASE("to_double") {
    CHECK(constants::phi().to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-15));
    CHECK(Quad(-3, 1, 7, 2).to_double() == doctest::Approx((-3 + std::sqrt(2.0)) / 7).epsilon(1e-15));
  }
}
