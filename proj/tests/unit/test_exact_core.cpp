#include "doctest.h"

#include "../support/gen.hpp"
#include "rpgeo/error.hpp"
#include "rpgeo/exact_real.hpp"

using namespace rpgeo;
using rpgeo::testing::Rng;

namespace {
ExactReal X(const char* s) { return ExactReal::parse(s); }
Rational Q(std::int64_t a, std::int64_t b) { return Rational(BigInt(a), BigInt(b)); }
}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Q(4, -6).str() == "-2/3");
  CHECK(Q(0, -5).den() == 1);
  CHECK(Rational::parse(" 10 / 4 ") == Q(5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK(floor(Q(-7, 2)) == -4);
  CHECK(ceil(Q(-7, 2)) == -3);
  CHECK(frac(Q(-7, 2)) == Q(1, 2));
}

TEST_CASE("compare") {
  CHECK(compare(X("1/2"), X("1/2")) == std::strong_ordering::equal);
  CHECK(compare(X("sqrt(2)"), X("3/2")) == std::strong_ordering::less);
  CHECK(compare(X("1 - sqrt(2)"), X("-2/5")) == std::strong_ordering::less);
  CHECK_THROWS_AS(compare(X("sqrt(2)"), X("sqrt(3)")), UnsupportedFieldError);
  CHECK_THROWS_AS(X("sqrt(2)") + X("sqrt(3)"), UnsupportedFieldError);
}

TEST_CASE("canonical radicals") {
  CHECK(ExactReal::sqrt(8) == ExactReal::quadratic(0, 2, 2));
  CHECK(ExactReal::sqrt(9) == ExactReal(3));
  CHECK(ExactReal::sqrt(1).is_integer());
  CHECK((X("sqrt(2)") - X("sqrt(2)")).is_rational());
  CHECK((X("sqrt(2)") * X("sqrt(2)")) == ExactReal(2));
  CHECK((ExactReal(1) / (X("sqrt(2)") - ExactReal(1))) == X("1 + sqrt(2)"));
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"0", "-3/4", "sqrt(2)", "-1 + sqrt(2)", "1/2 - 3/7*sqrt(5)", "-sqrt(3)",
                        "2/3 + 5*sqrt(6)"}) {
    CAPTURE(s);
    CHECK(X(s).str() == s);
  }
  CHECK(X("9/4 - sqrt(2)").str() == "9/4 - sqrt(2)");
  CHECK(X(" 3*sqrt(8) / 2 ").str() == "3*sqrt(2)");
  CHECK_THROWS_AS(X("sqrt(2"), ParseError);
  CHECK_THROWS_AS(X("1 +"), ParseError);
  CHECK_THROWS_AS(X("1/0"), ParseError);
  CHECK_THROWS_AS(X("abc"), ParseError);

  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    ExactReal x = testing::random_quadratic(rng, testing::random_radicand(rng));
    CHECK(ExactReal::parse(x.str()) == x);
  }
}

TEST_CASE("floor family on fixed values") {
  CHECK(ceil(X("3/2")) == 2);
  CHECK(floor(X("3/2")) == 1);
  CHECK(phi(X("3/2")) == 1);
  CHECK(frac(X("3/2")) == X("1/2"));
  CHECK(phi(X("2")) == 0);
  CHECK(frac(X("2")) == ExactReal(0));
  CHECK(floor(X("sqrt(2)")) == 1);
  CHECK(ceil(X("sqrt(2)")) == 2);
  CHECK(frac(X("sqrt(2)")) == X("-1 + sqrt(2)"));
  CHECK(floor(X("-sqrt(2)")) == -2);
  CHECK(floor(X("1 - sqrt(2)")) == -1);
}

TEST_CASE("shifted ceiling and phi") {
  CHECK(shifted_ceil(X("3/2"), 2) == 2);
  CHECK(shifted_ceil(X("3/2"), 1) == 1);
  CHECK(shifted_ceil(X("sqrt(2)"), 3) == 1);
  CHECK(shifted_phi(X("sqrt(2)"), 3) == 1);
  CHECK(shifted_phi(X("3/2"), 1) == 0);
}

TEST_CASE("half identities on fixed values") {
  for (const char* s : {"3/4", "1", "sqrt(2)", "1/2", "0", "-5/2"}) {
    CAPTURE(s);
    auto [c, p] = half_identities_check(X(s));
    CHECK(c);
    CHECK(p);
  }
}

TEST_CASE("floor agrees with the square-comparison oracle") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    ExactReal x = i % 2 ? ExactReal(testing::random_rational(rng, 500, 40))
                        : testing::random_quadratic(rng, testing::random_radicand(rng));
    CAPTURE(x.str());
    BigInt f = floor(x);
    REQUIRE(f == testing::oracle_floor(x));
    CHECK(ceil(x) == testing::oracle_ceil(x));
    CHECK(ExactReal(Rational(f)) <= x);
    CHECK(x < ExactReal(Rational(f + 1)));
    CHECK(frac(x) + ExactReal(Rational(f)) == x);
    CHECK(phi(x) == (ceil(x) - f).convert_to<int>());
    CHECK(compare(x, x) == std::strong_ordering::equal);
    CHECK(testing::oracle_sign(x) == x.sign());
  }
}

TEST_CASE("isqrt") {
  CHECK(isqrt(BigInt(0)) == 0);
  CHECK(isqrt(BigInt(15)) == 3);
  CHECK(isqrt(BigInt(16)) == 4);
  BigInt big = BigInt(1) << 200;
  CHECK(isqrt(big) == (BigInt(1) << 100));
}
