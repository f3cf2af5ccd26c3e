#include <sstream>

#include "doctest.h"
#include "hirz/errors.hpp"
#include "hirz/rational.hpp"

using hirz::Rational;
using Int = Rational::Integer;

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    Rational q(Int(6), Int(-4));
    CHECK(q.num() == -3);
    CHECK(q.den() == 2);
    CHECK(Rational(Int(0), Int(-7)).den() == 1);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), hirz::Error);
  }

  TEST_CASE("exact arithmetic and ordering") {
    const Rational half(Int(1), Int(2)), third(Int(1), Int(3));
    CHECK(half + third == Rational(Int(5), Int(6)));
    CHECK(half - third == Rational(Int(1), Int(6)));
    CHECK(half * third == Rational(Int(1), Int(6)));
    CHECK(half / third == Rational(Int(3), Int(2)));
    CHECK(third < half);
    CHECK(-half < third);
    CHECK(Rational(4) == Rational(Int(8), Int(2)));
    CHECK((Rational(Int(13), Int(2)) <=> Rational(7)) == std::strong_ordering::less);
  }

  TEST_CASE("rendering") {
    CHECK(Rational(Int(11), Int(2)).str() == "11/2");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(Int(11), Int(2)).decimal() == "5.5");
    CHECK(Rational(Int(-1), Int(8)).decimal() == "-0.125");
    CHECK(Rational(Int(1), Int(3)).decimal(4) == "0.3333...");
    std::ostringstream os;
    os << Rational(Int(2), Int(6));
    CHECK(os.str() == "1/3");
  }

  TEST_CASE("arbitrary precision") {
    Rational big(Int(1) << 100);
    big *= big;
    CHECK(big.num() == (Int(1) << 200));
    std::int64_t out = 0;
    CHECK_FALSE(hirz::fits_int64(big.num(), out));
    CHECK(hirz::fits_int64(Int(-42), out));
    CHECK(out == -42);
  }
}
