#include <limits>

#include "doctest.h"
#include "symbic/rational.hpp"

using symbic::OverflowError;
using symbic::Rat;

TEST_SUITE("rational") {
  TEST_CASE("normal form") {
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, -4).den() == 2);
    CHECK_THROWS(Rat(1, 0));
  }

  TEST_CASE("parse and print") {
    CHECK(Rat::parse("3/6") == Rat(1, 2));
    CHECK(Rat::parse(" -7 ") == Rat(-7));
    CHECK(Rat(-3, 2).str() == "-3/2");
    CHECK(Rat(4).str() == "4");
    CHECK_THROWS(Rat::parse("1/"));
    CHECK_THROWS(Rat::parse("x"));
    CHECK_THROWS(Rat::parse("2/0"));
  }

  TEST_CASE("field arithmetic") {
    const Rat a(2, 3);
    const Rat b(-5, 7);
    CHECK(a + b == Rat(-1, 21));
    CHECK(a - b == Rat(29, 21));
    CHECK(a * b == Rat(-10, 21));
    CHECK(a / b == Rat(-14, 15));
    CHECK(-a == Rat(-2, 3));
    CHECK_THROWS(a / Rat(0));
  }

  TEST_CASE("ordering agrees with cross multiplication") {
    for (int p = -6; p <= 6; ++p) {
      for (int q = 1; q <= 5; ++q) {
        for (int r = -6; r <= 6; ++r) {
          for (int s = 1; s <= 5; ++s) {
            CHECK((Rat(p, q) < Rat(r, s)) == (p * s < r * q));
          }
        }
      }
    }
  }

  TEST_CASE("overflow is reported") {
    const Rat big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rat(1), OverflowError);
    CHECK_THROWS_AS(big * Rat(2), OverflowError);
    CHECK_NOTHROW(big + Rat(-1));
  }
}
