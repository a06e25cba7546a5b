#include "doctest.h"
#include "symbic/labels.hpp"
#include "symbic/errors.hpp"

using namespace symbic;

TEST_SUITE("labels") {
  TEST_CASE("codes") {
    CHECK(LeafLabel{1, Color::row}.code() == 0);
    CHECK(LeafLabel{1, Color::column}.code() == 1);
    CHECK(LeafLabel{3, Color::column}.code() == 5);
    for (int c = 0; c < 20; ++c) CHECK(LeafLabel::from_code(c).code() == c);
    CHECK(LeafLabel::from_code(5).str() == "3'");
    CHECK(LeafLabel::from_code(5).key() == "3p");
    CHECK(LeafLabel::parse_key("3p") == LeafLabel{3, Color::column});
    CHECK(LeafLabel::parse_key("12") == LeafLabel{12, Color::row});
    CHECK_THROWS_AS(LeafLabel::parse_key("0"), InvalidInput);
    CHECK_THROWS_AS(LeafLabel::parse_key("p"), InvalidInput);
  }

  TEST_CASE("color swap is an involution") {
    for (LeafSet s = 0; s < 256; ++s) {
      CHECK(swap_colors(swap_colors(s)) == s);
      CHECK(leaf_count(swap_colors(s)) == leaf_count(s));
    }
    CHECK(swap_colors(0b0110) == 0b1001);
  }

  TEST_CASE("normalized sides avoid label 1") {
    const int n = 3;
    for (LeafSet s = 1; s < all_leaves(n); ++s) {
      const LeafSet side = normalize_split(s, n);
      CHECK((side & 1U) == 0);
      CHECK((side == s || side == (all_leaves(n) & ~s)));
    }
  }

  TEST_CASE("formatting") {
    CHECK(format_leaves(0b1001) == "{1,2'}");
    CHECK(format_split(0b0110, 2) == "{1,2' | 1',2}");
    CHECK(leaf_codes(0b10110) == std::vector<int>{1, 2, 4});
  }
}
