#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "symbic/shelling.hpp"

using namespace symbic;
using namespace testing;

namespace {

std::size_t shared(const TreeKey& a, const TreeKey& b) {
  std::vector<LeafSet> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.size();
}

// Shelling condition straight from the definition: every earlier C' has
// some earlier C'' with C cap C' inside C cap C'' and |C cap C''| = |C| - 1.
bool shelling_by_definition(const std::vector<TreeKey>& order) {
  for (std::size_t c = 1; c < order.size(); ++c) {
    const TreeKey& later = order[c];
    for (std::size_t e = 0; e < c; ++e) {
      TreeKey meet;
      std::set_intersection(later.begin(), later.end(), order[e].begin(), order[e].end(), std::back_inserter(meet));
      bool found = false;
      for (std::size_t f = 0; f < c && !found; ++f) {
        if (shared(later, order[f]) + 1 != later.size()) continue;
        found = std::includes(order[f].begin(), order[f].end(), meet.begin(), meet.end());
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("shelling") {
  TEST_CASE("edge orders list every place once") {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& [key, tree] : catalog(n).trees) {
        const EdgeOrder order = edge_order(tree);
        CHECK(order.start == tree.anchor());
        const std::size_t ends = tree.trunk().size() >= 2 ? 2 : 1;
        CHECK(order.places.size() == tree.graph().edges.size() + ends);
        CHECK(order.places.front().kind == AttachmentPlace::Kind::endpoint);
      }
    }
  }

  TEST_CASE("attachments reach every tree exactly once") {
    for (int n = 2; n <= 5; ++n) {
      std::map<TreeKey, int> hits;
      for (const auto& [key, tree] : catalog(n - 1).trees) {
        for (const auto& place : edge_order(tree).places) {
          const auto next = attach_next_leaf(tree, place);
          if (next) ++hits[next->key()];
        }
      }
      std::size_t twig_trees = 0;
      for (const auto& [key, tree] : catalog(n).trees) {
        const bool twig = !brittle_twig(tree).empty();
        twig_trees += twig ? 1 : 0;
        CHECK(hits.count(key) == (twig ? 0U : 1U));
        if (hits.count(key) != 0) CHECK(hits.at(key) == 1);
      }
      CHECK(hits.size() + twig_trees == catalog(n).size());
    }
  }

  TEST_CASE("twig reduction lands on a smaller regular tree") {
    for (int n = 3; n <= 5; ++n) {
      for (const auto& [key, tree] : catalog(n).trees) {
        const auto twig = brittle_twig(tree);
        if (twig.empty()) continue;
        const SymbicTree r = reduce_twig(tree, twig);
        CHECK(r.n() == n - static_cast<int>(twig.size()));
        CHECK(is_regular(r));
      }
    }
  }

  TEST_CASE("the comparator and the rank order agree") {
    const ShellingOrder order(4);
    for (int n = 1; n <= 4; ++n) {
      std::vector<const SymbicTree*> trees;
      for (const auto& [key, tree] : catalog(n).trees) trees.push_back(&tree);
      std::sort(trees.begin(), trees.end(), [](const auto* a, const auto* b) { return compare_trees(*a, *b) < 0; });
      std::vector<TreeKey> sorted;
      for (const auto* t : trees) sorted.push_back(t->key());
      CHECK(sorted == order.order(n));
      for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(order.rank(n, sorted[i]) == static_cast<int>(i));
    }
  }

  TEST_CASE("first cells") {
    CHECK(trunk_blocks(catalog(2).trees.at(shelling_order(2).front())) == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(trunk_blocks(catalog(3).trees.at(shelling_order(3).front())) == std::vector<std::vector<int>>{{2}, {1}, {3}});
    CHECK(trunk_blocks(catalog(4).trees.at(shelling_order(4).front())) ==
          std::vector<std::vector<int>>{{3}, {1}, {2}, {4}});
    CHECK(trunk_blocks(catalog(5).trees.at(shelling_order(5).front())) ==
          std::vector<std::vector<int>>{{4}, {2}, {1}, {3}, {5}});
  }

  TEST_CASE("complex at n = 3") {
    const SymbicComplex c = symbic_complex(3);
    CHECK(c.cells.size() == 12);
    CHECK(c.vertices.size() == 9);
  }

  TEST_CASE("verification agrees with the definition") {
    for (int n = 2; n <= 4; ++n) {
      const auto order = shelling_order(n);
      CHECK(verify_shelling(order).has_value() == !shelling_by_definition(order));
    }
    CHECK_FALSE(verify_shelling(shelling_order(3)).has_value());
    std::mt19937_64 rng(41);
    auto order = shelling_order(3);
    int rejected = 0;
    for (int trial = 0; trial < 200; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      const bool ok = !verify_shelling(order).has_value();
      CHECK(ok == shelling_by_definition(order));
      rejected += ok ? 0 : 1;
    }
    CHECK(rejected > 0);
  }

  TEST_CASE("two disjoint cells cannot start a shelling") {
    const auto order = shelling_order(3);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        if (shared(order[i], order[j]) != 0) continue;
        std::vector<TreeKey> bad{order[i], order[j]};
        const auto ce = verify_shelling(bad);
        REQUIRE(ce.has_value());
        CHECK(ce->earlier == 0);
        CHECK(ce->later == 1);
      }
    }
  }

  TEST_CASE("mixed cell sizes are rejected") {
    CHECK_THROWS_AS(verify_shelling({{1, 2}, {1}}), InvalidInput);
  }

  TEST_CASE("the stated order at n = 4 and its greedy repair") {
    const auto order = shelling_order(4);
    CHECK(order.size() == 111);
    const auto bad = verify_shelling(order);
    REQUIRE(bad.has_value());
    CHECK(bad->earlier == 0);
    CHECK(bad->later == 6);
    const auto repaired = greedy_shelling(order);
    REQUIRE(repaired.has_value());
    CHECK(repaired->size() == order.size());
    CHECK_FALSE(verify_shelling(*repaired).has_value());
    CHECK(shelling_by_definition(*repaired));
  }
}
