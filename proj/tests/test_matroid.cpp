#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "symbic/correspondence.hpp"
#include "symbic/matroid.hpp"

using namespace symbic;
using namespace testing;

namespace {

// Gaussian elimination over the rationals.
int rational_rank(const std::vector<std::vector<Rat>>& input) {
  auto a = input;
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols; ++c) {
    auto r = static_cast<std::size_t>(rank);
    while (r < a.size() && a[r][c] == Rat(0)) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[static_cast<std::size_t>(rank)]);
    const auto& p = a[static_cast<std::size_t>(rank)];
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k == static_cast<std::size_t>(rank) || a[k][c] == Rat(0)) continue;
      const Rat f = a[k][c] / p[c];
      for (std::size_t j = c; j < cols; ++j) a[k][j] -= f * p[j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> as_rational(const std::vector<std::vector<std::int64_t>>& m) {
  std::vector<std::vector<Rat>> out;
  for (const auto& r : m) out.emplace_back(r.begin(), r.end());
  return out;
}

std::vector<Rat> vectorize(const TropMatrix& m) {
  std::vector<Rat> v;
  for (const auto& [i, j] : ground_set(m.size())) v.push_back(m(i - 1, j - 1));
  return v;
}

}  // namespace

TEST_SUITE("matroid") {
  TEST_CASE("integer rank against rational elimination") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<std::int64_t> entry(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
      const int rows = 1 + static_cast<int>(rng() % 6);
      const int cols = 1 + static_cast<int>(rng() % 7);
      std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
      for (auto& r : m) {
        for (auto& x : r) x = trial % 3 == 0 ? entry(rng) % 2 : entry(rng);
      }
      CHECK(integer_rank(m) == rational_rank(as_rational(m)));
    }
    CHECK(integer_rank({}) == 0);
  }

  TEST_CASE("ground set") {
    CHECK(ground_set(3) == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});
    CHECK(ground_set(5).size() == 15);
  }

  TEST_CASE("n = 1") {
    const CayleyMatrix m = cayley_matrix(catalog(1).trees.begin()->second);
    CHECK(m.node_rows() == 0);
    CHECK(m.rows == std::vector<std::vector<std::int64_t>>{{2}});
    CHECK(matroid_bases(m) == BasisSet{1});
  }

  TEST_CASE("n = 2 by brute force") {
    for (const auto& [key, tree] : catalog(2).trees) {
      const CayleyMatrix m = cayley_matrix(tree);
      CHECK(m.rows.size() == 3);
      CHECK(m.columns.size() == 3);
      const bool full = rational_rank(as_rational(m.rows)) == 3;
      CHECK(matroid_bases(m) == (full ? BasisSet{0b111} : BasisSet{}));
    }
  }

  TEST_CASE("the Cayley example") {
    const SymbicTree t = SymbicTree::from_splits(
        4, {{leaves({0, 3, 4, 7}), 1}, {leaves({0, 3}), 1}, {leaves({1, 2}), 1}, {leaves({4, 7}), 1}, {leaves({5, 6}), 1}});
    const CayleyMatrix m = cayley_matrix(t);
    CHECK(m.node_rows() == 3);
    CHECK(rank(m) == 7);
    const auto g = ground_set(4);
    auto col = [&](int i, int j) {
      return m.column(static_cast<int>(std::find(g.begin(), g.end(), std::make_pair(i, j)) - g.begin()));
    };
    // 14' and 23' share a node row; 12' and 34' have rows of their own.
    const auto c14 = col(1, 4);
    const auto c23 = col(2, 3);
    int shared_node = -1;
    for (int r = 0; r < 3; ++r) {
      if (c14[static_cast<std::size_t>(r)] == 1 && c23[static_cast<std::size_t>(r)] == 1) shared_node = r;
    }
    CHECK(shared_node >= 0);
    CHECK(std::count(c14.begin(), c14.begin() + 3, 1) == 1);
    CHECK(c14[3] == 1);
    CHECK(c14[6] == 1);
    const auto c11 = col(1, 1);
    CHECK(std::count(c11.begin(), c11.begin() + 3, 1) == 0);
    CHECK(c11[3] == 2);
    CHECK(col(1, 2) != col(3, 4));

    // {14', 23', 12', 34', 11', 22', 33'} decided by exact rank.
    std::vector<std::vector<Rat>> sub(m.rows.size());
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {1, 2}, {3, 4}, {1, 1}, {2, 2}, {3, 3}}) {
      const auto c = col(i, j);
      for (std::size_t r = 0; r < c.size(); ++r) sub[r].emplace_back(c[r]);
    }
    ColumnSet mask = 0;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {1, 2}, {3, 4}, {1, 1}, {2, 2}, {3, 3}}) {
      mask |= ColumnSet{1} << (std::find(g.begin(), g.end(), std::make_pair(i, j)) - g.begin());
    }
    CHECK((matroid_bases(m).count(mask) == 1) == (rational_rank(sub) == 7));
  }

  TEST_CASE("non-regular trees are rejected") {
    CHECK_THROWS_AS(cayley_matrix(four_by_four(1, 0, 2)), InvalidInput);
  }

  TEST_CASE("rank is 2n - 1 and the row space matches the parameterization") {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& [key, tree] : catalog(n).trees) {
        const CayleyMatrix m = cayley_matrix(tree);
        CHECK(rank(m) == 2 * n - 1);
        if (n > 4) continue;
        std::vector<std::vector<Rat>> gens;
        const std::vector<Rat> ones(key.size(), Rat(1));
        const auto base = vectorize(matrix_A_from_tree(with_orbit_lengths(tree, ones)));
        for (std::size_t k = 0; k < key.size(); ++k) {
          auto lengths = ones;
          lengths[k] = Rat(2);
          auto v = vectorize(matrix_A_from_tree(with_orbit_lengths(tree, lengths)));
          for (std::size_t c = 0; c < v.size(); ++c) v[c] -= base[c];
          gens.push_back(v);
        }
        for (int i = 0; i < n; ++i) {
          std::vector<Rat> x(static_cast<std::size_t>(n));
          x[static_cast<std::size_t>(i)] = 1;
          gens.push_back(vectorize(symmetric_rank_one(x)));
        }
        auto stacked = gens;
        for (const auto& r : as_rational(m.rows)) stacked.push_back(r);
        CHECK(rational_rank(gens) == 2 * n - 1);
        CHECK(rational_rank(stacked) == 2 * n - 1);
      }
    }
  }

  TEST_CASE("node rows group the divergence points") {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& [key, tree] : catalog(n).trees) {
        const CayleyMatrix m = cayley_matrix(tree);
        const auto table = divergence_table(tree, tree.anchor());
        CHECK(m.node_rows() == n - 1);
        for (int r = 0; r < m.node_rows(); ++r) {
          const int v = m.node_vertex[static_cast<std::size_t>(r)];
          for (std::size_t c = 0; c < m.columns.size(); ++c) {
            const auto [i, j] = m.columns[c];
            const int d = table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            const bool in_orbit = d == v || d == tree.involution(v);
            CHECK((m.rows[static_cast<std::size_t>(r)][c] == 1) == in_orbit);
          }
        }
      }
    }
  }

  TEST_CASE("bases do not depend on the base point") {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& [key, tree] : catalog(n).trees) {
        const BasisSet b = matroid_bases(tree);
        for (int o : tree.trunk()) CHECK(matroid_bases(cayley_matrix(tree, o)) == b);
      }
    }
  }

  TEST_CASE("unions") {
    CHECK(union_bases(2, TreeFilter::all) == union_bases(2, TreeFilter::caterpillar_branches));
    CHECK(union_bases(3, TreeFilter::all) == union_bases(3, TreeFilter::caterpillar_branches));
    CHECK(parse_filter("catbranch") == TreeFilter::caterpillar_branches);
    CHECK(to_string(parse_filter("caterpillar")) == "caterpillar");
    CHECK_THROWS_AS(parse_filter("other"), InvalidInput);
    CHECK_THROWS_AS(union_bases(6, TreeFilter::all), UnsupportedSize);
  }

  TEST_CASE("conjecture scan reports") {
    const auto two = conjecture_scan(2);
    CHECK(two.equal);
    const auto three = conjecture_scan(3);
    CHECK(three.text.find("reports data only") != std::string::npos);
    CHECK(three.text.find("{11'") != std::string::npos);
    CHECK(format_columns(0b101, 2) == "{11', 22'}");
  }

  TEST_CASE("basis transitions") {
    for (int n = 1; n <= 3; ++n) CHECK_FALSE(basis_transition_check(n).has_value());
    const auto& cells = catalog(3).trees;
    std::map<TreeKey, BasisSet> bases;
    for (const auto& [key, tree] : cells) bases.emplace(key, matroid_bases(tree));
    FaceAdjacency adjacency = face_adjacency(cells);
    for (const auto& [face, around] : adjacency) CHECK(around.size() >= 2);
    auto& first = adjacency.begin()->second;
    first.resize(1);
    const auto bad = basis_transition_check(adjacency, bases);
    REQUIRE(bad.has_value());
    CHECK(bad->face == adjacency.begin()->first);
    CHECK(bad->cell == first.front());
  }
}
