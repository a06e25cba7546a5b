#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "symbic/correspondence.hpp"

using namespace symbic;
using namespace testing;

namespace {

// Distances through Gromov products at a root in the tree of A_T:
// cp(i, j') = A_ij, d_i = max_k A_ik, d_j' = max_i A_ij,
// cp(i, j) = max_k min(A_ik, A_jk), cp(i', j') = max_k min(A_ki, A_kj).
LeafMetric rooted_metric(const TropMatrix& a) {
  const int n = a.size();
  std::vector<Rat> depth(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    Rat row = a(i, 0);
    Rat col = a(0, i);
    for (int k = 0; k < n; ++k) {
      row = std::max(row, a(i, k));
      col = std::max(col, a(k, i));
    }
    depth[static_cast<std::size_t>(2 * i)] = row;
    depth[static_cast<std::size_t>(2 * i + 1)] = col;
  }
  auto cp = [&](int x, int y) {
    const int i = x / 2;
    const int j = y / 2;
    if ((x & 1) == 0 && (y & 1) == 1) return a(i, j);
    if ((x & 1) == 1 && (y & 1) == 0) return a(j, i);
    Rat best;
    for (int k = 0; k < n; ++k) {
      const Rat v = (x & 1) == 0 ? std::min(a(i, k), a(j, k)) : std::min(a(k, i), a(k, j));
      best = k == 0 ? v : std::max(best, v);
    }
    return best;
  };
  LeafMetric d(n);
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = x + 1; y < 2 * n; ++y) {
      d.set(x, y, depth[static_cast<std::size_t>(x)] + depth[static_cast<std::size_t>(y)] - Rat(2) * cp(x, y));
    }
  }
  return d;
}

TropMatrix permuted(const TropMatrix& m, const std::vector<int>& keep) {
  std::vector<int> zero_based;
  for (int k : keep) zero_based.push_back(k - 1);
  return m.principal(zero_based);
}

}  // namespace

TEST_SUITE("correspondence") {
  TEST_CASE("4x4 example at a = 1, b = 2, c = 3") {
    const SymbicTree t = four_by_four(1, 2, 3);
    CHECK(matrix_A_from_tree(t) == TropMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, 2}, {0, 0, 2, 5}}));
    CHECK(matrix_B_from_tree(t) == TropMatrix::from_rows({{2, 0, 3, 6}, {0, 2, 3, 6}, {3, 3, 0, 3}, {6, 6, 3, 0}}));
    CHECK(base_distances(t, t.anchor()) == std::vector<Rat>{1, 1, 2, 5});
    CHECK(leaf_metric_from_matrix(matrix_A_from_tree(t))(4, 6) == Rat(3));
  }

  TEST_CASE("4x4 example for symbolic lengths") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const Rat a = random_rat(rng, 1, 30, 7);
      const Rat b = random_rat(rng, 1, 30, 7);
      const Rat c = random_rat(rng, 1, 30, 7);
      const SymbicTree t = four_by_four(a, b, c);
      CHECK(matrix_A_from_tree(t) == TropMatrix::from_rows({{0, a, 0, 0}, {a, 0, 0, 0}, {0, 0, b, b}, {0, 0, b, b + c}}));
      CHECK(lineality_identity_check(t, t.anchor()));
    }
  }

  TEST_CASE("A_T, B_T and D from path lengths") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      const SymbicTree t = random_tree(rng, 1 + trial % 6);
      const int n = t.n();
      for (int o : t.trunk()) {
        const TropMatrix a = matrix_A_from_tree(t, o);
        const auto table = divergence_table(t, o);
        const auto d = base_distances(t, o);
        for (int i = 0; i < n; ++i) {
          CHECK(d[static_cast<std::size_t>(i)] == t.path_length(o, 2 * i));
          for (int j = 0; j < n; ++j) {
            const Rat expect = (t.path_length(o, 2 * i) + t.path_length(o, 2 * j + 1) - t.path_length(2 * i, 2 * j + 1)) / Rat(2);
            CHECK(a(i, j) == expect);
            CHECK(t.path_length(o, table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) == expect);
          }
        }
        CHECK(a.is_symmetric());
        CHECK(lineality_identity_check(t, o));
      }
    }
  }

  TEST_CASE("base point must be fixed") {
    const SymbicTree t = four_by_four(1, 2, 3);
    int moved = -1;
    for (int v = 0; v < t.num_vertices(); ++v) {
      if (!t.is_fixed(v)) moved = v;
    }
    REQUIRE(moved >= 0);
    CHECK_THROWS_AS(matrix_A_from_tree(t, moved), InvalidInput);
  }

  TEST_CASE("metric formulas agree with the rooted oracle and the tree") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
      const SymbicTree t = random_tree(rng, 1 + trial % 6);
      const TropMatrix a = matrix_A_from_tree(t);
      const LeafMetric tree_metric = leaf_metric_from_tree(t);
      CHECK(rooted_metric(a) == tree_metric);
      CHECK(leaf_metric_from_matrix(a) == tree_metric);
      const TropMatrix shifted = a + symmetric_rank_one(random_vector(rng, t.n()));
      CHECK(leaf_metric_from_matrix(shifted) == tree_metric);
      CHECK(satisfies_four_point(leaf_metric_from_matrix(shifted)));
    }
  }

  TEST_CASE("rank-one matrices give the zero metric") {
    const std::vector<Rat> x{0, 3, Rat(1, 2)};
    const LeafMetric d = leaf_metric_from_matrix(symmetric_rank_one(x));
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) CHECK(d(a, b) == Rat(0));
    }
    CHECK_THROWS_AS(tree_from_matrix(symmetric_rank_one(x)), RankOneInput);
  }

  TEST_CASE("input errors") {
    CHECK_THROWS_AS(tree_from_matrix(TropMatrix::from_rows({{0, 1}, {2, 0}})), InvalidInput);
    CHECK_THROWS_AS(tree_from_matrix(TropMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), NotRankTwo);
    CHECK(tree_from_matrix(TropMatrix::from_rows({{Rat(5)}})).n() == 1);
  }

  TEST_CASE("the permuted identity has one trunk edge") {
    const SymbicTree t = tree_from_matrix(TropMatrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    CHECK(t.trunk().size() == 2);
    CHECK(t.path_length(t.trunk().front(), t.trunk().back()) == Rat(1));
  }

  TEST_CASE("round trips") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 1 + trial % 6;
      const SymbicTree t = random_tree(rng, n);
      const SymbicTree back = tree_from_matrix(matrix_A_from_tree(t));
      CHECK(back.key() == t.key());
      CHECK(back.splits() == t.splits());
      const TropMatrix m = matrix_A_from_tree(t) + symmetric_rank_one(random_vector(rng, n));
      const SymbicTree from_m = tree_from_matrix(m);
      CHECK_FALSE(validate_symbic(from_m.graph()).has_value());
      CHECK(canonicalize_mod_lineality(matrix_A_from_tree(from_m)) == canonicalize_mod_lineality(m));
    }
  }

  TEST_CASE("principal submatrices give induced subtrees") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 5;
      const SymbicTree t = random_tree(rng, n);
      std::vector<int> keep;
      for (int i = 1; i <= n; ++i) {
        if (rng() % 2 == 0) keep.push_back(i);
      }
      if (keep.size() < 2) continue;
      auto sub = principal_subtree(t, keep);
      REQUIRE(std::holds_alternative<SymbicTree>(sub));
      const auto& s = std::get<SymbicTree>(sub);
      if (auto plain = restrict_to(t, keep); std::holds_alternative<SymbicTree>(plain)) {
        CHECK(std::get<SymbicTree>(plain).splits() == s.splits());
      }
      const TropMatrix m = permuted(matrix_A_from_tree(t), keep);
      if (s.splits().empty()) {
        CHECK_THROWS_AS(tree_from_matrix(m), RankOneInput);
      } else {
        CHECK(tree_from_matrix(m).splits() == s.splits());
      }
    }
  }

  TEST_CASE("reconstruction never produces a fixed vertex of degree three") {
    std::mt19937_64 rng(36);
    int trees = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const TropMatrix m = random_symmetric(rng, 3 + trial % 3, 6);
      if (!has_sym_rank_at_most_two(m)) continue;
      try {
        const SymbicTree t = tree_from_matrix(m);
        CHECK_FALSE(validate_symbic(t.graph()).has_value());
        ++trees;
      } catch (const RankOneInput&) {
      }
    }
    CHECK(trees > 0);
  }
}
