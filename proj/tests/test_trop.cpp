#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace symbic;
using namespace testing;

namespace {

// Expansion along the first row; counts the minimizing permutations.
std::pair<Rat, int> expand(const TropMatrix& m, const std::vector<int>& rows, std::vector<int> cols) {
  if (rows.empty()) return {Rat(0), 1};
  std::optional<Rat> best;
  int count = 0;
  const std::vector<int> rest(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> others = cols;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
    auto [v, c] = expand(m, rest, others);
    const Rat total = v + m(rows[0], cols[k]);
    if (!best || total < *best) {
      best = total;
      count = c;
    } else if (total == *best) {
      count += c;
    }
  }
  return {*best, count};
}

std::vector<int> range(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// Rank from the definition: smallest r with every (r+1)-minor degenerate.
int rank_by_definition(const TropMatrix& m, bool symmetric) {
  const int n = m.size();
  for (int r = 1; r < n; ++r) {
    bool all = true;
    for (const auto& spec : all_minors(n, r + 1)) {
      if (symmetric) {
        std::set<Monomial> mins;
        const Rat value = expand(m, spec.rows, spec.cols).first;
        Permutation p = range(r + 1);
        do {
          Rat s;
          for (int i = 0; i <= r; ++i) s += m(spec.rows[static_cast<std::size_t>(i)], spec.cols[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]);
          if (s == value) mins.insert(sym_monomial_of_perm(spec, p));
        } while (std::next_permutation(p.begin(), p.end()));
        all = all && mins.size() >= 2;
      } else {
        all = all && expand(m, spec.rows, spec.cols).second >= 2;
      }
      if (!all) break;
    }
    if (all) return r;
  }
  return n;
}

}  // namespace

TEST_SUITE("trop") {
  TEST_CASE("determinant against row expansion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 5;
      const TropMatrix m = random_matrix(rng, n, 4);
      const auto det = trop_det(m, MinorSpec::full(n));
      const auto [value, count] = expand(m, range(n), range(n));
      CHECK(det.value == value);
      CHECK(static_cast<int>(det.argmin.size()) == count);
      CHECK(std::is_sorted(det.argmin.begin(), det.argmin.end()));
    }
  }

  TEST_CASE("minor size cap") {
    CHECK_THROWS_AS(trop_det(TropMatrix(10), MinorSpec::full(10)), UnsupportedSize);
    CHECK_THROWS_AS((MinorSpec{{0, 0}, {0, 1}}.validate(3)), InvalidInput);
    CHECK_THROWS_AS((MinorSpec{{0, 1}, {1, 3}}.validate(3)), InvalidInput);
  }

  TEST_CASE("symmetric monomials") {
    const MinorSpec s = MinorSpec::full(3);
    const Monomial cycle{{0, 1}, {0, 2}, {1, 2}};
    CHECK(sym_monomial_of_perm(s, {1, 2, 0}) == cycle);
    CHECK(sym_monomial_of_perm(s, {2, 0, 1}) == cycle);
    CHECK(sym_monomial_of_perm(s, {1, 0, 2}) == Monomial{{0, 1}, {0, 1}, {2, 2}});
    CHECK(sym_monomial_of_perm(s, {0, 1, 2}) == Monomial{{0, 0}, {1, 1}, {2, 2}});
  }

  TEST_CASE("rank examples") {
    const TropMatrix id = TropMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const TropMatrix perm = TropMatrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    CHECK(trop_rank(id) == 2);
    CHECK(sym_trop_rank(id) == 3);
    CHECK(sym_trop_rank(perm) == 2);
    CHECK_FALSE(has_sym_rank_at_most_two(id));
    CHECK(has_trop_rank_at_most_two(id));
    const std::vector<Rat> x{0, 1, 2};
    CHECK(trop_rank(symmetric_rank_one(x)) == 1);
    CHECK(sym_trop_rank(symmetric_rank_one(x)) == 1);
  }

  TEST_CASE("ranks against the definition") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 3;
      const TropMatrix m = random_symmetric(rng, n, 3);
      CHECK(trop_rank(m) == rank_by_definition(m, false));
      CHECK(sym_trop_rank(m) == rank_by_definition(m, true));
      CHECK(sym_trop_rank(m) >= trop_rank(m));
    }
  }

  TEST_CASE("Hilbert pseudometric laws") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + trial % 5;
      const auto x = random_vector(rng, n);
      const auto y = random_vector(rng, n);
      const auto z = random_vector(rng, n);
      const Rat dxy = hilbert_distance(x, y);
      CHECK(hilbert_distance(x, x) == Rat(0));
      CHECK(dxy >= Rat(0));
      CHECK(dxy == hilbert_distance(y, x));
      CHECK(hilbert_distance(x, z) <= dxy + hilbert_distance(y, z));
      auto shifted = x;
      for (auto& v : shifted) v += Rat(7, 3);
      CHECK(hilbert_distance(shifted, y) == dxy);
    }
    const std::vector<Rat> a{1, 2};
    CHECK_THROWS_AS(hilbert_distance(a, std::vector<Rat>{1}), InvalidInput);
  }

  TEST_CASE("canonical form modulo lineality") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + trial % 5;
      const TropMatrix m = random_symmetric(rng, n);
      const TropMatrix c = canonicalize_mod_lineality(m);
      for (int j = 0; j < n; ++j) {
        CHECK(c(0, j) == Rat(0));
        CHECK(c(j, 0) == Rat(0));
      }
      CHECK(canonicalize_mod_lineality(m + symmetric_rank_one(random_vector(rng, n))) == c);
      CHECK(canonicalize_mod_lineality(c) == c);
      CHECK(sym_trop_rank(c) == sym_trop_rank(m));
    }
  }
}
