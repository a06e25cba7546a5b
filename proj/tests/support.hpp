#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "symbic/enumeration.hpp"
#include "symbic/tree.hpp"
#include "symbic/trop.hpp"

namespace testing {

using namespace symbic;

inline LeafSet leaves(std::initializer_list<int> codes) {
  LeafSet s = 0;
  for (int c : codes) s |= leaf_bit(c);
  return s;
}

// Cherries {1,2'} and {1',2} (a), block {3,3',4,4'} (b), cherry {4,4'} (c).
inline SymbicTree four_by_four(const Rat& a, const Rat& b, const Rat& c) {
  return SymbicTree::from_splits(4, {{leaves({0, 3}), a}, {leaves({1, 2}), a}, {leaves({4, 5, 6, 7}), b}, {leaves({6, 7}), c}});
}

inline Rat random_rat(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> num(lo, hi);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return Rat(num(rng), den(rng));
}

inline std::vector<Rat> random_vector(std::mt19937_64& rng, int n) {
  std::vector<Rat> v;
  for (int i = 0; i < n; ++i) v.push_back(random_rat(rng, -9, 9, 4));
  return v;
}

inline TropMatrix random_matrix(std::mt19937_64& rng, int n, std::int64_t range = 5) {
  TropMatrix m(n);
  std::uniform_int_distribution<std::int64_t> d(0, range);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  }
  return m;
}

inline TropMatrix random_symmetric(std::mt19937_64& rng, int n, std::int64_t range = 5) {
  TropMatrix m = random_matrix(rng, n, range);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) m(i, j) = m(j, i);
  }
  return m;
}

inline const TreeCatalog& catalog(int n) {
  static std::vector<TreeCatalog> cache;
  while (static_cast<int>(cache.size()) < n) cache.push_back(enumerate_regular(static_cast<int>(cache.size()) + 1));
  return cache[static_cast<std::size_t>(n - 1)];
}

inline SymbicTree random_tree(std::mt19937_64& rng, int n) {
  const auto& c = catalog(n);
  std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
  auto it = c.trees.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(pick(rng)));
  std::vector<Rat> lengths;
  for (std::size_t k = 0; k < it->first.size(); ++k) lengths.push_back(random_rat(rng, 1, 20, 5));
  return with_orbit_lengths(it->second, lengths);
}

}  // namespace testing
