#include "symbic/shelling.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace symbic {

namespace {

std::vector<int> distances_from(const SymbicTree& s, int v) {
  std::vector<int> dist(static_cast<std::size_t>(s.num_vertices()), -1);
  dist[static_cast<std::size_t>(v)] = 0;
  std::deque<int> queue{v};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (auto [u, e] : s.neighbors(x)) {
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

EdgeOrder edge_order(const SymbicTree& s, int v) {
  const auto& trunk = s.trunk();
  if (v != trunk.front() && v != trunk.back()) throw InvalidInput("edge order must start at a trunk endpoint");
  const std::vector<int> dist = distances_from(s, v);

  std::vector<std::tuple<int, int, int>> keyed;  // (min far leaf, depth, edge)
  const auto& edges = s.graph().edges;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int a = edges[e].u;
    const int b = edges[e].v;
    const int near = dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)] ? a : b;
    const LeafSet far = s.far_side(static_cast<int>(e), near);
    keyed.emplace_back(std::countr_zero(far), dist[static_cast<std::size_t>(near)], static_cast<int>(e));
  }
  std::sort(keyed.begin(), keyed.end());

  EdgeOrder order;
  order.start = v;
  order.places.push_back({AttachmentPlace::Kind::endpoint, v, -1});
  for (const auto& [leaf, depth, e] : keyed) order.places.push_back({AttachmentPlace::Kind::edge, -1, e});
  if (trunk.size() >= 2) {
    const int other = v == trunk.front() ? trunk.back() : trunk.front();
    order.places.push_back({AttachmentPlace::Kind::endpoint, other, -1});
  }
  return order;
}

EdgeOrder edge_order(const SymbicTree& s) { return edge_order(s, s.anchor()); }

std::optional<SymbicTree> attach_next_leaf(const SymbicTree& s, const AttachmentPlace& place) {
  const int n = s.n() + 1;
  if (n > kMaxLeafPairs) throw UnsupportedSize("too many leaves");
  LabeledTree g = s.graph();
  g.n = n;
  const int row_leaf = g.num_vertices++;
  const int col_leaf = g.num_vertices++;
  g.leaf_vertex.push_back(row_leaf);
  g.leaf_vertex.push_back(col_leaf);

  auto subdivide = [&g](int e) {
    const int x = g.num_vertices++;
    const TreeEdge old = g.edges[static_cast<std::size_t>(e)];
    g.edges[static_cast<std::size_t>(e)] = TreeEdge{old.u, x, std::nullopt};
    g.edges.push_back(TreeEdge{x, old.v, std::nullopt});
    return x;
  };

  if (place.kind == AttachmentPlace::Kind::endpoint) {
    if (place.vertex < 0 || place.vertex >= s.num_vertices() || !s.is_fixed(place.vertex)) {
      throw InvalidInput("attachment endpoint must be a trunk vertex");
    }
    const int w = g.num_vertices++;
    g.edges.push_back(TreeEdge{place.vertex, w, std::nullopt});
    g.edges.push_back(TreeEdge{w, row_leaf, std::nullopt});
    g.edges.push_back(TreeEdge{w, col_leaf, std::nullopt});
  } else {
    const auto& edges = s.graph().edges;
    if (place.edge < 0 || place.edge >= static_cast<int>(edges.size())) throw InvalidInput("attachment edge out of range");
    const TreeEdge e = edges[static_cast<std::size_t>(place.edge)];
    if (s.is_fixed(e.u) && s.is_fixed(e.v)) {
      const int w = subdivide(place.edge);
      g.edges.push_back(TreeEdge{w, row_leaf, std::nullopt});
      g.edges.push_back(TreeEdge{w, col_leaf, std::nullopt});
    } else {
      const int su = s.involution(e.u);
      const int sv = s.involution(e.v);
      int image = -1;
      for (auto [u, idx] : s.neighbors(su)) {
        if (u == sv) image = idx;
      }
      const int x = subdivide(place.edge);
      const int y = subdivide(image);
      g.edges.push_back(TreeEdge{x, row_leaf, std::nullopt});
      g.edges.push_back(TreeEdge{y, col_leaf, std::nullopt});
    }
  }

  std::vector<bool> is_leaf(static_cast<std::size_t>(g.num_vertices), false);
  for (int v : g.leaf_vertex) is_leaf[static_cast<std::size_t>(v)] = true;
  for (auto& e : g.edges) {
    if (is_leaf[static_cast<std::size_t>(e.u)] || is_leaf[static_cast<std::size_t>(e.v)]) {
      e.length.reset();
    } else {
      e.length = Rat(1);
    }
  }
  if (validate_symbic(g)) return std::nullopt;
  return SymbicTree::from_labeled(g);
}

SymbicTree reduce_twig(const SymbicTree& t, const std::vector<int>& twig) {
  const int n = t.n();
  std::vector<int> code_map(static_cast<std::size_t>(2 * n), -1);
  int next = 0;
  for (int i = 1; i <= n; ++i) {
    if (std::find(twig.begin(), twig.end(), i) != twig.end()) continue;
    // The twig together with n' collapses to a single leaf of the twig's
    // color, so the last pair trades colors.
    const int swap = i == n ? 1 : 0;
    code_map[static_cast<std::size_t>(2 * (i - 1))] = 2 * next + swap;
    code_map[static_cast<std::size_t>(2 * (i - 1) + 1)] = 2 * next + 1 - swap;
    ++next;
  }
  auto result = map_leaves(t, code_map, next);
  if (auto* v = std::get_if<Violation>(&result)) throw ValidationError(*v);
  return std::get<SymbicTree>(std::move(result));
}

namespace {

SymbicTree without_last_leaf(const SymbicTree& t) {
  auto result = delete_last_leaf(t);
  if (auto* v = std::get_if<Violation>(&result)) throw ValidationError(*v);
  return std::get<SymbicTree>(std::move(result));
}

std::size_t attachment_position(const SymbicTree& base, const TreeKey& target) {
  const EdgeOrder order = edge_order(base);
  for (std::size_t k = 0; k < order.places.size(); ++k) {
    auto t = attach_next_leaf(base, order.places[k]);
    if (t && t->key() == target) return k;
  }
  throw Error("tree is not an attachment of its deletion");
}

}  // namespace

std::strong_ordering compare_trees(const SymbicTree& a, const SymbicTree& b) {
  if (a.n() != b.n()) throw InvalidInput("compare_trees needs trees of equal size");
  if (a.key() == b.key()) return std::strong_ordering::equal;
  const std::vector<int> twig_a = brittle_twig(a);
  const std::vector<int> twig_b = brittle_twig(b);
  if (twig_a.empty() && twig_b.empty()) {
    const SymbicTree sa = without_last_leaf(a);
    const SymbicTree sb = without_last_leaf(b);
    if (sa.key() != sb.key()) return compare_trees(sa, sb);
    return attachment_position(sa, a.key()) <=> attachment_position(sb, b.key());
  }
  if (twig_a.empty() != twig_b.empty()) return twig_a.empty() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (twig_a != twig_b) return twig_a <=> twig_b;
  return compare_trees(reduce_twig(a, twig_a), reduce_twig(b, twig_b));
}

SymbicComplex symbic_complex(int n) {
  if (n < 1 || n > kMaxShellingN) throw UnsupportedSize("complex construction supports 1 <= n <= 5");
  SymbicComplex c;
  c.n = n;
  std::set<LeafSet> vertices;
  for (auto& [key, tree] : enumerate_regular(n).trees) {
    vertices.insert(key.begin(), key.end());
    c.cells.emplace(key, tree);
  }
  c.vertices.assign(vertices.begin(), vertices.end());
  return c;
}

ShellingOrder::ShellingOrder(int max_n) : max_n_(max_n) {
  if (max_n < 1 || max_n > kMaxShellingN) throw UnsupportedSize("shelling order supports 1 <= n <= 5");
  catalogs_.resize(static_cast<std::size_t>(max_n + 1));
  order_.resize(static_cast<std::size_t>(max_n + 1));
  rank_.resize(static_cast<std::size_t>(max_n + 1));
  for (int n = 1; n <= max_n; ++n) {
    catalogs_[static_cast<std::size_t>(n)] = enumerate_regular(n);
    const auto& trees = catalogs_[static_cast<std::size_t>(n)].trees;

    // (twig flag, base rank, position) or (twig flag, twig, reduced rank).
    using SortKey = std::tuple<int, int, int, std::vector<int>, int>;
    std::map<TreeKey, std::pair<int, int>> placed;  // key -> (base rank, position)
    if (n >= 2) {
      for (const auto& [base_key, base] : catalogs_[static_cast<std::size_t>(n - 1)].trees) {
        const int base_rank = rank(n - 1, base_key);
        const EdgeOrder order = edge_order(base);
        for (std::size_t k = 0; k < order.places.size(); ++k) {
          auto t = attach_next_leaf(base, order.places[k]);
          if (!t) continue;
          if (!placed.emplace(t->key(), std::pair{base_rank, static_cast<int>(k)}).second) {
            throw Error("two attachments produced the same tree");
          }
        }
      }
    }
    std::vector<std::pair<SortKey, TreeKey>> keyed;
    for (const auto& [key, tree] : trees) {
      if (n == 1) {
        keyed.emplace_back(SortKey{}, key);
        continue;
      }
      const std::vector<int> twig = brittle_twig(tree);
      if (twig.empty()) {
        auto it = placed.find(key);
        if (it == placed.end()) throw Error("twig-free tree is not an attachment");
        keyed.emplace_back(SortKey{0, it->second.first, it->second.second, {}, 0}, key);
      } else {
        const SymbicTree reduced = reduce_twig(tree, twig);
        keyed.emplace_back(SortKey{1, 0, 0, twig, rank(reduced.n(), reduced.key())}, key);
      }
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t k = 1; k < keyed.size(); ++k) {
      if (keyed[k].first == keyed[k - 1].first) throw Error("shelling sort keys are not distinct");
    }
    auto& ord = order_[static_cast<std::size_t>(n)];
    auto& rk = rank_[static_cast<std::size_t>(n)];
    for (const auto& [sort_key, key] : keyed) {
      rk.emplace(key, static_cast<int>(ord.size()));
      ord.push_back(key);
    }
  }
}

const std::vector<TreeKey>& ShellingOrder::order(int n) const {
  if (n < 1 || n > max_n_) throw InvalidInput("n outside the computed range");
  return order_[static_cast<std::size_t>(n)];
}

int ShellingOrder::rank(int n, const TreeKey& key) const {
  if (n < 1 || n > max_n_) throw InvalidInput("n outside the computed range");
  const auto& rk = rank_[static_cast<std::size_t>(n)];
  auto it = rk.find(key);
  if (it == rk.end()) throw InvalidInput("tree is not in the catalog");
  return it->second;
}

const SymbicTree& ShellingOrder::tree(int n, const TreeKey& key) const {
  if (n < 1 || n > max_n_) throw InvalidInput("n outside the computed range");
  return catalogs_[static_cast<std::size_t>(n)].trees.at(key);
}

std::vector<TreeKey> shelling_order(int n) { return ShellingOrder(n).order(n); }

namespace {

std::vector<TreeKey> facets_of(const TreeKey& c) {
  std::vector<TreeKey> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    TreeKey facet = c;
    facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(std::move(facet));
  }
  return out;
}

// Vertices x of c such that c \ {x} lies in an earlier cell.
std::vector<LeafSet> free_vertices(const TreeKey& c, const std::set<TreeKey>& seen_facets) {
  std::vector<LeafSet> free;
  const std::vector<TreeKey> facets = facets_of(c);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (seen_facets.count(facets[k]) != 0) free.push_back(c[k]);
  }
  return free;
}

bool escapes(const std::vector<LeafSet>& free, const TreeKey& earlier) {
  for (LeafSet x : free) {
    if (!std::binary_search(earlier.begin(), earlier.end(), x)) return true;
  }
  return false;
}

void check_pure(const std::vector<TreeKey>& order) {
  for (const auto& c : order) {
    if (c.size() != order.front().size()) throw InvalidInput("complex is not pure");
  }
}

}  // namespace

std::optional<std::vector<TreeKey>> greedy_shelling(const std::vector<TreeKey>& order) {
  if (order.empty()) return order;
  check_pure(order);
  std::vector<TreeKey> out;
  std::set<TreeKey> seen_facets;
  std::vector<bool> used(order.size(), false);
  while (out.size() < order.size()) {
    bool placed = false;
    for (std::size_t i = 0; i < order.size() && !placed; ++i) {
      if (used[i]) continue;
      const std::vector<LeafSet> free = free_vertices(order[i], seen_facets);
      bool ok = true;
      for (const auto& prev : out) {
        if (!escapes(free, prev)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[i] = true;
      out.push_back(order[i]);
      for (auto& f : facets_of(order[i])) seen_facets.insert(std::move(f));
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  return out;
}

std::optional<ShellingCounterExample> verify_shelling(const std::vector<TreeKey>& order) {
  if (order.empty()) return std::nullopt;
  check_pure(order);
  std::set<TreeKey> seen_facets;
  for (std::size_t later = 0; later < order.size(); ++later) {
    const std::vector<LeafSet> free = free_vertices(order[later], seen_facets);
    for (std::size_t earlier = 0; earlier < later; ++earlier) {
      if (!escapes(free, order[earlier])) return ShellingCounterExample{earlier, later};
    }
    for (auto& f : facets_of(order[later])) seen_facets.insert(std::move(f));
  }
  return std::nullopt;
}

}  // namespace symbic
