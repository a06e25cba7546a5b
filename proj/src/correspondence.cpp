#include "symbic/correspondence.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace symbic {

LeafMetric::LeafMetric(int n) : n_(n), d_(static_cast<std::size_t>(4 * n * n)) {
  if (n < 1) throw InvalidInput("leaf metric needs n >= 1");
}

void LeafMetric::set(int a, int b, const Rat& value) {
  d_[index(a, b)] = value;
  d_[index(b, a)] = value;
}

bool satisfies_four_point(const LeafMetric& d) {
  const int m = d.leaves();
  for (int a = 0; a < m; ++a) {
    if (d(a, a).sign() != 0) return false;
    for (int b = a + 1; b < m; ++b) {
      if (d(a, b) != d(b, a) || d(a, b).sign() < 0) return false;
      for (int c = b + 1; c < m; ++c) {
        for (int e = c + 1; e < m; ++e) {
          Rat s[3] = {d(a, b) + d(c, e), d(a, c) + d(b, e), d(a, e) + d(b, c)};
          std::sort(s, s + 3);
          if (s[1] != s[2]) return false;
        }
      }
    }
  }
  return true;
}

LeafMetric leaf_metric_from_tree(const SymbicTree& t) {
  LeafMetric d(t.n());
  for (int a = 0; a < d.leaves(); ++a) {
    for (int b = a + 1; b < d.leaves(); ++b) d.set(a, b, t.path_length(a, b));
  }
  return d;
}

LeafMetric leaf_metric_from_matrix(const TropMatrix& m) {
  const int n = m.size();
  if (n < 1) throw InvalidInput("empty matrix");
  LeafMetric d(n);
  std::vector<std::vector<Rat>> cols;
  for (int j = 0; j < n; ++j) cols.push_back(m.column(j));
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      d.set(2 * i, 2 * k, hilbert_distance(m.row(i), m.row(k)));
      d.set(2 * i + 1, 2 * k + 1, hilbert_distance(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(k)]));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat best = m(i, i) + m(i, j) - m(i, j) - m(i, i);
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) best = std::max(best, m(i, k) + m(l, j) - m(i, j) - m(l, k));
      }
      d.set(2 * i, 2 * j + 1, best);
    }
  }
  return d;
}

namespace {

// Graph realizing a compatible family of splits (sides avoid leaf code 0).
LabeledTree graph_from_splits(int n, const std::map<LeafSet, Rat>& splits) {
  std::vector<std::pair<LeafSet, Rat>> clusters(splits.begin(), splits.end());
  std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
    const int ca = leaf_count(a.first);
    const int cb = leaf_count(b.first);
    return ca != cb ? ca > cb : a.first < b.first;
  });
  LabeledTree g;
  g.n = n;
  for (int code = 0; code < 2 * n; ++code) g.leaf_vertex.push_back(code);
  if (n == 1) {
    g.num_vertices = 2;
    g.edges.push_back(TreeEdge{1, 0, std::nullopt});
    return g;
  }
  const int root = 2 * n;
  int next = root + 1;
  std::vector<int> vertex(clusters.size());
  for (auto& v : vertex) v = next++;
  g.num_vertices = next;
  auto owner = [&](LeafSet bits, std::size_t limit) {
    for (std::size_t j = limit; j-- > 0;) {
      if ((clusters[j].first & bits) == bits) return vertex[j];
    }
    return root;
  };
  for (int code = 0; code < 2 * n; ++code) {
    g.edges.push_back(TreeEdge{code == 0 ? root : owner(leaf_bit(code), clusters.size()), code, std::nullopt});
  }
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    g.edges.push_back(TreeEdge{owner(clusters[i].first, i), vertex[i], clusters[i].second});
  }
  return g;
}

}  // namespace

LabeledTree labeled_tree_from_metric(const LeafMetric& d) {
  if (!satisfies_four_point(d)) throw Error("leaf metric violates the four-point condition");
  const int n = d.n();
  const int m = d.leaves();
  const LeafSet all = all_leaves(n);
  auto gromov = [&d](int x, int y) { return (d(0, x) + d(0, y) - d(x, y)) / Rat(2); };

  std::map<LeafSet, Rat> splits;
  for (int x = 1; x < m; ++x) {
    std::vector<Rat> cuts{d(0, x)};
    for (int y = 1; y < m; ++y) {
      if (y != x) cuts.push_back(gromov(x, y));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Rat previous;
    for (const Rat& t : cuts) {
      if (t.sign() <= 0) continue;
      LeafSet side = leaf_bit(x);
      for (int y = 1; y < m; ++y) {
        if (y != x && gromov(x, y) >= t) side |= leaf_bit(y);
      }
      const Rat len = t - previous;
      previous = t;
      const int c = leaf_count(side);
      if (c < 2 || c > m - 2) continue;
      auto [it, inserted] = splits.emplace(side & all, len);
      if (!inserted && it->second != len) throw Error("leaf metric is not realized by a tree");
    }
  }
  for (auto a = splits.begin(); a != splits.end(); ++a) {
    for (auto b = std::next(a); b != splits.end(); ++b) {
      const LeafSet both = a->first & b->first;
      if (both != 0 && both != a->first && both != b->first) throw Error("leaf metric is not realized by a tree");
    }
  }
  return graph_from_splits(n, splits);
}

LabeledTree bicolored_tree_from_matrix(const TropMatrix& m) {
  if (!has_trop_rank_at_most_two(m)) throw NotRankTwo("matrix has tropical rank above 2");
  return labeled_tree_from_metric(leaf_metric_from_matrix(m));
}

SymbicTree tree_from_matrix(const TropMatrix& m) {
  if (m.size() < 1) throw InvalidInput("empty matrix");
  if (!m.is_symmetric()) throw InvalidInput("matrix is not symmetric");
  if (!has_sym_rank_at_most_two(m)) throw NotRankTwo("matrix has symmetric tropical rank above 2");
  if (m.size() >= 2) {
    bool rank_one = true;
    for (const auto& spec : all_minors(m.size(), 2)) {
      if (!sym_minor_degenerate(m, spec)) {
        rank_one = false;
        break;
      }
    }
    if (rank_one) throw RankOneInput("matrix has symmetric tropical rank 1; its tree is a star");
  }
  return SymbicTree::from_labeled(labeled_tree_from_metric(leaf_metric_from_matrix(m)));
}

namespace {

struct Rooted {
  std::vector<int> parent;
  std::vector<Rat> depth;
  std::vector<int> level;
};

Rooted root_at(const SymbicTree& t, int o) {
  const auto nv = static_cast<std::size_t>(t.num_vertices());
  Rooted r{std::vector<int>(nv, -2), std::vector<Rat>(nv), std::vector<int>(nv, 0)};
  r.parent[static_cast<std::size_t>(o)] = -1;
  std::deque<int> queue{o};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto [u, e] : t.neighbors(v)) {
      if (r.parent[static_cast<std::size_t>(u)] != -2) continue;
      r.parent[static_cast<std::size_t>(u)] = v;
      r.level[static_cast<std::size_t>(u)] = r.level[static_cast<std::size_t>(v)] + 1;
      const auto& len = t.graph().edges[static_cast<std::size_t>(e)].length;
      r.depth[static_cast<std::size_t>(u)] = r.depth[static_cast<std::size_t>(v)] + (len ? *len : Rat());
      queue.push_back(u);
    }
  }
  return r;
}

int meet(const Rooted& r, int a, int b) {
  while (a != b) {
    if (r.level[static_cast<std::size_t>(a)] >= r.level[static_cast<std::size_t>(b)]) {
      a = r.parent[static_cast<std::size_t>(a)];
    } else {
      b = r.parent[static_cast<std::size_t>(b)];
    }
  }
  return a;
}

void require_fixed(const SymbicTree& t, int o) {
  if (o < 0 || o >= t.num_vertices() || !t.is_fixed(o)) throw InvalidInput("base point must be a fixed vertex");
}

}  // namespace

std::vector<std::vector<int>> divergence_table(const SymbicTree& t, int o) {
  require_fixed(t, o);
  const Rooted r = root_at(t, o);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(t.n()));
  for (int i = 0; i < t.n(); ++i) {
    for (int j = 0; j < t.n(); ++j) out[static_cast<std::size_t>(i)].push_back(meet(r, 2 * i, 2 * j + 1));
  }
  return out;
}

TropMatrix matrix_A_from_tree(const SymbicTree& t, int o) {
  require_fixed(t, o);
  const Rooted r = root_at(t, o);
  const int n = t.n();
  TropMatrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = r.depth[static_cast<std::size_t>(meet(r, 2 * i, 2 * j + 1))];
  }
  return a;
}

TropMatrix matrix_A_from_tree(const SymbicTree& t) { return matrix_A_from_tree(t, t.anchor()); }

TropMatrix matrix_B_from_tree(const SymbicTree& t) {
  const int n = t.n();
  TropMatrix b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = t.path_length(2 * i, 2 * j + 1);
  }
  return b;
}

std::vector<Rat> base_distances(const SymbicTree& t, int o) {
  require_fixed(t, o);
  const Rooted r = root_at(t, o);
  std::vector<Rat> out;
  for (int i = 0; i < t.n(); ++i) out.push_back(r.depth[static_cast<std::size_t>(2 * i)]);
  return out;
}

bool lineality_identity_check(const SymbicTree& t, int o) {
  const TropMatrix lhs = Rat(2) * matrix_A_from_tree(t, o) + matrix_B_from_tree(t);
  return lhs == symmetric_rank_one(base_distances(t, o));
}

}  // namespace symbic
