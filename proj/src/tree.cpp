#include "symbic/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace symbic {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::structure:
      return "structure";
    case Condition::bicolored:
      return "(1) bicolored splits";
    case Condition::positive_lengths:
      return "(2) positive internal lengths";
    case Condition::symmetric:
      return "(3) involution symmetry";
    case Condition::fixed_path:
      return "(4) fixed points form a path";
  }
  return "unknown";
}

ValidationError::ValidationError(Violation v)
    : Error("symbic violation " + to_string(v.condition) + ": " + v.witness), violation_(std::move(v)) {}

namespace {

Violation violation(Condition c, std::string witness) { return Violation{c, std::move(witness)}; }

bool compatible(LeafSet a, LeafSet b) {
  // Normalized sides never contain label 1, so compatibility reduces to
  // nested-or-disjoint.
  return (a & b) == 0 || (a & b) == a || (a & b) == b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

std::variant<SymbicTree, Violation> SymbicTree::try_from_splits(int n, std::vector<WeightedSplit> input) {
  if (n < 1 || n > kMaxLeafPairs) throw UnsupportedSize("leaf pair count must lie in [1, 32]");
  const LeafSet all = all_leaves(n);

  std::vector<WeightedSplit> work;
  for (auto s : input) {
    if ((s.side & ~all) != 0) throw InvalidInput("split mentions leaves beyond n");
    s.side = normalize_split(s.side, n);
    const int c = leaf_count(s.side);
    if (c < 2 || c > 2 * n - 2) throw InvalidInput("trivial split " + format_split(s.side, n));
    if (!has_both_colors(s.side) || !has_both_colors(all & ~s.side)) {
      return violation(Condition::bicolored, "split " + format_split(s.side, n) + " has a uni-colored side");
    }
    if (s.length.sign() < 0) {
      return violation(Condition::positive_lengths,
                       "split " + format_split(s.side, n) + " has length " + s.length.str());
    }
    if (s.length.sign() == 0) continue;
    work.push_back(s);
  }
  std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) { return a.side < b.side; });
  for (std::size_t k = 1; k < work.size(); ++k) {
    if (work[k].side == work[k - 1].side) throw InvalidInput("duplicate split " + format_split(work[k].side, n));
  }
  for (std::size_t a = 0; a < work.size(); ++a) {
    for (std::size_t b = a + 1; b < work.size(); ++b) {
      if (!compatible(work[a].side, work[b].side)) {
        return violation(Condition::structure, "incompatible splits " + format_split(work[a].side, n) + " and " +
                                                   format_split(work[b].side, n));
      }
    }
  }
  std::map<LeafSet, Rat> length_of;
  for (const auto& s : work) length_of.emplace(s.side, s.length);
  for (const auto& s : work) {
    const LeafSet partner = normalize_split(swap_colors(s.side), n);
    auto it = length_of.find(partner);
    if (it == length_of.end()) {
      return violation(Condition::symmetric, "color swap of " + format_split(s.side, n) + " is not a split");
    }
    if (it->second != s.length) {
      return violation(Condition::symmetric, "split " + format_split(s.side, n) + " and its color swap differ in length");
    }
  }

  // Clusters sorted by size descending; the parent of a cluster is the
  // smallest strictly larger cluster containing it.
  std::vector<WeightedSplit> clusters = work;
  std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
    const int ca = leaf_count(a.side);
    const int cb = leaf_count(b.side);
    return ca != cb ? ca > cb : a.side < b.side;
  });
  const LeafSet root_set = all & ~LeafSet{1};

  SymbicTree t;
  t.n_ = n;
  LabeledTree& g = t.graph_;
  g.n = n;
  g.leaf_vertex.resize(static_cast<std::size_t>(2 * n));
  std::iota(g.leaf_vertex.begin(), g.leaf_vertex.end(), 0);
  int next = 2 * n;
  const int root_vertex = leaf_count(root_set) >= 2 ? next++ : -1;
  std::vector<int> cluster_vertex(clusters.size());
  for (auto& cv : cluster_vertex) cv = next++;
  g.num_vertices = next;

  auto owner_of = [&](LeafSet bits, std::size_t limit) {
    for (std::size_t j = limit; j-- > 0;) {
      if ((clusters[j].side & bits) == bits) return cluster_vertex[j];
    }
    return root_vertex;
  };
  if (root_vertex < 0) {
    g.edges.push_back(TreeEdge{1, 0, std::nullopt});
  } else {
    for (int code = 0; code < 2 * n; ++code) {
      const int owner = code == 0 ? root_vertex : owner_of(leaf_bit(code), clusters.size());
      g.edges.push_back(TreeEdge{owner, code, std::nullopt});
    }
  }
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    g.edges.push_back(TreeEdge{owner_of(clusters[i].side, i), cluster_vertex[i], clusters[i].length});
  }

  auto index_graph = [&t, all]() {
    const LabeledTree& gr = t.graph_;
    const auto nv = static_cast<std::size_t>(gr.num_vertices);
    t.adjacency_.assign(nv, {});
    for (std::size_t e = 0; e < gr.edges.size(); ++e) {
      t.adjacency_[static_cast<std::size_t>(gr.edges[e].u)].emplace_back(gr.edges[e].v, static_cast<int>(e));
      t.adjacency_[static_cast<std::size_t>(gr.edges[e].v)].emplace_back(gr.edges[e].u, static_cast<int>(e));
    }
    for (auto& nb : t.adjacency_) std::sort(nb.begin(), nb.end());
    t.rooted_parent_.assign(nv, -1);
    t.below_.assign(nv, 0);
    std::vector<int> order;
    std::vector<bool> seen(nv, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (auto [u, e] : t.adjacency_[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          t.rooted_parent_[static_cast<std::size_t>(u)] = v;
          queue.push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      if (t.is_leaf(v)) t.below_[static_cast<std::size_t>(v)] |= leaf_bit(v);
      const int p = t.rooted_parent_[static_cast<std::size_t>(v)];
      if (p >= 0) t.below_[static_cast<std::size_t>(p)] |= t.below_[static_cast<std::size_t>(v)];
    }
    t.edge_split_.assign(gr.edges.size(), 0);
    for (std::size_t e = 0; e < gr.edges.size(); ++e) {
      const auto& edge = gr.edges[e];
      const int child = t.rooted_parent_[static_cast<std::size_t>(edge.v)] == edge.u ? edge.v : edge.u;
      const LeafSet side = t.below_[static_cast<std::size_t>(child)];
      const int c = leaf_count(side);
      if (c >= 2 && c <= leaf_count(all) - 2) t.edge_split_[e] = normalize_split(side, t.n_);
    }
  };
  index_graph();

  auto partition = [&t](int v) {
    std::vector<LeafSet> parts;
    for (auto [u, e] : t.adjacency_[static_cast<std::size_t>(v)]) parts.push_back(t.far_side(e, v));
    std::sort(parts.begin(), parts.end());
    return parts;
  };
  std::map<std::vector<LeafSet>, int> by_partition;
  for (int v = 2 * n; v < g.num_vertices; ++v) by_partition.emplace(partition(v), v);
  t.sigma_.assign(static_cast<std::size_t>(g.num_vertices), -1);
  for (int v = 0; v < g.num_vertices; ++v) {
    if (t.is_leaf(v)) {
      t.sigma_[static_cast<std::size_t>(v)] = v ^ 1;
      continue;
    }
    std::vector<LeafSet> swapped;
    for (LeafSet p : partition(v)) swapped.push_back(swap_colors(p));
    std::sort(swapped.begin(), swapped.end());
    auto it = by_partition.find(swapped);
    if (it == by_partition.end()) {
      return violation(Condition::symmetric, "internal vertex has no color-swapped image");
    }
    t.sigma_[static_cast<std::size_t>(v)] = it->second;
  }

  // Subdivide edges swapped end-for-end by a fixed midpoint.
  const std::size_t original_edges = g.edges.size();
  for (std::size_t e = 0; e < original_edges; ++e) {
    const TreeEdge edge = g.edges[e];
    if (t.sigma_[static_cast<std::size_t>(edge.u)] != edge.v) continue;
    const int mid = g.num_vertices++;
    std::optional<Rat> half;
    if (edge.length) half = *edge.length / Rat(2);
    g.edges[e] = TreeEdge{edge.u, mid, half};
    g.edges.push_back(TreeEdge{mid, edge.v, half});
    t.sigma_.push_back(mid);
  }
  if (g.edges.size() != original_edges) index_graph();

  std::vector<int> fixed;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (t.is_fixed(v)) fixed.push_back(v);
  }
  auto fixed_degree = [&t](int v) {
    int d = 0;
    for (auto [u, e] : t.neighbors(v)) d += t.is_fixed(u) ? 1 : 0;
    return d;
  };
  for (int v : fixed) {
    if (fixed_degree(v) > 2) {
      std::string w = "fixed vertex with " + std::to_string(fixed_degree(v)) + " fixed edges, separating";
      for (LeafSet p : partition(v)) w += " " + format_leaves(p);
      return violation(Condition::fixed_path, w);
    }
  }

  t.splits_ = work;

  // Order the trunk from the anchor endpoint.
  auto branch_min_index = [&t](int v) {
    int best = kMaxLeafPairs + 1;
    for (auto [u, e] : t.neighbors(v)) {
      if (t.is_fixed(u)) continue;
      best = std::min(best, std::countr_zero(t.far_side(e, v)) / 2 + 1);
    }
    return best;
  };
  std::vector<int> endpoints;
  for (int v : fixed) {
    if (fixed_degree(v) <= 1) endpoints.push_back(v);
  }
  int start = endpoints.front();
  for (int v : endpoints) {
    if (branch_min_index(v) < branch_min_index(start)) start = v;
  }
  t.trunk_ = {start};
  for (int prev = -1, cur = start;;) {
    int step = -1;
    for (auto [u, e] : t.neighbors(cur)) {
      if (u != prev && t.is_fixed(u)) step = u;
    }
    if (step < 0) break;
    t.trunk_.push_back(step);
    prev = cur;
    cur = step;
  }

  t.parent_.assign(static_cast<std::size_t>(g.num_vertices), -2);
  std::deque<int> queue(t.trunk_.begin(), t.trunk_.end());
  for (int v : t.trunk_) t.parent_[static_cast<std::size_t>(v)] = -1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto [u, e] : t.neighbors(v)) {
      if (t.parent_[static_cast<std::size_t>(u)] == -2) {
        t.parent_[static_cast<std::size_t>(u)] = v;
        queue.push_back(u);
      }
    }
  }
  return t;
}

SymbicTree SymbicTree::from_splits(int n, std::vector<WeightedSplit> splits) {
  auto result = try_from_splits(n, std::move(splits));
  if (auto* v = std::get_if<Violation>(&result)) throw ValidationError(std::move(*v));
  return std::get<SymbicTree>(std::move(result));
}

namespace {

std::variant<SymbicTree, Violation> analyze(const LabeledTree& tree) {
  const int n = tree.n;
  if (n < 1 || n > kMaxLeafPairs) return violation(Condition::structure, "leaf pair count must lie in [1, 32]");
  const int nv = tree.num_vertices;
  if (static_cast<int>(tree.leaf_vertex.size()) != 2 * n) {
    return violation(Condition::structure, "leaf map must list all 2n labels");
  }
  if (nv < 2 || static_cast<int>(tree.edges.size()) != nv - 1) {
    return violation(Condition::structure, "edge count is not vertex count - 1");
  }
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(nv));
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    const auto& edge = tree.edges[e];
    if (edge.u < 0 || edge.u >= nv || edge.v < 0 || edge.v >= nv || edge.u == edge.v) {
      return violation(Condition::structure, "edge " + std::to_string(e) + " has invalid endpoints");
    }
    adj[static_cast<std::size_t>(edge.u)].emplace_back(edge.v, static_cast<int>(e));
    adj[static_cast<std::size_t>(edge.v)].emplace_back(edge.u, static_cast<int>(e));
  }
  std::vector<int> label_at(static_cast<std::size_t>(nv), -1);
  for (int code = 0; code < 2 * n; ++code) {
    const int v = tree.leaf_vertex[static_cast<std::size_t>(code)];
    if (v < 0 || v >= nv || label_at[static_cast<std::size_t>(v)] >= 0) {
      return violation(Condition::structure, "leaf " + LeafLabel::from_code(code).str() + " is not on a distinct vertex");
    }
    label_at[static_cast<std::size_t>(v)] = code;
  }
  for (int v = 0; v < nv; ++v) {
    const bool leaf = label_at[static_cast<std::size_t>(v)] >= 0;
    const bool degree_one = adj[static_cast<std::size_t>(v)].size() == 1;
    if (leaf != degree_one) {
      return violation(Condition::structure, "vertex " + std::to_string(v) +
                                                 (leaf ? " carries a label but is not a leaf" : " is an unlabelled leaf"));
    }
  }

  // Root at leaf 1 and collect the leaf set below each edge.
  std::vector<int> parent(static_cast<std::size_t>(nv), -2);
  std::vector<int> parent_edge(static_cast<std::size_t>(nv), -1);
  std::vector<int> order;
  const int root = tree.leaf_vertex[0];
  parent[static_cast<std::size_t>(root)] = -1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (auto [u, e] : adj[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(u)] == -2) {
        parent[static_cast<std::size_t>(u)] = v;
        parent_edge[static_cast<std::size_t>(u)] = e;
        queue.push_back(u);
      }
    }
  }
  if (static_cast<int>(order.size()) != nv) return violation(Condition::structure, "graph is not connected");

  std::vector<LeafSet> below(static_cast<std::size_t>(nv), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (label_at[static_cast<std::size_t>(v)] >= 0) below[static_cast<std::size_t>(v)] |= leaf_bit(label_at[static_cast<std::size_t>(v)]);
    if (parent[static_cast<std::size_t>(v)] >= 0) below[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] |= below[static_cast<std::size_t>(v)];
  }

  std::map<LeafSet, Rat> merged;
  std::vector<std::pair<LeafSet, const TreeEdge*>> internal;
  for (int v : order) {
    if (v == root) continue;
    const LeafSet side = below[static_cast<std::size_t>(v)];
    const int c = leaf_count(side);
    if (c < 2 || c > 2 * n - 2) continue;
    internal.emplace_back(side, &tree.edges[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(v)])]);
  }
  for (const auto& [side, edge] : internal) {
    if (!has_both_colors(side) || !has_both_colors(all_leaves(n) & ~side)) {
      return violation(Condition::bicolored, "split " + format_split(side, n) + " has a uni-colored side");
    }
  }
  for (const auto& [side, edge] : internal) {
    if (!edge->length) {
      return violation(Condition::positive_lengths, "internal edge " + std::to_string(edge->u) + "-" +
                                                         std::to_string(edge->v) + " has no length");
    }
    if (edge->length->sign() < 0) {
      return violation(Condition::positive_lengths, "internal edge " + std::to_string(edge->u) + "-" +
                                                         std::to_string(edge->v) + " has negative length");
    }
    merged[side] += *edge->length;
  }
  std::vector<WeightedSplit> splits;
  for (const auto& [side, len] : merged) splits.push_back({side, len});
  return SymbicTree::try_from_splits(n, std::move(splits));
}

}  // namespace

SymbicTree SymbicTree::from_labeled(const LabeledTree& tree) {
  auto result = analyze(tree);
  if (auto* v = std::get_if<Violation>(&result)) throw ValidationError(std::move(*v));
  return std::get<SymbicTree>(std::move(result));
}

std::optional<Violation> validate_symbic(const LabeledTree& tree) {
  auto result = analyze(tree);
  if (auto* v = std::get_if<Violation>(&result)) return std::move(*v);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Accessors

int SymbicTree::other_end(int edge, int v) const {
  const auto& e = graph_.edges[static_cast<std::size_t>(edge)];
  return e.u == v ? e.v : e.u;
}

LeafSet SymbicTree::far_side(int edge, int from) const {
  const int other = other_end(edge, from);
  if (rooted_parent_[static_cast<std::size_t>(other)] == from) return below_[static_cast<std::size_t>(other)];
  return all_leaves(n_) & ~below_[static_cast<std::size_t>(from)];
}

std::vector<SplitOrbit> SymbicTree::split_orbits() const {
  std::vector<SplitOrbit> out;
  for (const auto& s : splits_) {
    const LeafSet partner = normalize_split(swap_colors(s.side), n_);
    out.push_back({std::min(s.side, partner), std::max(s.side, partner)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rat SymbicTree::split_length(LeafSet side) const {
  side = normalize_split(side, n_);
  auto it = std::lower_bound(splits_.begin(), splits_.end(), side,
                             [](const WeightedSplit& s, LeafSet x) { return s.side < x; });
  if (it == splits_.end() || it->side != side) throw InvalidInput("split " + format_split(side, n_) + " not in tree");
  return it->length;
}

TreeKey SymbicTree::key() const {
  TreeKey key;
  for (const auto& orbit : split_orbits()) key.push_back(orbit.first);
  return key;
}

std::vector<Branch> SymbicTree::branches() const {
  std::vector<Branch> out;
  for (int t : trunk_) {
    for (auto [u, e] : neighbors(t)) {
      if (!is_fixed(u)) out.push_back(Branch{t, u, far_side(e, t)});
    }
  }
  return out;
}

std::vector<int> SymbicTree::path(int a, int b) const {
  std::vector<int> from(static_cast<std::size_t>(num_vertices()), -2);
  from[static_cast<std::size_t>(a)] = -1;
  std::deque<int> queue{a};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == b) break;
    for (auto [u, e] : neighbors(v)) {
      if (from[static_cast<std::size_t>(u)] == -2) {
        from[static_cast<std::size_t>(u)] = v;
        queue.push_back(u);
      }
    }
  }
  std::vector<int> out;
  for (int v = b; v != -1; v = from[static_cast<std::size_t>(v)]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

Rat SymbicTree::path_length(int a, int b) const {
  const std::vector<int> p = path(a, b);
  Rat total;
  for (std::size_t k = 1; k < p.size(); ++k) {
    for (auto [u, e] : neighbors(p[k - 1])) {
      if (u == p[k]) {
        const auto& len = graph_.edges[static_cast<std::size_t>(e)].length;
        if (len) total += *len;
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Free operations

std::vector<LeafSet> splits(const SymbicTree& t) {
  std::vector<LeafSet> out;
  for (const auto& s : t.splits()) out.push_back(s.side);
  return out;
}

std::vector<SplitOrbit> split_orbits(const SymbicTree& t) { return t.split_orbits(); }
TreeKey canonical_key(const SymbicTree& t) { return t.key(); }
const std::vector<int>& trunk(const SymbicTree& t) { return t.trunk(); }
std::vector<Branch> branches(const SymbicTree& t) { return t.branches(); }

bool is_regular(const SymbicTree& t) {
  if (static_cast<int>(t.split_orbits().size()) != t.n() - 1) return false;
  for (int v : t.trunk()) {
    int carried = 0;
    for (auto [u, e] : t.neighbors(v)) carried += t.is_fixed(u) ? 0 : 1;
    if (carried != 2) return false;
  }
  for (int v = 2 * t.n(); v < t.num_vertices(); ++v) {
    if (!t.is_fixed(v) && t.degree(v) != 3) return false;
  }
  return true;
}

bool has_caterpillar_branches(const SymbicTree& t) {
  for (int v = 2 * t.n(); v < t.num_vertices(); ++v) {
    if (t.is_fixed(v)) continue;
    int internal_children = 0;
    for (auto [u, e] : t.neighbors(v)) {
      if (u != t.toward_trunk(v) && !t.is_leaf(u)) ++internal_children;
    }
    if (internal_children > 1) return false;
  }
  return true;
}

bool is_caterpillar(const SymbicTree& t) {
  if (t.trunk().size() != 1 || t.degree(t.trunk().front()) != 2) return false;
  for (int v = 2 * t.n(); v < t.num_vertices(); ++v) {
    int internal = 0;
    for (auto [u, e] : t.neighbors(v)) internal += t.is_leaf(u) ? 0 : 1;
    if (internal > 2) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> cherries(const SymbicTree& t) {
  std::vector<std::pair<int, int>> out;
  for (int v = 2 * t.n(); v < t.num_vertices(); ++v) {
    std::vector<int> rows;
    std::vector<int> cols;
    for (auto [u, e] : t.neighbors(v)) {
      if (!t.is_leaf(u)) continue;
      const LeafLabel l = LeafLabel::from_code(u);
      (l.color == Color::row ? rows : cols).push_back(l.index);
    }
    for (int i : rows) {
      for (int j : cols) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> brittle_twig(const SymbicTree& t) {
  const int n = t.n();
  if (n < 3) return {};
  int came = LeafLabel{n, Color::column}.code();
  int x = t.neighbors(came).front().first;
  std::vector<int> twig;
  while (!t.is_fixed(x)) {
    std::vector<int> others;
    for (auto [u, e] : t.neighbors(x)) {
      if (u != came && u != t.toward_trunk(x)) others.push_back(u);
    }
    if (others.size() != 1 || !t.is_leaf(others.front())) break;
    const LeafLabel l = LeafLabel::from_code(others.front());
    if (l.color != Color::row) break;
    twig.push_back(l.index);
    came = x;
    x = t.toward_trunk(x);
  }
  if (twig.size() < 2) return {};
  return twig;
}

namespace {

// Maps every split through a code translation (old code -> new code, or -1
// to drop the label) and merges splits that coincide afterwards.
std::vector<WeightedSplit> translate(const SymbicTree& t, const std::vector<int>& code_map, int new_n,
                                     bool bicolored_only = false) {
  const LeafSet all = all_leaves(new_n);
  std::map<LeafSet, Rat> merged;
  for (const auto& s : t.splits()) {
    LeafSet side = 0;
    for (int code : leaf_codes(s.side)) {
      const int to = code_map[static_cast<std::size_t>(code)];
      if (to >= 0) side |= leaf_bit(to);
    }
    const int c = leaf_count(side);
    if (c < 2 || c > leaf_count(all) - 2) continue;
    if (bicolored_only && (!has_both_colors(side) || !has_both_colors(all & ~side))) continue;
    merged[normalize_split(side, new_n)] += s.length;
  }
  std::vector<WeightedSplit> out;
  for (const auto& [side, len] : merged) out.push_back({side, len});
  return out;
}

}  // namespace

std::variant<SymbicTree, Violation> map_leaves(const SymbicTree& t, const std::vector<int>& code_map, int new_n) {
  if (static_cast<int>(code_map.size()) != 2 * t.n()) throw InvalidInput("code map must cover every leaf");
  if (new_n < 1 || new_n > t.n()) throw InvalidInput("bad target size");
  LeafSet image = 0;
  for (int to : code_map) {
    if (to < -1 || to >= 2 * new_n || (to >= 0 && (image & leaf_bit(to)) != 0)) throw InvalidInput("code map is not injective");
    if (to >= 0) image |= leaf_bit(to);
  }
  if (image != all_leaves(new_n)) throw InvalidInput("code map must be onto");
  return SymbicTree::try_from_splits(new_n, translate(t, code_map, new_n));
}

namespace {

std::vector<int> keep_map(const SymbicTree& t, const std::vector<int>& keep) {
  if (keep.empty()) throw InvalidInput("restriction needs at least one index");
  std::vector<int> code_map(static_cast<std::size_t>(2 * t.n()), -1);
  for (std::size_t p = 0; p < keep.size(); ++p) {
    const int i = keep[p];
    if (i < 1 || i > t.n() || (p > 0 && keep[p - 1] >= i)) throw InvalidInput("restrict_to indices must increase within [1, n]");
    code_map[static_cast<std::size_t>(2 * (i - 1))] = static_cast<int>(2 * p);
    code_map[static_cast<std::size_t>(2 * (i - 1) + 1)] = static_cast<int>(2 * p + 1);
  }
  return code_map;
}

}  // namespace

std::variant<SymbicTree, Violation> restrict_to(const SymbicTree& t, const std::vector<int>& keep) {
  const int k = static_cast<int>(keep.size());
  return SymbicTree::try_from_splits(k, translate(t, keep_map(t, keep), k));
}

std::variant<SymbicTree, Violation> principal_subtree(const SymbicTree& t, const std::vector<int>& keep) {
  const int k = static_cast<int>(keep.size());
  return SymbicTree::try_from_splits(k, translate(t, keep_map(t, keep), k, true));
}

std::variant<SymbicTree, Violation> delete_last_leaf(const SymbicTree& t) {
  if (t.n() < 2) throw InvalidInput("cannot delete the only leaf pair");
  std::vector<int> keep(static_cast<std::size_t>(t.n() - 1));
  std::iota(keep.begin(), keep.end(), 1);
  return restrict_to(t, keep);
}

SymbicTree relabel(const SymbicTree& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.n()) throw InvalidInput("relabel needs a permutation of 1..n");
  std::vector<int> code_map(static_cast<std::size_t>(2 * t.n()));
  std::vector<bool> used(static_cast<std::size_t>(t.n()), false);
  for (int i = 0; i < t.n(); ++i) {
    const int to = perm[static_cast<std::size_t>(i)];
    if (to < 1 || to > t.n() || used[static_cast<std::size_t>(to - 1)]) throw InvalidInput("relabel needs a permutation of 1..n");
    used[static_cast<std::size_t>(to - 1)] = true;
    code_map[static_cast<std::size_t>(2 * i)] = 2 * (to - 1);
    code_map[static_cast<std::size_t>(2 * i + 1)] = 2 * (to - 1) + 1;
  }
  return SymbicTree::from_splits(t.n(), translate(t, code_map, t.n()));
}

SymbicTree with_orbit_lengths(const SymbicTree& t, const std::vector<Rat>& lengths) {
  const auto orbits = t.split_orbits();
  if (lengths.size() != orbits.size()) throw InvalidInput("need one length per split orbit");
  std::vector<WeightedSplit> next;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    next.push_back({orbits[k].first, lengths[k]});
    if (!orbits[k].self_paired()) next.push_back({orbits[k].second, lengths[k]});
  }
  return SymbicTree::from_splits(t.n(), std::move(next));
}

namespace {

SplitOrbit orbit_of(const SymbicTree& t, LeafSet split) {
  split = normalize_split(split, t.n());
  for (const auto& orbit : t.split_orbits()) {
    if (orbit.first == split || orbit.second == split) return orbit;
  }
  throw InvalidInput("split " + format_split(split, t.n()) + " is not in the tree");
}

std::vector<WeightedSplit> without_orbit(const SymbicTree& t, const SplitOrbit& orbit) {
  std::vector<WeightedSplit> out;
  for (const auto& s : t.splits()) {
    if (s.side != orbit.first && s.side != orbit.second) out.push_back(s);
  }
  return out;
}

}  // namespace

SymbicTree contract(const SymbicTree& t, LeafSet split) {
  return SymbicTree::from_splits(t.n(), without_orbit(t, orbit_of(t, split)));
}

SymbicTree transition(const SymbicTree& t, LeafSet contract_split, LeafSet expand_split) {
  const SplitOrbit orbit = orbit_of(t, contract_split);
  const Rat len = t.split_length(orbit.first);
  std::vector<WeightedSplit> next = without_orbit(t, orbit);
  const int n = t.n();
  const LeafSet side = normalize_split(expand_split, n);
  const int c = leaf_count(side);
  if (c < 2 || c > 2 * n - 2) throw InvalidInput("expansion split is trivial");
  const LeafSet partner = normalize_split(swap_colors(side), n);
  if (side == orbit.first || side == orbit.second) throw InvalidInput("expansion must differ from the contracted orbit");
  for (const auto& s : next) {
    if (s.side == side || s.side == partner) throw InvalidInput("expansion split is already present");
  }
  next.push_back({side, len});
  if (partner != side) next.push_back({partner, len});
  auto result = SymbicTree::try_from_splits(n, std::move(next));
  if (auto* v = std::get_if<Violation>(&result)) throw ValidationError(std::move(*v));
  SymbicTree out = std::get<SymbicTree>(std::move(result));
  if (!is_regular(out)) throw ValidationError(Violation{Condition::structure, "transition result is not regular"});
  return out;
}

std::vector<SymbicTree> resolutions(const SymbicTree& t, LeafSet split) {
  const int n = t.n();
  if (n > 10) throw UnsupportedSize("resolutions enumerate all splits; n must be at most 10");
  const SplitOrbit orbit = orbit_of(t, split);
  const Rat len = t.split_length(orbit.first);
  const std::vector<WeightedSplit> base = without_orbit(t, orbit);
  const LeafSet all = all_leaves(n);
  std::vector<SymbicTree> out;
  for (LeafSet side = 2; side <= all; side += 2) {
    const int c = leaf_count(side);
    if (c < 2 || c > 2 * n - 2 || !has_both_colors(side) || !has_both_colors(all & ~side)) continue;
    const LeafSet partner = normalize_split(swap_colors(side), n);
    if (partner < side || side == orbit.first || side == orbit.second) continue;
    bool ok = true;
    for (const auto& s : base) {
      if (s.side == side || !compatible(s.side, side) || !compatible(s.side, partner)) {
        ok = false;
        break;
      }
    }
    if (!ok || !compatible(side, partner)) continue;
    std::vector<WeightedSplit> next = base;
    next.push_back({side, len});
    if (partner != side) next.push_back({partner, len});
    auto result = SymbicTree::try_from_splits(n, std::move(next));
    if (auto* tree = std::get_if<SymbicTree>(&result); tree != nullptr && is_regular(*tree)) out.push_back(std::move(*tree));
  }
  std::sort(out.begin(), out.end(), [](const SymbicTree& a, const SymbicTree& b) { return a.key() < b.key(); });
  return out;
}

std::string describe(const SymbicTree& t) {
  std::ostringstream os;
  os << t.n() << "+" << t.n() << " tree;";
  for (const auto& orbit : t.split_orbits()) {
    os << " " << format_split(orbit.first, t.n());
    if (!orbit.self_paired()) os << "~" << format_split(orbit.second, t.n());
    os << "=" << t.split_length(orbit.first);
    os << ";";
  }
  return os.str();
}

}  // namespace symbic
