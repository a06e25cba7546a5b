#pragma once

// Symmetric bicolored ("symbic") trees.
//
// A SymbicTree is always built in a canonical form from its set of weighted
// splits: leaves occupy vertex ids 0..2n-1 (vertex id == leaf code), internal
// vertices follow, and an edge swapped end-for-end by the color involution is
// subdivided by an explicit fixed vertex so that the fixed-point set is a set
// of vertices and edges. Leaf edges carry no length.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symbic/errors.hpp"
#include "symbic/labels.hpp"
#include "symbic/rational.hpp"

namespace symbic {

struct TreeEdge {
  int u = 0;
  int v = 0;
  std::optional<Rat> length;  // nullopt on leaf edges

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// A leaf-labelled metric tree exactly as supplied by a caller or a file. It
/// may violate any of the symbic conditions.
struct LabeledTree {
  int n = 0;
  int num_vertices = 0;
  std::vector<TreeEdge> edges;
  std::vector<int> leaf_vertex;  // indexed by leaf code, size 2n

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

enum class Condition {
  structure = 0,  // not a tree, bad leaf map, incompatible splits
  bicolored = 1,
  positive_lengths = 2,
  symmetric = 3,
  fixed_path = 4,
};

struct Violation {
  Condition condition = Condition::structure;
  std::string witness;
};

std::string to_string(Condition c);

class ValidationError : public Error {
 public:
  explicit ValidationError(Violation v);
  [[nodiscard]] const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// A split side (normalized: never contains label 1) with the length of its
/// edge. For an edge through a fixed midpoint this is the whole edge.
struct WeightedSplit {
  LeafSet side = 0;
  Rat length;

  friend bool operator==(const WeightedSplit&, const WeightedSplit&) = default;
};

/// One split, or two splits exchanged by the involution.
struct SplitOrbit {
  LeafSet first = 0;
  LeafSet second = 0;  // == first when the split is involution-invariant

  [[nodiscard]] bool self_paired() const { return first == second; }
  friend bool operator==(const SplitOrbit&, const SplitOrbit&) = default;
  friend auto operator<=>(const SplitOrbit&, const SplitOrbit&) = default;
};

/// Sorted orbit representatives: equal iff same combinatorial type.
using TreeKey = std::vector<LeafSet>;

struct Branch {
  int trunk_vertex = 0;
  int root = 0;  // neighbor of trunk_vertex inside the branch (a leaf for one-leaf branches)
  LeafSet leaves = 0;
};

class SymbicTree {
 public:
  /// Builds the canonical tree. Zero-length splits are contracted. Throws
  /// ValidationError for symbic violations and InvalidInput for malformed
  /// split lists (trivial, duplicate or incompatible splits).
  static SymbicTree from_splits(int n, std::vector<WeightedSplit> splits);
  static std::variant<SymbicTree, Violation> try_from_splits(int n, std::vector<WeightedSplit> splits);
  /// Validates an arbitrary labelled tree and returns its canonical form.
  static SymbicTree from_labeled(const LabeledTree& tree);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const LabeledTree& graph() const { return graph_; }
  [[nodiscard]] int num_vertices() const { return graph_.num_vertices; }
  [[nodiscard]] const std::vector<std::pair<int, int>>& neighbors(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  [[nodiscard]] bool is_leaf(int v) const { return v < 2 * n_; }
  [[nodiscard]] int involution(int v) const { return sigma_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] bool is_fixed(int v) const { return involution(v) == v; }
  /// Normalized split of an edge, 0 for leaf edges.
  [[nodiscard]] LeafSet edge_split(int edge) const { return edge_split_[static_cast<std::size_t>(edge)]; }
  /// Leaves on the side of `edge` away from vertex `from`.
  [[nodiscard]] LeafSet far_side(int edge, int from) const;
  [[nodiscard]] int other_end(int edge, int v) const;

  /// Sorted by side.
  [[nodiscard]] const std::vector<WeightedSplit>& splits() const { return splits_; }
  [[nodiscard]] std::vector<SplitOrbit> split_orbits() const;
  [[nodiscard]] Rat split_length(LeafSet side) const;
  [[nodiscard]] TreeKey key() const;

  /// Fixed vertices in path order, starting at the anchor endpoint.
  [[nodiscard]] const std::vector<int>& trunk() const { return trunk_; }
  /// The trunk endpoint whose branches hold the smallest leaf index.
  [[nodiscard]] int anchor() const { return trunk_.front(); }
  /// Neighbor towards the trunk, -1 on trunk vertices.
  [[nodiscard]] int toward_trunk(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] std::vector<Branch> branches() const;

  /// Sum of internal edge lengths along the path between two vertices.
  [[nodiscard]] Rat path_length(int a, int b) const;
  /// Vertices on the path from a to b, inclusive.
  [[nodiscard]] std::vector<int> path(int a, int b) const;

 private:
  SymbicTree() = default;

  int n_ = 0;
  LabeledTree graph_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::vector<int> sigma_;
  std::vector<LeafSet> edge_split_;
  std::vector<LeafSet> below_;  // leaves below each vertex when rooted at leaf 1
  std::vector<int> rooted_parent_;
  std::vector<WeightedSplit> splits_;
  std::vector<int> trunk_;
  std::vector<int> parent_;
};

std::optional<Violation> validate_symbic(const LabeledTree& tree);

std::vector<LeafSet> splits(const SymbicTree& t);
std::vector<SplitOrbit> split_orbits(const SymbicTree& t);
TreeKey canonical_key(const SymbicTree& t);

/// Fixed-point path, ordered from the anchor endpoint.
const std::vector<int>& trunk(const SymbicTree& t);
std::vector<Branch> branches(const SymbicTree& t);

bool is_regular(const SymbicTree& t);
bool is_caterpillar(const SymbicTree& t);
bool has_caterpillar_branches(const SymbicTree& t);
/// Pairs (i, j) such that leaves i and j' hang off the same internal vertex.
std::vector<std::pair<int, int>> cherries(const SymbicTree& t);

/// Uni-colored caterpillar exposed by removing leaf n', listed from the leaf
/// adjacent to n'. Empty when the tree has no brittle twig.
std::vector<int> brittle_twig(const SymbicTree& t);

/// Induced subtree on the kept indices (1-based, sorted), relabelled to
/// 1..k order-preservingly. Lengths of merged edges add up.
std::variant<SymbicTree, Violation> restrict_to(const SymbicTree& t, const std::vector<int>& keep);
/// restrict_to with uni-colored edges contracted: the tree of the principal
/// submatrix on the kept indices.
std::variant<SymbicTree, Violation> principal_subtree(const SymbicTree& t, const std::vector<int>& keep);
/// Sends leaf code c to code_map[c] (-1 drops the leaf), which must be a
/// bijection onto the codes of new_n pairs. Merged edges add lengths.
std::variant<SymbicTree, Violation> map_leaves(const SymbicTree& t, const std::vector<int>& code_map, int new_n);
/// Removes leaves n and n'.
std::variant<SymbicTree, Violation> delete_last_leaf(const SymbicTree& t);

/// Contracts both members of the orbit containing `split`.
SymbicTree contract(const SymbicTree& t, LeafSet split);
/// Regular trees obtained by contracting the orbit of `split` and expanding a
/// different orbit, sorted by key.
std::vector<SymbicTree> resolutions(const SymbicTree& t, LeafSet split);
/// Contracts the orbit of `contract_split` and inserts the orbit of
/// `expand_split` with the same length. Throws ValidationError when the
/// result is not a regular symbic tree.
SymbicTree transition(const SymbicTree& t, LeafSet contract_split, LeafSet expand_split);

/// Same combinatorial type with new lengths, one per orbit in
/// split_orbits() order.
SymbicTree with_orbit_lengths(const SymbicTree& t, const std::vector<Rat>& lengths);

/// Re-labels leaves by an index permutation: perm[i-1] is the new index of i.
SymbicTree relabel(const SymbicTree& t, const std::vector<int>& perm);

std::string describe(const SymbicTree& t);

}  // namespace symbic
