#pragma once

// Symmetric rank-2 matrices <-> symbic trees.
//
// Matrix index i (0-based) corresponds to leaf pair i+1, i.e. leaf codes 2i
// (row leaf) and 2i+1 (column leaf).

#include <vector>

#include "symbic/tree.hpp"
#include "symbic/trop.hpp"

namespace symbic {

/// Internal path lengths between all 2n leaves, indexed by leaf code.
class LeafMetric {
 public:
  explicit LeafMetric(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int leaves() const { return 2 * n_; }
  [[nodiscard]] const Rat& operator()(int a, int b) const { return d_[index(a, b)]; }
  void set(int a, int b, const Rat& value);

  friend bool operator==(const LeafMetric&, const LeafMetric&) = default;

 private:
  [[nodiscard]] std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(2 * n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<Rat> d_;
};

/// d(a,b) + d(c,e) <= max of the other two pairings, with the maximum
/// attained twice, for every quadruple of leaves.
bool satisfies_four_point(const LeafMetric& d);

/// Path metric of a tree (leaf edges count as length 0).
LeafMetric leaf_metric_from_tree(const SymbicTree& t);

/// Leaf metric of the tree spanned by a tropical rank-2 matrix. Every
/// formula is invariant under M -> M + X (.) X^T:
///   d(i, k)   = Hilbert distance of rows i and k,
///   d(i', k') = Hilbert distance of columns i and k,
///   d(i, j')  = max over k, l of M_ik + M_lj - M_ij - M_lk.
/// Throws InvalidInput for non-square input.
LeafMetric leaf_metric_from_matrix(const TropMatrix& m);

/// Builds the leaf-labelled metric tree realizing an additive metric,
/// without checking any symbic condition. Throws Error if the metric is not
/// a tree metric.
LabeledTree labeled_tree_from_metric(const LeafMetric& d);

/// The bicolored tree of a tropical rank-2 matrix, unvalidated. Throws
/// NotRankTwo when the matrix has tropical rank above 2.
LabeledTree bicolored_tree_from_matrix(const TropMatrix& m);

/// The symbic tree of a symmetric matrix of symmetric tropical rank 2.
/// Throws NotRankTwo, RankOneInput (n >= 2 only), or ValidationError.
SymbicTree tree_from_matrix(const TropMatrix& m);

/// V[i][j] = the vertex where the paths o -> leaf i and o -> leaf j' part.
std::vector<std::vector<int>> divergence_table(const SymbicTree& t, int o);

/// A_ij = distance from o to the vertex where the paths o -> i and o -> j'
/// part. `o` must be a fixed vertex.
TropMatrix matrix_A_from_tree(const SymbicTree& t, int o);
TropMatrix matrix_A_from_tree(const SymbicTree& t);  // o = t.anchor()

/// B_ij = internal path length from leaf i to leaf j'.
TropMatrix matrix_B_from_tree(const SymbicTree& t);

/// D_i = internal path length from o to leaf i.
std::vector<Rat> base_distances(const SymbicTree& t, int o);

/// 2 A_T + B_T == D (.) D^T.
bool lineality_identity_check(const SymbicTree& t, int o);

}  // namespace symbic
