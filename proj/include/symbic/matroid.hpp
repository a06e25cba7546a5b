#pragma once

// Algebraic matroids of symbic cones through Cayley matrices.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symbic/tree.hpp"

namespace symbic {

/// Exact rank of an integer matrix (fraction-free elimination).
int integer_rank(std::vector<std::vector<std::int64_t>> rows);

/// Pairs (i, j), 1 <= i <= j <= n, in lexicographic order.
std::vector<std::pair<int, int>> ground_set(int n);

struct CayleyMatrix {
  int n = 0;
  std::vector<std::pair<int, int>> columns;  // ground_set(n)
  /// Representative vertex of each node row (the smaller of the orbit).
  std::vector<int> node_vertex;
  /// node rows first, then n lineality rows.
  std::vector<std::vector<std::int64_t>> rows;

  [[nodiscard]] int node_rows() const { return static_cast<int>(node_vertex.size()); }
  [[nodiscard]] std::vector<std::int64_t> column(int c) const;
};

/// Column (i, j): 1 in the row of the node where the paths o -> i and
/// o -> j' part (none when that is o), plus e_i + e_j in the lineality rows.
/// Node rows are ordered by the first column that uses them. Throws
/// InvalidInput for non-regular trees or a non-fixed o.
CayleyMatrix cayley_matrix(const SymbicTree& t, int o);
CayleyMatrix cayley_matrix(const SymbicTree& t);  // o = t.anchor()

int rank(const CayleyMatrix& m);

/// A column subset as a bitmask over ground_set positions.
using ColumnSet = std::uint32_t;
using BasisSet = std::set<ColumnSet>;

inline constexpr int kMaxMatroidN = 5;

/// All (2n-1)-subsets of columns of full rank. n <= 5.
BasisSet matroid_bases(const CayleyMatrix& m);
BasisSet matroid_bases(const SymbicTree& t);

enum class TreeFilter { all, caterpillar_branches, caterpillar };

TreeFilter parse_filter(const std::string& text);
std::string to_string(TreeFilter f);
bool passes(const SymbicTree& t, TreeFilter f);

/// Union of matroid_bases over the regular trees passing the filter.
BasisSet union_bases(int n, TreeFilter filter);

struct ConjectureReport {
  int n = 0;
  bool equal = false;
  std::size_t all_count = 0;
  std::size_t caterpillar_count = 0;
  std::vector<ColumnSet> missing;  // in the full union but not the caterpillar union
  std::string text;                // markdown
};

ConjectureReport conjecture_scan(int n);

/// "{11', 12', 23'}".
std::string format_columns(ColumnSet s, int n);

struct TransitionCounterExample {
  TreeKey face;
  TreeKey cell;
  ColumnSet basis = 0;
};

/// Cells (maximal orbit sets) containing each codimension-one face.
using FaceAdjacency = std::map<TreeKey, std::vector<TreeKey>>;

FaceAdjacency face_adjacency(const std::map<TreeKey, SymbicTree>& cells);

/// For every face and every basis of a cell containing it, the basis must
/// also be a basis of another cell containing the face.
std::optional<TransitionCounterExample> basis_transition_check(const FaceAdjacency& adjacency,
                                                                const std::map<TreeKey, BasisSet>& bases);
std::optional<TransitionCounterExample> basis_transition_check(int n);

}  // namespace symbic
