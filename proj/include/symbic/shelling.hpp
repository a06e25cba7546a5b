#pragma once

// The simplicial complex of symbic trees and a recursive shelling order.

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "symbic/enumeration.hpp"
#include "symbic/tree.hpp"

namespace symbic {

/// Where leaf n is attached to an (n-1)+(n-1) tree: beyond a trunk
/// endpoint, or on an edge (n' then goes on the image edge; a trunk edge
/// gets one new trunk vertex carrying both).
struct AttachmentPlace {
  enum class Kind { endpoint, edge };
  Kind kind = Kind::edge;
  int vertex = -1;  // endpoint
  int edge = -1;    // edge index in the base tree's graph

  friend bool operator==(const AttachmentPlace&, const AttachmentPlace&) = default;
};

struct EdgeOrder {
  int start = -1;
  /// Endpoint at `start` first, then every edge sorted by (smallest leaf
  /// code beyond it, distance from start), then the other endpoint if any.
  std::vector<AttachmentPlace> places;
};

/// `v` must be a trunk endpoint.
EdgeOrder edge_order(const SymbicTree& s, int v);
EdgeOrder edge_order(const SymbicTree& s);  // v = s.anchor()

/// The (n+1)+(n+1) tree with the new pair attached at `place`, or nullopt
/// when that tree is not symbic. Internal lengths of the result are 1.
std::optional<SymbicTree> attach_next_leaf(const SymbicTree& s, const AttachmentPlace& place);

/// Removes the twig leaves and their images, then relabels the survivors.
SymbicTree reduce_twig(const SymbicTree& t, const std::vector<int>& twig);

/// Recursive comparison of two regular trees with the same n. Returns less
/// when `a` precedes `b`.
std::strong_ordering compare_trees(const SymbicTree& a, const SymbicTree& b);

inline constexpr int kMaxShellingN = 5;

/// Orbit sets of the regular trees, one maximal cell each.
struct SymbicComplex {
  int n = 0;
  std::vector<LeafSet> vertices;
  std::map<TreeKey, SymbicTree> cells;
};

SymbicComplex symbic_complex(int n);

/// Shelling orders for every size up to max_n, built bottom-up.
class ShellingOrder {
 public:
  explicit ShellingOrder(int max_n);

  [[nodiscard]] int max_n() const { return max_n_; }
  [[nodiscard]] const std::vector<TreeKey>& order(int n) const;
  [[nodiscard]] int rank(int n, const TreeKey& key) const;
  [[nodiscard]] const SymbicTree& tree(int n, const TreeKey& key) const;

 private:
  int max_n_ = 0;
  std::vector<TreeCatalog> catalogs_;
  std::vector<std::vector<TreeKey>> order_;
  std::vector<std::map<TreeKey, int>> rank_;
};

/// Maximal cells of the n+n complex in shelling order.
std::vector<TreeKey> shelling_order(int n);

struct ShellingCounterExample {
  std::size_t earlier = 0;  // index of C'
  std::size_t later = 0;    // index of C
};

/// Checks the shelling condition for consecutive prefixes of `order`.
/// Throws InvalidInput when the cells do not all have the same size.
std::optional<ShellingCounterExample> verify_shelling(const std::vector<TreeKey>& order);

/// Rebuilds an order by repeatedly taking the earliest remaining cell of
/// `order` that can be appended without breaking the shelling condition.
/// Returns nullopt if no remaining cell fits at some step.
std::optional<std::vector<TreeKey>> greedy_shelling(const std::vector<TreeKey>& order);

}  // namespace symbic
