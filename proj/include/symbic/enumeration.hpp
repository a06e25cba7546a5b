#pragma once

// Counting and constructive enumeration of regular symbic trees.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <vector>

#include "symbic/tree.hpp"

namespace symbic {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Power series truncated after x^order, exact rational coefficients.
class RationalSeries {
 public:
  explicit RationalSeries(int order);
  RationalSeries(int order, std::vector<BigRat> coeffs);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const BigRat& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  BigRat& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] const std::vector<BigRat>& coeffs() const { return c_; }

  static RationalSeries constant(int order, const BigRat& value);
  static RationalSeries x(int order);

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const BigRat& s, const RationalSeries& a);
  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

  /// 1 / a; needs a nonzero constant term.
  [[nodiscard]] RationalSeries inverse() const;
  /// Square root with constant term 1, by Newton iteration; needs a[0] == 1.
  [[nodiscard]] RationalSeries sqrt() const;
  /// this(inner(x)); needs inner[0] == 0.
  [[nodiscard]] RationalSeries compose(const RationalSeries& inner) const;
  /// k! * [x^k] for every k (must be integers).
  [[nodiscard]] std::vector<BigInt> egf_counts() const;

 private:
  int order_ = 0;
  std::vector<BigRat> c_;
};

inline constexpr int kMaxSeriesOrder = 30;

/// One-vertex-trunk trees: a_1 = a_2 = 1, a_n = sum_k C(n,k) a_k a_{n-k}.
BigInt count_one_vertex_trunk(int n);
/// n!/2 for n >= 2, else 1.
BigInt count_full_trunk(int n);

/// All regular trees: blocks counted by count_one_vertex_trunk, arranged
/// along the trunk in count_full_trunk(k) ways.
BigInt count_regular(int n);

enum class Egf { one_vertex_trunk, trunk_arrangements, all };

/// Closed-form series: (1 - sqrt(1-4x+2x^2))/2, (1 + x + 1/(1-x))/2, and
/// 3/4 - sqrt(1-4x+2x^2)/4 + 1/(1 + sqrt(1-4x+2x^2)).
RationalSeries egf_series(Egf which, int order = kMaxSeriesOrder);
/// The trunk-arrangement series composed with the one-vertex-trunk series.
RationalSeries egf_composition(int order = kMaxSeriesOrder);
/// n! [x^n] of egf_series(which).
std::vector<BigInt> egf_coefficients(Egf which, int order = kMaxSeriesOrder);

inline constexpr int kMaxEnumerationN = 7;
inline constexpr int kMaxFaceN = 5;

struct TreeCatalog {
  int n = 0;
  std::map<TreeKey, SymbicTree> trees;

  [[nodiscard]] std::size_t size() const { return trees.size(); }
};

/// Trunk blocks of a tree: the leaf indices carried by each trunk vertex,
/// in trunk order (one block for a midpoint trunk).
std::vector<std::vector<int>> trunk_blocks(const SymbicTree& t);

/// All regular n+n symbic trees with unit lengths, generated from set
/// partitions arranged along the trunk. n <= 7.
TreeCatalog enumerate_regular(int n);

/// Face types: every nonempty subset of a regular tree's split orbits,
/// keyed by the number of orbits. n <= 5.
std::map<int, std::set<TreeKey>> enumerate_faces(int n);

}  // namespace symbic
