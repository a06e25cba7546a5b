#pragma once

// Min-plus linear algebra on exact rational matrices: tropical determinants
// of minors, ordinary and symmetric tropical rank, the tropical Hilbert
// metric and a normal form modulo the lineality space {X + X^T}.
//
// Matrix and minor indices are 0-based throughout.

#include <span>
#include <utility>
#include <vector>

#include "symbic/rational.hpp"

namespace symbic {

/// Square matrix of rationals read with (min, +) semantics.
class TropMatrix {
 public:
  TropMatrix() = default;
  explicit TropMatrix(int n);
  TropMatrix(int n, std::vector<Rat> entries);
  static TropMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] const Rat& operator()(int i, int j) const { return entries_[index(i, j)]; }
  Rat& operator()(int i, int j) { return entries_[index(i, j)]; }
  [[nodiscard]] const std::vector<Rat>& entries() const { return entries_; }
  [[nodiscard]] std::span<const Rat> row(int i) const;
  [[nodiscard]] std::vector<Rat> column(int j) const;

  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] TropMatrix transpose() const;
  [[nodiscard]] TropMatrix negated() const;
  /// Principal submatrix on the given (sorted) indices.
  [[nodiscard]] TropMatrix principal(std::span<const int> indices) const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<Rat> entries_;
};

/// Classical entrywise sum.
TropMatrix operator+(const TropMatrix& a, const TropMatrix& b);
/// Classical scalar multiple.
TropMatrix operator*(const Rat& s, const TropMatrix& a);

/// X (.) X^T, i.e. the matrix with entries x_i + x_j.
TropMatrix symmetric_rank_one(std::span<const Rat> x);

/// Largest minor side handled by direct permutation enumeration (9! terms).
inline constexpr int kMaxMinorSize = 9;

struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;

  [[nodiscard]] int size() const { return static_cast<int>(rows.size()); }
  /// Throws InvalidInput unless rows/cols are strictly increasing, equally
  /// long, at least 2 long and inside [0, n).
  void validate(int n) const;
  static MinorSpec full(int n);

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
  friend auto operator<=>(const MinorSpec&, const MinorSpec&) = default;
};

/// sigma[i] is the position in spec.cols matched with spec.rows[i].
using Permutation = std::vector<int>;

/// A monomial of the symmetric determinant: a sorted multiset of index
/// pairs {i, j} with i <= j (diagonal pairs allowed).
using Monomial = std::vector<std::pair<int, int>>;

struct TropDet {
  Rat value;
  std::vector<Permutation> argmin;  // lexicographic order
};

/// Minimum over permutations of the summed entries of the minor, together
/// with every minimizing permutation. Throws UnsupportedSize above
/// kMaxMinorSize.
TropDet trop_det(const TropMatrix& m, const MinorSpec& spec);

Monomial sym_monomial_of_perm(const MinorSpec& spec, const Permutation& sigma);

/// Distinct monomials attaining the minimum (sorted).
std::vector<Monomial> argmin_monomials(const TropMatrix& m, const MinorSpec& spec);

/// At least two minimizing permutations.
bool minor_degenerate(const TropMatrix& m, const MinorSpec& spec);
/// Minimizing permutations cover at least two distinct monomials.
bool sym_minor_degenerate(const TropMatrix& m, const MinorSpec& spec);

/// Every k x k minor (all row and column index sets) as a MinorSpec.
std::vector<MinorSpec> all_minors(int n, int k);

/// Smallest r such that every (r+1)-minor is degenerate.
int trop_rank(const TropMatrix& m);
/// Same with symmetric (monomial) degeneracy. Requires a symmetric matrix.
int sym_trop_rank(const TropMatrix& m);
/// sym_trop_rank(m) <= 2, checked on 3x3 minors only.
bool has_sym_rank_at_most_two(const TropMatrix& m);
/// trop_rank(m) <= 2, checked on 3x3 minors only.
bool has_trop_rank_at_most_two(const TropMatrix& m);

/// max_i (x_i - y_i) - min_i (x_i - y_i).
Rat hilbert_distance(std::span<const Rat> x, std::span<const Rat> y);

/// M - X (.) X^T with X chosen so that the first row (and column) is zero.
TropMatrix canonicalize_mod_lineality(const TropMatrix& m);

}  // namespace symbic
