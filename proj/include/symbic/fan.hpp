#pragma once

// Symbic cones against the coarser fan cut out by the 3x3 tropical minors.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "symbic/tree.hpp"
#include "symbic/trop.hpp"

namespace symbic {

/// Argmin monomials of every 3x3 minor at one matrix.
using ConeSignature = std::map<MinorSpec, std::vector<Monomial>>;

/// A_T with the given orbit lengths (split_orbits() order), canonicalized
/// modulo lineality. Throws InvalidInput for nonpositive or repeated
/// lengths, or a length count that does not match the orbits.
TropMatrix sample_interior(const SymbicTree& t, const std::vector<Rat>& lengths);

/// n >= 3.
ConeSignature signature(const TropMatrix& m);

/// First `count` primes.
std::vector<std::int64_t> primes(int count);

/// Length tuple number `k` for a tree with `orbits` orbits: consecutive
/// primes for even k, their reciprocals for odd k, no prime reused.
std::vector<Rat> generic_lengths(int orbits, int k);

inline constexpr int kMaxFanN = 5;

struct SampleSet {
  TreeKey tree;
  std::vector<TropMatrix> samples;
};

struct RefinementCounterExample {
  TreeKey tree;
  std::size_t sample = 0;  // disagrees with sample 0
};

std::optional<RefinementCounterExample> refinement_check(const std::vector<SampleSet>& sets);
std::optional<RefinementCounterExample> refinement_check(int n, int samples_per_tree);

/// Catalog trees grouped by the signature of one generic sample.
std::vector<std::pair<ConeSignature, std::vector<TreeKey>>> signature_groups(int n);

/// Number of distinct signatures. n <= 4.
int coarse_cell_count(int n);

/// signature_groups(3).
std::vector<std::pair<ConeSignature, std::vector<TreeKey>>> subdivision_witness();

}  // namespace symbic
