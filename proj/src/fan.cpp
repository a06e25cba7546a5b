#include "symbic/fan.hpp"

#include <algorithm>
#include <set>

#include "symbic/correspondence.hpp"
#include "symbic/enumeration.hpp"

namespace symbic {

TropMatrix sample_interior(const SymbicTree& t, const std::vector<Rat>& lengths) {
  if (lengths.size() != t.split_orbits().size()) throw InvalidInput("one length per split orbit expected");
  std::set<Rat> seen;
  for (const Rat& l : lengths) {
    if (l.sign() <= 0) throw InvalidInput("sample lengths must be positive");
    if (!seen.insert(l).second) throw InvalidInput("sample lengths must be pairwise distinct");
  }
  return canonicalize_mod_lineality(matrix_A_from_tree(with_orbit_lengths(t, lengths)));
}

ConeSignature signature(const TropMatrix& m) {
  if (m.size() < 3) throw InvalidInput("signatures need n >= 3");
  ConeSignature out;
  for (auto& spec : all_minors(m.size(), 3)) {
    auto monomials = argmin_monomials(m, spec);
    out.emplace(std::move(spec), std::move(monomials));
  }
  return out;
}

std::vector<std::int64_t> primes(int count) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; static_cast<int>(out.size()) < count; ++p) {
    if (std::all_of(out.begin(), out.end(), [p](std::int64_t q) { return p % q != 0; })) out.push_back(p);
  }
  return out;
}

std::vector<Rat> generic_lengths(int orbits, int k) {
  const auto ps = primes(orbits * (k + 1));
  std::vector<Rat> out;
  for (int i = 0; i < orbits; ++i) {
    const std::int64_t p = ps[static_cast<std::size_t>(orbits * k + i)];
    out.push_back(k % 2 == 0 ? Rat(p) : Rat(1, p));
  }
  return out;
}

std::optional<RefinementCounterExample> refinement_check(const std::vector<SampleSet>& sets) {
  for (const auto& set : sets) {
    if (set.samples.empty()) continue;
    const ConeSignature first = signature(set.samples.front());
    for (std::size_t s = 1; s < set.samples.size(); ++s) {
      if (signature(set.samples[s]) != first) return RefinementCounterExample{set.tree, s};
    }
  }
  return std::nullopt;
}

namespace {

void check_fan_size(int n, int cap) {
  if (n < 3) throw InvalidInput("fan analysis needs n >= 3");
  if (n > cap) throw UnsupportedSize("fan analysis supports n <= " + std::to_string(cap));
}

}  // namespace

std::optional<RefinementCounterExample> refinement_check(int n, int samples_per_tree) {
  check_fan_size(n, kMaxFanN);
  std::vector<SampleSet> sets;
  for (const auto& [key, tree] : enumerate_regular(n).trees) {
    SampleSet set{key, {}};
    const int orbits = static_cast<int>(key.size());
    for (int k = 0; k < samples_per_tree; ++k) set.samples.push_back(sample_interior(tree, generic_lengths(orbits, k)));
    sets.push_back(std::move(set));
  }
  return refinement_check(sets);
}

std::vector<std::pair<ConeSignature, std::vector<TreeKey>>> signature_groups(int n) {
  check_fan_size(n, kMaxFanN);
  std::map<ConeSignature, std::vector<TreeKey>> groups;
  for (const auto& [key, tree] : enumerate_regular(n).trees) {
    groups[signature(sample_interior(tree, generic_lengths(static_cast<int>(key.size()), 0)))].push_back(key);
  }
  return {groups.begin(), groups.end()};
}

int coarse_cell_count(int n) {
  check_fan_size(n, 4);
  return static_cast<int>(signature_groups(n).size());
}

std::vector<std::pair<ConeSignature, std::vector<TreeKey>>> subdivision_witness() { return signature_groups(3); }

}  // namespace symbic
