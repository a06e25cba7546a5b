#include "symbic/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "symbic/correspondence.hpp"
#include "symbic/enumeration.hpp"
#include "symbic/fan.hpp"
#include "symbic/matroid.hpp"
#include "symbic/shelling.hpp"

namespace symbic {

namespace {

class Check {
 public:
  explicit Check(CriterionResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      r_.passed = false;
      r_.details.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { r_.details.push_back(what); }

 private:
  CriterionResult& r_;
};

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

Rat random_length(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(1, 24);
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  return Rat(num(rng), den(rng));
}

std::vector<Rat> random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::int64_t> num(-12, 12);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  std::vector<Rat> v;
  for (int i = 0; i < n; ++i) v.emplace_back(num(rng), den(rng));
  return v;
}

SymbicTree random_tree(std::mt19937_64& rng, const TreeCatalog& catalog) {
  std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
  auto it = catalog.trees.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(pick(rng)));
  std::vector<Rat> lengths;
  for (std::size_t k = 0; k < it->first.size(); ++k) lengths.push_back(random_length(rng));
  return with_orbit_lengths(it->second, lengths);
}

LeafSet leaves(std::initializer_list<int> codes) {
  LeafSet s = 0;
  for (int c : codes) s |= leaf_bit(c);
  return s;
}

// Two cherries {1,2'} and {1',2}, the block {3,3',4,4'} and the cherry {4,4'}.
SymbicTree four_by_four(const Rat& a, const Rat& b, const Rat& c) {
  return SymbicTree::from_splits(4, {{leaves({0, 3}), a}, {leaves({1, 2}), a}, {leaves({4, 5, 6, 7}), b}, {leaves({6, 7}), c}});
}

std::string describe_cells(const std::vector<TreeKey>& order, std::size_t i, int n) {
  std::string s = "#" + std::to_string(i) + " ";
  for (LeafSet split : order[i]) s += format_split(split, n);
  return s;
}

void counting(Check& c) {
  const std::vector<int> all{1, 1, 2, 12, 111, 1395};
  const std::vector<int> one_vertex{0, 1, 1, 6, 54};
  const std::vector<int> full{1, 1, 1, 3, 12};
  const auto egf_all = egf_coefficients(Egf::all, 8);
  const auto egf_one = egf_coefficients(Egf::one_vertex_trunk, 8);
  const auto egf_full = egf_coefficients(Egf::trunk_arrangements, 8);
  const auto egf_comp = egf_composition(8).egf_counts();
  std::vector<std::string> constructive;
  for (int n = 0; n <= 5; ++n) {
    const std::size_t built = n == 0 ? 1 : enumerate_regular(n).size();
    constructive.push_back(std::to_string(built));
    const BigInt expected = all[static_cast<std::size_t>(n)];
    c.expect(built == expected, "constructive count at n=" + std::to_string(n));
    c.expect(count_regular(n) == expected, "recurrence count at n=" + std::to_string(n));
    c.expect(egf_all[static_cast<std::size_t>(n)] == expected, "EGF coefficient at n=" + std::to_string(n));
    c.expect(egf_comp[static_cast<std::size_t>(n)] == expected, "composed EGF coefficient at n=" + std::to_string(n));
  }
  c.note("all trees, n=0..5, constructive: " + join(constructive));
  std::vector<std::string> one_built;
  std::vector<std::string> full_built;
  for (int n = 0; n <= 4; ++n) {
    const BigInt a = one_vertex[static_cast<std::size_t>(n)];
    const BigInt f = full[static_cast<std::size_t>(n)];
    c.expect(count_one_vertex_trunk(n) == a, "one-vertex-trunk recurrence at n=" + std::to_string(n));
    c.expect(egf_one[static_cast<std::size_t>(n)] == a, "one-vertex-trunk EGF at n=" + std::to_string(n));
    c.expect(count_full_trunk(n) == f, "full-trunk formula at n=" + std::to_string(n));
    c.expect(egf_full[static_cast<std::size_t>(n)] == f, "full-trunk EGF at n=" + std::to_string(n));
    if (n == 0) {
      one_built.emplace_back("0");
      full_built.emplace_back("1");
      continue;
    }
    int one = 0;
    int many = 0;
    for (const auto& [key, tree] : enumerate_regular(n).trees) {
      const auto blocks = trunk_blocks(tree).size();
      one += blocks == 1 ? 1 : 0;
      many += static_cast<int>(blocks) == n ? 1 : 0;
    }
    one_built.push_back(std::to_string(one));
    full_built.push_back(std::to_string(many));
    c.expect(one == a, "one-block trees in the catalog at n=" + std::to_string(n));
    if (n >= 2) c.expect(many == f, "n-block trees in the catalog at n=" + std::to_string(n));
  }
  c.note("one-vertex trunk, n=0..4, constructive: " + join(one_built));
  c.note("full trunk, n=0..4, constructive: " + join(full_built) + " (n=1 has one block either way)");
}

void rank_examples(Check& c) {
  const TropMatrix id = TropMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const TropMatrix perm = TropMatrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  const int tr = trop_rank(id);
  const int sr = sym_trop_rank(id);
  const int pr = sym_trop_rank(perm);
  c.note("identity: tropical_rank=" + std::to_string(tr) + " symmetric_tropical_rank=" + std::to_string(sr));
  c.note("permuted: symmetric_tropical_rank=" + std::to_string(pr));
  c.expect(tr == 2, "tropical rank of the identity is 2");
  c.expect(sr == 3, "symmetric tropical rank of the identity is 3");
  c.expect(pr == 2, "symmetric tropical rank of the permuted matrix is 2");
}

void round_trips(Check& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TreeCatalog> catalogs;
  for (int n = 1; n <= 6; ++n) catalogs.push_back(enumerate_regular(n));
  int trees = 0;
  int tree_ok = 0;
  int matrix_ok = 0;
  for (int round = 0; round < 100; ++round) {
    for (int n = 1; n <= 6; ++n) {
      const SymbicTree t = random_tree(rng, catalogs[static_cast<std::size_t>(n - 1)]);
      ++trees;
      const SymbicTree back = tree_from_matrix(matrix_A_from_tree(t));
      if (back.key() == t.key() && back.splits() == t.splits()) ++tree_ok;

      const TropMatrix m = matrix_A_from_tree(t) + symmetric_rank_one(random_vector(rng, n));
      const TropMatrix again = matrix_A_from_tree(tree_from_matrix(m));
      if (canonicalize_mod_lineality(again) == canonicalize_mod_lineality(m)) ++matrix_ok;
    }
  }
  c.note(std::to_string(trees) + " random trees, n=1..6");
  c.note("tree -> matrix -> tree exact: " + std::to_string(tree_ok));
  c.note("matrix -> tree -> matrix exact mod lineality: " + std::to_string(matrix_ok));
  c.expect(tree_ok == trees, "tree round trips");
  c.expect(matrix_ok == trees, "matrix round trips");
}

void example_matrices(Check& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1);
  int ok = 0;
  for (int k = 0; k < 20; ++k) {
    const Rat a = random_length(rng);
    const Rat b = random_length(rng);
    const Rat cc = random_length(rng);
    const SymbicTree t = four_by_four(a, b, cc);
    const TropMatrix expect_a =
        TropMatrix::from_rows({{0, a, 0, 0}, {a, 0, 0, 0}, {0, 0, b, b}, {0, 0, b, b + cc}});
    const Rat ab = a + b;
    const Rat abc = a + b + cc;
    const TropMatrix expect_b =
        TropMatrix::from_rows({{2 * a, 0, ab, abc}, {0, 2 * a, ab, abc}, {ab, ab, 0, cc}, {abc, abc, cc, 0}});
    const std::vector<Rat> expect_d{a, a, b, b + cc};
    const int o = t.anchor();
    const bool good = matrix_A_from_tree(t, o) == expect_a && matrix_B_from_tree(t) == expect_b &&
                      base_distances(t, o) == expect_d &&
                      Rat(2) * expect_a + expect_b == symmetric_rank_one(expect_d) && lineality_identity_check(t, o);
    ok += good ? 1 : 0;
  }
  c.note("4x4 example: " + std::to_string(ok) + "/20 random (a, b, c) reproduce A_T, B_T, D and 2A_T + B_T = D D^T");
  c.expect(ok == 20, "4x4 example matrices");

  // Columns 14', 23', 12', 34', 11', 13', 22', 24', 33', 44'; rows a..g.
  const std::vector<std::pair<int, int>> cols{{1, 4}, {2, 3}, {1, 2}, {3, 4}, {1, 1},
                                              {1, 3}, {2, 2}, {2, 4}, {3, 3}, {4, 4}};
  const std::vector<std::vector<std::int64_t>> expected{
      {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 2, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 2, 1, 0, 0}, {0, 1, 0, 1, 0, 1, 0, 0, 2, 0},
      {1, 0, 0, 1, 0, 0, 0, 1, 0, 2}};
  const SymbicTree cayley_tree =
      SymbicTree::from_splits(4, {{leaves({0, 3, 4, 7}), 1}, {leaves({0, 3}), 1}, {leaves({1, 2}), 1},
                                  {leaves({4, 7}), 1}, {leaves({5, 6}), 1}});
  const CayleyMatrix m = cayley_matrix(cayley_tree);
  const auto ground = ground_set(4);
  std::vector<std::vector<std::int64_t>> ours;
  for (const auto& row : m.rows) {
    std::vector<std::int64_t> r;
    for (const auto& col : cols) {
      const auto at = std::find(ground.begin(), ground.end(), col) - ground.begin();
      r.push_back(row[static_cast<std::size_t>(at)]);
    }
    ours.push_back(std::move(r));
  }
  bool matched = false;
  if (ours.size() == expected.size()) {
    std::vector<std::size_t> perm(ours.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool same = true;
      for (std::size_t r = 0; r < perm.size() && same; ++r) same = ours[perm[r]] == expected[r];
      matched = same;
    } while (!matched && std::next_permutation(perm.begin(), perm.end()));
  }
  c.note("Cayley example: " + std::to_string(m.rows.size()) + " x " + std::to_string(m.columns.size()) +
         ", rank " + std::to_string(rank(m)) + (matched ? ", equal up to row order" : ", no row matching"));
  c.expect(matched, "Cayley example matrix up to row/column order");
  c.expect(rank(m) == 7, "Cayley example rank 7");
}

void shellability(Check& c, bool long_running) {
  std::vector<int> sizes{3, 4};
  if (long_running) sizes.push_back(5);
  for (int n : sizes) {
    const auto order = shelling_order(n);
    const auto bad = verify_shelling(order);
    std::string line = "n=" + std::to_string(n) + ": " + std::to_string(order.size()) + " cells, ";
    if (bad) {
      line += "condition fails: " + describe_cells(order, bad->later, n) + " meets earlier " +
              describe_cells(order, bad->earlier, n) + " outside the codimension-one part";
    } else {
      line += "shelling verified";
    }
    c.note(line);
    c.expect(!bad, "shelling order at n=" + std::to_string(n));
    if (bad) {
      const auto greedy = greedy_shelling(order);
      c.note("  diagnostic: greedy reordering " + std::string(greedy && !verify_shelling(*greedy) ? "finds" : "does not find") +
             " a valid shelling at n=" + std::to_string(n));
    }
  }
  if (!long_running) c.note("n=5 skipped (long-running flag off)");
}

void fan_refinement(Check& c) {
  for (int n : {3, 4}) {
    const auto bad = refinement_check(n, 5);
    c.note("refinement n=" + std::to_string(n) + ": " + (bad ? "disagreement" : "ok") + " (5 prime-based samples per tree)");
    c.expect(!bad, "refinement at n=" + std::to_string(n));
  }
  const auto groups = subdivision_witness();
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& g : groups) {
    sizes.push_back(g.second.size());
    total += g.second.size();
  }
  std::sort(sizes.begin(), sizes.end());
  c.note("n=3: " + std::to_string(total) + " cones, " + std::to_string(groups.size()) + " signatures, group sizes " + join(sizes));
  c.expect(total == 12 && groups.size() == 9, "12 cones over 9 signatures");
  c.expect(sizes == std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 2, 2, 2}, "group sizes [1 x 6, 2 x 3]");
  c.note("n=4 coarse cells: " + std::to_string(coarse_cell_count(4)) + " (sampled, no reference value)");
}

void matroid(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    int good = 0;
    const auto catalog = enumerate_regular(n);
    for (const auto& [key, tree] : catalog.trees) good += rank(cayley_matrix(tree)) == 2 * n - 1 ? 1 : 0;
    c.note("n=" + std::to_string(n) + ": rank 2n-1 for " + std::to_string(good) + "/" + std::to_string(catalog.size()));
    c.expect(good == static_cast<int>(catalog.size()), "Cayley rank at n=" + std::to_string(n));
  }
  for (int n : {3, 4}) {
    const auto all = union_bases(n, TreeFilter::all);
    const auto cat = union_bases(n, TreeFilter::caterpillar_branches);
    c.note("n=" + std::to_string(n) + ": " + std::to_string(all.size()) + " bases over all trees, " +
           std::to_string(cat.size()) + " over caterpillar-branch trees");
    c.expect(all == cat, "caterpillar-branch union at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto bad = basis_transition_check(n);
    c.expect(!bad, "basis transition at n=" + std::to_string(n));
  }
  c.note("basis transitions: checked n=1..4");
  for (int n : {3, 4}) {
    const auto report = conjecture_scan(n);
    c.note("caterpillar scan n=" + std::to_string(n) + " (reported only): " + std::to_string(report.all_count) + " vs " +
           std::to_string(report.caterpillar_count) + (report.equal ? ", equal" : ", different"));
  }
}

void properties(Check& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 2);
  int hilbert_bad = 0;
  for (int k = 0; k < 300; ++k) {
    const int len = 1 + static_cast<int>(rng() % 5);
    const auto x = random_vector(rng, len);
    const auto y = random_vector(rng, len);
    const auto z = random_vector(rng, len);
    auto shifted = x;
    const Rat s = random_vector(rng, 1).front();
    for (auto& v : shifted) v += s;
    const Rat dxy = hilbert_distance(x, y);
    if (hilbert_distance(x, x).sign() != 0 || dxy.sign() < 0 || dxy != hilbert_distance(y, x) ||
        hilbert_distance(x, z) > dxy + hilbert_distance(y, z) || hilbert_distance(shifted, y) != dxy) {
      ++hilbert_bad;
    }
  }
  c.note("Hilbert pseudometric laws on 300 random triples: " + std::to_string(300 - hilbert_bad) + " ok");
  c.expect(hilbert_bad == 0, "Hilbert pseudometric laws");

  std::vector<TreeCatalog> catalogs;
  for (int n = 1; n <= 5; ++n) catalogs.push_back(enumerate_regular(n));
  int metric_bad = 0;
  int canon_bad = 0;
  int sig_bad = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + k % 5;
    const SymbicTree t = random_tree(rng, catalogs[static_cast<std::size_t>(n - 1)]);
    const TropMatrix m = matrix_A_from_tree(t);
    const TropMatrix shifted = m + symmetric_rank_one(random_vector(rng, n));
    if (!satisfies_four_point(leaf_metric_from_matrix(shifted))) ++metric_bad;
    if (canonicalize_mod_lineality(shifted) != canonicalize_mod_lineality(m)) ++canon_bad;
    if (n >= 3 && signature(shifted) != signature(m)) ++sig_bad;
  }
  c.note("200 random trees: four-point failures " + std::to_string(metric_bad) + ", canonical-form changes " +
         std::to_string(canon_bad) + ", signature changes " + std::to_string(sig_bad));
  c.expect(metric_bad == 0, "four-point condition of reconstructed metrics");
  c.expect(canon_bad == 0, "lineality invariance of canonical forms");
  c.expect(sig_bad == 0, "lineality invariance of signatures");

  for (int n : {3, 4}) {
    std::vector<const SymbicTree*> trees;
    for (const auto& [key, tree] : catalogs[static_cast<std::size_t>(n - 1)].trees) trees.push_back(&tree);
    bool laws = true;
    for (const auto* a : trees) {
      for (const auto* b : trees) {
        const auto ab = compare_trees(*a, *b);
        const auto ba = compare_trees(*b, *a);
        if ((ab == std::strong_ordering::equal) != (a == b)) laws = false;
        if ((ab < 0) != (ba > 0)) laws = false;
      }
    }
    auto sorted = trees;
    std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) { return compare_trees(*a, *b) < 0; });
    for (std::size_t i = 0; i < sorted.size() && laws; ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) {
        if (compare_trees(*sorted[i], *sorted[j]) >= 0) {
          laws = false;
          break;
        }
      }
    }
    c.note("compare_trees total-order laws at n=" + std::to_string(n) + ": " + (laws ? "ok" : "violated"));
    c.expect(laws, "compare_trees order laws at n=" + std::to_string(n));
  }
}

const char* const kTitles[kCriteria] = {"counting",     "rank examples",   "round trips", "example matrices",
                                        "shellability", "fan refinement", "matroid",     "property suites"};

}  // namespace

CriterionResult run_criterion(int id, const SelftestOptions& options) {
  if (id < 1 || id > kCriteria) throw InvalidInput("criteria are numbered 1.." + std::to_string(kCriteria));
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id - 1];
  r.passed = true;
  Check c(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1:
        counting(c);
        break;
      case 2:
        rank_examples(c);
        break;
      case 3:
        round_trips(c, options.seed);
        break;
      case 4:
        example_matrices(c, options.seed);
        break;
      case 5:
        shellability(c, options.long_running);
        break;
      case 6:
        fan_refinement(c);
        break;
      case 7:
        matroid(c);
        break;
      default:
        properties(c, options.seed);
        break;
    }
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string summary_line(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + " (" + time + ")";
}

}  // namespace symbic
