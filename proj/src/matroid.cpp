#include "symbic/matroid.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "symbic/correspondence.hpp"
#include "symbic/enumeration.hpp"

namespace symbic {

int integer_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<__int128>> a;
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidInput("ragged matrix");
    a.emplace_back(r.begin(), r.end());
  }
  // Bareiss elimination: every intermediate entry is a minor of the input.
  int rank = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    auto pivot = static_cast<std::size_t>(rank);
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[static_cast<std::size_t>(rank)]);
    const auto& p = a[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < a.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (p[c] * a[r][k] - a[r][c] * p[k]) / prev;
      a[r][c] = 0;
    }
    prev = p[c];
    ++rank;
  }
  return rank;
}

std::vector<std::pair<int, int>> ground_set(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::vector<std::int64_t> CayleyMatrix::column(int c) const {
  std::vector<std::int64_t> out;
  for (const auto& r : rows) out.push_back(r[static_cast<std::size_t>(c)]);
  return out;
}

CayleyMatrix cayley_matrix(const SymbicTree& t, int o) {
  if (!is_regular(t)) throw InvalidInput("Cayley matrices are defined for regular trees");
  const int n = t.n();
  if (n > kMaxMatroidN + 1) throw UnsupportedSize("Cayley matrices support n <= 6");
  const auto table = divergence_table(t, o);
  CayleyMatrix m;
  m.n = n;
  m.columns = ground_set(n);
  std::vector<int> row_of(static_cast<std::size_t>(t.num_vertices()), -1);
  std::vector<int> node_of_column;
  for (const auto& [i, j] : m.columns) {
    const int v = table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    if (v == o) {
      node_of_column.push_back(-1);
      continue;
    }
    const int rep = std::min(v, t.involution(v));
    if (row_of[static_cast<std::size_t>(rep)] < 0) {
      row_of[static_cast<std::size_t>(rep)] = m.node_rows();
      m.node_vertex.push_back(rep);
    }
    node_of_column.push_back(row_of[static_cast<std::size_t>(rep)]);
  }
  const std::size_t width = m.columns.size();
  m.rows.assign(static_cast<std::size_t>(m.node_rows() + n), std::vector<std::int64_t>(width, 0));
  for (std::size_t c = 0; c < width; ++c) {
    if (node_of_column[c] >= 0) m.rows[static_cast<std::size_t>(node_of_column[c])][c] = 1;
    const auto [i, j] = m.columns[c];
    m.rows[static_cast<std::size_t>(m.node_rows() + i - 1)][c] += 1;
    m.rows[static_cast<std::size_t>(m.node_rows() + j - 1)][c] += 1;
  }
  return m;
}

CayleyMatrix cayley_matrix(const SymbicTree& t) { return cayley_matrix(t, t.anchor()); }

int rank(const CayleyMatrix& m) { return integer_rank(m.rows); }

BasisSet matroid_bases(const CayleyMatrix& m) {
  const int n = m.n;
  if (n > kMaxMatroidN) throw UnsupportedSize("basis enumeration supports n <= 5");
  const int width = static_cast<int>(m.columns.size());
  const int k = 2 * n - 1;
  BasisSet out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<std::vector<std::int64_t>> sub(m.rows.size(), std::vector<std::int64_t>(static_cast<std::size_t>(k)));
    ColumnSet mask = 0;
    for (int c = 0; c < k; ++c) {
      const int col = pick[static_cast<std::size_t>(c)];
      mask |= ColumnSet{1} << col;
      for (std::size_t r = 0; r < m.rows.size(); ++r) sub[r][static_cast<std::size_t>(c)] = m.rows[r][static_cast<std::size_t>(col)];
    }
    if (integer_rank(std::move(sub)) == k) out.insert(mask);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == width - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

BasisSet matroid_bases(const SymbicTree& t) { return matroid_bases(cayley_matrix(t)); }

TreeFilter parse_filter(const std::string& text) {
  if (text == "all") return TreeFilter::all;
  if (text == "catbranch" || text == "caterpillar_branches") return TreeFilter::caterpillar_branches;
  if (text == "caterpillar") return TreeFilter::caterpillar;
  throw InvalidInput("unknown filter '" + text + "' (expected all, catbranch or caterpillar)");
}

std::string to_string(TreeFilter f) {
  switch (f) {
    case TreeFilter::all:
      return "all";
    case TreeFilter::caterpillar_branches:
      return "catbranch";
    case TreeFilter::caterpillar:
      return "caterpillar";
  }
  return "all";
}

bool passes(const SymbicTree& t, TreeFilter f) {
  switch (f) {
    case TreeFilter::all:
      return true;
    case TreeFilter::caterpillar_branches:
      return has_caterpillar_branches(t);
    case TreeFilter::caterpillar:
      return is_caterpillar(t);
  }
  return false;
}

BasisSet union_bases(int n, TreeFilter filter) {
  if (n < 1 || n > kMaxMatroidN) throw UnsupportedSize("basis unions support 1 <= n <= 5");
  BasisSet out;
  for (const auto& [key, tree] : enumerate_regular(n).trees) {
    if (!passes(tree, filter)) continue;
    const BasisSet b = matroid_bases(tree);
    out.insert(b.begin(), b.end());
  }
  return out;
}

std::string format_columns(ColumnSet s, int n) {
  const auto cols = ground_set(n);
  std::string out = "{";
  bool first = true;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (((s >> c) & 1U) == 0) continue;
    if (!first) out += ", ";
    out += std::to_string(cols[c].first) + std::to_string(cols[c].second) + "'";
    first = false;
  }
  return out + "}";
}

ConjectureReport conjecture_scan(int n) {
  ConjectureReport r;
  r.n = n;
  const BasisSet all = union_bases(n, TreeFilter::all);
  const BasisSet cat = union_bases(n, TreeFilter::caterpillar);
  r.all_count = all.size();
  r.caterpillar_count = cat.size();
  std::set_difference(all.begin(), all.end(), cat.begin(), cat.end(), std::back_inserter(r.missing));
  r.equal = r.missing.empty();

  std::ostringstream os;
  os << "# Caterpillar basis scan, n = " << n << "\n\n";
  os << "- bases over all regular trees: " << r.all_count << "\n";
  os << "- bases over caterpillar trees: " << r.caterpillar_count << "\n";
  os << "- equal: " << (r.equal ? "yes" : "no") << "\n\n";
  os << "Contracting a trunk edge need not admit a transition that shortens the trunk, so the usual\n"
        "transition argument does not reach caterpillars from every tree. This scan reports data only.\n\n";
  if (!r.missing.empty()) {
    os << "## Bases missing from the caterpillar union\n\n";
    for (ColumnSet b : r.missing) os << "- " << format_columns(b, n) << "\n";
    os << "\n";
  }
  os << "## Caterpillar union\n\n";
  for (ColumnSet b : cat) os << "- " << format_columns(b, n) << "\n";
  r.text = os.str();
  return r;
}

FaceAdjacency face_adjacency(const std::map<TreeKey, SymbicTree>& cells) {
  FaceAdjacency adj;
  for (const auto& [key, tree] : cells) {
    for (std::size_t k = 0; k < key.size(); ++k) {
      TreeKey face = key;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      adj[face].push_back(key);
    }
  }
  return adj;
}

std::optional<TransitionCounterExample> basis_transition_check(const FaceAdjacency& adjacency,
                                                                const std::map<TreeKey, BasisSet>& bases) {
  for (const auto& [face, cells] : adjacency) {
    for (const auto& cell : cells) {
      for (ColumnSet b : bases.at(cell)) {
        bool found = false;
        for (const auto& other : cells) {
          if (other != cell && bases.at(other).count(b) != 0) {
            found = true;
            break;
          }
        }
        if (!found) return TransitionCounterExample{face, cell, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<TransitionCounterExample> basis_transition_check(int n) {
  if (n < 1 || n > 4) throw UnsupportedSize("basis transition check supports 1 <= n <= 4");
  const TreeCatalog catalog = enumerate_regular(n);
  std::map<TreeKey, BasisSet> bases;
  for (const auto& [key, tree] : catalog.trees) bases.emplace(key, matroid_bases(tree));
  return basis_transition_check(face_adjacency(catalog.trees), bases);
}

}  // namespace symbic
