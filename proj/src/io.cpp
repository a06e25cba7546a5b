#include "symbic/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace symbic::io {

namespace {

Rat cell(const json& c) {
  if (c.is_string()) return Rat::parse(c.get<std::string>());
  if (c.is_number_integer()) return Rat(c.get<std::int64_t>());
  throw InvalidInput("matrix cells must be integers or fraction strings");
}

json length_json(const std::optional<Rat>& len) { return len ? json(len->str()) : json(nullptr); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

json matrix_to_json(const TropMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"n", m.size()}, {"entries", rows}};
}

TropMatrix matrix_from_json(const json& j) {
  try {
    const int n = field(j, "n").get<int>();
    const json& rows = field(j, "entries");
    if (n < 1 || !rows.is_array() || static_cast<int>(rows.size()) != n) throw InvalidInput("entries must have n rows");
    TropMatrix m(n);
    for (int i = 0; i < n; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) throw InvalidInput("every row must have n cells");
      for (int k = 0; k < n; ++k) m(i, k) = cell(row[static_cast<std::size_t>(k)]);
    }
    return m;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad matrix JSON: ") + e.what());
  }
}

TropMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Rat> row;
    std::istringstream cells(line);
    std::string c;
    while (std::getline(cells, c, ',')) row.push_back(Rat::parse(c));
    rows.push_back(std::move(row));
  }
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InvalidInput("CSV matrix must be square");
  }
  if (rows.empty()) throw InvalidInput("empty CSV matrix");
  return TropMatrix::from_rows(rows);
}

json tree_to_json(const LabeledTree& t) {
  json vertices = json::array();
  for (int v = 0; v < t.num_vertices; ++v) vertices.push_back(v);
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"len", length_json(e.length)}});
  json leaves = json::object();
  for (int code = 0; code < 2 * t.n; ++code) {
    leaves[LeafLabel::from_code(code).key()] = t.leaf_vertex[static_cast<std::size_t>(code)];
  }
  return {{"n", t.n}, {"vertices", vertices}, {"edges", edges}, {"leaves", leaves}};
}

json tree_to_json(const SymbicTree& t) { return tree_to_json(t.graph()); }

LabeledTree labeled_tree_from_json(const json& j) {
  try {
    LabeledTree t;
    t.n = field(j, "n").get<int>();
    if (t.n < 1 || t.n > kMaxLeafPairs) throw InvalidInput("tree n out of range");
    std::set<int> ids;
    for (const json& v : field(j, "vertices")) {
      if (!ids.insert(v.get<int>()).second) throw InvalidInput("duplicate vertex id");
    }
    t.num_vertices = static_cast<int>(ids.size());
    if (!ids.empty() && (*ids.begin() != 0 || *ids.rbegin() != t.num_vertices - 1)) {
      throw InvalidInput("vertex ids must be 0..V-1");
    }
    for (const json& e : field(j, "edges")) {
      TreeEdge edge{field(e, "u").get<int>(), field(e, "v").get<int>(), std::nullopt};
      const json& len = field(e, "len");
      if (!len.is_null()) edge.length = cell(len);
      t.edges.push_back(edge);
    }
    t.leaf_vertex.assign(static_cast<std::size_t>(2 * t.n), -1);
    for (const auto& [key, vid] : field(j, "leaves").items()) {
      const LeafLabel l = LeafLabel::parse_key(key);
      if (l.index > t.n) throw InvalidInput("leaf " + key + " out of range");
      t.leaf_vertex[static_cast<std::size_t>(l.code())] = vid.get<int>();
    }
    for (int code = 0; code < 2 * t.n; ++code) {
      if (t.leaf_vertex[static_cast<std::size_t>(code)] < 0) {
        throw InvalidInput("leaf " + LeafLabel::from_code(code).key() + " missing");
      }
    }
    return t;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad tree JSON: ") + e.what());
  }
}

SymbicTree tree_from_json(const json& j) { return SymbicTree::from_labeled(labeled_tree_from_json(j)); }

std::string tree_to_dot(const SymbicTree& t) {
  std::ostringstream os;
  os << "graph symbic {\n  node [shape=point];\n";
  for (int code = 0; code < 2 * t.n(); ++code) {
    const LeafLabel l = LeafLabel::from_code(code);
    os << "  " << code << " [shape=plaintext, label=\"" << l.str() << "\", fontcolor="
       << (l.color == Color::row ? "blue" : "red") << "];\n";
  }
  for (int v = 2 * t.n(); v < t.num_vertices(); ++v) {
    if (t.is_fixed(v)) os << "  " << v << " [shape=circle, width=0.08];\n";
  }
  for (const auto& e : t.graph().edges) {
    os << "  " << e.u << " -- " << e.v;
    std::vector<std::string> attrs;
    if (e.length) attrs.push_back("label=\"" + e.length->str() + "\"");
    if (t.is_fixed(e.u) && t.is_fixed(e.v)) attrs.emplace_back("style=bold, penwidth=3");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

json key_to_json(const TreeKey& key, int n) {
  json splits = json::array();
  json masks = json::array();
  for (LeafSet s : key) {
    splits.push_back(format_split(s, n));
    masks.push_back(s);
  }
  return {{"splits", splits}, {"masks", masks}};
}

TreeKey key_from_json(const json& j) {
  TreeKey key;
  for (const json& m : field(j, "masks")) key.push_back(m.get<LeafSet>());
  return key;
}

json catalog_to_json(const TreeCatalog& c) {
  json trees = json::array();
  for (const auto& [key, tree] : c.trees) {
    json entry = tree_to_json(tree);
    entry["key"] = key_to_json(key, c.n);
    trees.push_back(std::move(entry));
  }
  return {{"n", c.n}, {"count", c.size()}, {"trees", trees}};
}

TreeCatalog catalog_from_json(const json& j) {
  TreeCatalog c;
  c.n = field(j, "n").get<int>();
  for (const json& entry : field(j, "trees")) {
    SymbicTree t = tree_from_json(entry);
    TreeKey key = t.key();
    c.trees.emplace(std::move(key), std::move(t));
  }
  return c;
}

json order_to_json(int n, const std::vector<TreeKey>& order) {
  json cells = json::array();
  for (const auto& key : order) cells.push_back(key_to_json(key, n));
  return {{"n", n}, {"order", cells}};
}

std::vector<TreeKey> order_from_json(const json& j) {
  std::vector<TreeKey> out;
  for (const json& cell : field(j, "order")) out.push_back(key_from_json(cell));
  return out;
}

json bases_to_json(int n, const std::string& filter, const BasisSet& bases) {
  json columns = json::array();
  for (const auto& [i, k] : ground_set(n)) columns.push_back(json::array({i, k}));
  json list = json::array();
  for (ColumnSet b : bases) {
    json cols = json::array();
    for (int c = 0; c < 32; ++c) {
      if (((b >> c) & 1U) != 0) cols.push_back(c);
    }
    list.push_back(std::move(cols));
  }
  return {{"n", n}, {"filter", filter}, {"columns", columns}, {"count", bases.size()}, {"bases", list}};
}

BasisSet bases_from_json(const json& j) {
  BasisSet out;
  for (const json& cols : field(j, "bases")) {
    ColumnSet b = 0;
    for (const json& c : cols) {
      const int k = c.get<int>();
      if (k < 0 || k >= 32) throw InvalidInput("column index out of range");
      b |= ColumnSet{1} << k;
    }
    out.insert(b);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

TropMatrix read_matrix(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return matrix_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw InvalidInput(path + ": " + e.what());
    }
  }
  return matrix_from_csv(text);
}

SymbicTree read_tree(const std::string& path) {
  try {
    return tree_from_json(json::parse(read_file(path)));
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace symbic::io
