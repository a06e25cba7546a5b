#pragma once

// JSON and CSV readers/writers and DOT export.

#include <string>
#include <vector>

#include "json.hpp"
#include "symbic/enumeration.hpp"
#include "symbic/matroid.hpp"
#include "symbic/tree.hpp"
#include "symbic/trop.hpp"

namespace symbic::io {

using nlohmann::json;

/// {"n": 3, "entries": [["0", "1/2", ...], ...]}. Reading also accepts
/// plain JSON numbers as cells.
json matrix_to_json(const TropMatrix& m);
TropMatrix matrix_from_json(const json& j);
/// Comma separated rows, same cell syntax.
TropMatrix matrix_from_csv(const std::string& text);

/// {"n", "vertices", "edges": [{"u", "v", "len"}], "leaves": {"1": vid, "1p": vid}}.
json tree_to_json(const LabeledTree& t);
json tree_to_json(const SymbicTree& t);
LabeledTree labeled_tree_from_json(const json& j);
/// Throws ValidationError when the tree is not symbic.
SymbicTree tree_from_json(const json& j);

/// Row leaves blue, column leaves red, trunk edges bold.
std::string tree_to_dot(const SymbicTree& t);

json key_to_json(const TreeKey& key, int n);
TreeKey key_from_json(const json& j);

json catalog_to_json(const TreeCatalog& c);
TreeCatalog catalog_from_json(const json& j);

json order_to_json(int n, const std::vector<TreeKey>& order);
std::vector<TreeKey> order_from_json(const json& j);

json bases_to_json(int n, const std::string& filter, const BasisSet& bases);
BasisSet bases_from_json(const json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
/// Chooses JSON or CSV by the first non-blank character.
TropMatrix read_matrix(const std::string& path);
SymbicTree read_tree(const std::string& path);

}  // namespace symbic::io
