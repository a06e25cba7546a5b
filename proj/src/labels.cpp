#include "symbic/labels.hpp"

#include "symbic/errors.hpp"

namespace symbic {

std::string LeafLabel::str() const {
  return std::to_string(index) + (color == Color::column ? "'" : "");
}

std::string LeafLabel::key() const {
  return std::to_string(index) + (color == Color::column ? "p" : "");
}

LeafLabel LeafLabel::parse_key(const std::string& key) {
  std::string digits = key;
  Color color = Color::row;
  if (!digits.empty() && (digits.back() == 'p' || digits.back() == '\'')) {
    color = Color::column;
    digits.pop_back();
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidInput("bad leaf label '" + key + "'");
  }
  const int index = std::stoi(digits);
  if (index < 1 || index > kMaxLeafPairs) throw InvalidInput("leaf index out of range in '" + key + "'");
  return {index, color};
}

std::vector<int> leaf_codes(LeafSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(leaf_count(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

std::string format_leaves(LeafSet s) {
  std::string out = "{";
  bool first = true;
  for (int code : leaf_codes(s)) {
    if (!first) out += ",";
    out += LeafLabel::from_code(code).str();
    first = false;
  }
  return out + "}";
}

std::string format_split(LeafSet split, int n) {
  const LeafSet side = normalize_split(split, n);
  const std::string left = format_leaves(all_leaves(n) & ~side);
  const std::string right = format_leaves(side);
  return left.substr(0, left.size() - 1) + " | " + right.substr(1);
}

}  // namespace symbic
