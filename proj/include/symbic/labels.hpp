#pragma once

// Leaf labels 1..n (row color) and 1'..n' (column color), packed as bits of
// a 64-bit set: label (i, row) is bit 2(i-1), label (i, column) bit 2(i-1)+1.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace symbic {

using LeafSet = std::uint64_t;

/// Largest n whose 2n labels fit in a LeafSet.
inline constexpr int kMaxLeafPairs = 32;

enum class Color : std::uint8_t { row = 0, column = 1 };

struct LeafLabel {
  int index = 1;  // 1-based
  Color color = Color::row;

  [[nodiscard]] int code() const { return 2 * (index - 1) + static_cast<int>(color); }
  static LeafLabel from_code(int code) { return {code / 2 + 1, static_cast<Color>(code & 1)}; }
  [[nodiscard]] LeafLabel swapped() const {
    return {index, color == Color::row ? Color::column : Color::row};
  }
  /// "3" or "3'".
  [[nodiscard]] std::string str() const;
  /// "3" or "3p", the key used in tree files.
  [[nodiscard]] std::string key() const;
  /// Inverse of key(); throws InvalidInput.
  static LeafLabel parse_key(const std::string& key);

  friend bool operator==(const LeafLabel&, const LeafLabel&) = default;
  friend auto operator<=>(const LeafLabel&, const LeafLabel&) = default;
};

inline constexpr LeafSet kRowBits = 0x5555555555555555ULL;
inline constexpr LeafSet kColumnBits = 0xAAAAAAAAAAAAAAAAULL;

inline constexpr LeafSet leaf_bit(int code) { return LeafSet{1} << code; }

inline constexpr LeafSet all_leaves(int n) {
  return n >= kMaxLeafPairs ? ~LeafSet{0} : (LeafSet{1} << (2 * n)) - 1;
}

/// Swap i <-> i' for every label.
inline constexpr LeafSet swap_colors(LeafSet s) { return ((s & kRowBits) << 1) | ((s & kColumnBits) >> 1); }

inline constexpr bool has_both_colors(LeafSet s) { return (s & kRowBits) != 0 && (s & kColumnBits) != 0; }

/// The side of the bipartition {side, complement} not containing label 1.
inline constexpr LeafSet normalize_split(LeafSet side, int n) {
  return (side & 1U) != 0 ? (all_leaves(n) & ~side) : side;
}

/// Representative of the involution orbit {split, swap(split)}.
inline constexpr LeafSet orbit_representative(LeafSet split, int n) {
  const LeafSet other = normalize_split(swap_colors(split), n);
  return other < split ? other : split;
}

inline int leaf_count(LeafSet s) { return std::popcount(s); }

/// Codes of the set bits in increasing order.
std::vector<int> leaf_codes(LeafSet s);

/// "{1,2' | 1',2,3,3'}" with the side not containing label 1 on the right.
std::string format_split(LeafSet split, int n);
/// "{1,2',3}".
std::string format_leaves(LeafSet s);

}  // namespace symbic
