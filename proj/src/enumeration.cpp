#include "symbic/enumeration.hpp"

#include <algorithm>
#include <numeric>

namespace symbic {

RationalSeries::RationalSeries(int order) : order_(order), c_(static_cast<std::size_t>(order + 1)) {
  if (order < 0) throw InvalidInput("negative series order");
}

RationalSeries::RationalSeries(int order, std::vector<BigRat> coeffs) : RationalSeries(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
}

RationalSeries RationalSeries::constant(int order, const BigRat& value) {
  RationalSeries s(order);
  s[0] = value;
  return s;
}

RationalSeries RationalSeries::x(int order) {
  RationalSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

namespace {

void same_order(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) throw InvalidInput("series orders differ");
}

}  // namespace

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  same_order(a, b);
  RationalSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  same_order(a, b);
  RationalSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = a[k] - b[k];
  return out;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  same_order(a, b);
  RationalSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalSeries operator*(const BigRat& s, const RationalSeries& a) {
  RationalSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = s * a[k];
  return out;
}

RationalSeries RationalSeries::inverse() const {
  if (c_[0] == 0) throw InvalidInput("series inverse needs a nonzero constant term");
  RationalSeries out(order_);
  out[0] = 1 / c_[0];
  for (int k = 1; k <= order_; ++k) {
    BigRat acc = 0;
    for (int j = 1; j <= k; ++j) acc += (*this)[j] * out[k - j];
    out[k] = -acc / c_[0];
  }
  return out;
}

RationalSeries RationalSeries::sqrt() const {
  if (c_[0] != 1) throw InvalidInput("series square root needs constant term 1");
  RationalSeries s = constant(order_, 1);
  const BigRat half(1, 2);
  // Each step doubles the number of correct coefficients.
  for (int correct = 1; correct <= 2 * (order_ + 1); correct *= 2) s = half * (s + (*this) * s.inverse());
  return s;
}

RationalSeries RationalSeries::compose(const RationalSeries& inner) const {
  same_order(*this, inner);
  if (inner[0] != 0) throw InvalidInput("composition needs an inner series without constant term");
  RationalSeries out(order_);
  RationalSeries power = constant(order_, 1);
  for (int k = 0; k <= order_; ++k) {
    out = out + (*this)[k] * power;
    power = power * inner;
  }
  return out;
}

std::vector<BigInt> RationalSeries::egf_counts() const {
  std::vector<BigInt> out;
  BigInt factorial = 1;
  for (int k = 0; k <= order_; ++k) {
    if (k > 0) factorial *= k;
    const BigRat v = (*this)[k] * factorial;
    if (denominator(v) != 1) throw Error("series coefficient is not an exponential count");
    out.push_back(numerator(v));
  }
  return out;
}

BigInt count_one_vertex_trunk(int n) {
  if (n < 0) throw InvalidInput("negative n");
  std::vector<BigInt> a(static_cast<std::size_t>(std::max(n, 2) + 1));
  a[1] = 1;
  a[2] = 1;
  for (int m = 3; m <= n; ++m) {
    BigInt binom = 1;
    for (int k = 1; k < m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(m - k)];
    }
  }
  return a[static_cast<std::size_t>(n)];
}

BigInt count_full_trunk(int n) {
  if (n < 0) throw InvalidInput("negative n");
  if (n < 2) return 1;
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f / 2;
}

BigInt count_regular(int n) {
  if (n < 0) throw InvalidInput("negative n");
  if (n == 0) return 1;
  // weighted[m][k]: partitions of m labelled pairs into k one-vertex-trunk blocks.
  std::vector<std::vector<BigInt>> weighted(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 1)));
  weighted[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt binom = 1;
    for (int s = 1; s <= m; ++s) {
      if (s > 1) binom = binom * (m - s + 1) / (s - 1);
      const BigInt a = count_one_vertex_trunk(s);
      for (int k = 1; k <= m; ++k) {
        weighted[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] +=
            binom * a * weighted[static_cast<std::size_t>(m - s)][static_cast<std::size_t>(k - 1)];
      }
    }
  }
  BigInt total = 0;
  for (int k = 1; k <= n; ++k) total += count_full_trunk(k) * weighted[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  return total;
}

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxSeriesOrder) throw UnsupportedSize("series order must lie in [0, 30]");
}

// sqrt(1 - 4x + 2x^2)
RationalSeries discriminant_root(int order) {
  RationalSeries d(order, {BigRat(1), BigRat(-4), BigRat(2)});
  return d.sqrt();
}

}  // namespace

RationalSeries egf_series(Egf which, int order) {
  check_order(order);
  const RationalSeries one = RationalSeries::constant(order, 1);
  const BigRat half(1, 2);
  switch (which) {
    case Egf::one_vertex_trunk:
      return half * (one - discriminant_root(order));
    case Egf::trunk_arrangements: {
      const RationalSeries geometric = (one - RationalSeries::x(order)).inverse();
      return half * (one + RationalSeries::x(order) + geometric);
    }
    case Egf::all: {
      const RationalSeries r = discriminant_root(order);
      return BigRat(3, 4) * one - BigRat(1, 4) * r + (one + r).inverse();
    }
  }
  throw InvalidInput("unknown series");
}

RationalSeries egf_composition(int order) {
  return egf_series(Egf::trunk_arrangements, order).compose(egf_series(Egf::one_vertex_trunk, order));
}

std::vector<BigInt> egf_coefficients(Egf which, int order) { return egf_series(which, order).egf_counts(); }

std::vector<std::vector<int>> trunk_blocks(const SymbicTree& t) {
  std::vector<std::vector<int>> out;
  for (int v : t.trunk()) {
    std::vector<int> block;
    for (auto [u, e] : t.neighbors(v)) {
      if (t.is_fixed(u)) continue;
      for (int code : leaf_codes(t.far_side(e, v))) {
        if ((code & 1) == 0) block.push_back(code / 2 + 1);
      }
    }
    if (block.empty()) continue;
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

namespace {

using Clusters = std::vector<LeafSet>;

// Rooted binary trees on `leaves` whose clusters of size >= 2 are all
// bicolored; each tree is listed by its proper clusters of size >= 2.
class BinaryShapes {
 public:
  const std::vector<Clusters>& of(LeafSet leaves) {
    auto it = memo_.find(leaves);
    if (it != memo_.end()) return it->second;
    std::vector<Clusters> out;
    if (leaf_count(leaves) == 1) {
      out.emplace_back();
    } else {
      const LeafSet low = leaves & (~leaves + 1);
      const LeafSet rest = leaves ^ low;
      for (LeafSet sub = rest;; sub = (sub - 1) & rest) {
        const LeafSet a = low | sub;
        const LeafSet b = leaves ^ a;
        if (b != 0 && usable(a) && usable(b)) {
          const std::vector<Clusters> left = of(a);
          const std::vector<Clusters> right = of(b);
          for (const auto& l : left) {
            for (const auto& r : right) {
              Clusters c = l;
              c.insert(c.end(), r.begin(), r.end());
              if (leaf_count(a) >= 2) c.push_back(a);
              if (leaf_count(b) >= 2) c.push_back(b);
              out.push_back(std::move(c));
            }
          }
        }
        if (sub == 0) break;
      }
    }
    return memo_.emplace(leaves, std::move(out)).first->second;
  }

 private:
  static bool usable(LeafSet s) { return leaf_count(s) == 1 || has_both_colors(s); }

  std::map<LeafSet, std::vector<Clusters>> memo_;
};

// A branch P of a block (containing the smallest index with row color) and
// all clusters of P of size >= 2, P included.
struct BlockShape {
  LeafSet branch = 0;
  Clusters clusters;
};

std::vector<BlockShape> block_shapes(const std::vector<int>& block, BinaryShapes& shapes) {
  std::vector<BlockShape> out;
  const int k = static_cast<int>(block.size());
  for (int colors = 0; colors < (1 << (k - 1)); ++colors) {
    LeafSet p = leaf_bit(LeafLabel{block[0], Color::row}.code());
    for (int j = 1; j < k; ++j) {
      const Color c = ((colors >> (j - 1)) & 1) != 0 ? Color::column : Color::row;
      p |= leaf_bit(LeafLabel{block[static_cast<std::size_t>(j)], c}.code());
    }
    if (k >= 2 && !has_both_colors(p)) continue;
    for (const auto& inner : shapes.of(p)) {
      BlockShape s{p, inner};
      if (k >= 2) s.clusters.push_back(p);
      out.push_back(std::move(s));
    }
  }
  return out;
}

void set_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  auto emit = [&](int blocks) {
    std::vector<std::vector<int>> p(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.push_back(std::move(p));
  };
  // Restricted growth strings.
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      emit(blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      assign[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
}

LeafSet both_colors_of(const std::vector<int>& block) {
  LeafSet s = 0;
  for (int i : block) s |= leaf_bit(2 * (i - 1)) | leaf_bit(2 * (i - 1) + 1);
  return s;
}

}  // namespace

TreeCatalog enumerate_regular(int n) {
  if (n < 1 || n > kMaxEnumerationN) throw UnsupportedSize("enumeration supports 1 <= n <= 7");
  TreeCatalog catalog{n, {}};
  BinaryShapes shapes;
  std::vector<std::vector<std::vector<int>>> partitions;
  set_partitions(n, partitions);
  const Rat unit(1);

  for (const auto& blocks : partitions) {
    const int m = static_cast<int>(blocks.size());
    std::vector<std::vector<BlockShape>> options;
    for (const auto& b : blocks) options.push_back(block_shapes(b, shapes));

    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    do {
      if (m >= 2 && order.front() > order.back()) continue;
      std::vector<WeightedSplit> trunk_splits;
      LeafSet prefix = 0;
      for (int p = 0; p + 1 < m; ++p) {
        prefix |= both_colors_of(blocks[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])]);
        trunk_splits.push_back({normalize_split(prefix, n), unit});
      }
      std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
      while (true) {
        std::vector<WeightedSplit> splits = trunk_splits;
        for (int b = 0; b < m; ++b) {
          const BlockShape& s = options[static_cast<std::size_t>(b)][pick[static_cast<std::size_t>(b)]];
          for (LeafSet c : s.clusters) {
            splits.push_back({normalize_split(c, n), unit});
            if (m >= 2 || c != s.branch) splits.push_back({normalize_split(swap_colors(c), n), unit});
          }
        }
        SymbicTree t = SymbicTree::from_splits(n, std::move(splits));
        TreeKey key = t.key();
        catalog.trees.emplace(std::move(key), std::move(t));

        int b = 0;
        while (b < m && ++pick[static_cast<std::size_t>(b)] == options[static_cast<std::size_t>(b)].size()) {
          pick[static_cast<std::size_t>(b)] = 0;
          ++b;
        }
        if (b == m) break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return catalog;
}

std::map<int, std::set<TreeKey>> enumerate_faces(int n) {
  if (n < 1 || n > kMaxFaceN) throw UnsupportedSize("face enumeration supports 1 <= n <= 5");
  std::map<int, std::set<TreeKey>> faces;
  for (const auto& [key, tree] : enumerate_regular(n).trees) {
    const auto k = static_cast<int>(key.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      TreeKey face;
      for (int j = 0; j < k; ++j) {
        if (((mask >> j) & 1) != 0) face.push_back(key[static_cast<std::size_t>(j)]);
      }
      faces[static_cast<int>(face.size())].insert(std::move(face));
    }
  }
  return faces;
}

}  // namespace symbic
