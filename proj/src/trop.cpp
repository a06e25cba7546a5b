#include "symbic/trop.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "symbic/errors.hpp"

namespace symbic {

TropMatrix::TropMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
  if (n < 0) throw InvalidInput("negative matrix size");
}

TropMatrix::TropMatrix(int n, std::vector<Rat> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidInput("matrix entry count does not match n*n");
  }
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Rat> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw InvalidInput("matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return TropMatrix(n, std::move(flat));
}

std::span<const Rat> TropMatrix::row(int i) const {
  return std::span<const Rat>(entries_).subspan(index(i, 0), static_cast<std::size_t>(n_));
}

std::vector<Rat> TropMatrix::column(int j) const {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out.push_back((*this)(i, j));
  return out;
}

bool TropMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

TropMatrix TropMatrix::transpose() const {
  TropMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

TropMatrix TropMatrix::negated() const {
  TropMatrix out(n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
  return out;
}

TropMatrix TropMatrix::principal(std::span<const int> indices) const {
  const int k = static_cast<int>(indices.size());
  TropMatrix out(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) out(a, b) = (*this)(indices[a], indices[b]);
  }
  return out;
}

TropMatrix operator+(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("matrix size mismatch");
  TropMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

TropMatrix operator*(const Rat& s, const TropMatrix& a) {
  TropMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) out(i, j) = s * a(i, j);
  }
  return out;
}

TropMatrix symmetric_rank_one(std::span<const Rat> x) {
  const int n = static_cast<int>(x.size());
  TropMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = x[i] + x[j];
  }
  return out;
}

void MinorSpec::validate(int n) const {
  if (rows.size() != cols.size()) throw InvalidInput("minor rows and columns differ in length");
  if (rows.size() < 2 || static_cast<int>(rows.size()) > n) {
    throw InvalidInput("minor size must lie in [2, n]");
  }
  auto check = [n](const std::vector<int>& idx) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= n) throw InvalidInput("minor index out of range");
      if (k > 0 && idx[k - 1] >= idx[k]) throw InvalidInput("minor indices must increase strictly");
    }
  };
  check(rows);
  check(cols);
}

MinorSpec MinorSpec::full(int n) {
  MinorSpec spec;
  spec.rows.resize(static_cast<std::size_t>(n));
  std::iota(spec.rows.begin(), spec.rows.end(), 0);
  spec.cols = spec.rows;
  return spec;
}

namespace {

// Entries of a minor scaled by the lcm of their denominators. Sums of k
// scaled entries are compared in 128 bits, so no sum can overflow.
struct ScaledMinor {
  int k = 0;
  std::vector<std::int64_t> cells;

  ScaledMinor(const TropMatrix& m, const MinorSpec& spec) : k(spec.size()) {
    std::int64_t lcm = 1;
    for (int r : spec.rows) {
      for (int c : spec.cols) lcm = checked_lcm(lcm, m(r, c).den());
    }
    cells.reserve(static_cast<std::size_t>(k) * k);
    for (int r : spec.rows) {
      for (int c : spec.cols) cells.push_back(checked_mul(m(r, c).num(), lcm / m(r, c).den()));
    }
  }

  [[nodiscard]] __int128 sum(const Permutation& sigma) const {
    __int128 s = 0;
    for (int i = 0; i < k; ++i) s += cells[static_cast<std::size_t>(i * k + sigma[i])];
    return s;
  }
};

void check_minor(const TropMatrix& m, const MinorSpec& spec) {
  spec.validate(m.size());
  if (spec.size() > kMaxMinorSize) {
    throw UnsupportedSize("minor of size " + std::to_string(spec.size()) + " exceeds the enumeration cap of " +
                          std::to_string(kMaxMinorSize));
  }
}

}  // namespace

TropDet trop_det(const TropMatrix& m, const MinorSpec& spec) {
  check_minor(m, spec);
  const ScaledMinor scaled(m, spec);
  Permutation sigma(static_cast<std::size_t>(spec.size()));
  std::iota(sigma.begin(), sigma.end(), 0);

  TropDet out;
  __int128 best = 0;
  bool first = true;
  do {
    const __int128 s = scaled.sum(sigma);
    if (first || s < best) {
      best = s;
      first = false;
      out.argmin.clear();
      out.argmin.push_back(sigma);
    } else if (s == best) {
      out.argmin.push_back(sigma);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  Rat value;
  for (int i = 0; i < spec.size(); ++i) value += m(spec.rows[i], spec.cols[out.argmin.front()[i]]);
  out.value = value;
  return out;
}

Monomial sym_monomial_of_perm(const MinorSpec& spec, const Permutation& sigma) {
  Monomial mono;
  mono.reserve(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const int r = spec.rows[i];
    const int c = spec.cols[static_cast<std::size_t>(sigma[i])];
    mono.emplace_back(std::min(r, c), std::max(r, c));
  }
  std::sort(mono.begin(), mono.end());
  return mono;
}

std::vector<Monomial> argmin_monomials(const TropMatrix& m, const MinorSpec& spec) {
  const TropDet det = trop_det(m, spec);
  std::vector<Monomial> monos;
  monos.reserve(det.argmin.size());
  for (const auto& sigma : det.argmin) monos.push_back(sym_monomial_of_perm(spec, sigma));
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  return monos;
}

bool minor_degenerate(const TropMatrix& m, const MinorSpec& spec) {
  return trop_det(m, spec).argmin.size() >= 2;
}

bool sym_minor_degenerate(const TropMatrix& m, const MinorSpec& spec) {
  const TropDet det = trop_det(m, spec);
  if (det.argmin.size() < 2) return false;
  const Monomial first = sym_monomial_of_perm(spec, det.argmin.front());
  for (std::size_t k = 1; k < det.argmin.size(); ++k) {
    if (sym_monomial_of_perm(spec, det.argmin[k]) != first) return true;
  }
  return false;
}

namespace {

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

template <class Pred>
int rank_by(const TropMatrix& m, Pred degenerate) {
  const int n = m.size();
  for (int r = 1; r < n; ++r) {
    bool all = true;
    for (const auto& spec : all_minors(n, r + 1)) {
      if (!degenerate(m, spec)) {
        all = false;
        break;
      }
    }
    if (all) return r;
  }
  return n;
}

template <class Pred>
bool all_three_minors(const TropMatrix& m, Pred degenerate) {
  if (m.size() < 3) return true;
  for (const auto& spec : all_minors(m.size(), 3)) {
    if (!degenerate(m, spec)) return false;
  }
  return true;
}

}  // namespace

std::vector<MinorSpec> all_minors(int n, int k) {
  std::vector<std::vector<int>> subsets;
  combinations(n, k, subsets);
  std::vector<MinorSpec> out;
  out.reserve(subsets.size() * subsets.size());
  for (const auto& rows : subsets) {
    for (const auto& cols : subsets) out.push_back(MinorSpec{rows, cols});
  }
  return out;
}

int trop_rank(const TropMatrix& m) {
  if (m.size() > kMaxMinorSize) throw UnsupportedSize("matrix exceeds the minor enumeration cap");
  return rank_by(m, minor_degenerate);
}

int sym_trop_rank(const TropMatrix& m) {
  if (!m.is_symmetric()) throw InvalidInput("symmetric tropical rank needs a symmetric matrix");
  if (m.size() > kMaxMinorSize) throw UnsupportedSize("matrix exceeds the minor enumeration cap");
  return rank_by(m, sym_minor_degenerate);
}

bool has_sym_rank_at_most_two(const TropMatrix& m) {
  if (!m.is_symmetric()) throw InvalidInput("symmetric tropical rank needs a symmetric matrix");
  return all_three_minors(m, sym_minor_degenerate);
}

bool has_trop_rank_at_most_two(const TropMatrix& m) { return all_three_minors(m, minor_degenerate); }

Rat hilbert_distance(std::span<const Rat> x, std::span<const Rat> y) {
  if (x.size() != y.size()) throw InvalidInput("hilbert_distance: length mismatch");
  if (x.empty()) throw InvalidInput("hilbert_distance: empty vectors");
  Rat hi = x[0] - y[0];
  Rat lo = hi;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const Rat d = x[i] - y[i];
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  return hi - lo;
}

TropMatrix canonicalize_mod_lineality(const TropMatrix& m) {
  if (!m.is_symmetric()) throw InvalidInput("lineality normal form needs a symmetric matrix");
  const int n = m.size();
  if (n == 0) return m;
  std::vector<Rat> x(static_cast<std::size_t>(n));
  x[0] = m(0, 0) / Rat(2);
  for (int j = 1; j < n; ++j) x[static_cast<std::size_t>(j)] = m(0, j) - x[0];
  TropMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = m(i, j) - x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace symbic
