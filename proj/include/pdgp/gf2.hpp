#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdgp/error.hpp"
#include "pdgp/subset.hpp"

namespace pdgp {

/// Symmetric zero-diagonal matrix over GF(2), one 64-bit word per row.
/// Bit j of row i is entry (i, j).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;

  explicit Gf2Matrix(int n) : n_(n) {
    check_cap(n, kMaxVertices, "matrix dimension");
    if (n < 0) throw Error(ErrorKind::BadParameter, "negative matrix dimension");
    rows_.assign(static_cast<std::size_t>(n), 0);
  }

  /// Validates symmetry, zero diagonal and that no column bit lies beyond n.
  static Gf2Matrix from_rows(std::span<const std::uint64_t> rows) {
    Gf2Matrix m(static_cast<int>(rows.size()));
    const std::uint64_t live = VertexSubset::full(m.n_).mask;
    for (int i = 0; i < m.n_; ++i) {
      const std::uint64_t r = rows[static_cast<std::size_t>(i)];
      if (r & ~live) throw Error(ErrorKind::BadParameter, "row " + std::to_string(i) + " has bits beyond n");
      if ((r >> i) & 1U) throw Error(ErrorKind::BadParameter, "nonzero diagonal at " + std::to_string(i));
      m.rows_[static_cast<std::size_t>(i)] = r;
    }
    for (int i = 0; i < m.n_; ++i)
      for (int j = 0; j < m.n_; ++j)
        if (m.entry(i, j) != m.entry(j, i)) throw Error(ErrorKind::BadParameter, "matrix is not symmetric");
    return m;
  }

  int size() const { return n_; }
  bool entry(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1U; }
  std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint64_t> rows() const { return rows_; }

  /// Flips entries (i, j) and (j, i) together; i != j.
  void flip(int i, int j) {
    rows_[static_cast<std::size_t>(i)] ^= std::uint64_t{1} << j;
    rows_[static_cast<std::size_t>(j)] ^= std::uint64_t{1} << i;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

namespace detail {

// Rank of the rows selected by `subset`, each masked to the columns in
// `subset`. Pivots are tracked by their lowest set bit.
inline int rank_masked(const std::uint64_t* rows, std::uint64_t subset) {
  std::array<std::uint64_t, 64> basis;
  std::uint64_t pivots = 0;
  int r = 0;
  for (std::uint64_t s = subset; s != 0; s &= s - 1) {
    std::uint64_t v = rows[std::countr_zero(s)] & subset;
    while (v != 0) {
      const int p = std::countr_zero(v);
      if (!((pivots >> p) & 1U)) {
        basis[static_cast<std::size_t>(p)] = v;
        pivots |= std::uint64_t{1} << p;
        ++r;
        break;
      }
      v ^= basis[static_cast<std::size_t>(p)];
    }
  }
  return r;
}

}  // namespace detail

inline int rank_of_subset(const Gf2Matrix& m, VertexSubset s) {
  return detail::rank_masked(m.rows().data(), s.mask & VertexSubset::full(m.size()).mask);
}

inline int rank(const Gf2Matrix& m) { return rank_of_subset(m, VertexSubset::full(m.size())); }

inline int corank(const Gf2Matrix& m) { return m.size() - rank(m); }

/// Restriction to rows/columns in `s`, relabeled by increasing index.
inline Gf2Matrix principal_submatrix(const Gf2Matrix& m, VertexSubset s) {
  const std::vector<int> keep = (s & VertexSubset::full(m.size())).elements();
  std::vector<std::uint64_t> rows(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (m.entry(keep[i], keep[j])) rows[i] |= std::uint64_t{1} << j;
  return Gf2Matrix::from_rows(rows);
}

}  // namespace pdgp
