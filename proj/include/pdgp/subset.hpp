#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pdgp {

/// Hard limit on vertices (and chords) so any subset fits one machine word.
inline constexpr int kMaxVertices = 63;

/// A set of vertex indices packed into a 64-bit mask.
struct VertexSubset {
  std::uint64_t mask = 0;

  constexpr VertexSubset() = default;
  constexpr explicit VertexSubset(std::uint64_t m) : mask(m) {}

  static constexpr VertexSubset full(int n) {
    return VertexSubset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSubset of(std::initializer_list<int> vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return VertexSubset(m);
  }

  constexpr bool contains(int v) const { return (mask >> v) & 1U; }
  constexpr int size() const { return std::popcount(mask); }
  constexpr bool empty() const { return mask == 0; }
  constexpr bool subset_of(VertexSubset other) const { return (mask & ~other.mask) == 0; }
  constexpr VertexSubset complement_in(int n) const { return VertexSubset(full(n).mask & ~mask); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr bool operator==(VertexSubset, VertexSubset) = default;
  friend constexpr VertexSubset operator|(VertexSubset a, VertexSubset b) { return VertexSubset(a.mask | b.mask); }
  friend constexpr VertexSubset operator&(VertexSubset a, VertexSubset b) { return VertexSubset(a.mask & b.mask); }
  friend constexpr VertexSubset operator^(VertexSubset a, VertexSubset b) { return VertexSubset(a.mask ^ b.mask); }
};

}  // namespace pdgp
