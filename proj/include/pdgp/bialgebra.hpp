#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pdgp/coeff.hpp"
#include "pdgp/error.hpp"
#include "pdgp/graph.hpp"
#include "pdgp/invariants.hpp"
#include "pdgp/polynomial.hpp"
#include "pdgp/subset.hpp"

namespace pdgp {

inline constexpr int kDefaultPartitionCap = 12;
inline constexpr int kDefaultProjectionCap = 10;
inline constexpr int kDefaultCoproductCap = 16;

/// Partition of a ground set into nonempty blocks, sorted by smallest element.
struct SetPartition {
  std::vector<VertexSubset> blocks;

  std::size_t size() const { return blocks.size(); }
  VertexSubset ground() const {
    VertexSubset u;
    for (auto b : blocks) u = u | b;
    return u;
  }
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Streams the partitions of a set in restricted-growth-string order: element
/// i (in increasing order) goes to block g[i] with g[i] <= 1 + max(g[0..i-1]).
class SetPartitions {
 public:
  explicit SetPartitions(VertexSubset ground, int cap = kDefaultPartitionCap)
      : elems_(ground.elements()), growth_(elems_.size(), 0), max_prefix_(elems_.size(), 0) {
    check_cap(static_cast<long long>(elems_.size()), cap, "ground set size for set partitions");
  }

  /// Fills `out` with the next partition; false once exhausted.
  bool next(SetPartition& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
    } else if (!advance()) {
      done_ = true;
      return false;
    }
    const int k = elems_.empty() ? 0 : max_prefix_.back() + 1;
    out.blocks.assign(static_cast<std::size_t>(k), VertexSubset());
    for (std::size_t i = 0; i < elems_.size(); ++i)
      out.blocks[static_cast<std::size_t>(growth_[i])].mask |= std::uint64_t{1} << elems_[i];
    return true;
  }

 private:
  bool advance() {
    // Increment the last position that may grow, reset everything after it.
    for (std::size_t i = elems_.size(); i-- > 1;) {
      if (growth_[i] <= max_prefix_[i - 1]) {
        ++growth_[i];
        max_prefix_[i] = std::max(max_prefix_[i - 1], growth_[i]);
        for (std::size_t j = i + 1; j < elems_.size(); ++j) {
          growth_[j] = 0;
          max_prefix_[j] = max_prefix_[i];
        }
        return true;
      }
    }
    return false;
  }

  std::vector<int> elems_;
  std::vector<int> growth_;
  std::vector<int> max_prefix_;
  bool started_ = false;
  bool done_ = false;
};

inline void for_each_set_partition(VertexSubset ground, const std::function<void(const SetPartition&)>& visit,
                                   int cap = kDefaultPartitionCap) {
  SetPartitions gen(ground, cap);
  SetPartition p;
  while (gen.next(p)) visit(p);
}

/// Bell numbers via the Bell triangle.
inline Coeff bell_number(int n) {
  std::vector<Coeff> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Coeff> next{row.back()};
    for (const Coeff& c : row) next.push_back(next.back() + c);
    row = std::move(next);
  }
  return row.front();
}

/// Pairs (A, A^c) for every A ⊆ V(G), in increasing mask order of A.
inline std::vector<std::pair<VertexSubset, VertexSubset>> coproduct_table(const SimpleGraph& g,
                                                                          int cap = kDefaultCoproductCap) {
  check_cap(g.order(), cap, "vertex count for coproduct table");
  std::vector<std::pair<VertexSubset, VertexSubset>> out;
  const std::uint64_t full = g.vertices().mask;
  out.reserve(full + 1);
  for (std::uint64_t a = 0; a <= full; ++a) out.emplace_back(VertexSubset(a), VertexSubset(full & ~a));
  return out;
}

namespace detail {

template <typename Poly, typename F>
Poly projection_sum(const SimpleGraph& g, F&& f) {
  const std::uint64_t full = g.vertices().mask;
  std::vector<std::optional<Poly>> cache(full + 1);
  auto value = [&](VertexSubset s) -> const Poly& {
    auto& slot = cache[s.mask];
    if (!slot) slot = f(induced(g, s));
    return *slot;
  };

  Poly out;
  SetPartitions gen(g.vertices());
  SetPartition p;
  while (gen.next(p)) {
    const int k = static_cast<int>(p.size());
    Poly term = Poly::monomial({}, (k % 2 == 1 ? Coeff(1) : Coeff(-1)) * factorial(k - 1));
    for (VertexSubset block : p.blocks) term *= value(block);
    out += term;
  }
  return out;
}

}  // namespace detail

/// f evaluated on the primitive projection of G:
///   sum over set partitions {A_1..A_k} of V(G) of (-1)^(k-1) (k-1)! prod f(G[A_i]).
/// Valid only for invariants multiplicative over disjoint union, which lets
/// the formal products of induced subgraphs be replaced by products of values.
inline InvariantValue eval_on_projection(Invariant f, const SimpleGraph& g, const EnumOptions& opts = {}) {
  check_cap(g.order(), opts.cap_or(kDefaultProjectionCap), "vertex count for projection");
  check_cap(g.order(), kDefaultPartitionCap, "vertex count for projection (partition stream)");
  EnumOptions inner = opts;
  inner.cap.reset();
  switch (f) {
    case Invariant::pdgp:
    case Invariant::recursive:
    case Invariant::skew_char:
    case Invariant::skew_char_nondegenerate:
    case Invariant::rank:
      return detail::projection_sum<UniPoly>(
          g, [&](const SimpleGraph& h) { return std::get<UniPoly>(compute_invariant(f, h, inner)); });
    case Invariant::pdgp_refined:
    case Invariant::skew_char_refined:
      return detail::projection_sum<BiPoly>(
          g, [&](const SimpleGraph& h) { return std::get<BiPoly>(compute_invariant(f, h, inner)); });
    case Invariant::pdgp_k:
      break;
  }
  throw Error(ErrorKind::NonMultiplicativeInvariant,
              std::string(to_string(f)) + " is not multiplicative over disjoint union");
}

}  // namespace pdgp
