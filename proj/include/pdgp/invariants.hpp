#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pdgp/coeff.hpp"
#include "pdgp/error.hpp"
#include "pdgp/gf2.hpp"
#include "pdgp/graph.hpp"
#include "pdgp/parallel.hpp"
#include "pdgp/polynomial.hpp"

namespace pdgp {

inline constexpr int kDefaultSubsetCap = 24;
inline constexpr int kDefaultKPartCap = 16;

/// threads == 0 picks the hardware concurrency. An unset cap means the
/// operation's own default; no cap may exceed kMaxVertices.
struct EnumOptions {
  unsigned threads = 0;
  std::optional<int> cap;

  static EnumOptions serial() { return EnumOptions{1, std::nullopt}; }
  int cap_or(int fallback) const { return cap.value_or(fallback); }
};

// ---- subset rank statistics ---------------------------------------------

/// Number of subsets A of V(G) for each triple
/// (|V| - |A|, rank(M_A), rank(M_{A^c})). Every subset-sum invariant below is
/// a projection of this table, so one pass over 2^n subsets serves them all.
class SubsetRankTable {
 public:
  SubsetRankTable(int n, bool with_complement)
      : n_(n), with_complement_(with_complement), counts_(static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1)), 0) {}

  int order() const { return n_; }
  bool has_complement_ranks() const { return with_complement_; }

  std::uint64_t& at(int co_size, int rank_a, int rank_ac) {
    return counts_[static_cast<std::size_t>((co_size * (n_ + 1) + rank_a) * (n_ + 1) + rank_ac)];
  }
  std::uint64_t at(int co_size, int rank_a, int rank_ac) const {
    return counts_[static_cast<std::size_t>((co_size * (n_ + 1) + rank_a) * (n_ + 1) + rank_ac)];
  }

  void merge(const SubsetRankTable& o) {
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
  }

 private:
  int n_;
  bool with_complement_;
  std::vector<std::uint64_t> counts_;
};

/// Enumerates all 2^n subsets in contiguous mask ranges across threads.
/// With `with_complement` false the complement rank is recorded as 0.
inline SubsetRankTable subset_rank_table(const SimpleGraph& g, bool with_complement, const EnumOptions& opts = {}) {
  const int n = g.order();
  check_cap(n, opts.cap_or(kDefaultSubsetCap), "vertex count for subset enumeration");
  check_cap(n, kMaxVertices, "vertex count");
  const std::uint64_t* rows = g.adjacency().rows().data();
  const std::uint64_t full = g.vertices().mask;
  return parallel_reduce(
      full + 1, opts.threads, SubsetRankTable(n, with_complement),
      [&](std::uint64_t begin, std::uint64_t end, SubsetRankTable& acc) {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const int ra = detail::rank_masked(rows, mask);
          const int rc = with_complement ? detail::rank_masked(rows, full & ~mask) : 0;
          ++acc.at(n - std::popcount(mask), ra, rc);
        }
      },
      [](SubsetRankTable& into, const SubsetRankTable& from) { into.merge(from); });
}

// ---- subset-sum invariants ----------------------------------------------

/// Partial-dual genus polynomial: sum over A of z^(rank M_A + rank M_{A^c}).
inline UniPoly pdgp(const SimpleGraph& g, const EnumOptions& opts = {}) {
  const SubsetRankTable t = subset_rank_table(g, true, opts);
  const int n = g.order();
  std::vector<std::uint64_t> by_exp(static_cast<std::size_t>(2 * n + 1), 0);
  for (int w = 0; w <= n; ++w)
    for (int ra = 0; ra <= n; ++ra)
      for (int rc = 0; rc <= n; ++rc) by_exp[static_cast<std::size_t>(ra + rc)] += t.at(w, ra, rc);
  UniPoly out;
  for (std::size_t e = 0; e < by_exp.size(); ++e) out.add_term(static_cast<int>(e), Coeff::from_unsigned(by_exp[e]));
  return out;
}

/// Refined version: each subset also carries w^(|V| - |A|).
inline BiPoly pdgp_refined(const SimpleGraph& g, const EnumOptions& opts = {}) {
  const SubsetRankTable t = subset_rank_table(g, true, opts);
  const int n = g.order();
  BiPoly out;
  for (int w = 0; w <= n; ++w)
    for (int ra = 0; ra <= n; ++ra)
      for (int rc = 0; rc <= n; ++rc) out.add_term({w, ra + rc}, Coeff::from_unsigned(t.at(w, ra, rc)));
  return out;
}

/// Skew characteristic polynomial in w: subsets A with rank M_A = rank M_G,
/// graded by w^(|V| - |A|).
inline UniPoly skew_char(const SimpleGraph& g, const EnumOptions& opts = {}) {
  const SubsetRankTable t = subset_rank_table(g, false, opts);
  const int full_rank = rank(g.adjacency());
  UniPoly out;
  for (int w = 0; w <= g.order(); ++w) out.add_term(w, Coeff::from_unsigned(t.at(w, full_rank, 0)));
  return out;
}

/// Variant of skew_char counting nondegenerate subsets (rank M_A = |A|)
/// instead of subsets attaining the full rank. Unlike skew_char it satisfies
/// the four-term relation, and its value on the primitive projection of a
/// graph with at least two vertices is a constant.
inline UniPoly skew_char_nondegenerate(const SimpleGraph& g, const EnumOptions& opts = {}) {
  const SubsetRankTable t = subset_rank_table(g, false, opts);
  UniPoly out;
  for (int w = 0; w <= g.order(); ++w) out.add_term(w, Coeff::from_unsigned(t.at(w, g.order() - w, 0)));
  return out;
}

/// Refined skew characteristic polynomial: sum of w^(|V| - |A|) z^(rank M_A).
inline BiPoly skew_char_refined(const SimpleGraph& g, const EnumOptions& opts = {}) {
  const SubsetRankTable t = subset_rank_table(g, false, opts);
  BiPoly out;
  for (int w = 0; w <= g.order(); ++w)
    for (int ra = 0; ra <= g.order(); ++ra) out.add_term({w, ra}, Coeff::from_unsigned(t.at(w, ra, 0)));
  return out;
}

/// r_G(z) = z^(rank M_G).
inline UniPoly rank_invariant(const SimpleGraph& g) { return UniPoly::monomial(rank(g.adjacency())); }

// ---- k-part generalization ------------------------------------------------

enum class BlockOrder { ordered, unordered };

/// Sum over k-tuples (A_1..A_k) of pairwise disjoint nonempty subsets covering
/// V of z^(sum rank M_{A_i}). Tuples are ordered by default, which makes the
/// k = 2 case equal pdgp(G) - 2 z^(rank M_G); BlockOrder::unordered divides
/// by k! and counts set partitions instead.
///
/// Computed by a subset DP over unordered partitions whose first block holds
/// the smallest remaining vertex, tracking the exponent distribution.
inline UniPoly pdgp_k(const SimpleGraph& g, int k, BlockOrder order = BlockOrder::ordered, const EnumOptions& opts = {}) {
  const int n = g.order();
  check_cap(n, opts.cap_or(kDefaultKPartCap), "vertex count for k-part enumeration");
  check_cap(n, 22, "vertex count for k-part enumeration (table size)");
  if (k < 1 || k > n)
    throw Error(ErrorKind::KOutOfRange, "k = " + std::to_string(k) + " must lie in 1.." + std::to_string(n));

  const std::uint64_t subsets = std::uint64_t{1} << n;
  const std::uint64_t* rows = g.adjacency().rows().data();
  std::vector<std::uint8_t> half_rank(subsets);
  for (std::uint64_t s = 0; s < subsets; ++s) half_rank[s] = static_cast<std::uint8_t>(detail::rank_masked(rows, s) / 2);

  // Ranks are even, so exponents are stored halved.
  const std::size_t width = static_cast<std::size_t>(n / 2 + 1);
  std::vector<std::uint64_t> prev(subsets * width, 0), cur(subsets * width, 0);
  for (std::uint64_t s = 1; s < subsets; ++s) prev[s * width + half_rank[s]] = 1;

  for (int level = 2; level <= k; ++level) {
    std::fill(cur.begin(), cur.end(), 0);
    for (std::uint64_t s = 1; s < subsets; ++s) {
      if (std::popcount(s) < level) continue;
      const std::uint64_t low = s & -s;
      const std::uint64_t rest = s ^ low;
      // First block = low | sub, sub a proper subset of rest (remainder nonempty).
      for (std::uint64_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
        const std::uint64_t block = low | sub;
        const std::uint64_t remainder = s ^ block;
        if (std::popcount(remainder) >= level - 1) {
          const std::size_t shift = half_rank[block];
          const std::uint64_t* src = &prev[remainder * width];
          std::uint64_t* dst = &cur[s * width];
          for (std::size_t e = 0; e + shift < width; ++e) dst[e + shift] += src[e];
        }
        if (sub == 0) break;
      }
    }
    std::swap(prev, cur);
  }

  UniPoly out;
  const std::uint64_t* top = &prev[(subsets - 1) * width];
  for (std::size_t e = 0; e < width; ++e) out.add_term(static_cast<int>(2 * e), Coeff::from_unsigned(top[e]));
  return order == BlockOrder::ordered ? out.scaled(factorial(k)) : out;
}

// ---- closed forms -----------------------------------------------------------

/// pdgp(K_n): 2^(n-1) z^n + 2^(n-1) z^(n-2) for even n, 2^n z^(n-1) for odd n.
inline UniPoly kn_closed(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "kn_closed needs n >= 1");
  if (n % 2 == 0) return UniPoly::monomial(n, pow2(n - 1)) + UniPoly::monomial(n - 2, pow2(n - 1));
  return UniPoly::monomial(n - 1, pow2(n));
}

/// pdgp(K_{m,n}) = 2 + (2^(m+1) + 2^(n+1) - 6) z^2 + (2^(m+n) - 2^(m+1) - 2^(n+1) + 4) z^4.
inline UniPoly kmn_closed(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadParameter, "kmn_closed needs m, n >= 1");
  UniPoly out = constant(2);
  out.add_term(2, pow2(m + 1) + pow2(n + 1) - 6);
  out.add_term(4, pow2(m + n) - pow2(m + 1) - pow2(n + 1) + 4);
  return out;
}

// ---- recursive engine -------------------------------------------------------

/// pdgp via structural reductions, falling back to enumeration only on cores
/// with no isolated or degree-one vertex:
///   isolated vertex v:      pdgp(G) = 2 pdgp(G - v)
///   disconnected G:         product over components
///   a with sole neighbour b: pdgp(G) = pdgp(G - a) + 2 z^2 pdgp(G - a - b)
inline UniPoly pdgp_recursive(const SimpleGraph& g, const EnumOptions& opts = {}) {
  check_cap(g.order(), opts.cap_or(kDefaultSubsetCap), "vertex count");
  const int n = g.order();
  if (n == 0) return constant(1);

  std::uint64_t isolated = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) isolated |= std::uint64_t{1} << v;
  if (isolated != 0)
    return pdgp_recursive(remove_vertices(g, VertexSubset(isolated)), opts).scaled(pow2(std::popcount(isolated)));

  const auto components = connected_components(g);
  if (components.size() > 1) {
    UniPoly out = constant(1);
    for (VertexSubset c : components) out *= pdgp_recursive(induced(g, c), opts);
    return out;
  }

  for (int a = 0; a < n; ++a) {
    if (g.degree(a) != 1) continue;
    const int b = std::countr_zero(g.neighbors(a));
    const UniPoly without_a = pdgp_recursive(remove_vertices(g, VertexSubset::of({a})), opts);
    const UniPoly without_ab = pdgp_recursive(remove_vertices(g, VertexSubset::of({a, b})), opts);
    return without_a + UniPoly::monomial(2, 2) * without_ab;
  }
  return pdgp(g, opts);
}

// ---- selectors and the four-term defect ------------------------------------

enum class Invariant {
  pdgp,
  pdgp_refined,
  skew_char,
  skew_char_refined,
  rank,
  pdgp_k,
  recursive,
  skew_char_nondegenerate,
};

using InvariantValue = std::variant<UniPoly, BiPoly>;

inline const char* to_string(Invariant f) {
  switch (f) {
    case Invariant::pdgp: return "pdgp";
    case Invariant::pdgp_refined: return "refined";
    case Invariant::skew_char: return "skew";
    case Invariant::skew_char_refined: return "refined-skew";
    case Invariant::rank: return "rank";
    case Invariant::pdgp_k: return "kpart";
    case Invariant::recursive: return "recursive";
    case Invariant::skew_char_nondegenerate: return "skew-nd";
  }
  return "?";
}

inline std::optional<Invariant> parse_invariant(const std::string& name) {
  for (Invariant f : {Invariant::pdgp, Invariant::pdgp_refined, Invariant::skew_char, Invariant::skew_char_refined,
                      Invariant::rank, Invariant::pdgp_k, Invariant::recursive, Invariant::skew_char_nondegenerate})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

/// Variable used to render univariate results: the skew polynomials live in w.
inline char variable_of(Invariant f) {
  return f == Invariant::skew_char || f == Invariant::skew_char_nondegenerate ? 'w' : 'z';
}

inline InvariantValue compute_invariant(Invariant f, const SimpleGraph& g, const EnumOptions& opts = {}, int k = 2,
                                        BlockOrder order = BlockOrder::ordered) {
  switch (f) {
    case Invariant::pdgp: return pdgp(g, opts);
    case Invariant::pdgp_refined: return pdgp_refined(g, opts);
    case Invariant::skew_char: return skew_char(g, opts);
    case Invariant::skew_char_refined: return skew_char_refined(g, opts);
    case Invariant::rank: return rank_invariant(g);
    case Invariant::pdgp_k: return pdgp_k(g, k, order, opts);
    case Invariant::recursive: return pdgp_recursive(g, opts);
    case Invariant::skew_char_nondegenerate: return skew_char_nondegenerate(g, opts);
  }
  throw Error(ErrorKind::BadParameter, "unknown invariant");
}

inline bool is_zero(const InvariantValue& v) {
  return std::visit([](const auto& p) { return p.is_zero(); }, v);
}

inline std::string to_string(const InvariantValue& v, char var = 'z') {
  if (const auto* u = std::get_if<UniPoly>(&v)) return to_string(*u, var);
  return to_string(std::get<BiPoly>(v));
}

/// f(G) - f(G'_ab) - f(G~_ab) + f(G~'_ab) for any polynomial-valued f.
template <typename F>
auto four_term_defect(F&& f, const SimpleGraph& g, int a, int b) {
  const SimpleGraph toggled = toggle_edge(g, a, b);
  const SimpleGraph tilde = neighbor_toggle(g, a, b);
  const SimpleGraph tilde_toggled = toggle_edge(tilde, a, b);
  auto out = f(g);
  out -= f(toggled);
  out -= f(tilde);
  out += f(tilde_toggled);
  return out;
}

inline InvariantValue four_term_defect(Invariant f, const SimpleGraph& g, int a, int b, const EnumOptions& opts = {}) {
  switch (f) {
    case Invariant::pdgp_refined:
    case Invariant::skew_char_refined:
      return four_term_defect([&](const SimpleGraph& h) { return std::get<BiPoly>(compute_invariant(f, h, opts)); }, g,
                              a, b);
    default:
      return four_term_defect([&](const SimpleGraph& h) { return std::get<UniPoly>(compute_invariant(f, h, opts)); }, g,
                              a, b);
  }
}

}  // namespace pdgp
