#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "pdgp/chord.hpp"
#include "pdgp/gf2.hpp"
#include "pdgp/graph.hpp"
#include "pdgp/graph_io.hpp"
#include "pdgp/invariants.hpp"
#include "pdgp/random.hpp"

namespace pdgp {

// Exhaustive and seeded sweeps behind `pdgp verify`. Each returns what was
// checked and how many checks failed; the first failure is described in
// `first_failure` for diagnostics.

struct SweepReport {
  std::uint64_t items = 0;   // graphs or diagrams visited
  std::uint64_t checks = 0;  // individual identities evaluated
  std::uint64_t failures = 0;
  std::string first_failure;
  std::map<std::string, std::uint64_t> failures_by_label;

  void fail(const std::string& what, const std::string& label = {}) {
    if (failures++ == 0) first_failure = what;
    if (!label.empty()) ++failures_by_label[label];
  }
  void absorb(const SweepReport& o) {
    items += o.items;
    checks += o.checks;
    for (const auto& [label, count] : o.failures_by_label) failures_by_label[label] += count;
    if (failures == 0 && o.failures != 0) first_failure = o.first_failure;
    failures += o.failures;
  }
  bool ok() const { return failures == 0; }
};

inline constexpr std::array<Invariant, 4> kFourTermInvariants = {
    Invariant::pdgp, Invariant::pdgp_refined, Invariant::skew_char, Invariant::skew_char_refined};

namespace detail {

inline void check_four_term(const SimpleGraph& g, int a, int b, SweepReport& r) {
  const EnumOptions single = EnumOptions::serial();
  for (Invariant f : kFourTermInvariants) {
    ++r.checks;
    if (!is_zero(four_term_defect(f, g, a, b, single)))
      r.fail(std::string(to_string(f)) + " defect on " + format_graph_inline(g) + " a=" + std::to_string(a) +
                 " b=" + std::to_string(b),
             to_string(f));
  }
}

}  // namespace detail

/// Every labeled graph on n vertices, every ordered pair a != b, every
/// four-term invariant.
inline SweepReport verify_four_term_exhaustive(int n) {
  SweepReport r;
  for (const SimpleGraph& g : enumerate_labeled_graphs(n)) {
    ++r.items;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) detail::check_four_term(g, a, b, r);
  }
  return r;
}

/// `count` graphs G(n, 1/2) with n uniform in [2, max_n] and one random
/// ordered pair each.
inline SweepReport verify_four_term_random(int count, int max_n, std::uint64_t seed) {
  SweepReport r;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = rng.between(2, max_n);
    const SimpleGraph g = random_graph(n, 0.5, rng.next());
    const int a = rng.between(0, n - 1);
    int b = rng.between(0, n - 2);
    if (b >= a) ++b;
    ++r.items;
    detail::check_four_term(g, a, b, r);
  }
  return r;
}

/// Ribbon-side polynomial against the rank formula on the intersection graph.
inline SweepReport verify_theorem1(int m) {
  SweepReport r;
  for_each_diagram(m, [&](const ChordDiagram& d) {
    ++r.items;
    ++r.checks;
    const UniPoly ribbon = pdgp_via_ribbon(d, 1);
    const UniPoly by_rank = pdgp(intersection_graph(d), EnumOptions::serial());
    if (!(ribbon == by_rank))
      r.fail(d.to_string() + ": ribbon " + to_string(ribbon) + " != rank " + to_string(by_rank));
  });
  return r;
}

/// Boundary components of the full bouquet equal corank + 1.
inline SweepReport verify_beck(int m) {
  SweepReport r;
  for_each_diagram(m, [&](const ChordDiagram& d) {
    ++r.items;
    ++r.checks;
    const int faces = boundary_components(d, ChordSubset::full(d.chords()));
    const int expected = corank(intersection_graph(d).adjacency()) + 1;
    if (faces != expected)
      r.fail(d.to_string() + ": " + std::to_string(faces) + " faces, corank+1 = " + std::to_string(expected));
  });
  return r;
}

/// Euler genus of each spanning surface equals the principal rank on A.
inline SweepReport verify_rank_genus(int m) {
  SweepReport r;
  for_each_diagram(m, [&](const ChordDiagram& d) {
    ++r.items;
    const Gf2Matrix adj = intersection_graph(d).adjacency();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
      ++r.checks;
      const int genus = euler_genus_spanning(d, ChordSubset(a));
      const int rk = rank_of_subset(adj, VertexSubset(a));
      if (genus != rk)
        r.fail(d.to_string() + " subset " + std::to_string(a) + ": genus " + std::to_string(genus) + " rank " +
               std::to_string(rk));
    }
  });
  return r;
}

inline SweepReport verify_recurrence_exhaustive(int n) {
  SweepReport r;
  for (const SimpleGraph& g : enumerate_labeled_graphs(n)) {
    ++r.items;
    ++r.checks;
    const UniPoly direct = pdgp(g, EnumOptions::serial());
    const UniPoly rec = pdgp_recursive(g, EnumOptions::serial());
    if (!(direct == rec)) r.fail(format_graph_inline(g) + ": " + to_string(rec) + " != " + to_string(direct));
  }
  return r;
}

/// `count` random graphs with n uniform in [2, max_n], each with a leaf.
inline SweepReport verify_recurrence_random(int count, int max_n, std::uint64_t seed) {
  SweepReport r;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = rng.between(2, max_n);
    const double p = rng.uniform();
    const SimpleGraph g = random_graph_with_leaf(n, p, rng.next());
    ++r.items;
    ++r.checks;
    const UniPoly direct = pdgp(g, EnumOptions::serial());
    const UniPoly rec = pdgp_recursive(g, EnumOptions::serial());
    if (!(direct == rec)) r.fail(format_graph_inline(g) + ": " + to_string(rec) + " != " + to_string(direct));
  }
  return r;
}

}  // namespace pdgp
