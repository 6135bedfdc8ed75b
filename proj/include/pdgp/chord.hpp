#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pdgp/error.hpp"
#include "pdgp/graph.hpp"
#include "pdgp/parallel.hpp"
#include "pdgp/polynomial.hpp"
#include "pdgp/random.hpp"
#include "pdgp/subset.hpp"

namespace pdgp {

/// Subset of chords; same representation as a vertex subset of the
/// intersection graph.
using ChordSubset = VertexSubset;

inline constexpr int kDefaultRibbonChordCap = 24;
inline constexpr int kDefaultDiagramEnumerationCap = 7;

/// Chord diagram stored as a double-occurrence word over 0..m-1, labels
/// canonicalized by first occurrence. Models an orientable bouquet: one
/// vertex disc with an untwisted band per chord.
class ChordDiagram {
 public:
  ChordDiagram() = default;

  /// Accepts any labels; each must occur exactly twice.
  explicit ChordDiagram(const std::vector<int>& labels) {
    std::map<int, int> relabel;
    std::vector<int> seen;
    word_.reserve(labels.size());
    for (int l : labels) {
      auto [it, inserted] = relabel.try_emplace(l, static_cast<int>(relabel.size()));
      if (inserted) seen.push_back(0);
      ++seen[static_cast<std::size_t>(it->second)];
      word_.push_back(it->second);
    }
    for (std::size_t c = 0; c < seen.size(); ++c)
      if (seen[c] != 2)
        throw Error(ErrorKind::BadOccurrenceCount,
                    "chord " + std::to_string(c) + " occurs " + std::to_string(seen[c]) + " times");
    m_ = static_cast<int>(seen.size());
    check_cap(m_, kMaxVertices, "chord count");
    ends_.assign(static_cast<std::size_t>(m_), {-1, -1});
    for (int p = 0; p < static_cast<int>(word_.size()); ++p) {
      auto& e = ends_[static_cast<std::size_t>(word_[static_cast<std::size_t>(p)])];
      (e.first < 0 ? e.first : e.second) = p;
    }
  }

  int chords() const { return m_; }
  const std::vector<int>& word() const { return word_; }
  /// Endpoint positions (first < second) of chord c.
  std::pair<int, int> ends(int c) const { return ends_[static_cast<std::size_t>(c)]; }

  /// Word rotated left by k positions (re-canonicalized).
  ChordDiagram rotated(int k) const {
    std::vector<int> w(word_.size());
    const int len = static_cast<int>(word_.size());
    for (int p = 0; p < len; ++p) w[static_cast<std::size_t>(p)] = word_[static_cast<std::size_t>((p + k) % len)];
    return ChordDiagram(w);
  }

  std::string to_string() const {
    std::string out;
    for (int l : word_) {
      if (m_ <= 26) {
        out.push_back(static_cast<char>('A' + l));
      } else {
        if (!out.empty()) out.push_back(' ');
        out += std::to_string(l);
      }
    }
    return out;
  }

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) { return a.word_ == b.word_; }

 private:
  std::vector<int> word_;
  std::vector<std::pair<int, int>> ends_;
  int m_ = 0;
};

/// Tokens are separated by whitespace or commas; a string with no separators
/// is read one character per token ("ABAB"). Twist markers are rejected since
/// only orientable bouquets are modeled.
inline ChordDiagram parse_word(const std::string& text) {
  if (text.find_first_of("'~-") != std::string::npos)
    throw Error(ErrorKind::ParseError, "twisted or signed chords are not supported");
  std::vector<std::string> tokens;
  const bool separated = text.find_first_of(" \t\r\n,") != std::string::npos;
  if (separated) {
    std::string cur;
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        if (!cur.empty()) tokens.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
  } else {
    for (char ch : text) tokens.emplace_back(1, ch);
  }
  if (tokens.empty()) throw Error(ErrorKind::EmptyInput, "chord word is empty");

  std::map<std::string, int> ids;
  std::vector<int> labels;
  for (const auto& t : tokens) labels.push_back(ids.try_emplace(t, static_cast<int>(ids.size())).first->second);
  return ChordDiagram(labels);
}

/// Chords c, d are adjacent iff their endpoints interleave.
inline SimpleGraph intersection_graph(const ChordDiagram& d) {
  SimpleGraph g(d.chords());
  for (int a = 0; a < d.chords(); ++a)
    for (int b = a + 1; b < d.chords(); ++b) {
      auto [i1, i2] = d.ends(a);
      auto [j1, j2] = d.ends(b);
      if ((i1 < j1 && j1 < i2 && i2 < j2) || (j1 < i1 && i1 < j2 && j2 < i2)) g.flip(a, b);
    }
  return g;
}

/// Boundary components of the vertex disc plus the bands of the chords in
/// `a`: cycles of rho∘tau on the 2|a| surviving endpoints, where tau swaps the
/// two ends of a chord and rho steps to the next endpoint around the circle.
inline int boundary_components(const ChordDiagram& d, ChordSubset a) {
  std::array<int, 2 * kMaxVertices> index_of{};
  std::array<int, 2 * kMaxVertices> partner{};
  int len = 0;
  const auto& word = d.word();
  for (std::size_t p = 0; p < word.size(); ++p)
    if (a.contains(word[p])) index_of[p] = len++;
  if (len == 0) return 1;
  for (int c = 0; c < d.chords(); ++c) {
    if (!a.contains(c)) continue;
    auto [p, q] = d.ends(c);
    partner[static_cast<std::size_t>(index_of[static_cast<std::size_t>(p)])] = index_of[static_cast<std::size_t>(q)];
    partner[static_cast<std::size_t>(index_of[static_cast<std::size_t>(q)])] = index_of[static_cast<std::size_t>(p)];
  }
  std::array<bool, 2 * kMaxVertices> visited{};
  int cycles = 0;
  for (int start = 0; start < len; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    for (int i = start; !visited[static_cast<std::size_t>(i)];) {
      visited[static_cast<std::size_t>(i)] = true;
      i = (partner[static_cast<std::size_t>(i)] + 1) % len;
    }
  }
  return cycles;
}

/// Euler genus of the spanning surface F_A: 2c - |V| + |E| - |F| with c = |V| = 1.
inline int euler_genus_spanning(const ChordDiagram& d, ChordSubset a) {
  return 1 + a.size() - boundary_components(d, a);
}

/// Euler genus of the partial dual along `a`, via eps(F_A) + eps(F_{A^c}).
inline int partial_dual_genus(const ChordDiagram& d, ChordSubset a) {
  return euler_genus_spanning(d, a) + euler_genus_spanning(d, a.complement_in(d.chords()));
}

/// Partial-dual genus polynomial by tracing the boundary of every spanning
/// surface; independent of any matrix rank computation.
inline UniPoly pdgp_via_ribbon(const ChordDiagram& d, unsigned threads = 1, int cap = kDefaultRibbonChordCap) {
  const int m = d.chords();
  check_cap(m, cap, "chord count");
  using Counts = std::vector<std::uint64_t>;
  const Counts counts = parallel_reduce(
      std::uint64_t{1} << m, threads, Counts(static_cast<std::size_t>(2 * m + 2), 0),
      [&](std::uint64_t begin, std::uint64_t end, Counts& acc) {
        for (std::uint64_t mask = begin; mask < end; ++mask)
          ++acc[static_cast<std::size_t>(partial_dual_genus(d, ChordSubset(mask)))];
      },
      [](Counts& into, const Counts& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      },
      std::uint64_t{1} << 10);
  UniPoly out;
  for (std::size_t e = 0; e < counts.size(); ++e)
    out.add_term(static_cast<int>(e), Coeff::from_unsigned(counts[e]));
  return out;
}

/// Visits all (2m-1)!! chord diagrams with m chords, i.e. every perfect
/// matching of 2m positions, each exactly once.
inline void for_each_diagram(int m, const std::function<void(const ChordDiagram&)>& visit,
                             int cap = kDefaultDiagramEnumerationCap) {
  check_cap(m, cap, "chord count for enumeration");
  if (m < 0) throw Error(ErrorKind::BadParameter, "negative chord count");
  const int len = 2 * m;
  std::vector<int> word(static_cast<std::size_t>(len), -1);
  std::function<void(int, int)> place = [&](int pos, int next_label) {
    while (pos < len && word[static_cast<std::size_t>(pos)] >= 0) ++pos;
    if (pos == len) {
      visit(ChordDiagram(word));
      return;
    }
    word[static_cast<std::size_t>(pos)] = next_label;
    for (int q = pos + 1; q < len; ++q) {
      if (word[static_cast<std::size_t>(q)] >= 0) continue;
      word[static_cast<std::size_t>(q)] = next_label;
      place(pos + 1, next_label + 1);
      word[static_cast<std::size_t>(q)] = -1;
    }
    word[static_cast<std::size_t>(pos)] = -1;
  };
  place(0, 0);
}

inline std::vector<ChordDiagram> enumerate_diagrams(int m, int cap = kDefaultDiagramEnumerationCap) {
  std::vector<ChordDiagram> out;
  for_each_diagram(m, [&](const ChordDiagram& d) { out.push_back(d); }, cap);
  return out;
}

/// Uniform over perfect matchings: shuffles the word 0,0,1,1,...
inline ChordDiagram random_diagram(int m, std::uint64_t seed) {
  check_cap(m, kMaxVertices, "chord count");
  Rng rng(seed);
  std::vector<int> word;
  for (int c = 0; c < m; ++c) word.insert(word.end(), {c, c});
  for (std::size_t i = word.size(); i > 1; --i) std::swap(word[i - 1], word[rng.below(i)]);
  return ChordDiagram(word);
}

}  // namespace pdgp
