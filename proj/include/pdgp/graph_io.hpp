#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pdgp/error.hpp"
#include "pdgp/graph.hpp"

namespace pdgp {

// Text format: first non-comment line holds n, every further non-empty line
// holds "u v" (0-indexed). Lines starting with '#' are ignored.

namespace detail {

inline bool blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

inline int parse_int_token(std::istringstream& in, int line_no) {
  long long v;
  if (!(in >> v) || v < 0 || v > 1'000'000)
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected a nonnegative integer");
  return static_cast<int>(v);
}

}  // namespace detail

inline SimpleGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      n = detail::parse_int_token(fields, line_no);
    } else {
      const int u = detail::parse_int_token(fields, line_no);
      const int v = detail::parse_int_token(fields, line_no);
      edges.emplace_back(u, v);
    }
    std::string extra;
    if (fields >> extra)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
  }
  if (n < 0) throw Error(ErrorKind::EmptyInput, "graph text has no vertex count line");
  return from_edge_list(n, edges);
}

inline SimpleGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

/// Writes n, then one "u v" line per edge with u < v in lexicographic order.
inline std::string format_graph(const SimpleGraph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// One-line form "n=3 edges=0-1,1-2", matching the CLI's --n/--edges input.
inline std::string format_graph_inline(const SimpleGraph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " edges=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

/// Inline edge list "u-v,u-v,..."; whitespace around tokens is ignored.
inline SimpleGraph parse_inline_edges(int n, const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(ErrorKind::ParseError, "edge '" + item + "' is not of the form u-v");
    try {
      std::size_t used_u = 0, used_v = 0;
      const std::string lhs = item.substr(0, dash), rhs = item.substr(dash + 1);
      const int u = std::stoi(lhs, &used_u);
      const int v = std::stoi(rhs, &used_v);
      if (lhs.find_first_not_of(" \t", used_u) != std::string::npos ||
          rhs.find_first_not_of(" \t", used_v) != std::string::npos || u < 0 || v < 0)
        throw std::invalid_argument(item);
      edges.emplace_back(u, v);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "edge '" + item + "' is not of the form u-v");
    }
  }
  return from_edge_list(n, edges);
}

}  // namespace pdgp
