#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ovdiam/digraph.hpp"
#include "ovdiam/errors.hpp"

namespace ovdiam {

// DIMACS shortest-path format: "c" comment lines, one "p sp <n> <m>" line,
// then m lines "a <tail> <head> <weight>" with 1-based vertex ids.

inline void write_dimacs(std::ostream& out, const WeightedDigraph& g,
                         const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p sp " << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (const auto& a : g.arcs()) {
    out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight << '\n';
  }
}

inline WeightedDigraph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<ArcSpec> arcs;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;

    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    std::string extra;
    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      std::string kind;
      if (!(fields >> kind >> n >> m) || kind != "sp" || (fields >> extra)) {
        throw ParseError(line_no, "malformed problem line, expected \"p sp <n> <m>\"");
      }
      if (n < 1 || m < 0) throw ParseError(line_no, "problem line needs n >= 1 and m >= 0");
      have_header = true;
      arcs.reserve(static_cast<std::size_t>(m));
    } else if (tag == "a") {
      if (!have_header) throw ParseError(line_no, "arc line before problem line");
      ArcSpec a{};
      if (!(fields >> a.tail >> a.head >> a.weight) || (fields >> extra)) {
        throw ParseError(line_no, "malformed arc line, expected \"a <tail> <head> <weight>\"");
      }
      if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n) {
        throw ParseError(line_no, "arc endpoint out of range [1, " + std::to_string(n) + "]");
      }
      if (a.weight < 0) throw ParseError(line_no, "negative weight");
      if (static_cast<long long>(arcs.size()) == m) {
        throw ParseError(line_no, "more arcs than the " + std::to_string(m) + " declared");
      }
      --a.tail;
      --a.head;
      arcs.push_back(a);
    } else {
      throw ParseError(line_no, "unknown line type \"" + tag + "\"");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing problem line");
  if (static_cast<long long>(arcs.size()) != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " arcs, found " +
                                  std::to_string(arcs.size()));
  }
  return build_graph(static_cast<std::size_t>(n), arcs);
}

inline WeightedDigraph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

}  // namespace ovdiam
