#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dynamo/graph.hpp"

namespace dynamo::io {

/// Malformed input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-blank lines that do not start with '#', split on whitespace.
inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream split(text);
    Line line{number, {}};
    for (std::string tok; split >> tok;) line.tokens.push_back(tok);
    out.push_back(std::move(line));
  }
  return out;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

struct PairList {
  std::size_t n = 0;
  std::vector<Edge> pairs;
  std::vector<std::size_t> lines;  // source line of each pair
};

inline PairList parse_pairs(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(0, "missing header line \"n m\"");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, "header must be \"n m\"");
  PairList out;
  out.n = parse_count(header.tokens[0], header.number);
  const std::size_t m = parse_count(header.tokens[1], header.number);
  if (lines.size() - 1 > m)
    throw ParseError(lines[m + 1].number,
                     "more edge lines than the " + std::to_string(m) + " announced in the header");
  if (lines.size() - 1 < m)
    throw ParseError(header.number, "header announces " + std::to_string(m) +
                                        " edges but file has " +
                                        std::to_string(lines.size() - 1));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, "edge line must be \"u v\"");
    const Vertex u = parse_count(line.tokens[0], line.number);
    const Vertex v = parse_count(line.tokens[1], line.number);
    if (u >= out.n || v >= out.n)
      throw ParseError(line.number, "endpoint out of range (n=" + std::to_string(out.n) + ")");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    out.pairs.emplace_back(u, v);
    out.lines.push_back(line.number);
  }
  return out;
}

}  // namespace detail

/// Graph file: header "n m", then m lines "u v" (edge u -> v, 0-based).
/// Lines starting with '#' and blank lines are ignored.
inline DirectedGraph parse_graph(std::istream& in) {
  auto list = detail::parse_pairs(in);
  std::vector<std::pair<Edge, std::size_t>> order;
  for (std::size_t i = 0; i < list.pairs.size(); ++i) order.emplace_back(list.pairs[i], list.lines[i]);
  std::sort(order.begin(), order.end());
  for (std::size_t i = 1; i < order.size(); ++i)
    if (order[i].first == order[i - 1].first)
      throw ParseError(std::max(order[i].second, order[i - 1].second),
                       "duplicate edge " + std::to_string(order[i].first.first) + " " +
                           std::to_string(order[i].first.second));
  return build_graph(list.n, std::move(list.pairs));
}

/// Same layout as the graph file, each line an unordered pair.
inline UndirectedGraph parse_undirected(std::istream& in) {
  auto list = detail::parse_pairs(in);
  std::vector<std::pair<Edge, std::size_t>> order;
  for (std::size_t i = 0; i < list.pairs.size(); ++i) {
    auto [u, v] = list.pairs[i];
    order.push_back({{std::min(u, v), std::max(u, v)}, list.lines[i]});
  }
  std::sort(order.begin(), order.end());
  for (std::size_t i = 1; i < order.size(); ++i)
    if (order[i].first == order[i - 1].first)
      throw ParseError(std::max(order[i].second, order[i - 1].second),
                       "duplicate edge " + std::to_string(order[i].first.first) + " " +
                           std::to_string(order[i].first.second));
  return UndirectedGraph::build(list.n, std::move(list.pairs));
}

/// Threshold file: n lines "v t", one per vertex.
inline ThresholdAssignment parse_thresholds(std::istream& in, std::size_t n) {
  const auto lines = detail::content_lines(in);
  std::vector<std::uint32_t> tau(n, 0);
  for (const auto& line : lines) {
    if (line.tokens.size() != 2) throw ParseError(line.number, "threshold line must be \"v t\"");
    const Vertex v = detail::parse_count(line.tokens[0], line.number);
    const std::size_t t = detail::parse_count(line.tokens[1], line.number);
    if (v >= n) throw ParseError(line.number, "vertex out of range (n=" + std::to_string(n) + ")");
    if (t == 0) throw ParseError(line.number, "threshold must be positive");
    if (tau[v] != 0) throw ParseError(line.number, "vertex " + std::to_string(v) + " listed twice");
    tau[v] = static_cast<std::uint32_t>(t);
  }
  for (Vertex v = 0; v < n; ++v)
    if (tau[v] == 0) throw ParseError(0, "no threshold given for vertex " + std::to_string(v));
  return ThresholdAssignment(std::move(tau));
}

/// Edges are written in the graph's sorted order.
inline void write_graph(std::ostream& out, const DirectedGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_thresholds(std::ostream& out, const ThresholdAssignment& tau) {
  for (Vertex v = 0; v < tau.size(); ++v) out << v << ' ' << tau[v] << '\n';
}

/// Threshold choice: strict | simple | const K | file PATH.
struct ThresholdSpec {
  enum class Kind { Strict, Simple, Constant, File };
  Kind kind = Kind::Strict;
  std::uint32_t constant = 0;
  std::string path;

  /// Accepts the tokens as typed on the command line.
  static ThresholdSpec parse(const std::vector<std::string>& tokens) {
    if (tokens.empty()) return {};
    const std::string& head = tokens.front();
    auto arity = [&](std::size_t want) {
      if (tokens.size() != want)
        throw ParseError(0, "threshold spec '" + head + "' takes " + std::to_string(want - 1) +
                                " argument(s)");
    };
    if (head == "strict") {
      arity(1);
      return {Kind::Strict, 0, {}};
    }
    if (head == "simple") {
      arity(1);
      return {Kind::Simple, 0, {}};
    }
    if (head == "const") {
      arity(2);
      const std::size_t k = detail::parse_count(tokens[1], 0);
      if (k == 0) throw ParseError(0, "constant threshold must be positive");
      return {Kind::Constant, static_cast<std::uint32_t>(k), {}};
    }
    if (head == "file") {
      arity(2);
      return {Kind::File, 0, tokens[1]};
    }
    throw ParseError(0, "unknown threshold spec '" + head + "'");
  }
};

}  // namespace dynamo::io
