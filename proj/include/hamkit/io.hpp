#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hamkit/error.hpp"
#include "hamkit/graph.hpp"

namespace hamkit {

enum class graph_format { edge_list, graph6 };

inline const char* to_string(graph_format f) {
  return f == graph_format::graph6 ? "graph6" : "edge-list";
}

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

struct token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<token> split_tokens(std::string_view line) {
  std::vector<token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline long long parse_int(const token& t, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw parse_error("expected integer, got '" + std::string(t.text) + "'",
                      line, t.column);
  return value;
}

}  // namespace detail

// Edge list: header "n m", then one "u v" pair per line, 0-based. Lines whose
// first non-blank character is '#' are comments. A header edge count that
// disagrees with the number of distinct edges is reported through `warnings`
// rather than rejected.
inline graph read_edge_list(std::string_view text,
                            std::vector<std::string>* warnings = nullptr) {
  long long n = -1, m = -1;
  std::vector<edge> es;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto toks = detail::split_tokens(line);
    if (toks.empty() || toks.front().text.front() == '#') continue;
    if (toks.size() != 2)
      throw parse_error("expected two integers", line_no,
                        toks.size() > 2 ? toks[2].column : line.size() + 1);
    long long a = detail::parse_int(toks[0], line_no);
    long long b = detail::parse_int(toks[1], line_no);
    if (n < 0) {
      if (a < 0 || b < 0)
        throw parse_error("negative header value", line_no, toks[0].column);
      if (a > 1'000'000)
        throw parse_error("vertex count too large", line_no, toks[0].column);
      n = a;
      m = b;
      continue;
    }
    if (a < 0 || a >= n)
      throw parse_error("index " + std::to_string(a) + " out of range",
                        line_no, toks[0].column);
    if (b < 0 || b >= n)
      throw parse_error("index " + std::to_string(b) + " out of range",
                        line_no, toks[1].column);
    if (a == b)
      throw parse_error("self loop at vertex " + std::to_string(a), line_no,
                        toks[0].column);
    es.emplace_back(static_cast<vertex>(a), static_cast<vertex>(b));
  }
  if (n < 0) throw parse_error("missing header line \"n m\"", line_no, 1);
  graph g = graph::from_edge_list(static_cast<int>(n), es);
  if (warnings && static_cast<long long>(g.size()) != m)
    warnings->push_back("header declares " + std::to_string(m) +
                        " edges, found " + std::to_string(g.size()) +
                        " distinct edges");
  return g;
}

inline std::string write_edge_list(const graph& g) {
  std::ostringstream os;
  auto es = g.edges();
  os << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
  return os.str();
}

// graph6: size prefix, then the upper triangle x(i,j), i<j, in column order
// (j = 1..n-1, i = 0..j-1), packed six bits per byte, each byte offset by 63.
inline graph read_graph6(std::string_view text) {
  while (!text.empty() && detail::is_space(text.back()))
    text.remove_suffix(1);
  while (!text.empty() && detail::is_space(text.front()))
    text.remove_prefix(1);
  if (text.starts_with(">>")) {
    constexpr std::string_view header = ">>graph6<<";
    if (!text.starts_with(header)) throw unsupported_header("unknown header");
    text.remove_prefix(header.size());
  }
  if (!text.empty() && (text.front() == ':' || text.front() == ';' ||
                        text.front() == '&'))
    throw unsupported_header("sparse6/digraph6 input is not supported");

  std::size_t at = 0;
  auto next = [&]() -> int {
    if (at >= text.size())
      throw parse_error("unexpected end of graph6 data", 0, at);
    int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126)
      throw parse_error("byte outside graph6 range", 0, at);
    ++at;
    return c - 63;
  };

  long long n = next();
  if (n == 63) {
    if (at < text.size() && text[at] == '~')
      throw unsupported_header("graph6 orders above 258047 not supported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  }
  std::vector<edge> es;
  int bits_left = 0, word = 0;
  for (vertex j = 1; j < n; ++j)
    for (vertex i = 0; i < j; ++i) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1) es.emplace_back(i, j);
    }
  if (at != text.size())
    throw parse_error("trailing bytes after graph6 data", 0, at);
  return graph::from_edge_list(static_cast<int>(n), es);
}

inline std::string write_graph6(const graph& g) {
  std::string out;
  long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    if (n > 258047) throw unsupported_header("graph too large for graph6");
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int word = 0, filled = 0;
  for (vertex j = 1; j < n; ++j)
    for (vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

inline graph read_graph(std::string_view text, graph_format f,
                        std::vector<std::string>* warnings = nullptr) {
  return f == graph_format::graph6 ? read_graph6(text)
                                   : read_edge_list(text, warnings);
}

inline std::string write_graph(const graph& g, graph_format f) {
  return f == graph_format::graph6 ? write_graph6(g) + "\n"
                                   : write_edge_list(g);
}

// ".g6" selects graph6, anything else the edge-list format.
inline graph_format guess_format(std::string_view path) {
  return path.ends_with(".g6") || path.ends_with(".graph6")
             ? graph_format::graph6
             : graph_format::edge_list;
}

inline graph read_graph_file(const std::string& path, graph_format f,
                             std::vector<std::string>* warnings = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_graph(ss.str(), f, warnings);
}

}  // namespace hamkit
