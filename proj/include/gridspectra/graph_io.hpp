#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "gridspectra/graph.hpp"

namespace gridspectra {

/// Largest vertex count accepted from files. Dense bitrow storage is
/// quadratic, so anything larger is refused before allocation.
inline constexpr std::size_t kMaxFileOrder = std::size_t{1} << 16;

namespace detail {

inline bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

/// Parses exactly `count` unsigned integers separated by blanks.
inline bool parse_fields(const std::string& line, std::uint64_t* out, int count) {
  std::istringstream in(line);
  for (int i = 0; i < count; ++i) {
    std::string tok;
    if (!(in >> tok)) return false;
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
    if (tok.size() > 18) return false;
    out[i] = std::stoull(tok);
  }
  std::string extra;
  return !(in >> extra);
}

}  // namespace detail

/// Edge-list format: a header line "n m" followed by m lines "u v",
/// 0-indexed. Blank lines after the last edge are tolerated.
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t header[2];
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++lineno;
  if (!detail::parse_fields(line, header, 2)) throw ParseError(lineno, "malformed header, expected \"n m\"");
  if (header[0] > kMaxFileOrder)
    throw ParseError(lineno, "vertex count " + std::to_string(header[0]) + " exceeds limit");
  const std::size_t n = header[0];
  const std::uint64_t m = header[1];
  if (n > 0 && m > static_cast<std::uint64_t>(n) * (n - 1) / 2)
    throw ParseError(lineno, "edge count exceeds n(n-1)/2");

  GraphBuilder b(n);
  std::uint64_t seen = 0;
  while (seen < m) {
    if (!std::getline(in, line)) throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(seen));
    ++lineno;
    std::uint64_t uv[2];
    if (!detail::parse_fields(line, uv, 2)) throw ParseError(lineno, "malformed edge line");
    if (uv[0] >= n || uv[1] >= n) throw ParseError(lineno, "vertex index out of range");
    if (uv[0] == uv[1]) throw ParseError(lineno, "loop at vertex " + std::to_string(uv[0]));
    if (!b.add_edge(uv[0], uv[1]))
      throw ParseError(lineno, "duplicate edge " + std::to_string(uv[0]) + " " + std::to_string(uv[1]));
    ++seen;
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!detail::is_blank(line)) throw ParseError(lineno, "unexpected content after last edge");
  }
  return std::move(b).build();
}

inline void format_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  format_edge_list(g, out);
  return out.str();
}

inline Graph read_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

inline void write_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  format_edge_list(g, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

/// Decodes one graph6 record (optionally prefixed by ">>graph6<<").
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw ParseError(1, "graph6 record truncated");
    const auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw ParseError(1, "invalid graph6 byte at offset " + std::to_string(pos - 1));
    return c - 63;
  };

  std::uint64_t n = 0;
  if (text.empty()) throw ParseError(1, "empty graph6 record");
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = next();
  } else {
    ++pos;
    const bool wide = pos < text.size() && static_cast<unsigned char>(text[pos]) == 126;
    if (wide) ++pos;
    const int groups = wide ? 6 : 3;
    for (int i = 0; i < groups; ++i) n = (n << 6) | next();
  }
  if (n > kMaxFileOrder) throw ParseError(1, "vertex count " + std::to_string(n) + " exceeds limit");

  GraphBuilder b(n);
  std::uint64_t word = 0;
  int bits_left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1U) b.add_edge(i, j);
    }
  }
  if (pos != text.size()) throw ParseError(1, "trailing bytes in graph6 record");
  return std::move(b).build();
}

/// Reads the first graph of a graph6 file.
inline Graph read_graph6(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty graph6 file");
  return parse_graph6(line);
}

}  // namespace gridspectra
