#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridspectra/cliques.hpp"
#include "gridspectra/graph.hpp"

namespace gridspectra {

/// A maximal clique with 4 * order >= 3 * s * (t + 2).
struct Line {
  VertexSet vertices;

  std::size_t order() const noexcept { return vertices.size(); }
};

struct LineStructure {
  ExtensionParams params;
  std::size_t n = 0;
  std::vector<Line> lines;
  /// incidence[v] lists the indices of the lines through v.
  std::vector<std::vector<std::size_t>> incidence;
  /// q[i-1] counts lines of order s(t-1)+i, i = 1..2s.
  std::vector<std::size_t> q;
  /// Indices of lines whose order lies outside [s(t-1)+1, s(t+1)].
  std::vector<std::size_t> out_of_range;

  std::int64_t delta() const { return static_cast<std::int64_t>(lines.size()); }
  std::int64_t alpha() const { return delta() - 2 * params.t - 2; }
};

/// The line threshold as an exact integer test.
inline bool is_line_order(std::size_t order, const ExtensionParams& p) {
  return 4 * static_cast<std::int64_t>(order) >= 3 * p.s * (p.t + 2);
}

/// Assembles incidence and the order histogram around a given set of lines.
/// Does not check that the lines are cliques.
inline LineStructure make_line_structure(std::size_t n, std::vector<Line> lines, const ExtensionParams& p) {
  LineStructure ls;
  ls.params = p;
  ls.n = n;
  ls.lines = std::move(lines);
  ls.incidence.assign(n, {});
  ls.q.assign(static_cast<std::size_t>(2 * p.s), 0);
  const std::int64_t lo = p.s * (p.t - 1) + 1;
  const std::int64_t hi = p.s * (p.t + 1);
  for (std::size_t i = 0; i < ls.lines.size(); ++i) {
    for (Vertex v : ls.lines[i].vertices) {
      if (v >= n) throw InvalidParameter("line vertex " + std::to_string(v) + " out of range");
      ls.incidence[v].push_back(i);
    }
    const auto c = static_cast<std::int64_t>(ls.lines[i].order());
    if (c < lo || c > hi)
      ls.out_of_range.push_back(i);
    else
      ++ls.q[static_cast<std::size_t>(c - lo)];
  }
  return ls;
}

/// Maximal cliques of g that qualify as lines for p.
inline LineStructure find_lines(const Graph& g, const ExtensionParams& p, std::size_t cap = kDefaultCliqueCap) {
  p.validate();
  std::vector<Line> lines;
  for (auto& c : maximal_cliques(g, cap))
    if (is_line_order(c.size(), p)) lines.push_back({std::move(c)});
  return make_line_structure(g.order(), std::move(lines), p);
}

/// Graph on the lines, two lines adjacent when they share a vertex.
inline Graph line_intersection_graph(const LineStructure& ls) {
  GraphBuilder b(ls.lines.size());
  for (const auto& through : ls.incidence)
    for (std::size_t i = 0; i < through.size(); ++i)
      for (std::size_t j = i + 1; j < through.size(); ++j) b.add_edge(through[i], through[j]);
  return std::move(b).build();
}

struct TwoLinesCheck {
  bool ok = false;
  VertexSet offending;
};

inline TwoLinesCheck check_two_lines_per_vertex(const LineStructure& ls, std::size_t n) {
  TwoLinesCheck out;
  for (Vertex v = 0; v < n; ++v)
    if (v >= ls.incidence.size() || ls.incidence[v].size() != 2) out.offending.push_back(v);
  out.ok = out.offending.empty();
  return out;
}

struct VertexLineProfile {
  /// Neighbours of v on neither line through v.
  std::int64_t ell = 0;
  /// Size of the intersection of the two lines through v.
  std::int64_t m = 0;
  bool ell_plus_m_ok = false;
  bool order_bounds_ok = false;
};

inline VertexLineProfile check_vertex_line_profile(const Graph& g, const LineStructure& ls, Vertex v,
                                                   const ExtensionParams& p) {
  g.check_vertex(v);
  if (v >= ls.incidence.size() || ls.incidence[v].size() != 2)
    throw PreconditionError("vertex " + std::to_string(v) + " is not on exactly two lines");
  const Line& c1 = ls.lines[ls.incidence[v][0]];
  const Line& c2 = ls.lines[ls.incidence[v][1]];
  const Bitrow b1 = to_bitrow(g.order(), c1.vertices);
  const Bitrow b2 = to_bitrow(g.order(), c2.vertices);

  VertexLineProfile out;
  out.m = static_cast<std::int64_t>((b1 & b2).count());
  out.ell = static_cast<std::int64_t>((g.row(v) - (b1 | b2)).count());
  out.ell_plus_m_ok = out.ell + out.m == p.s;
  const std::int64_t lo = p.s * (p.t - 1) + 1, hi = p.s * (p.t + 1);
  auto in_range = [&](const Line& l) {
    const auto c = static_cast<std::int64_t>(l.order());
    return c >= lo && c <= hi;
  };
  out.order_bounds_ok = in_range(c1) && in_range(c2);
  return out;
}

struct PairOrderViolation {
  std::size_t first = 0;
  std::size_t second = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t m = 0;
};

struct PairOrderCheck {
  bool ok = false;
  std::optional<PairOrderViolation> first_violation;
};

/// c1 + c2 == 2st + 2m for every pair of lines meeting in m >= 1 vertices.
inline PairOrderCheck check_intersecting_pair_orders(const LineStructure& ls, const ExtensionParams& p) {
  std::vector<Bitrow> rows;
  rows.reserve(ls.lines.size());
  for (const auto& l : ls.lines) rows.push_back(to_bitrow(ls.n, l.vertices));
  for (std::size_t i = 0; i < ls.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.lines.size(); ++j) {
      const auto m = static_cast<std::int64_t>((rows[i] & rows[j]).count());
      if (m == 0) continue;
      const auto c1 = static_cast<std::int64_t>(ls.lines[i].order());
      const auto c2 = static_cast<std::int64_t>(ls.lines[j].order());
      if (c1 + c2 != 2 * p.s * p.t + 2 * m) return {false, PairOrderViolation{i, j, c1, c2, m}};
    }
  }
  return {true, std::nullopt};
}

struct HistogramCheck {
  /// sum_i (s(t-1)+i) q_i == 2s(t+1)^2
  bool eq_main = false;
  /// 2t+2 <= delta <= 2t+6
  bool delta_bounds = false;
  /// sum_i (2s-i) q_i == alpha s(t+1)
  bool eq_alpha = false;
  /// delta == 2t+2 implies q_{2s} == delta (vacuous otherwise).
  bool equality_case_ok = false;
  /// Why the checks could not be evaluated; empty when they were.
  std::string reason;

  bool all_ok() const { return eq_main && delta_bounds && eq_alpha && equality_case_ok; }
};

inline HistogramCheck check_order_histogram(const LineStructure& ls, const ExtensionParams& p) {
  HistogramCheck out;
  if (!ls.out_of_range.empty()) {
    out.reason = std::to_string(ls.out_of_range.size()) + " line(s) with order outside [s(t-1)+1, s(t+1)]";
    return out;
  }
  const std::int64_t s = p.s, t = p.t;
  std::int64_t weighted = 0, deficit = 0;
  for (std::int64_t i = 1; i <= 2 * s; ++i) {
    const auto qi = static_cast<std::int64_t>(ls.q[static_cast<std::size_t>(i - 1)]);
    weighted += (s * (t - 1) + i) * qi;
    deficit += (2 * s - i) * qi;
  }
  const std::int64_t delta = ls.delta();
  out.eq_main = weighted == 2 * s * (t + 1) * (t + 1);
  out.delta_bounds = delta >= 2 * t + 2 && delta <= 2 * t + 6;
  out.eq_alpha = deficit == ls.alpha() * s * (t + 1);
  out.equality_case_ok = delta != 2 * t + 2 || static_cast<std::int64_t>(ls.q.back()) == delta;
  return out;
}

/// Exactly 2t+2 lines, all of order s(t+1).
inline bool check_line_count(const LineStructure& ls, const ExtensionParams& p) {
  if (ls.delta() != 2 * p.t + 2) return false;
  for (const auto& l : ls.lines)
    if (static_cast<std::int64_t>(l.order()) != p.s * (p.t + 1)) return false;
  return true;
}

}  // namespace gridspectra
