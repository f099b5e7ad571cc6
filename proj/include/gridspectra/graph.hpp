#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gridspectra/error.hpp"

namespace gridspectra {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

using Bitrow = boost::dynamic_bitset<std::uint64_t>;

/// The (s, t) pair of a clique extension of the (t+1)x(t+1) grid.
struct ExtensionParams {
  std::int64_t s = 2;
  std::int64_t t = 1;

  /// Throws InvalidParameter unless s >= 2 and t >= 1.
  void validate() const {
    if (s < 2 || t < 1)
      throw InvalidParameter("extension parameters require s >= 2 and t >= 1 (got s=" +
                             std::to_string(s) + ", t=" + std::to_string(t) + ")");
  }

  std::int64_t valency() const { return s * (2 * t + 1) - 1; }
  std::int64_t order() const { return s * (t + 1) * (t + 1); }
  std::int64_t line_order() const { return s * (t + 1); }

  friend bool operator==(const ExtensionParams&, const ExtensionParams&) = default;
};

class GraphBuilder;

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is held twice: as bitrows for set intersection and as sorted
/// neighbor lists for iteration.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : rows_(n, Bitrow(n)), adj_(n) {}

  std::size_t order() const noexcept { return adj_.size(); }

  std::size_t size() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

  const Bitrow& row(Vertex v) const { return rows_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }

  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= order())
      throw InvalidParameter("vertex " + std::to_string(v) + " out of range for graph of order " +
                             std::to_string(order()));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;

  std::vector<Bitrow> rows_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area for a Graph. Loops are rejected; repeated edges are
/// ignored unless the caller asks for them to be reported.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : rows_(n, Bitrow(n)) {}

  std::size_t order() const noexcept { return rows_.size(); }

  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order())
      throw InvalidParameter("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for order " + std::to_string(order()));
    if (u == v) throw InvalidParameter("loop at vertex " + std::to_string(u));
    if (rows_[u].test(v)) return false;
    rows_[u].set(v);
    rows_[v].set(u);
    return true;
  }

  bool remove_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order() || !rows_[u].test(v)) return false;
    rows_[u].reset(v);
    rows_[v].reset(u);
    return true;
  }

  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }

  Graph build() && {
    Graph g;
    const std::size_t n = order();
    g.adj_.resize(n);
    std::size_t twice = 0;
    for (Vertex u = 0; u < n; ++u) {
      auto& list = g.adj_[u];
      list.reserve(rows_[u].count());
      for (auto v = rows_[u].find_first(); v != Bitrow::npos; v = rows_[u].find_next(v))
        list.push_back(v);
      twice += list.size();
    }
    g.rows_ = std::move(rows_);
    g.edge_count_ = twice / 2;
    return g;
  }

 private:
  std::vector<Bitrow> rows_;
};

inline GraphBuilder to_builder(const Graph& g) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  return b;
}

inline Graph from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// K_m.
inline Graph build_complete(std::size_t m) {
  if (m == 0) throw InvalidParameter("complete graph needs at least one vertex");
  GraphBuilder b(m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

/// Cartesian product g □ h. Vertex (u, v) has index u * |h| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw InvalidParameter("cartesian product of an empty graph");
  const std::size_t nh = h.order();
  GraphBuilder b(g.order() * nh);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < nh; ++v) {
      const Vertex x = u * nh + v;
      for (Vertex w : h.neighbors(v))
        if (v < w) b.add_edge(x, u * nh + w);
      for (Vertex w : g.neighbors(u))
        if (u < w) b.add_edge(x, w * nh + v);
    }
  }
  return std::move(b).build();
}

/// The m x m rook's graph K_m □ K_m.
inline Graph build_grid(std::size_t m) {
  if (m < 2) throw InvalidParameter("grid side must be at least 2");
  const Graph k = build_complete(m);
  return cartesian_product(k, k);
}

/// s-clique extension: vertex (x, i) has index x * s + i and adjacency
/// J_s (x) (A + I) - I.
inline Graph clique_extension(const Graph& g, std::size_t s) {
  if (s == 0) throw InvalidParameter("clique extension size must be positive");
  const std::size_t n = g.order();
  GraphBuilder b(n * s);
  for (Vertex x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) b.add_edge(x * s + i, x * s + j);
      for (Vertex y : g.neighbors(x)) {
        if (y < x) continue;
        for (std::size_t j = 0; j < s; ++j) b.add_edge(x * s + i, y * s + j);
      }
    }
  }
  return std::move(b).build();
}

/// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
/// Element (a, b) has index 4a + b.
inline Graph build_shrikhande() {
  constexpr int kSteps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  GraphBuilder b(16);
  for (int a = 0; a < 4; ++a) {
    for (int c = 0; c < 4; ++c) {
      for (const auto& step : kSteps) {
        const int a2 = (a + step[0]) % 4;
        const int c2 = (c + step[1]) % 4;
        b.add_edge(static_cast<Vertex>(4 * a + c), static_cast<Vertex>(4 * a2 + c2));
      }
    }
  }
  return std::move(b).build();
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Throws InvalidParameter if `set` has an out-of-range or repeated index or
/// is not sorted.
inline void check_vertex_set(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    g.check_vertex(set[i]);
    if (i > 0 && set[i - 1] >= set[i])
      throw InvalidParameter("vertex set must be sorted without duplicates (at index " +
                             std::to_string(i) + ")");
  }
}

inline VertexSet to_vertex_set(const Bitrow& row) {
  VertexSet out;
  out.reserve(row.count());
  for (auto v = row.find_first(); v != Bitrow::npos; v = row.find_next(v)) out.push_back(v);
  return out;
}

inline Bitrow to_bitrow(std::size_t n, std::span<const Vertex> set) {
  Bitrow row(n);
  for (Vertex v : set) row.set(v);
  return row;
}

/// Subgraph induced on `set`; vertex i of the result is set[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> set) {
  check_vertex_set(g, set);
  GraphBuilder b(set.size());
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.adjacent(set[i], set[j])) b.add_edge(i, j);
  return std::move(b).build();
}

struct LocalGraph {
  Graph graph;
  /// to_parent[i] is the vertex of the parent graph behind local vertex i.
  VertexSet to_parent;
};

/// Subgraph induced on N(v).
inline LocalGraph local_graph(const Graph& g, Vertex v) {
  g.check_vertex(v);
  VertexSet nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
  Graph sub = induced_subgraph(g, nbrs);
  return {std::move(sub), std::move(nbrs)};
}

inline bool is_regular(const Graph& g) {
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.adjacent(set[i], set[j])) return false;
  return true;
}

}  // namespace gridspectra
