#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridspectra/cliques.hpp"
#include "gridspectra/graph.hpp"
#include "gridspectra/isomorphism.hpp"
#include "gridspectra/regularity.hpp"

namespace gridspectra {

/// Partition of the vertices into classes of equal closed neighbourhood.
struct TwinPartition {
  /// Classes ordered by smallest member; each class sorted.
  std::vector<VertexSet> classes;
  std::vector<std::size_t> class_of;
};

inline Bitrow closed_neighborhood(const Graph& g, Vertex v) {
  Bitrow r = g.row(v);
  r.set(v);
  return r;
}

/// Groups vertices by {x} ∪ N(x), found by sorting the closed-neighbourhood
/// bitsets.
inline TwinPartition twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Bitrow> closed;
  closed.reserve(n);
  for (Vertex v = 0; v < n; ++v) closed.push_back(closed_neighborhood(g, v));
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return closed[a] < closed[b]; });

  std::vector<VertexSet> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || closed[order[i]] != closed[order[i - 1]]) groups.emplace_back();
    groups.back().push_back(order[i]);
  }
  for (auto& c : groups) std::sort(c.begin(), c.end());
  std::sort(groups.begin(), groups.end(), [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });

  TwinPartition tp;
  tp.class_of.assign(n, 0);
  for (std::size_t c = 0; c < groups.size(); ++c)
    for (Vertex v : groups[c]) tp.class_of[v] = c;
  tp.classes = std::move(groups);
  return tp;
}

struct QuotientResult {
  Graph graph;
  /// Every pair of classes is joined completely or not at all.
  bool well_defined = false;
};

/// Graph on the classes of `tp`; two classes are adjacent when every vertex
/// of one is adjacent to every vertex of the other.
inline QuotientResult quotient(const Graph& g, const TwinPartition& tp) {
  const std::size_t n = g.order();
  if (tp.class_of.size() != n) throw PreconditionError("partition does not cover the graph");
  std::vector<char> seen(n, 0);
  for (std::size_t c = 0; c < tp.classes.size(); ++c) {
    if (tp.classes[c].empty()) throw PreconditionError("empty class " + std::to_string(c));
    for (Vertex v : tp.classes[c]) {
      if (v >= n || seen[v] || tp.class_of[v] != c)
        throw PreconditionError("inconsistent partition at vertex " + std::to_string(v));
      seen[v] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw PreconditionError("partition does not cover every vertex");

  const std::size_t k = tp.classes.size();
  std::vector<Bitrow> members;
  for (const auto& c : tp.classes) members.push_back(to_bitrow(n, c));

  QuotientResult out;
  out.well_defined = true;
  GraphBuilder b(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = a + 1; c < k; ++c) {
      std::size_t links = 0;
      for (Vertex v : tp.classes[a]) links += (g.row(v) & members[c]).count();
      const std::size_t full = tp.classes[a].size() * tp.classes[c].size();
      if (links == full)
        b.add_edge(a, c);
      else if (links != 0)
        out.well_defined = false;
    }
  }
  out.graph = std::move(b).build();
  return out;
}

enum class GridVerdict { Grid, Shrikhande, Other };

inline const char* to_string(GridVerdict v) {
  switch (v) {
    case GridVerdict::Grid: return "Grid";
    case GridVerdict::Shrikhande: return "Shrikhande";
    case GridVerdict::Other: return "Other";
  }
  return "Other";
}

struct GridCoordinate {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const GridCoordinate&, const GridCoordinate&) = default;
};

struct GridIdentification {
  GridVerdict verdict = GridVerdict::Other;
  /// Present iff verdict == Grid; vertex v sits at coordinates[v], i.e. at
  /// index row * (t+1) + col of build_grid(t+1).
  std::optional<std::vector<GridCoordinate>> coordinates;
  std::string detail;
};

namespace detail {

/// Attempts the row/column coordinatisation from the maximal cliques of
/// order t+1. Returns a description of the failure, or nullopt on success.
inline std::optional<std::string> coordinatise(const Graph& q, std::size_t side, std::size_t cap,
                                               std::vector<GridCoordinate>& coords) {
  const std::size_t n = q.order();
  std::vector<VertexSet> cliques;
  for (auto& c : maximal_cliques(q, cap))
    if (c.size() == side) cliques.push_back(std::move(c));
  if (cliques.empty()) return "no clique of order " + std::to_string(side);

  std::vector<std::vector<std::size_t>> through(n);
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (Vertex v : cliques[i]) through[v].push_back(i);
  for (Vertex v = 0; v < n; ++v)
    if (through[v].size() != 2)
      return "vertex " + std::to_string(v) + " lies on " + std::to_string(through[v].size()) +
             " cliques of order " + std::to_string(side);

  // Two-colour the clique intersection graph: cliques through a common vertex
  // get different colours.
  std::vector<int> colour(cliques.size(), -1);
  for (std::size_t start = 0; start < cliques.size(); ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      for (Vertex v : cliques[c]) {
        const std::size_t other = through[v][0] == c ? through[v][1] : through[v][0];
        if (colour[other] == -1) {
          colour[other] = 1 - colour[c];
          stack.push_back(other);
        } else if (colour[other] == colour[c]) {
          return "clique intersection graph is not bipartite";
        }
      }
    }
  }

  std::vector<std::size_t> index(cliques.size());
  std::size_t rows = 0, cols = 0;
  for (std::size_t c = 0; c < cliques.size(); ++c) index[c] = colour[c] == 0 ? rows++ : cols++;
  if (rows != side || cols != side)
    return "found " + std::to_string(rows) + " row and " + std::to_string(cols) + " column cliques";

  coords.assign(n, {});
  std::vector<char> taken(side * side, 0);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t a = through[v][0], b = through[v][1];
    const std::size_t row_clique = colour[a] == 0 ? a : b;
    const std::size_t col_clique = colour[a] == 0 ? b : a;
    coords[v] = {index[row_clique], index[col_clique]};
    const std::size_t cell = coords[v].row * side + coords[v].col;
    if (taken[cell]) return "two vertices share cell (" + std::to_string(coords[v].row) + "," + std::to_string(coords[v].col) + ")";
    taken[cell] = 1;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool line = coords[u].row == coords[v].row || coords[u].col == coords[v].col;
      if (q.adjacent(u, v) != line)
        return "adjacency of " + std::to_string(u) + "," + std::to_string(v) + " disagrees with coordinates";
    }
  return std::nullopt;
}

}  // namespace detail

/// Decides whether an SRG((t+1)^2, 2t, t-1, 2) is the (t+1)x(t+1) grid (with
/// an explicit coordinate isomorphism) or, for t = 3, the Shrikhande graph.
/// Throws PreconditionError when q does not have those parameters.
inline GridIdentification identify_grid_or_shrikhande(const Graph& q, std::int64_t t,
                                                      std::size_t cap = kDefaultCliqueCap) {
  if (t < 1) throw InvalidParameter("t must be at least 1");
  const auto side = static_cast<std::size_t>(t + 1);
  const RegularityProfile prof = regularity_profile(q);
  auto refuse = [&](const std::string& what, std::optional<std::size_t> got, std::size_t want) {
    throw PreconditionError("not SRG((t+1)^2,2t,t-1,2): " + what + " is " +
                            (got ? std::to_string(*got) : std::string("not constant")) + ", expected " +
                            std::to_string(want));
  };
  if (q.order() != side * side) refuse("n", q.order(), side * side);
  if (prof.k != static_cast<std::size_t>(2 * t)) refuse("k", prof.k, static_cast<std::size_t>(2 * t));
  if (prof.lambda != static_cast<std::size_t>(t - 1)) refuse("lambda", prof.lambda, static_cast<std::size_t>(t - 1));
  if (prof.mu != std::size_t{2}) refuse("mu", prof.mu, 2);

  GridIdentification out;
  std::vector<GridCoordinate> coords;
  const auto failure = detail::coordinatise(q, side, cap, coords);
  if (!failure) {
    out.verdict = GridVerdict::Grid;
    out.coordinates = std::move(coords);
    out.detail = "coordinates verified against the " + std::to_string(side) + "x" + std::to_string(side) + " grid";
    return out;
  }
  if (t == 3 && max_clique_order(q) < 4) {
    if (find_isomorphism(q, build_shrikhande())) {
      out.verdict = GridVerdict::Shrikhande;
      out.detail = "no clique of order 4; isomorphic to the Shrikhande graph";
      return out;
    }
  }
  out.verdict = GridVerdict::Other;
  out.detail = *failure;
  return out;
}

}  // namespace gridspectra
