#pragma once

#include <optional>
#include <vector>

#include "gridspectra/graph.hpp"

namespace gridspectra {

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), map_(g.order(), kFree), used_(h.order(), 0) {
    // Visit g in BFS order so each new vertex usually has a mapped neighbour.
    std::vector<char> seen(g.order(), 0);
    for (Vertex root = 0; root < g.order(); ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      order_.push_back(root);
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head)
        for (Vertex w : g.neighbors(order_[head]))
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kFree = static_cast<Vertex>(-1);

  bool consistent(Vertex u, Vertex image) const {
    for (std::size_t i = 0; i < depth_; ++i) {
      const Vertex w = order_[i];
      if (g_.adjacent(u, w) != h_.adjacent(image, map_[w])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    for (Vertex c = 0; c < h_.order(); ++c) {
      if (used_[c] || h_.degree(c) != g_.degree(u)) continue;
      depth_ = depth;
      if (!consistent(u, c)) continue;
      map_[u] = c;
      used_[c] = 1;
      if (extend(depth + 1)) return true;
      used_[c] = 0;
      map_[u] = kFree;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::size_t depth_ = 0;
};

}  // namespace detail

/// Backtracking isomorphism search for small graphs. Returns a map f with
/// u ~ v in g iff f(u) ~ f(v) in h.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  return detail::IsoSearch(g, h).run();
}

inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  if (map.size() != g.order() || g.order() != h.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (Vertex v : map) {
    if (v >= h.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
  return true;
}

}  // namespace gridspectra
