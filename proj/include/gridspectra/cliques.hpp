#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "gridspectra/graph.hpp"

namespace gridspectra {

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;
inline constexpr std::size_t kDefaultCocliqueLimit = 64;

namespace detail {

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<VertexSet> run() {
    const std::size_t n = g_.order();
    Bitrow r(n), p(n), x(n);
    p.set();
    if (n > 0) expand(r, p, x);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(Bitrow& r, Bitrow p, Bitrow x) {
    if (p.none()) {
      if (x.none()) {
        if (out_.size() == cap_)
          throw ResourceLimit("maximal clique enumeration exceeded the cap of " + std::to_string(cap_));
        out_.push_back(to_vertex_set(r));
      }
      return;
    }
    // Pivot maximizing |P ∩ N(u)|, lowest index on ties.
    const Bitrow px = p | x;
    std::size_t pivot = Bitrow::npos;
    std::size_t best = 0;
    for (auto u = px.find_first(); u != Bitrow::npos; u = px.find_next(u)) {
      const std::size_t c = (p & g_.row(u)).count();
      if (pivot == Bitrow::npos || c > best) {
        pivot = u;
        best = c;
      }
    }
    const Bitrow candidates = p - g_.row(pivot);
    for (auto v = candidates.find_first(); v != Bitrow::npos; v = candidates.find_next(v)) {
      r.set(v);
      expand(r, p & g_.row(v), x & g_.row(v));
      r.reset(v);
      p.reset(v);
      x.set(v);
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<VertexSet> out_;
};

class MaxClique {
 public:
  explicit MaxClique(const Graph& g) : g_(g) {}

  std::size_t run() {
    Bitrow p(g_.order());
    p.set();
    search(0, p);
    return best_;
  }

 private:
  void search(std::size_t size, Bitrow p) {
    if (p.none()) {
      best_ = std::max(best_, size);
      return;
    }
    while (p.any()) {
      if (size + p.count() <= best_) return;
      const auto v = p.find_first();
      search(size + 1, p & g_.row(v));
      p.reset(v);
    }
  }

  const Graph& g_;
  std::size_t best_ = 0;
};

}  // namespace detail

/// All maximal cliques of g, each sorted ascending, the list sorted
/// lexicographically. Bron–Kerbosch with pivoting. Throws ResourceLimit once
/// more than `cap` cliques would be produced.
inline std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap) {
  return detail::BronKerbosch(g, cap).run();
}

/// Order of a maximum clique (branch and bound).
inline std::size_t max_clique_order(const Graph& g) { return detail::MaxClique(g).run(); }

/// Order of a maximum coclique, via a maximum clique of the complement.
/// Exact; refuses graphs with more than `limit` vertices.
inline std::size_t max_coclique_order(const Graph& g, std::size_t limit = kDefaultCocliqueLimit) {
  if (g.order() > limit)
    throw ResourceLimit("coclique search on " + std::to_string(g.order()) + " vertices exceeds limit " +
                        std::to_string(limit));
  return max_clique_order(complement(g));
}

}  // namespace gridspectra
