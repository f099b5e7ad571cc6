#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridspectra/cliques.hpp"
#include "gridspectra/graph.hpp"

namespace gridspectra {

/// |N(x) ∩ N(y)| for distinct x, y.
inline std::size_t common_neighbors(const Graph& g, Vertex x, Vertex y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw InvalidParameter("common_neighbors needs distinct vertices");
  return (g.row(x) & g.row(y)).count();
}

/// Which regularity constants a graph has. Each field is present only when
/// the corresponding count is the same everywhere.
struct RegularityProfile {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;

  bool co_edge_regular() const { return k.has_value() && mu.has_value(); }

  /// Strongly regular: all three constants and neither complete nor edgeless.
  bool strongly_regular() const {
    return k && lambda && mu && *k > 0 && *k + 1 < n;
  }
};

inline RegularityProfile regularity_profile(const Graph& g) {
  RegularityProfile prof;
  const std::size_t n = g.order();
  prof.n = n;
  if (n == 0) return prof;
  if (is_regular(g)) prof.k = g.degree(0);

  std::optional<std::size_t> lam, mu;
  bool lam_const = true, mu_const = true;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const std::size_t c = (g.row(x) & g.row(y)).count();
      auto& slot = g.adjacent(x, y) ? lam : mu;
      bool& still = g.adjacent(x, y) ? lam_const : mu_const;
      if (!still) continue;
      if (!slot)
        slot = c;
      else if (*slot != c)
        still = false;
    }
  }
  // mu is reported only for regular graphs: co-edge-regularity presupposes it.
  if (lam_const && lam && prof.k) prof.lambda = lam;
  if (mu_const && mu && prof.k) prof.mu = mu;
  return prof;
}

struct LocalValencyStats {
  Vertex v = 0;
  std::vector<std::int64_t> degrees;
  std::int64_t sum = 0;
  std::int64_t sum_of_squares = 0;
  /// sum over local vertices of (d_i - (st + s - 2))^2.
  std::int64_t centered_square_sum = 0;

  std::int64_t expected_sum = 0;
  std::int64_t expected_sum_of_squares = 0;
  std::int64_t expected_centered = 0;

  bool sum_ok = false;
  bool sum_of_squares_ok = false;
  bool centered_ok = false;

  bool all_ok() const { return sum_ok && sum_of_squares_ok && centered_ok; }
};

/// Valency statistics of the local graph at v against the closed forms
///   sum d_i         = 2st(st + 2s - 3) + s^2 - 3s + 2
///   sum d_i^2       = 2st(s^2t^2 + 4s^2t - 6st + 3s^2 - 10s + 8) + s^3 - 5s^2 + 8s - 4
///   sum (d_i - (st + s - 2))^2 = s^2 t^2 (s - 1)
inline LocalValencyStats local_valency_stats(const Graph& g, Vertex v, const ExtensionParams& p) {
  g.check_vertex(v);
  p.validate();
  const std::int64_t s = p.s, t = p.t;
  if (static_cast<std::int64_t>(g.degree(v)) != p.valency())
    throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                            ", expected valency " + std::to_string(p.valency()));

  LocalValencyStats st;
  st.v = v;
  const std::int64_t centre = s * t + s - 2;
  for (Vertex u : g.neighbors(v)) {
    const auto d = static_cast<std::int64_t>((g.row(u) & g.row(v)).count());
    st.degrees.push_back(d);
    st.sum += d;
    st.sum_of_squares += d * d;
    st.centered_square_sum += (d - centre) * (d - centre);
  }
  st.expected_sum = 2 * s * t * (s * t + 2 * s - 3) + s * s - 3 * s + 2;
  st.expected_sum_of_squares =
      2 * s * t * (s * s * t * t + 4 * s * s * t - 6 * s * t + 3 * s * s - 10 * s + 8) + s * s * s - 5 * s * s +
      8 * s - 4;
  st.expected_centered = s * s * t * t * (s - 1);
  st.sum_ok = st.sum == st.expected_sum;
  st.sum_of_squares_ok = st.sum_of_squares == st.expected_sum_of_squares;
  st.centered_ok = st.centered_square_sum == st.expected_centered;
  return st;
}

struct HoffmanCliqueCheck {
  /// |C| <= st + s.
  bool order_ok = false;
  /// |C| == st + s.
  bool equality_case = false;
  /// In the equality case, every vertex outside C has exactly s neighbours
  /// in C. Vacuously true outside the equality case.
  bool outside_neighbor_counts_ok = true;
  /// First outside vertex with the wrong count, if any.
  std::optional<Vertex> offender;
};

inline HoffmanCliqueCheck hoffman_clique_check(const Graph& g, std::span<const Vertex> clique,
                                               const ExtensionParams& p) {
  check_vertex_set(g, clique);
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!g.adjacent(clique[i], clique[j]))
        throw PreconditionError("not a clique: " + std::to_string(clique[i]) + " and " +
                                std::to_string(clique[j]) + " are not adjacent");
  const auto c = static_cast<std::int64_t>(clique.size());
  const std::int64_t bound = p.s * p.t + p.s;
  HoffmanCliqueCheck out;
  out.order_ok = c <= bound;
  out.equality_case = c == bound;
  if (out.equality_case) {
    const Bitrow members = to_bitrow(g.order(), clique);
    for (Vertex x = 0; x < g.order(); ++x) {
      if (members.test(x)) continue;
      if (static_cast<std::int64_t>((g.row(x) & members).count()) != p.s) {
        out.outside_neighbor_counts_ok = false;
        out.offender = x;
        break;
      }
    }
  }
  return out;
}

}  // namespace gridspectra
