#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gridspectra/cliques.hpp"
#include "gridspectra/graph.hpp"
#include "gridspectra/lines.hpp"
#include "oracles.hpp"

using namespace gridspectra;

namespace {

Graph extension_of_grid(std::int64_t s, std::int64_t t) {
  return clique_extension(build_grid(static_cast<std::size_t>(t + 1)), static_cast<std::size_t>(s));
}

/// K_{2k} minus a perfect matching: 2^k maximal cliques.
Graph cocktail_party(std::size_t k) {
  return complement(clique_extension(GraphBuilder(k).build(), 2));
}

/// Two copies of K5 glued at vertex 0.
Graph glued_k5() {
  GraphBuilder b(9);
  const VertexSet left = {0, 1, 2, 3, 4}, right = {0, 5, 6, 7, 8};
  for (const auto& side : {left, right})
    for (std::size_t i = 0; i < side.size(); ++i)
      for (std::size_t j = i + 1; j < side.size(); ++j) b.add_edge(side[i], side[j]);
  return std::move(b).build();
}

std::vector<std::vector<std::size_t>> as_plain(const std::vector<VertexSet>& cliques) {
  return {cliques.begin(), cliques.end()};
}

}  // namespace

TEST_CASE("maximal cliques", "[lines][cliques]") {
  GraphBuilder c4(4);
  for (Vertex i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  CHECK(maximal_cliques(std::move(c4).build()) == std::vector<VertexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  CHECK(maximal_cliques(GraphBuilder(3).build()) == std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(maximal_cliques(build_complete(5)) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});

  const auto ext = maximal_cliques(extension_of_grid(2, 2));
  CHECK(ext.size() == 6);
  for (const auto& c : ext) CHECK(c.size() == 6);

  const auto shr = maximal_cliques(build_shrikhande());
  CHECK(shr.size() == 32);
  for (const auto& c : shr) CHECK(c.size() == 3);

  CHECK(maximal_cliques(cocktail_party(5)).size() == 32);
  CHECK_THROWS_AS(maximal_cliques(cocktail_party(5), 10), ResourceLimit);
  CHECK_NOTHROW(maximal_cliques(cocktail_party(5), 32));

  SECTION("agrees with subset enumeration") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
      const double p = 0.2 + 0.1 * (trial % 7);
      const Graph g = oracle::random_graph(n, p, rng);
      REQUIRE(as_plain(maximal_cliques(g)) == oracle::brute_maximal_cliques(g));
      REQUIRE(max_clique_order(g) == oracle::brute_max_clique(g));
    }
  }

  SECTION("output does not depend on the run") {
    const Graph g = clique_extension(build_shrikhande(), 2);
    CHECK(maximal_cliques(g) == maximal_cliques(g));
  }
}

TEST_CASE("line threshold", "[lines]") {
  // 4|C| >= 3s(t+2): for (2,2) lines need order 6, for (2,3) order 8.
  CHECK(is_line_order(6, {2, 2}));
  CHECK_FALSE(is_line_order(5, {2, 2}));
  CHECK(is_line_order(8, {2, 3}));
  CHECK_FALSE(is_line_order(7, {2, 3}));
  CHECK(is_line_order(9, {3, 2}));
  CHECK_FALSE(is_line_order(8, {3, 2}));
}

TEST_CASE("find_lines on grid extensions", "[lines]") {
  for (auto [s, t] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
    const ExtensionParams p{s, t};
    const Graph g = extension_of_grid(s, t);
    const LineStructure ls = find_lines(g, p);
    REQUIRE(ls.delta() == 2 * t + 2);
    REQUIRE(ls.alpha() == 0);
    for (const auto& l : ls.lines) REQUIRE(static_cast<std::int64_t>(l.order()) == s * (t + 1));
    REQUIRE(ls.q.size() == static_cast<std::size_t>(2 * s));
    REQUIRE(static_cast<std::int64_t>(ls.q.back()) == 2 * t + 2);
    REQUIRE(ls.out_of_range.empty());
    REQUIRE(check_two_lines_per_vertex(ls, g.order()).ok);
    for (Vertex v = 0; v < g.order(); ++v) {
      const VertexLineProfile prof = check_vertex_line_profile(g, ls, v, p);
      REQUIRE(prof.m == s);
      REQUIRE(prof.ell == 0);
      REQUIRE(prof.ell_plus_m_ok);
      REQUIRE(prof.order_bounds_ok);
    }
    REQUIRE(check_intersecting_pair_orders(ls, p).ok);
    REQUIRE(check_order_histogram(ls, p).all_ok());
    REQUIRE(check_line_count(ls, p));

    // Rows never meet rows: the line intersection graph is K_{t+1,t+1}.
    const Graph lig = line_intersection_graph(ls);
    REQUIRE(lig.order() == static_cast<std::size_t>(2 * t + 2));
    REQUIRE(static_cast<std::int64_t>(lig.size()) == (t + 1) * (t + 1));
    REQUIRE(is_regular(lig));
  }
}

TEST_CASE("find_lines negative cases", "[lines]") {
  SECTION("Shrikhande extension has no lines") {
    const Graph g = clique_extension(build_shrikhande(), 2);
    const LineStructure ls = find_lines(g, {2, 3});
    CHECK(ls.delta() == 0);
    const TwoLinesCheck two = check_two_lines_per_vertex(ls, g.order());
    CHECK_FALSE(two.ok);
    CHECK(two.offending.size() == 32);
    CHECK_THROWS_AS(check_vertex_line_profile(g, ls, 0, {2, 3}), PreconditionError);
  }
  SECTION("complete graph gives a single line") {
    const Graph k6 = build_complete(6);
    const LineStructure ls = find_lines(k6, {2, 2});
    CHECK(ls.delta() == 1);
    CHECK(check_two_lines_per_vertex(ls, 6).offending.size() == 6);
    CHECK_FALSE(check_line_count(ls, {2, 2}));
  }
  SECTION("lines that meet in one vertex") {
    const Graph g = glued_k5();
    const ExtensionParams p{2, 1};
    const LineStructure ls = find_lines(g, p);
    REQUIRE(ls.delta() == 2);
    CHECK(ls.out_of_range.size() == 2);  // order 5 > s(t+1) = 4
    const VertexLineProfile prof = check_vertex_line_profile(g, ls, 0, p);
    CHECK(prof.m == 1);
    CHECK(prof.ell == 0);
    CHECK_FALSE(prof.ell_plus_m_ok);
    CHECK_FALSE(prof.order_bounds_ok);
    CHECK_THROWS_AS(check_vertex_line_profile(g, ls, 1, p), PreconditionError);

    const PairOrderCheck pairs = check_intersecting_pair_orders(ls, p);
    REQUIRE_FALSE(pairs.ok);
    CHECK(pairs.first_violation->m == 1);
    CHECK(pairs.first_violation->c1 + pairs.first_violation->c2 == 10);

    const HistogramCheck hist = check_order_histogram(ls, p);
    CHECK_FALSE(hist.all_ok());
    CHECK_FALSE(hist.reason.empty());
  }
  SECTION("cap is honoured") {
    CHECK_THROWS_AS(find_lines(extension_of_grid(2, 2), {2, 2}, 3), ResourceLimit);
  }
}

TEST_CASE("order histogram identities", "[lines]") {
  const ExtensionParams p{2, 2};
  auto lines_of = [](std::size_t count, std::size_t order) {
    std::vector<Line> out;
    for (std::size_t i = 0; i < count; ++i) {
      Line l;
      for (Vertex v = 0; v < order; ++v) l.vertices.push_back(v);
      out.push_back(l);
    }
    return out;
  };

  SECTION("too many lines") {
    // delta = 2t + 7, all of order s(t+1).
    const LineStructure ls = make_line_structure(18, lines_of(11, 6), p);
    CHECK(ls.delta() == 11);
    CHECK(ls.alpha() == 5);
    const HistogramCheck h = check_order_histogram(ls, p);
    CHECK_FALSE(h.delta_bounds);
    CHECK_FALSE(h.eq_main);
    CHECK(h.reason.empty());
  }
  SECTION("right count, short lines") {
    // delta = 2t + 2 but every line has order s(t+1) - 1.
    const LineStructure ls = make_line_structure(18, lines_of(6, 5), p);
    const HistogramCheck h = check_order_histogram(ls, p);
    CHECK(h.delta_bounds);
    CHECK_FALSE(h.equality_case_ok);
    CHECK_FALSE(h.eq_main);
    CHECK_FALSE(check_line_count(ls, p));
  }
  SECTION("weighted and deficit sums") {
    // (2,2): orders 3..6. Two lines of order 6, four of order 5, one of
    // order 4: weighted sum 12 + 20 + 4 = 36 = 2s(t+1)^2, delta = 7,
    // deficit 0*2 + 1*4 + 2*1 = 6 = alpha * s(t+1).
    std::vector<Line> lines = lines_of(2, 6);
    for (auto& l : lines_of(4, 5)) lines.push_back(l);
    for (auto& l : lines_of(1, 4)) lines.push_back(l);
    const LineStructure ls = make_line_structure(18, std::move(lines), p);
    CHECK(ls.q == std::vector<std::size_t>{0, 1, 4, 2});
    const HistogramCheck h = check_order_histogram(ls, p);
    CHECK(h.eq_main);
    CHECK(h.delta_bounds);
    CHECK(h.eq_alpha);
    CHECK(h.equality_case_ok);
    CHECK_FALSE(check_line_count(ls, p));
  }
  SECTION("out-of-range vertex") {
    CHECK_THROWS_AS(make_line_structure(3, lines_of(1, 4), p), InvalidParameter);
  }
}
