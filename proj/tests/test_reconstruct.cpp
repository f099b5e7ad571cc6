#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "gridspectra/graph.hpp"
#include "gridspectra/isomorphism.hpp"
#include "gridspectra/pipeline.hpp"
#include "gridspectra/reconstruct.hpp"
#include "gridspectra/report.hpp"
#include "oracles.hpp"

using namespace gridspectra;

namespace {

Graph extension_of_grid(std::int64_t s, std::int64_t t) {
  return clique_extension(build_grid(static_cast<std::size_t>(t + 1)), static_cast<std::size_t>(s));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  GraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add_edge(perm[e.first], perm[e.second]);
  return std::move(b).build();
}

std::vector<Vertex> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

void check_coordinates(const Graph& q, std::int64_t t, const std::vector<GridCoordinate>& coords) {
  const auto side = static_cast<std::size_t>(t + 1);
  REQUIRE(coords.size() == q.order());
  std::vector<Vertex> map;
  for (const auto& c : coords) {
    REQUIRE(c.row < side);
    REQUIRE(c.col < side);
    map.push_back(c.row * side + c.col);
  }
  REQUIRE(is_isomorphism(q, build_grid(side), map));
}

}  // namespace

TEST_CASE("twin classes", "[reconstruct]") {
  const TwinPartition ext = twin_classes(extension_of_grid(2, 2));
  REQUIRE(ext.classes.size() == 9);
  for (std::size_t c = 0; c < 9; ++c) CHECK(ext.classes[c] == VertexSet{2 * c, 2 * c + 1});
  CHECK(ext.class_of[5] == 2);

  GraphBuilder c4(4);
  for (Vertex i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  CHECK(twin_classes(std::move(c4).build()).classes.size() == 4);

  CHECK(twin_classes(build_complete(5)).classes == std::vector<VertexSet>{{0, 1, 2, 3, 4}});

  // Isolated vertices have distinct closed neighbourhoods.
  CHECK(twin_classes(GraphBuilder(3).build()).classes.size() == 3);

  SECTION("classes of an extension have size s under relabelling") {
    std::mt19937_64 rng(3);
    for (std::int64_t s = 1; s <= 4; ++s) {
      const Graph g = relabel(extension_of_grid(s, 3), shuffled(static_cast<std::size_t>(16 * s), rng));
      const TwinPartition tp = twin_classes(g);
      REQUIRE(tp.classes.size() == 16);
      for (const auto& c : tp.classes) REQUIRE(static_cast<std::int64_t>(c.size()) == s);
    }
  }
}

TEST_CASE("quotient by twin classes", "[reconstruct]") {
  const Graph ext = extension_of_grid(2, 2);
  const QuotientResult q = quotient(ext, twin_classes(ext));
  CHECK(q.well_defined);
  CHECK(q.graph == build_grid(3));

  const Graph shr = build_shrikhande();
  const QuotientResult same = quotient(shr, twin_classes(shr));
  CHECK(same.well_defined);
  CHECK(same.graph == shr);

  const Graph shr_ext = clique_extension(shr, 3);
  const QuotientResult back = quotient(shr_ext, twin_classes(shr_ext));
  CHECK(back.well_defined);
  CHECK(find_isomorphism(back.graph, shr).has_value());

  SECTION("partial joins are reported") {
    // Path 0-1-2 with classes {0,1} and {2}: 0 is not adjacent to 2.
    GraphBuilder b(3);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    const Graph p3 = std::move(b).build();
    TwinPartition tp;
    tp.classes = {{0, 1}, {2}};
    tp.class_of = {0, 0, 1};
    CHECK_FALSE(quotient(p3, tp).well_defined);

    tp.class_of = {0, 1, 1};
    CHECK_THROWS_AS(quotient(p3, tp), PreconditionError);
    tp.classes = {{0, 1}};
    tp.class_of = {0, 0, 0};
    CHECK_THROWS_AS(quotient(p3, tp), PreconditionError);
  }
}

TEST_CASE("isomorphism search", "[reconstruct]") {
  CHECK_FALSE(find_isomorphism(build_grid(4), build_shrikhande()).has_value());
  CHECK_FALSE(find_isomorphism(build_grid(3), build_complete(9)).has_value());

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = trial % 2 ? oracle::random_graph(11, 0.45, rng) : build_shrikhande();
    const Graph h = relabel(g, shuffled(g.order(), rng));
    const auto map = find_isomorphism(g, h);
    REQUIRE(map.has_value());
    REQUIRE(is_isomorphism(g, h, *map));
  }
}

TEST_CASE("grid or Shrikhande identification", "[reconstruct]") {
  for (std::int64_t t = 1; t <= 5; ++t) {
    const Graph grid = build_grid(static_cast<std::size_t>(t + 1));
    const GridIdentification id = identify_grid_or_shrikhande(grid, t);
    REQUIRE(id.verdict == GridVerdict::Grid);
    check_coordinates(grid, t, *id.coordinates);
  }

  std::mt19937_64 rng(31);
  const Graph scrambled = relabel(build_grid(5), shuffled(25, rng));
  const GridIdentification id = identify_grid_or_shrikhande(scrambled, 4);
  REQUIRE(id.verdict == GridVerdict::Grid);
  check_coordinates(scrambled, 4, *id.coordinates);

  const GridIdentification shr = identify_grid_or_shrikhande(relabel(build_shrikhande(), shuffled(16, rng)), 3);
  CHECK(shr.verdict == GridVerdict::Shrikhande);
  CHECK_FALSE(shr.coordinates.has_value());

  SECTION("refuses graphs with the wrong parameters") {
    try {
      identify_grid_or_shrikhande(build_grid(4), 2);
      FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("n is 16") != std::string::npos);
    }
    try {
      identify_grid_or_shrikhande(build_complete(16), 3);
      FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("k is 15") != std::string::npos);
    }
    CHECK_THROWS_AS(identify_grid_or_shrikhande(build_grid(3), 0), InvalidParameter);
  }
}

TEST_CASE("pipeline on grid extensions", "[pipeline]") {
  const PipelineReport r = run_pipeline(extension_of_grid(2, 2), {2, 2});
  CHECK(r.verdict == Verdict::IsGridExtension);
  REQUIRE(r.stages.size() == kStageNames.size());
  for (std::size_t i = 0; i < r.stages.size(); ++i) {
    CHECK(r.stages[i].name == kStageNames[i]);
    CHECK(r.stages[i].pass);
    CHECK_FALSE(r.stages[i].skipped);
    CHECK(r.stages[i].below_bound);
  }
  REQUIRE(r.identification.has_value());
  check_coordinates(build_grid(3), 2, *r.identification->coordinates);

  SECTION("relabelled input") {
    std::mt19937_64 rng(41);
    const Graph g = relabel(extension_of_grid(3, 2), shuffled(27, rng));
    CHECK(run_pipeline(g, {3, 2}).verdict == Verdict::IsGridExtension);
  }
}

TEST_CASE("pipeline negative controls", "[pipeline]") {
  SECTION("Shrikhande extension") {
    const PipelineReport r = run_pipeline(clique_extension(build_shrikhande(), 2), {2, 3});
    CHECK(r.verdict == Verdict::FailsLineStructure);
    for (std::size_t i = 0; i < 5; ++i) CHECK(r.stages[i].pass);
    CHECK_FALSE(r.stages[5].pass);
    CHECK(r.stages[5].witness.find("delta=0") != std::string::npos);
    for (std::size_t i = 6; i < r.stages.size(); ++i) CHECK(r.stages[i].skipped);
  }
  SECTION("full report continues past the failure") {
    PipelineOptions opts;
    opts.full_report = true;
    const PipelineReport r = run_pipeline(clique_extension(build_shrikhande(), 2), {2, 3}, opts);
    CHECK(r.verdict == Verdict::FailsLineStructure);
    for (const auto& st : r.stages) CHECK_FALSE(st.skipped);
    // Twin classes and the quotient are fine; identification finds Shrikhande.
    CHECK(r.stages[6].pass);
    CHECK(r.stages[7].pass);
    CHECK_FALSE(r.stages[8].pass);
    REQUIRE(r.identification.has_value());
    CHECK(r.identification->verdict == GridVerdict::Shrikhande);
  }
  SECTION("removed edge") {
    GraphBuilder b = to_builder(extension_of_grid(2, 2));
    b.remove_edge(0, 1);
    const PipelineReport r = run_pipeline(std::move(b).build(), {2, 2});
    CHECK(r.verdict == Verdict::FailsSpectrum);
    CHECK_FALSE(r.stages[0].pass);
  }
  SECTION("wrong parameters") {
    CHECK(run_pipeline(extension_of_grid(2, 2), {2, 3}).verdict == Verdict::FailsSpectrum);
    CHECK_THROWS_AS(run_pipeline(extension_of_grid(2, 2), {1, 2}), InvalidParameter);
  }
  SECTION("the grid itself is not an s-clique extension for s >= 2") {
    CHECK(run_pipeline(build_grid(3), {2, 2}).verdict == Verdict::FailsSpectrum);
  }
}

TEST_CASE("single stages", "[pipeline]") {
  const Graph shr_ext = clique_extension(build_shrikhande(), 2);
  CHECK(run_stage(shr_ext, {2, 3}, "hoffman").pass);
  CHECK(run_stage(shr_ext, {2, 3}, "twin_quotient").pass);
  const StageResult lines = run_stage(shr_ext, {2, 3}, "line_structure");
  CHECK_FALSE(lines.pass);
  CHECK_FALSE(lines.skipped);
  CHECK_THROWS_AS(run_stage(shr_ext, {2, 3}, "no_such_stage"), InvalidParameter);

  // Preconditions inside a stage become a failing result, not an exception.
  GraphBuilder b(3);
  b.add_edge(0, 1);
  const StageResult h = run_stage(std::move(b).build(), {2, 2}, "hoffman");
  CHECK_FALSE(h.pass);
  CHECK(h.witness.rfind("error:", 0) == 0);
}

TEST_CASE("bound flag", "[pipeline]") {
  CHECK_FALSE(within_asymptotic_bound({2, 3}));
  CHECK(within_asymptotic_bound({2, 11 * 27 * 4}));
  CHECK_FALSE(within_asymptotic_bound({2, 11 * 27 * 4 - 1}));
  CHECK(within_asymptotic_bound({3, 11 * 64 * 5}));
}

TEST_CASE("report serialisation", "[pipeline]") {
  const PipelineReport ok = run_pipeline(extension_of_grid(2, 2), {2, 2});
  const nlohmann::json j = to_json(ok);
  CHECK(j["n"] == 18);
  CHECK(j["s"] == 2);
  CHECK(j["t"] == 2);
  CHECK(j["verdict"] == "IsGridExtension");
  CHECK(j["stages"].size() == 9);
  CHECK(j["stages"][0]["stage"] == "spectrum");
  CHECK(j["stages"][0]["below_bound_flag"] == true);
  CHECK(j["quotient_coordinates"].size() == 9);

  const std::string text = to_text(ok);
  CHECK(text.find("PASS  spectrum") != std::string::npos);
  CHECK(text.find("verdict: IsGridExtension") != std::string::npos);

  const PipelineReport bad = run_pipeline(clique_extension(build_shrikhande(), 2), {2, 3});
  const nlohmann::json jb = to_json(bad);
  CHECK(jb["verdict"] == "FailsLineStructure");
  CHECK_FALSE(jb.contains("quotient_coordinates"));
  CHECK(to_text(bad).find("SKIP  twin_quotient") != std::string::npos);

  CHECK(to_json(expected_spectrum({2, 2})).dump() == "[[9,1],[3,4],[-1,9],[-3,4]]");
}
