#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "gridspectra/lines.hpp"
#include "gridspectra/pipeline.hpp"
#include "gridspectra/spectrum.hpp"

namespace gridspectra {

/// [[theta, m], ...] in descending theta.
inline nlohmann::json to_json(const Spectrum& spec) {
  auto out = nlohmann::json::array();
  for (const auto& e : spec.entries()) out.push_back({e.theta, e.multiplicity});
  return out;
}

inline nlohmann::json to_json(const LineStructure& ls) {
  nlohmann::json j;
  j["s"] = ls.params.s;
  j["t"] = ls.params.t;
  auto lines = nlohmann::json::array();
  for (const auto& l : ls.lines) lines.push_back(l.vertices);
  j["lines"] = std::move(lines);
  j["q"] = ls.q;
  j["delta"] = ls.delta();
  j["alpha"] = ls.alpha();
  j["out_of_range"] = ls.out_of_range;
  return j;
}

inline nlohmann::json to_json(const PipelineReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["s"] = r.params.s;
  j["t"] = r.params.t;
  auto stages = nlohmann::json::array();
  for (const auto& st : r.stages) {
    stages.push_back({{"stage", st.name},
                      {"pass", st.pass},
                      {"skipped", st.skipped},
                      {"witness", st.witness},
                      {"below_bound_flag", st.below_bound}});
  }
  j["stages"] = std::move(stages);
  j["verdict"] = to_string(r.verdict);
  if (r.identification && r.identification->coordinates) {
    auto coords = nlohmann::json::array();
    for (const auto& c : *r.identification->coordinates) coords.push_back({c.row, c.col});
    j["quotient_coordinates"] = std::move(coords);
  }
  return j;
}

/// One line per stage: PASS/FAIL/SKIP, name, witness; then the verdict.
inline std::string to_text(const PipelineReport& r) {
  std::ostringstream out;
  out << "graph n=" << r.n << " s=" << r.params.s << " t=" << r.params.t;
  if (!r.stages.empty() && r.stages.front().below_bound) out << " (below-bound regime)";
  out << '\n';
  for (const auto& st : r.stages) {
    const char* tag = st.skipped ? "SKIP" : (st.pass ? "PASS" : "FAIL");
    out << tag << "  " << st.name;
    if (!st.witness.empty()) out << "  " << st.witness;
    out << '\n';
  }
  out << "verdict: " << to_string(r.verdict) << '\n';
  return out.str();
}

inline std::string to_text(const LineStructure& ls) {
  std::ostringstream out;
  out << "delta=" << ls.delta() << " alpha=" << ls.alpha() << '\n';
  out << "q=";
  for (std::size_t i = 0; i < ls.q.size(); ++i) out << (i ? "," : "") << ls.q[i];
  out << '\n';
  for (std::size_t i = 0; i < ls.lines.size(); ++i) {
    out << "line " << i << " order=" << ls.lines[i].order() << ':';
    for (Vertex v : ls.lines[i].vertices) out << ' ' << v;
    out << '\n';
  }
  if (!ls.out_of_range.empty()) out << "out_of_range=" << ls.out_of_range.size() << '\n';
  return out.str();
}

}  // namespace gridspectra
