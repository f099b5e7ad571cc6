// Command-line front end: build named graphs, certify spectra, run single
// checks or the whole recognition pipeline.
//
// Exit codes: 0 success/affirmative, 1 check negative, 2 usage, 3 I/O or parse.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gridspectra/gridspectra.hpp"

namespace gs = gridspectra;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

gs::Graph load(const InputOptions& in) {
  const bool g6 = in.format == "graph6" ||
                  (in.format == "auto" && in.path.size() > 3 && in.path.ends_with(".g6"));
  return g6 ? gs::read_graph6(in.path) : gs::read_graph(in.path);
}

std::size_t clique_cap() {
  const char* env = std::getenv("GRIDSPECTRA_CLIQUE_CAP");
  if (env == nullptr || *env == '\0') return gs::kDefaultCliqueCap;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18)
    throw UsageError("GRIDSPECTRA_CLIQUE_CAP must be a positive integer");
  const auto cap = std::stoull(text);
  if (cap == 0) throw UsageError("GRIDSPECTRA_CLIQUE_CAP must be a positive integer");
  return cap;
}

gs::ExtensionParams params(std::int64_t s, std::int64_t t) {
  gs::ExtensionParams p{s, t};
  try {
    p.validate();
  } catch (const gs::InvalidParameter& e) {
    throw UsageError(e.what());
  }
  return p;
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Graph file (edge list, or graph6 with --format graph6 / .g6 suffix)")
      ->required();
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
}

int cmd_construct(const std::string& kind, std::int64_t m, std::int64_t s, std::int64_t t, const std::string& out) {
  gs::Graph g;
  if (kind == "grid") {
    if (m < 2) throw UsageError("construct grid needs --m >= 2");
    g = gs::build_grid(static_cast<std::size_t>(m));
  } else if (kind == "complete") {
    if (m < 1) throw UsageError("construct complete needs --m >= 1");
    g = gs::build_complete(static_cast<std::size_t>(m));
  } else if (kind == "extension") {
    const auto p = params(s, t);
    g = gs::clique_extension(gs::build_grid(static_cast<std::size_t>(p.t + 1)), static_cast<std::size_t>(p.s));
  } else {
    g = gs::build_shrikhande();
  }
  if (out.empty() || out == "-") {
    gs::format_edge_list(g, std::cout);
  } else {
    gs::write_graph(g, out);
  }
  return kOk;
}

int cmd_spectrum(const InputOptions& in, std::optional<std::int64_t> s, std::optional<std::int64_t> t, bool json) {
  if (s.has_value() != t.has_value()) throw UsageError("give both --s and --t, or neither");
  const gs::Graph g = load(in);
  std::optional<gs::Spectrum> spec;
  std::string failure;
  if (s) {
    const auto want = gs::expected_spectrum(params(*s, *t));
    const auto check = gs::verify_spectrum(g, want);
    if (check.ok)
      spec = want;
    else
      failure = "spectrum differs from the extension spectrum: " + check.witness;
  } else {
    spec = gs::find_integral_spectrum(g);
    if (!spec) failure = "non-integral spectrum";
  }
  if (json) {
    nlohmann::json j;
    j["integral"] = spec.has_value();
    if (spec) j["spectrum"] = gs::to_json(*spec);
    if (!failure.empty()) j["reason"] = failure;
    std::cout << j.dump(2) << '\n';
  } else if (spec) {
    std::cout << spec->to_text();
  } else {
    std::cout << failure << '\n';
  }
  return spec ? kOk : kNegative;
}

int cmd_check(const InputOptions& in, std::int64_t s, std::int64_t t, const std::string& stage, bool json) {
  if (!gs::is_stage_name(stage)) {
    std::string names;
    for (auto n : gs::kStageNames) names += std::string(names.empty() ? "" : ", ") + std::string(n);
    throw UsageError("unknown stage '" + stage + "' (expected one of: " + names + ")");
  }
  const auto p = params(s, t);
  const gs::Graph g = load(in);
  gs::PipelineOptions opts;
  opts.clique_cap = clique_cap();
  const gs::StageResult r = gs::run_stage(g, p, stage, opts);
  if (json) {
    std::cout << nlohmann::json{{"stage", r.name},
                                {"pass", r.pass},
                                {"skipped", r.skipped},
                                {"witness", r.witness},
                                {"below_bound_flag", r.below_bound}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  " << r.witness << '\n';
  }
  return r.pass ? kOk : kNegative;
}

int cmd_lines(const InputOptions& in, std::int64_t s, std::int64_t t, bool json) {
  const auto p = params(s, t);
  const gs::Graph g = load(in);
  gs::LineStructure ls;
  try {
    ls = gs::find_lines(g, p, clique_cap());
  } catch (const gs::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  }
  if (json)
    std::cout << gs::to_json(ls).dump(2) << '\n';
  else
    std::cout << gs::to_text(ls);
  return kOk;
}

int cmd_pipeline(const InputOptions& in, std::int64_t s, std::int64_t t, bool json, bool full) {
  const auto p = params(s, t);
  const gs::Graph g = load(in);
  gs::PipelineOptions opts;
  opts.full_report = full;
  opts.clique_cap = clique_cap();
  const gs::PipelineReport report = gs::run_pipeline(g, p, opts);
  if (json)
    std::cout << gs::to_json(report).dump(2) << '\n';
  else
    std::cout << gs::to_text(report);
  return report.verdict == gs::Verdict::IsGridExtension ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique extensions of square grids: construction, exact spectra, recognition"};
  app.require_subcommand(1);

  std::string kind, out_path;
  std::int64_t m = 0, s = 0, t = 0;
  std::optional<std::int64_t> spec_s, spec_t;
  std::string stage;
  bool json = false, full = false;
  InputOptions in;

  auto* construct = app.add_subcommand("construct", "Write a named graph as an edge list");
  construct->add_option("kind", kind, "grid | extension | shrikhande | complete")
      ->required()
      ->check(CLI::IsMember({"grid", "extension", "shrikhande", "complete"}));
  construct->add_option("--m", m, "Side of the grid / order of the complete graph");
  construct->add_option("--s", s, "Clique size of the extension");
  construct->add_option("--t", t, "Extension of the (t+1)x(t+1) grid");
  construct->add_option("-o,--output", out_path, "Output path (stdout if omitted)");

  auto* spectrum = app.add_subcommand("spectrum", "Certify the (integral) spectrum of a graph");
  add_input(spectrum, in);
  spectrum->add_option("--s", spec_s, "Check against the extension spectrum for (s, t)");
  spectrum->add_option("--t", spec_t);
  spectrum->add_flag("--json", json);

  auto* check = app.add_subcommand("check", "Run one pipeline stage");
  add_input(check, in);
  check->add_option("--s", s)->required();
  check->add_option("--t", t)->required();
  check->add_option("--stage", stage, "Stage name")->required();
  check->add_flag("--json", json);

  auto* lines = app.add_subcommand("lines", "Print the line structure");
  add_input(lines, in);
  lines->add_option("--s", s)->required();
  lines->add_option("--t", t)->required();
  lines->add_flag("--json", json);

  auto* pipeline = app.add_subcommand("pipeline", "Run the full recognition pipeline");
  add_input(pipeline, in);
  pipeline->add_option("--s", s)->required();
  pipeline->add_option("--t", t)->required();
  pipeline->add_flag("--json", json);
  pipeline->add_flag("--full-report", full, "Run every stage even after a failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(kind, m, s, t, out_path);
    if (*spectrum) return cmd_spectrum(in, spec_s, spec_t, json);
    if (*check) return cmd_check(in, s, t, stage, json);
    if (*lines) return cmd_lines(in, s, t, json);
    return cmd_pipeline(in, s, t, json, full);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const gs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kIo;
  } catch (const gs::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
