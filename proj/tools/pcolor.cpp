#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcol/config.hpp"
#include "pcol/discharging.hpp"
#include "pcol/graph.hpp"
#include "pcol/io.hpp"
#include "pcol/named.hpp"
#include "pcol/reducibility.hpp"
#include "pcol/solver.hpp"

namespace {

using nlohmann::json;

struct RunReport {
  std::string command;
  json inputs = json::array();
  json result;
  int exit_code = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::string load(const std::string& path) {
    std::string bytes = pcol::read_file(path);
    inputs.push_back({{"path", path}, {"digest", pcol::fnv1a_digest(bytes)}});
    return bytes;
  }

  int finish(bool as_json) {
    if (as_json) {
      json j;
      j["command"] = command;
      j["inputs"] = inputs;
      j["result"] = result;
      j["wall_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
      j["exit_code"] = exit_code;
      std::cout << j.dump(2) << '\n';
    }
    return exit_code;
  }
};

// Graph inputs accept either a file path or a builder name such as
// "petersen" or "cycle(7)".
pcol::Graph load_graph(RunReport& report, const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    return pcol::parse_edge_list(report.load(arg));
  }
  return pcol::build_named_graph(arg);
}

int cmd_solve(RunReport& report, const std::string& graph_arg,
              const std::string& spec_text, const std::string& partial_path,
              const std::string& out_path, bool as_json) {
  pcol::Graph g = load_graph(report, graph_arg);
  pcol::PackingSpec spec = pcol::PackingSpec::parse(spec_text);
  pcol::Coloring partial(g.vertex_count(), 0);
  if (!partial_path.empty()) {
    partial = pcol::parse_coloring(report.load(partial_path), g.vertex_count());
  }
  pcol::ExtendStats stats;
  auto coloring = pcol::extend(g, spec, partial, &stats);
  report.result["nodes"] = stats.nodes;
  if (coloring) {
    report.result["colorable"] = true;
    report.result["coloring"] = *coloring;
    std::string text = pcol::serialize_coloring(*coloring);
    if (!out_path.empty()) {
      pcol::write_file(out_path, text);
    } else if (!as_json) {
      std::cout << text;
    }
    report.exit_code = 0;
  } else {
    report.result["colorable"] = false;
    if (!as_json) std::cout << "no coloring extends the given partial\n";
    report.exit_code = 1;
  }
  return report.finish(as_json);
}

int cmd_verify(RunReport& report, const std::string& graph_arg,
               const std::string& coloring_path, const std::string& spec_text,
               bool as_json) {
  pcol::Graph g = load_graph(report, graph_arg);
  pcol::PackingSpec spec = pcol::PackingSpec::parse(spec_text);
  pcol::Coloring coloring =
      pcol::parse_coloring(report.load(coloring_path), g.vertex_count());
  for (int c : coloring) {
    if (c > spec.color_count()) {
      throw std::runtime_error("color " + std::to_string(c) +
                               " exceeds the spec's " +
                               std::to_string(spec.color_count()) + " colors");
    }
  }
  auto validation = pcol::verify(g, spec, coloring);
  report.result["valid"] = validation.valid;
  report.result["violations"] = json::array();
  for (const auto& violation : validation.violations) {
    report.result["violations"].push_back({{"color", violation.color},
                                           {"u", violation.u},
                                           {"v", violation.v},
                                           {"dist", violation.dist}});
    if (!as_json) {
      std::cout << "violation: color " << violation.color << " vertices "
                << violation.u << ' ' << violation.v << " dist " << violation.dist
                << '\n';
    }
  }
  if (validation.valid && !as_json) std::cout << "valid\n";
  report.exit_code = validation.valid ? 0 : 1;
  return report.finish(as_json);
}

int cmd_check_config(RunReport& report, const std::string& path,
                     const pcol::CheckOptions& opts, bool as_json, bool with_timing) {
  std::string bytes = report.load(path);
  auto configs = pcol::parse_config_file(bytes);
  report.result = json::array();
  bool all_reducible = true;
  for (const auto& cfg : configs) {
    auto result = pcol::check_reducible(cfg, opts);
    all_reducible = all_reducible && result.reducible;
    report.result.push_back(json::parse(pcol::result_to_json(result, with_timing)));
    if (!as_json) std::cout << pcol::format_result_lines(result);
  }
  report.exit_code = all_reducible ? 0 : 1;
  return report.finish(as_json);
}

int cmd_discharge(RunReport& report, const std::string& graph_arg,
                  const std::string& rotation_path, bool as_json) {
  pcol::Graph g = load_graph(report, graph_arg);
  pcol::RotationSystem rot;
  if (rotation_path.empty()) {
    auto named = pcol::named_rotation(graph_arg);
    if (!named) {
      throw std::runtime_error("no built-in rotation for '" + graph_arg +
                               "'; pass a rotation file");
    }
    rot = *named;
  } else {
    rot = pcol::parse_rotation(report.load(rotation_path), g);
  }
  auto faces = pcol::trace_faces(g, rot);
  pcol::verify_euler_identity(g, faces);  // throws -> exit 2
  std::string payload = pcol::discharge_report_json(g, rot);
  report.result = json::parse(payload);
  bool unhappy = !report.result["unhappy"]["faces"].empty() ||
                 !report.result["arithmetic_ok"].get<bool>();
  report.exit_code = unhappy ? 1 : 0;
  if (!as_json) std::cout << payload << '\n';
  return report.finish(as_json);
}

int cmd_fixtures(RunReport& report, const std::string& name,
                 const std::string& out_dir, bool as_json) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto emit = [&](const std::string& file, const std::string& content) {
    std::string path = (fs::path(out_dir) / file).string();
    pcol::write_file(path, content);
    report.result["files"].push_back(path);
    if (!as_json) std::cout << path << '\n';
  };
  if (name == "sample-config") {
    emit("sample_config.txt", pcol::sample_config_text());
  } else if (name == "sharpness") {
    emit("sharpness_gadget.txt", pcol::serialize_edge_list(pcol::sharpness_gadget()));
    emit("sharpness_doubled.txt", pcol::serialize_edge_list(pcol::sharpness_doubled()));
    emit("sharpness_gadget.rot",
         pcol::serialize_rotation(*pcol::named_rotation("sharpness_gadget")));
    emit("sharpness_doubled.rot",
         pcol::serialize_rotation(*pcol::named_rotation("sharpness_doubled")));
  } else {
    auto obj = pcol::build_named(name);
    if (auto* g = std::get_if<pcol::Graph>(&obj)) {
      emit(name + ".txt", pcol::serialize_edge_list(*g));
      if (auto rot = pcol::named_rotation(name)) {
        emit(name + ".rot", pcol::serialize_rotation(*rot));
      }
    } else {
      emit(name + ".cfg",
           pcol::serialize_config_file({std::get<pcol::Configuration>(obj)}));
    }
  }
  report.exit_code = 0;
  return report.finish(as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packing-coloring toolkit: solver, configuration checker, "
               "discharging auditor"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable run report on stdout");

  std::string graph_arg, spec_text = "1,2,2,2,2,2", partial_path, out_path;
  auto* solve = app.add_subcommand("solve", "find a packing coloring");
  solve->add_option("graph", graph_arg, "edge-list file or builder name")->required();
  solve->add_option("--spec", spec_text, "comma list of packing radii");
  solve->add_option("--partial", partial_path, "precoloring file");
  solve->add_option("--out", out_path, "write the coloring here");

  std::string coloring_path;
  auto* verify = app.add_subcommand("verify", "validate a coloring");
  verify->add_option("graph", graph_arg, "edge-list file or builder name")->required();
  verify->add_option("coloring", coloring_path, "coloring file")->required();
  verify->add_option("--spec", spec_text, "comma list of packing radii");

  std::string config_path;
  pcol::CheckOptions opts;
  std::vector<int> resume;
  bool no_timing = false;
  auto* check = app.add_subcommand("check-config", "run the reducibility checker");
  check->add_option("file", config_path, "configuration file")->required();
  check->add_flag("--exhaustive-first-triple", opts.exhaustive_first,
                  "try all 30 patterns on the first triple");
  check->add_option("--workers", opts.workers, "worker threads");
  check->add_option("--witness-limit", opts.witness_limit,
                    "counterexamples to collect before stopping");
  check->add_option("--progress", opts.progress_interval,
                    "print a cursor to stderr every N leaves");
  check->add_option("--resume", resume, "skip precolorings before this cursor");
  check->add_flag("--no-timing", no_timing, "zero the seconds field");

  std::string rotation_path;
  auto* discharge = app.add_subcommand("discharge", "audit the discharging rules");
  discharge->add_option("graph", graph_arg, "edge-list file or builder name")
      ->required();
  discharge->add_option("rotation", rotation_path,
                        "rotation file (line i: neighbors of i in cyclic order)");

  std::string fixture_name, fixture_dir = ".";
  auto* fixtures = app.add_subcommand("fixtures", "emit named graphs and files");
  fixtures->add_option("name", fixture_name, "fixture name")->required();
  fixtures->add_option("out-dir", fixture_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  RunReport report;
  report.command = app.get_subcommands().front()->get_name();
  try {
    if (*solve) return cmd_solve(report, graph_arg, spec_text, partial_path,
                                 out_path, as_json);
    if (*verify) return cmd_verify(report, graph_arg, coloring_path, spec_text,
                                   as_json);
    if (*check) {
      if (!resume.empty()) opts.resume_cursor = resume;
      return cmd_check_config(report, config_path, opts, as_json, !no_timing);
    }
    if (*discharge) return cmd_discharge(report, graph_arg, rotation_path, as_json);
    if (*fixtures) return cmd_fixtures(report, fixture_name, fixture_dir, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.result = {{"error", e.what()}};
    report.exit_code = 2;
    return report.finish(as_json);
  }
  return 2;
}
