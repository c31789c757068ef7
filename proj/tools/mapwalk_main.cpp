// mapwalk: build, evolve and analyze vertex-face quantum walks on
// orientable maps given by rotation systems.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mapwalk/analysis.hpp"
#include "mapwalk/families.hpp"
#include "mapwalk/report.hpp"
#include "mapwalk/rotmap_io.hpp"
#include "mapwalk/svg.hpp"

namespace {

using namespace mapwalk;

FamilyInstance make_family(const std::vector<std::string>& spec) {
  if (spec.empty()) throw std::invalid_argument("family: missing family name");
  std::string name = spec.front();
  std::replace(name.begin(), name.end(), '_', '-');
  std::vector<int> params;
  for (size_t i = 1; i < spec.size(); ++i) {
    // Bouquet words may arrive as one quoted argument.
    std::istringstream ss(spec[i]);
    int value;
    while (ss >> value) params.push_back(value);
    if (!ss.eof()) throw std::invalid_argument("family: bad integer '" + spec[i] + "'");
  }
  auto need = [&](size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("family " + name + ": expected " + std::to_string(count) +
                                  " integer parameter(s)");
  };
  if (name == "dipole") {
    need(1);
    return dipole(params[0]);
  }
  if (name == "grid") {
    need(2);
    return toroidal_grid(params[0], params[1]);
  }
  if (name == "grid-doubled") {
    need(1);
    return toroidal_grid_doubled(params[0]);
  }
  if (name == "cycle") {
    need(1);
    return planar_cycle(params[0]);
  }
  if (name == "path-tree" || name == "path") {
    need(1);
    return path_tree(params[0]);
  }
  if (name == "star") {
    need(1);
    return star(params[0]);
  }
  if (name == "bouquet") {
    if (params.empty()) throw std::invalid_argument("family bouquet: expected a dart word");
    return bouquet(params);
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

FamilyInstance load_source(const std::string& path, const std::vector<std::string>& family) {
  if (!path.empty() && !family.empty())
    throw std::invalid_argument("give either a map file or --family, not both");
  if (!path.empty()) {
    FamilyInstance inst;
    inst.map = parse_rotmap_file(path);
    inst.name = "file " + path;
    return inst;
  }
  if (!family.empty()) return make_family(family);
  throw std::invalid_argument("no map given: pass a .rotmap path or --family");
}

int default_max_steps() {
  if (const char* env = std::getenv("MAPWALK_MAX_STEPS")) {
    int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 256;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_family(const std::vector<std::string>& spec, const std::string& out_path) {
  FamilyInstance inst = make_family(spec);
  std::string text = emit_rotmap(inst.map);
  std::istringstream round(text);
  if (!(parse_rotmap(round) == inst.map))
    throw std::logic_error("emitted map does not round-trip through the parser");
  if (out_path.empty())
    std::cout << text;
  else
    write_text_atomic(out_path, text);
  return 0;
}

int cmd_analyze(const std::string& path, const std::vector<std::string>& family, int max_steps,
                double tol, bool general_pst, const std::string& json_out) {
  FamilyInstance inst = load_source(path, family);
  Incidence inc = incidence(inst.map);
  WalkOperator op = build_operator(inst.map, inc);
  SpectralData spectral = u_spectrum(inst.map, inc);
  AnalysisOptions options;
  options.max_steps = max_steps;
  options.tol = tol;
  options.general_pst = general_pst;
  AnalysisReport analysis = analyze(inst.map, inc, op, spectral, options);
  nlohmann::json doc = build_report(inst.map, inc, spectral, analysis, inst.name, options);
  std::string text = doc.dump();
  if (json_out.empty())
    std::cout << text << "\n";
  else
    write_text_atomic(json_out, text);
  return 0;
}

int cmd_evolve(const std::string& path, const std::vector<std::string>& family, int start_vertex,
               int steps, std::optional<int> trace_vertex, const std::string& trace_out,
               const std::string& frames_dir, const std::string& frame_format) {
  if (frame_format != "svg") throw std::invalid_argument("only --fmt svg is supported");
  FamilyInstance inst = load_source(path, family);
  const Map& map = inst.map;
  if (start_vertex < 0 || start_vertex >= map.vertex_count)
    throw std::invalid_argument("unknown start vertex " + std::to_string(start_vertex));
  if (trace_vertex && (*trace_vertex < 0 || *trace_vertex >= map.vertex_count))
    throw std::invalid_argument("unknown trace vertex " + std::to_string(*trace_vertex));
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  Incidence inc = incidence(map);
  WalkOperator op = build_operator(map, inc);

  if (trace_vertex) {
    ProjectedSequence seq(op, std::max(1, steps));
    std::ostringstream csv;
    csv << "t,probability,probability_exact\n";
    std::vector<Rational> probs =
        transfer_probability_exact(seq, start_vertex, *trace_vertex, steps);
    for (int t = 0; t <= steps; ++t)
      csv << t << "," << format_double(to_double(probs[static_cast<size_t>(t)])) << ","
          << to_fraction_string(probs[static_cast<size_t>(t)]) << "\n";
    if (trace_out.empty())
      std::cout << csv.str();
    else
      write_text_atomic(trace_out, csv.str());
  }

  if (!frames_dir.empty()) {
    if (!inst.layout)
      std::cerr << "note: no grid layout for this map, using the circular layout\n";
    std::filesystem::create_directories(frames_dir);
    RealMatrix u_real = to_real(op.U);
    WalkState state;
    state.amplitudes = RealVector::Zero(map.dart_count);
    double amp = 1.0 / std::sqrt(static_cast<double>(map.vertex_degree(start_vertex)));
    for (int d = 0; d < map.dart_count; ++d)
      if (map.vertex_of[static_cast<size_t>(d)] == start_vertex) state.amplitudes(d) = amp;
    for (int t = 0; t <= steps; ++t) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%04d.svg", t);
      write_text_atomic((std::filesystem::path(frames_dir) / name).string(),
                        render_frame_svg(map, inst.layout, state.amplitudes));
      if (t < steps) state = evolve(u_real, std::move(state), 1);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-face quantum walks on orientable maps"};
  app.require_subcommand(1);

  auto* family_cmd = app.add_subcommand("family", "generate a map family as a .rotmap file");
  std::vector<std::string> family_spec;
  std::string family_out;
  family_cmd->add_option("spec", family_spec, "family name and integer parameters")
      ->required()
      ->expected(-1);
  family_cmd->add_option("--out", family_out, "output path (stdout if omitted)");

  auto* analyze_cmd = app.add_subcommand("analyze", "run all detectors and emit a JSON report");
  std::string analyze_path, analyze_json;
  std::vector<std::string> analyze_family;
  int max_steps = default_max_steps();
  double tol = 1e-9;
  bool general_pst = false;
  analyze_cmd->add_option("map", analyze_path, "path to a .rotmap file");
  analyze_cmd->add_option("--family", analyze_family, "family name and parameters")->expected(-1);
  analyze_cmd->add_option("--max-steps", max_steps, "search horizon")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--tol", tol, "floating point tolerance");
  analyze_cmd->add_flag("--general-pst", general_pst,
                        "also search transfers between unequal degrees");
  analyze_cmd->add_option("--json", analyze_json, "write the report here (stdout if omitted)");

  auto* evolve_cmd = app.add_subcommand("evolve", "evolve a start state; traces and SVG frames");
  std::string evolve_path, trace_out, frames_dir, frame_format = "svg";
  std::vector<std::string> evolve_family;
  int start_vertex = 0, steps = 0;
  int trace_vertex_raw = -1;
  evolve_cmd->add_option("map", evolve_path, "path to a .rotmap file");
  evolve_cmd->add_option("--family", evolve_family, "family name and parameters")->expected(-1);
  evolve_cmd->add_option("--start-vertex", start_vertex, "initial uniform superposition vertex")
      ->required();
  evolve_cmd->add_option("--steps", steps, "number of steps")->required();
  auto* trace_opt = evolve_cmd->add_option("--trace", trace_vertex_raw,
                                           "emit the transfer probability trace to this vertex");
  evolve_cmd->add_option("--trace-out", trace_out, "trace CSV path (stdout if omitted)");
  evolve_cmd->add_option("--frames", frames_dir, "write per-step SVG frames to this directory");
  evolve_cmd->add_option("--fmt", frame_format, "frame format (svg)");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(family_cmd)) return cmd_family(family_spec, family_out);
    if (app.got_subcommand(analyze_cmd))
      return cmd_analyze(analyze_path, analyze_family, max_steps, tol, general_pst, analyze_json);
    if (app.got_subcommand(evolve_cmd)) {
      std::optional<int> trace_vertex;
      if (trace_opt->count() > 0) trace_vertex = trace_vertex_raw;
      return cmd_evolve(evolve_path, evolve_family, start_vertex, steps, trace_vertex, trace_out,
                        frames_dir, frame_format);
    }
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MapError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
