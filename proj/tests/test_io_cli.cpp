#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mapwalk/analysis.hpp"
#include "mapwalk/families.hpp"
#include "mapwalk/report.hpp"
#include "mapwalk/rotmap_io.hpp"
#include "mapwalk/spectra.hpp"
#include "support.hpp"

using namespace mapwalk;
using mapwalk::testing::small_battery;

namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "mapwalk_test";
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(MAPWALK_CLI_PATH) + " " + args;
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("rotmap text round-trips canonically") {
  for (const auto& inst : small_battery()) {
    INFO(inst.name);
    std::string text = emit_rotmap(inst.map);
    std::istringstream in(text);
    Map parsed = parse_rotmap(in);
    CHECK(parsed == inst.map);
    CHECK(emit_rotmap(parsed) == text);
  }
}

TEST_CASE("parser accepts comments and reports line numbers on errors") {
  std::istringstream good("# digon\n\ndarts 4\nv 0: 0 2  # u\nv 1: 1 3\n");
  CHECK(parse_rotmap(good) == dipole(2).map);

  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_rotmap(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("darts 4\nv 0: 0 9\nv 1: 1 3\n") == 2);   // dart out of range
  CHECK(line_of("darts 3\n") == 1);                        // odd dart count
  CHECK(line_of("v 0: 0 1\n") == 1);                       // missing header
  CHECK(line_of("darts 4\nv 0: 0 2\nv 0: 1 3\n") == 3);    // duplicate vertex
  CHECK(line_of("darts 4\nv 0: 0 2\nv 1: 1\n") == 3);      // missing dart (count)
  CHECK(line_of("darts 4\nwat 0: 0 2\n") == 2);            // bad directive
  CHECK(line_of("darts 4\nv 0: 0 1\nv 1: 2 3\n") == 3);    // disconnected
}

TEST_CASE("reports serialize deterministically") {
  Map m = toroidal_grid(1, 4).map;
  Incidence inc = incidence(m);
  WalkOperator op = build_operator(m, inc);
  SpectralData spectral = u_spectrum(m, inc);
  AnalysisOptions options;
  options.max_steps = 16;
  AnalysisReport analysis = analyze(m, inc, op, spectral, options);
  nlohmann::json a = build_report(m, inc, spectral, analysis, "grid 1 4", options);
  nlohmann::json b = build_report(m, inc, spectral, analysis, "grid 1 4", options);
  CHECK(a.dump() == b.dump());
  CHECK(a["map"]["vertices"] == 4);
  CHECK(a["analysis"]["map_period"] == 4);
  CHECK(a["analysis"]["identity_power"] == 4);
  CHECK(a["spectral"]["cc_rational"] == true);
}

TEST_CASE("cli: family generation round-trips through analyze") {
  fs::path dir = temp_dir();
  fs::path rotmap = dir / "x2.rotmap";
  REQUIRE(run_cli("family dipole 2 --out " + rotmap.string()) == 0);
  CHECK(parse_rotmap_file(rotmap.string()) == dipole(2).map);

  fs::path json_path = dir / "x2.json";
  REQUIRE(run_cli("analyze " + rotmap.string() + " --json " + json_path.string()) == 0);
  nlohmann::json report = nlohmann::json::parse(slurp(json_path));
  CHECK(report["analysis"]["characterizations"]["u_squared_identity"] == true);
  CHECK(report["analysis"]["pst_pairs"].size() == 1);

  // Byte-identical across runs.
  fs::path json2 = dir / "x2_again.json";
  REQUIRE(run_cli("analyze " + rotmap.string() + " --json " + json2.string()) == 0);
  CHECK(slurp(json_path) == slurp(json2));
}

TEST_CASE("cli: analyze a family directly") {
  fs::path dir = temp_dir();
  fs::path json_path = dir / "grid16.json";
  REQUIRE(run_cli("analyze --family grid 1 6 --max-steps 32 --json " + json_path.string()) == 0);
  nlohmann::json report = nlohmann::json::parse(slurp(json_path));
  CHECK(report["analysis"]["map_period"] == 6);
  CHECK(report["analysis"]["identity_power"] == 6);
  CHECK(report["analysis"]["pst_pairs"].size() == 3);
  CHECK(report["config"]["source"] == "grid 1 6");
}

TEST_CASE("cli: evolve writes traces and frames") {
  fs::path dir = temp_dir();
  fs::path trace = dir / "trace.csv";
  fs::path frames = dir / "frames";
  REQUIRE(run_cli("evolve --family grid 2 5 --start-vertex 0 --steps 10 --trace 5 --trace-out " +
                  trace.string() + " --frames " + frames.string()) == 0);
  std::string csv = slurp(trace);
  CHECK(csv.starts_with("t,probability,probability_exact\n"));
  CHECK(csv.find("\n5,1,1\n") != std::string::npos);    // transfer at t = 5
  CHECK(csv.find("\n10,0,0\n") != std::string::npos);   // back home at t = 10
  for (int t = 0; t <= 10; ++t) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04d.svg", t);
    CHECK(fs::exists(frames / name));
  }
  std::string svg = slurp(frames / "frame_0000.svg");
  CHECK(svg.starts_with("<svg"));
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("cli: the environment variable overrides the default horizon") {
  fs::path dir = temp_dir();
  fs::path json_path = dir / "short_horizon.json";
  std::string cmd = std::string("MAPWALK_MAX_STEPS=4 ") + MAPWALK_CLI_PATH +
                    " analyze --family grid 1 6 --json " + json_path.string();
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  nlohmann::json report = nlohmann::json::parse(slurp(json_path));
  CHECK(report["config"]["max_steps"] == 4);
  CHECK(report["analysis"]["map_period"].is_null());  // period 6 lies beyond
  CHECK(report["analysis"].contains("horizon_note"));
}

TEST_CASE("cli: exit codes distinguish input errors") {
  fs::path dir = temp_dir();
  fs::path bad = dir / "bad.rotmap";
  std::ofstream(bad) << "darts 3\n";
  CHECK(run_cli("analyze " + bad.string() + " 2>/dev/null") == 2);
  CHECK(run_cli("family nosuch 3 2>/dev/null") == 2);
  CHECK(run_cli("family dipole 2>/dev/null") == 2);  // missing parameter
  CHECK(run_cli("analyze 2>/dev/null") == 2);        // no source
  CHECK(run_cli("evolve --family grid 2 2 --start-vertex 99 --steps 1 2>/dev/null") == 2);
}
