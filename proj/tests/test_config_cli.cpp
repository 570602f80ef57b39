#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rodnet/config.hpp"
#include "rodnet/csvio.hpp"
#include "rodnet/errors.hpp"

using namespace rodnet;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("cannot open " + p.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("rodnet_test_" + tag);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("minimal config applies defaults") {
  const ExperimentConfig cfg = parse_config("command = verify\n[material]\nchi = 2.5\n");
  CHECK(cfg.command == Command::verify);
  CHECK(cfg.material.chi == doctest::Approx(2.5));
  CHECK(cfg.material.rho0 == doctest::Approx(1.0));
  CHECK(cfg.wells.eta_iso == doctest::Approx(50.0));
  CHECK(cfg.grid.rho_steps == 200);
  CHECK(cfg.out_dir == "out");
}

TEST_CASE("syntax and range errors carry the line and the field") {
  try {
    parse_config("command = verify\n[wells]\nbad line here\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_config("command = verify\n[wells]\neta_iso = -1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("eta_iso") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("command = verify\nnot_a_key = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("command = verify\n[nosuch]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[material]\nchi = 1\n"), ConfigError);  // missing command
  CHECK_THROWS_AS(parse_config("command = bogus\n"), ConfigError);
}

TEST_CASE("echoed effective config reparses to an equal value") {
  ExperimentConfig cfg = parse_config(
      "command = op-curve\nseed = 7\nthreads = 3\nstrict = true\nout_dir = artifacts\n"
      "[material]\nchi = 10\naspect_ratio = 4\nalpha_mode = constant\nalpha_const = -1\n"
      "[wells]\nz_nem = 0.66666666\neta_nem = 400\n"
      "[sweep]\nlambda_min = 0.7\nlambda_max = 2.3\npoints = 33\naspect_ratios = 0.01,1,10\n"
      "[solver]\ns_points = 1234\n");
  const std::string echoed = echo_config(cfg);
  const ExperimentConfig back = parse_config(echoed);
  CHECK(back == cfg);
  CHECK(echo_config(back) == echoed);
}

TEST_CASE("shipped configs parse and carry the documented calibrations") {
  const std::string root = RODNET_SOURCE_DIR;
  const ExperimentConfig chi1 = parse_config(slurp(root + "/configs/fig_chi1_phase.cfg"));
  CHECK(chi1.command == Command::phase_diagram);
  CHECK(chi1.material.chi == doctest::Approx(1.0));
  CHECK(chi1.wells.z_nem == doctest::Approx(1.0 / 3.0));
  CHECK(chi1.grid.rho_steps == 200);
  CHECK(chi1.grid.aa_steps == 200);

  const ExperimentConfig chi1000 = parse_config(slurp(root + "/configs/fig_chi1000_phase.cfg"));
  CHECK(chi1000.material.chi == doctest::Approx(1000.0));

  for (const char* name : {"opcurve_chi10.cfg", "opcurve_chi3p5.cfg", "opcurve_chi0p5.cfg",
                           "opcurve_chi80.cfg", "stress_chi0p5_aa80.cfg", "verify_default.cfg",
                           "threshold_chi1.cfg", "surface_chi1.cfg"}) {
    CHECK_NOTHROW(parse_config(slurp(root + std::string("/configs/") + name)));
  }
}

namespace {
std::string data_rows(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out << line << "\n";
  return out.str();
}
}  // namespace

TEST_CASE("determinism: identical config gives byte-identical csv artifacts") {
  ExperimentConfig cfg = parse_config(
      "command = op-curve\n"
      "[material]\nchi = 10\n"
      "[sweep]\nlambda_min = 0.8\nlambda_max = 1.6\npoints = 12\naspect_ratios = 10\n"
      "[solver]\ns_points = 600\n");
  const fs::path d1 = fresh_dir("det1");
  std::ostringstream log;
  cfg.out_dir = d1.string();
  REQUIRE(run_experiment(cfg, log) == 0);
  const std::string first = slurp(d1 / "op_curve_aa10.csv");
  REQUIRE(run_experiment(cfg, log) == 0);  // same config, same directory
  CHECK(first == slurp(d1 / "op_curve_aa10.csv"));
  CHECK(first.find("control,rho,lambda,s_star,theta_star,energy,E_iso,"
                   "E_nema,label,n_roots") != std::string::npos);

  // thread count changes the header echo only, never the data
  ExperimentConfig two = cfg;
  two.threads = 2;
  const fs::path d2 = fresh_dir("det2");
  two.out_dir = d2.string();
  REQUIRE(run_experiment(two, log) == 0);
  CHECK(data_rows(first) == data_rows(slurp(d2 / "op_curve_aa10.csv")));
  fs::remove_all(d1);
  fs::remove_all(d2);
}

TEST_CASE("phase-diagram run writes csv and svg artifacts atomically") {
  ExperimentConfig cfg = parse_config(
      "command = phase-diagram\n"
      "[material]\nchi = 1\n"
      "[wells]\nz_nem = 0.3333333333333333\n"
      "[grid]\nrho_min = 1.5\nrho_max = 1.5\naa_min = 40\naa_max = 40\nrho_steps = 1\naa_steps = 1\n"
      "[solver]\ns_points = 800\n");
  const fs::path dir = fresh_dir("pd");
  cfg.out_dir = dir.string();
  std::ostringstream log;
  REQUIRE(run_experiment(cfg, log) == 0);
  CHECK(fs::exists(dir / "phase_diagram.csv"));
  CHECK(fs::exists(dir / "phase_diagram.svg"));
  CHECK(fs::exists(dir / "effective_config.cfg"));
  CHECK(!fs::exists(dir / "phase_diagram.csv.tmp"));
  const std::string csv = slurp(dir / "phase_diagram.csv");
  CHECK(csv.find("rho,A_a,label,s_star,energy_gap") != std::string::npos);
  // the effective config echo reparses
  CHECK_NOTHROW(parse_config(slurp(dir / "effective_config.cfg")));
  fs::remove_all(dir);
}

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.0, 1.0, -1.5, 1.0 / 3.0, 2.0 / 3.0, 1e-17, 123456.789, 1e300}) {
    const std::string s = format_double(v);
    double back = 0.0;
    std::sscanf(s.c_str(), "%lf", &back);
    CHECK(back == v);
  }
}
