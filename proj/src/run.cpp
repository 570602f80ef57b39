#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "rodnet/config.hpp"
#include "rodnet/csvio.hpp"
#include "rodnet/render.hpp"
#include "rodnet/verify.hpp"
#include "rodnet/version.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rodnet {

namespace {

std::vector<std::string> metadata_lines(const ExperimentConfig& cfg) {
  std::vector<std::string> lines;
  lines.push_back("tool: rodnet " + std::string(kVersion));
  std::istringstream echo(echo_config(cfg));
  std::string l;
  while (std::getline(echo, l))
    if (!l.empty()) lines.push_back(l);
  return lines;
}

std::string out_path(const ExperimentConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

int run_phase_diagram(const ExperimentConfig& cfg, std::ostream& log,
                      const std::vector<std::string>& meta) {
  const PhaseDiagram d = build_phase_diagram(cfg.grid, cfg.material.chi, cfg.material, cfg.wells,
                                             cfg.protocol, cfg.solver);
  write_atomic(out_path(cfg, "phase_diagram.csv"), phase_diagram_csv(d, meta));
  SvgStyle style;
  style.metadata = meta;
  write_atomic(out_path(cfg, "phase_diagram.svg"), render_svg(d, style));
  const int failed = d.count(CellState::failed);
  log << "cells=" << d.cells.size() << " nematic=" << d.count(CellState::nematic)
      << " isotropic=" << d.count(CellState::isotropic) << " failed=" << failed;
  return (cfg.strict && failed > 0) ? 1 : 0;
}

int run_op_curve(const ExperimentConfig& cfg, std::ostream& log,
                 const std::vector<std::string>& meta) {
  const auto branches =
      order_parameter_curves(cfg.material.chi, cfg.sweep.aspect_ratios, cfg.sweep.lambda_min,
                             cfg.sweep.lambda_max, cfg.sweep.points, cfg.material, cfg.wells,
                             cfg.solver);
  std::vector<CurveSeries> series;
  int failed = 0;
  for (std::size_t k = 0; k < branches.size(); ++k) {
    const double aa = cfg.sweep.aspect_ratios[k];
    std::ostringstream name;
    name << "op_curve_aa" << format_double(aa) << ".csv";
    write_atomic(out_path(cfg, name.str()), branch_csv(branches[k], meta));
    CurveSeries s;
    s.name = "A_a=" + format_double(aa);
    for (const auto& pt : branches[k].points) {
      s.x.push_back(pt.rho);
      s.y.push_back(pt.s_star);
    }
    series.push_back(std::move(s));
    failed += branches[k].failed_points;
  }
  SvgStyle style;
  style.metadata = meta;
  write_atomic(out_path(cfg, "op_curves.svg"), render_svg(series, "rho", "s_star", style));
  log << "curves=" << branches.size() << " points_per_curve=" << cfg.sweep.points
      << " failed=" << failed;
  return (cfg.strict && failed > 0) ? 1 : 0;
}

int run_stress_curve(const ExperimentConfig& cfg, std::ostream& log,
                     const std::vector<std::string>& meta) {
  const StressCurve sc =
      stress_curve(cfg.material.chi, cfg.material.aspect_ratio, cfg.sweep.lambda_min,
                   cfg.sweep.lambda_max, cfg.sweep.points, cfg.material, cfg.wells, cfg.solver,
                   cfg.stress_fd_step);
  write_atomic(out_path(cfg, "stress_curve.csv"), stress_csv(sc, meta));
  CurveSeries s;
  s.name = "P_xx, A_a=" + format_double(cfg.material.aspect_ratio);
  s.x = sc.lambda;
  s.y = sc.pxx;
  SvgStyle style;
  style.metadata = meta;
  write_atomic(out_path(cfg, "stress_curve.svg"), render_svg({s}, "lambda", "P_xx", style));
  log << "points=" << sc.lambda.size() << " sign_changes=" << sc.nonmonotone_at.size()
      << " one_sided=" << sc.jump_flagged.size();
  return 0;
}

int run_energy_surface(const ExperimentConfig& cfg, std::ostream& log,
                       const std::vector<std::string>& meta) {
  const std::string csv =
      energy_surface_csv(cfg.material, cfg.wells, cfg.surface.s_samples, cfg.surface.z_samples,
                         cfg.surface.z_min, cfg.surface.z_max, meta);
  write_atomic(out_path(cfg, "energy_surface.csv"), csv);
  log << "samples=" << cfg.surface.s_samples << "x" << cfg.surface.z_samples;
  return 0;
}

int run_verify(const ExperimentConfig& cfg, std::ostream& log,
               const std::vector<std::string>& meta) {
  VerifyReport rep = run_oracle_suite(cfg.seed, cfg.verify_trials);
  const VerifyReport axioms = run_axiom_checks(cfg.wells);
  rep.checks.insert(rep.checks.end(), axioms.checks.begin(), axioms.checks.end());
  std::ostringstream body;
  for (const auto& m : meta) body << "# " << m << "\n";
  body << format_report(rep);
  write_atomic(out_path(cfg, "verify_report.txt"), body.str());
  log << format_report(rep);
  long fails = 0;
  for (const auto& c : rep.checks)
    if (!c.pass) ++fails;
  log << "checks=" << rep.checks.size() << " failed=" << fails;
  return rep.all_pass() ? 0 : 1;
}

int run_threshold(const ExperimentConfig& cfg, std::ostream& log,
                  const std::vector<std::string>& meta) {
  const ThresholdResult res = threshold_density(cfg.sweep.rho_min, cfg.sweep.rho_max,
                                                cfg.material, cfg.wells, cfg.solver);
  std::ostringstream os;
  for (const auto& m : meta) os << "# " << m << "\n";
  os << "chi,A_a,found,rho_threshold,n_switches\n";
  os << format_double(cfg.material.chi) << ',' << format_double(cfg.material.aspect_ratio) << ','
     << (res.found ? "true" : "false") << ',' << (res.found ? format_double(res.rho) : "nan")
     << ',' << res.switch_locations.size() << "\n";
  write_atomic(out_path(cfg, "threshold.csv"), os.str());
  if (res.multi_switch) {
    log << "warning: label switches more than once along rho:";
    for (double r : res.switch_locations) log << ' ' << r;
    log << "\n";
  }
  log << "found=" << (res.found ? "true" : "false");
  if (res.found) log << " R=" << format_double(res.rho);
  return 0;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
#ifdef _OPENMP
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
  const auto t0 = std::chrono::steady_clock::now();
  const auto meta = metadata_lines(cfg);
  write_atomic(out_path(cfg, "effective_config.cfg"), echo_config(cfg));

  int status = 0;
  switch (cfg.command) {
    case Command::phase_diagram: status = run_phase_diagram(cfg, log, meta); break;
    case Command::op_curve: status = run_op_curve(cfg, log, meta); break;
    case Command::stress_curve: status = run_stress_curve(cfg, log, meta); break;
    case Command::energy_surface: status = run_energy_surface(cfg, log, meta); break;
    case Command::verify: status = run_verify(cfg, log, meta); break;
    case Command::threshold: status = run_threshold(cfg, log, meta); break;
  }
  const auto t1 = std::chrono::steady_clock::now();
  log << " wall=" << std::chrono::duration<double>(t1 - t0).count() << "s\n";
  return status;
}

}  // namespace rodnet
