// Wall-time comparison of the serial reference kernels against the
// OpenMP-parallel ones on a mid-sized workload.

#include <chrono>
#include <cstdio>

#include "rodnet/phase_diagram.hpp"
#include "rodnet/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename Fn>
double time_of(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
  using namespace rodnet;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads available: %d\n\n", threads);

  GridSpec spec;
  spec.rho_min = 0.05;
  spec.rho_max = 3.0;
  spec.aa_min = 0.01;
  spec.aa_max = 100.0;
  spec.rho_steps = 64;
  spec.aa_steps = 64;
  MaterialParams params;
  BulkWellParams wells;
  wells.z_nem = 1.0 / 3.0;
  SolverOptions opts;

  PhaseDiagram serial, parallel;
  const double t_serial = time_of([&] {
    serial = build_phase_diagram_serial(spec, 1.0, params, wells, Protocol::plane_strain, opts);
  });
  const double t_parallel = time_of([&] {
    parallel = build_phase_diagram(spec, 1.0, params, wells, Protocol::plane_strain, opts);
  });
  bool identical = serial.cells.size() == parallel.cells.size();
  for (std::size_t i = 0; identical && i < serial.cells.size(); ++i)
    identical = serial.cells[i].state == parallel.cells[i].state &&
                serial.cells[i].s_star == parallel.cells[i].s_star;
  std::printf("phase diagram %dx%d   serial %.3fs   parallel %.3fs   speedup %.2fx   %s\n",
              spec.rho_steps, spec.aa_steps, t_serial, t_parallel, t_serial / t_parallel,
              identical ? "results identical" : "RESULTS DIFFER");

  const long trials = 20000;
  VerifyReport rs, rp;
  const double t_os = time_of([&] { rs = run_oracle_suite(1, trials, false); });
  const double t_op = time_of([&] { rp = run_oracle_suite(1, trials, true); });
  bool same = rs.checks.size() == rp.checks.size();
  for (std::size_t i = 0; same && i < rs.checks.size(); ++i)
    same = rs.checks[i].violations == rp.checks[i].violations &&
           rs.checks[i].worst_margin == rp.checks[i].worst_margin;
  std::printf("oracle suite %ld trials  serial %.3fs   parallel %.3fs   speedup %.2fx   %s\n",
              trials, t_os, t_op, t_os / t_op, same ? "results identical" : "RESULTS DIFFER");
  return 0;
}
