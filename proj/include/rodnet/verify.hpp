#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rodnet/energy.hpp"

namespace rodnet {

struct CheckResult {
  std::string name;
  long trials = 0;
  long violations = 0;
  double worst_margin = 0.0;  // most negative slack seen (>= 0 means clean)
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Randomized matrix-inequality oracles: the F^T L F trace estimate, the
/// det/norm estimate, the G / adj G bounds, lambda_max <= -2 lambda_min,
/// convexity of the lambda_min-floor set, the boundary degeneracy of the
/// constitutive map, and the eigenvalue-restricted G estimates. Trials are
/// seeded per index, so parallel and serial runs count identically.
VerifyReport run_oracle_suite(std::uint64_t seed, long trials = 10000, bool parallel = true);

/// Calibrated-well structure of the bulk potential: double-well to
/// single-nematic progression over the chi set, the depth crossover chi_l
/// bisected to 1e-3, and the boundary blow-ups.
VerifyReport run_axiom_checks(const BulkWellParams& wells,
                              const std::vector<double>& chi_set = {0.5, 1.0, 3.5, 10.0, 80.0,
                                                                    1000.0});

/// Local minima of f(s, z; chi) on a dense grid, refined by coordinate
/// descent on the analytic partials.
struct BulkMinimum {
  double s = 0.0;
  double z = 0.0;
  double value = 0.0;
};
std::vector<BulkMinimum> bulk_minima(double chi, const BulkWellParams& w, int ns = 240,
                                     int nz = 240, double z_lo = 0.05, double z_hi = 4.0);

/// Depth difference f(iso minimum) - f(nematic minimum); the crossover chi_l
/// is its root in chi. Returns NaN when either well is missing.
double well_depth_difference(double chi, const BulkWellParams& w);

/// Bisect the depth crossover chi_l within [chi_lo, chi_hi] to tol.
double locate_chi_l(const BulkWellParams& w, double chi_lo = 0.5, double chi_hi = 10.0,
                    double tol = 1e-3);

std::string format_report(const VerifyReport& report);

}  // namespace rodnet
