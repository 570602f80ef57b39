#pragma once

#include <functional>
#include <vector>

#include "rodnet/energy.hpp"

namespace rodnet {

enum class Protocol { expansion, plane_strain };
enum class Phase { isotropic, nematic };

/// Root-search and branch-selection controls. The order-parameter search
/// interval is (-1/2 + s_margin, 1 - s_margin); the log barriers of the bulk
/// potential keep calibrated minimizers away from the margin.
struct SolverOptions {
  double s_margin = 1e-4;
  int s_points = 2000;        // dense derivative grid
  double root_tol = 1e-10;    // bisection interval width
  double s_split = 0.25;      // isotropic/nematic branch separator (midway between wells)
  double tie_tol = 1e-12;     // exact-tie band, broken toward isotropic
  double near_zero_s = 1e-8;  // director reported as theta = 0 below this |s|
  double warm_window = 0.05;  // warm-start search radius around the previous root
  double energy_disagree_tol = 1e-9;
  double jump_threshold = 0.05;  // |delta s*| flagged as a branch discontinuity

  bool operator==(const SolverOptions&) const = default;
};

struct EquilibriumPoint {
  double control = 0.0;  // rho (expansion) or lambda (plane strain)
  double rho = 0.0;
  double lambda = 0.0;
  double s_star = 0.0;
  double theta_star = 0.0;
  double energy = 0.0;
  double e_iso = 0.0;   // best isotropic-branch candidate (s = 0 always included)
  double e_nema = 0.0;  // best nematic-branch critical point, +inf when absent
  Phase label = Phase::isotropic;
  int n_roots = 0;
};

/// All sign changes of d/ds on the dense grid, refined by bisection.
std::vector<double> find_critical_points(const std::function<double(double)>& deriv,
                                         const SolverOptions& opts);

/// Minimize the expansion energy over s at fixed density. Critical points are
/// classified against s = 0; the lowest-energy candidate wins, exact ties
/// going to the isotropic branch. Throws SolverFailure when the energy
/// decreases toward the domain boundary with no interior minimum.
EquilibriumPoint solve_equilibrium_expansion(double rho, const MaterialParams& p,
                                             const BulkWellParams& w, const SolverOptions& opts);

/// Joint minimization over (s, theta) under plane strain F = diag(l, l, 1).
/// The energy is affine in cos^2(theta) at fixed s, so the exact director
/// step lands on theta in {0, pi/2}; each endpoint is solved with the 1D
/// root finder. Degenerate s* ~ 0 reports theta = 0 canonically.
EquilibriumPoint solve_equilibrium_plane(double lambda, const MaterialParams& p,
                                         const BulkWellParams& w, const SolverOptions& opts);

struct Branch {
  Protocol protocol = Protocol::expansion;
  std::vector<EquilibriumPoint> points;
  std::vector<double> discontinuities;  // control values with |delta s*| > threshold
  int warm_cold_disagreements = 0;
  int failed_points = 0;
};

/// Sweep the control (rho or lambda) over [lo, hi] with n points. Every point
/// gets an independent cold grid solve (parallelizable) plus a warm-started
/// local solve chained from the previous point; when the two disagree in
/// energy by more than the tolerance the lower one wins. Failed points are
/// recorded and skipped, not fatal.
Branch sweep(Protocol protocol, double lo, double hi, int n, const MaterialParams& p,
             const BulkWellParams& w, const SolverOptions& opts, bool parallel = true);

struct ThresholdResult {
  bool found = false;
  double rho = 0.0;                      // first isotropic->nematic switch
  std::vector<double> switch_locations;  // all label switches on the scan grid
  bool multi_switch = false;
};

/// Locate the density threshold R(A_a, chi) of the expansion protocol by
/// label bisection, to |delta rho| <= 1e-6 of the range scale. Multiple
/// switches raise the multi_switch warning and report every location.
ThresholdResult threshold_density(double rho_lo, double rho_hi, const MaterialParams& p,
                                  const BulkWellParams& w, const SolverOptions& opts,
                                  int scan_points = 64);

}  // namespace rodnet
