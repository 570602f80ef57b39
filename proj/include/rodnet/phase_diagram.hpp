#pragma once

#include <string>
#include <vector>

#include "rodnet/equilibrium.hpp"

namespace rodnet {

/// Discrete grid over the density-aspect-ratio plane.
struct GridSpec {
  double rho_min = 0.05, rho_max = 3.0;
  double aa_min = 0.01, aa_max = 100.0;
  int rho_steps = 200, aa_steps = 200;

  bool operator==(const GridSpec&) const = default;
  void validate() const;
  double rho_at(int i) const {
    return rho_steps == 1 ? rho_min : rho_min + (rho_max - rho_min) * i / (rho_steps - 1);
  }
  double aa_at(int j) const {
    return aa_steps == 1 ? aa_min : aa_min + (aa_max - aa_min) * j / (aa_steps - 1);
  }
};

enum class CellState { isotropic, nematic, failed };

struct Cell {
  CellState state = CellState::failed;
  double s_star = 0.0;
  double energy_gap = 0.0;  // e_iso - e_nema; positive in nematic cells
};

struct PhaseDiagram {
  GridSpec spec;
  Protocol protocol = Protocol::plane_strain;
  double chi = 1.0;
  BulkWellParams wells;
  std::vector<Cell> cells;  // row-major: index = j * rho_steps + i

  const Cell& at(int i, int j) const { return cells[static_cast<std::size_t>(j) * spec.rho_steps + i]; }
  int count(CellState s) const;
};

/// Solve the equilibrium problem at every grid point, recomputing
/// nu = RT A_a rho0 per row, and label cells by the branch-energy
/// comparison. Per-cell solver failures become `failed` cells.
/// Serial reference implementation; bit-identical to the parallel kernel.
PhaseDiagram build_phase_diagram_serial(const GridSpec& spec, double chi,
                                        const MaterialParams& base, const BulkWellParams& w,
                                        Protocol protocol, const SolverOptions& opts);

/// OpenMP-parallel version of the same computation (cells are independent).
PhaseDiagram build_phase_diagram(const GridSpec& spec, double chi, const MaterialParams& base,
                                 const BulkWellParams& w, Protocol protocol,
                                 const SolverOptions& opts);

/// One plane-strain branch per aspect ratio, swept in lambda.
std::vector<Branch> order_parameter_curves(double chi, const std::vector<double>& aspect_ratios,
                                           double lambda_lo, double lambda_hi, int n,
                                           const MaterialParams& base, const BulkWellParams& w,
                                           const SolverOptions& opts, bool parallel = true);

struct StressCurve {
  std::vector<double> lambda;
  std::vector<double> rho;
  std::vector<double> s_star;
  std::vector<double> pxx;           // d/dF_xx of the optimal-value density
  std::vector<double> pyy;           // d/dF_yy companion, used by work-energy checks
  std::vector<double> energy;        // optimal-value density W*(lambda)
  std::vector<int> jump_flagged;     // indices recomputed one-sided near a branch jump
  std::vector<int> nonmonotone_at;   // indices where delta Pxx changes sign
};

/// First Piola-Kirchhoff stress component P_xx(lambda) along the plane-strain
/// path, as a central finite difference of the min-over-(s, theta) energy
/// density with step h = fd_step * lambda (envelope theorem). Points whose FD
/// stencil straddles a branch jump (|delta s*| > jump threshold across the
/// stencil) are recomputed one-sided from the side matching the center branch.
StressCurve stress_curve(double chi, double aspect_ratio, double lambda_lo, double lambda_hi,
                         int n, const MaterialParams& base, const BulkWellParams& w,
                         const SolverOptions& opts, double fd_step = 1e-5, bool parallel = true);

}  // namespace rodnet
