#include "rodnet/phase_diagram.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rodnet {

void GridSpec::validate() const {
  if (!(rho_min > 0.0 && rho_max >= rho_min)) throw DomainError("density range must be positive");
  if (!(aa_min > 0.0 && aa_max >= aa_min)) throw DomainError("aspect-ratio range must be positive");
  if (!(rho_steps >= 1 && aa_steps >= 1)) throw DomainError("grid steps must be at least 1");
  if (rho_steps > 1 && !((rho_max - rho_min) / (rho_steps - 1) > 0.0))
    throw DomainError("density step must be positive and smaller than the range");
  if (aa_steps > 1 && !((aa_max - aa_min) / (aa_steps - 1) > 0.0))
    throw DomainError("aspect-ratio step must be positive and smaller than the range");
}

int PhaseDiagram::count(CellState s) const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                        [s](const Cell& c) { return c.state == s; }));
}

namespace {

Cell solve_cell(const GridSpec& spec, int i, int j, double chi, MaterialParams p,
                const BulkWellParams& w, Protocol protocol, const SolverOptions& opts) {
  p.chi = chi;
  p.aspect_ratio = spec.aa_at(j);
  const double rho = spec.rho_at(i);
  Cell cell;
  try {
    EquilibriumPoint pt;
    if (protocol == Protocol::plane_strain) {
      const double lambda = std::sqrt(p.rho0 / rho);
      pt = solve_equilibrium_plane(lambda, p, w, opts);
    } else {
      pt = solve_equilibrium_expansion(rho, p, w, opts);
    }
    cell.state = pt.label == Phase::nematic ? CellState::nematic : CellState::isotropic;
    cell.s_star = pt.s_star;
    cell.energy_gap = pt.e_iso - pt.e_nema;
  } catch (const SolverFailure&) {
    cell.state = CellState::failed;
  }
  return cell;
}

PhaseDiagram make_diagram(const GridSpec& spec, double chi, const BulkWellParams& w,
                          Protocol protocol) {
  spec.validate();
  w.validate();
  PhaseDiagram d;
  d.spec = spec;
  d.protocol = protocol;
  d.chi = chi;
  d.wells = w;
  d.cells.resize(static_cast<std::size_t>(spec.rho_steps) * spec.aa_steps);
  return d;
}

}  // namespace

PhaseDiagram build_phase_diagram_serial(const GridSpec& spec, double chi,
                                        const MaterialParams& base, const BulkWellParams& w,
                                        Protocol protocol, const SolverOptions& opts) {
  PhaseDiagram d = make_diagram(spec, chi, w, protocol);
  for (int j = 0; j < spec.aa_steps; ++j)
    for (int i = 0; i < spec.rho_steps; ++i)
      d.cells[static_cast<std::size_t>(j) * spec.rho_steps + i] =
          solve_cell(spec, i, j, chi, base, w, protocol, opts);
  return d;
}

PhaseDiagram build_phase_diagram(const GridSpec& spec, double chi, const MaterialParams& base,
                                 const BulkWellParams& w, Protocol protocol,
                                 const SolverOptions& opts) {
  PhaseDiagram d = make_diagram(spec, chi, w, protocol);
  const int nr = spec.rho_steps, na = spec.aa_steps;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic, 8)
#endif
  for (int j = 0; j < na; ++j)
    for (int i = 0; i < nr; ++i)
      d.cells[static_cast<std::size_t>(j) * nr + i] =
          solve_cell(spec, i, j, chi, base, w, protocol, opts);
  return d;
}

std::vector<Branch> order_parameter_curves(double chi, const std::vector<double>& aspect_ratios,
                                           double lambda_lo, double lambda_hi, int n,
                                           const MaterialParams& base, const BulkWellParams& w,
                                           const SolverOptions& opts, bool parallel) {
  std::vector<Branch> out;
  out.reserve(aspect_ratios.size());
  for (double aa : aspect_ratios) {
    MaterialParams p = base;
    p.chi = chi;
    p.aspect_ratio = aa;
    out.push_back(sweep(Protocol::plane_strain, lambda_lo, lambda_hi, n, p, w, opts, parallel));
  }
  return out;
}

namespace {

// Min-over-(s, theta) plane energy at F = diag(fxx, fyy, 1); the director
// step is exact (energy affine in cos^2 theta).
struct PlaneOpt {
  double energy;
  double s;
};

PlaneOpt plane_optimal(double fxx, double fyy, const MaterialParams& p, const BulkWellParams& w,
                       const SolverOptions& opts) {
  PlaneOpt best{std::numeric_limits<double>::infinity(), 0.0};
  for (double c2 : {1.0, 0.0}) {
    const auto deriv = [&](double s) { return plane_energy_ds(s, c2, fxx, fyy, p, w); };
    for (double r : find_critical_points(deriv, opts)) {
      const double e = plane_energy(r, c2, fxx, fyy, p, w);
      if (e < best.energy) best = {e, r};
    }
  }
  const double e0 = plane_energy(0.0, 1.0, fxx, fyy, p, w);
  if (e0 < best.energy) best = {e0, 0.0};
  return best;
}

}  // namespace

StressCurve stress_curve(double chi, double aspect_ratio, double lambda_lo, double lambda_hi,
                         int n, const MaterialParams& base, const BulkWellParams& w,
                         const SolverOptions& opts, double fd_step, bool parallel) {
  if (!(n >= 2)) throw DomainError("stress curve needs at least two points");
  MaterialParams p = base;
  p.chi = chi;
  p.aspect_ratio = aspect_ratio;

  StressCurve sc;
  sc.lambda.resize(n);
  sc.rho.resize(n);
  sc.s_star.resize(n);
  sc.pxx.resize(n);
  sc.pyy.resize(n);
  sc.energy.resize(n);
  std::vector<char> flagged(n, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < n; ++i) {
    const double lam = lambda_lo + (lambda_hi - lambda_lo) * i / (n - 1);
    const double h = fd_step * lam;
    const PlaneOpt c = plane_optimal(lam, lam, p, w, opts);
    const PlaneOpt xp = plane_optimal(lam + h, lam, p, w, opts);
    const PlaneOpt xm = plane_optimal(lam - h, lam, p, w, opts);
    const PlaneOpt yp = plane_optimal(lam, lam + h, p, w, opts);
    const PlaneOpt ym = plane_optimal(lam, lam - h, p, w, opts);

    double pxx = (xp.energy - xm.energy) / (2.0 * h);
    double pyy = (yp.energy - ym.energy) / (2.0 * h);
    // branch jump inside the stencil: fall back to the one-sided difference
    // whose endpoint stays on the center branch
    if (std::abs(xp.s - xm.s) > opts.jump_threshold) {
      flagged[i] = 1;
      pxx = (std::abs(xp.s - c.s) <= std::abs(xm.s - c.s)) ? (xp.energy - c.energy) / h
                                                           : (c.energy - xm.energy) / h;
    }
    if (std::abs(yp.s - ym.s) > opts.jump_threshold) {
      flagged[i] = 1;
      pyy = (std::abs(yp.s - c.s) <= std::abs(ym.s - c.s)) ? (yp.energy - c.energy) / h
                                                           : (c.energy - ym.energy) / h;
    }
    sc.lambda[i] = lam;
    sc.rho[i] = p.rho0 / (lam * lam);
    sc.s_star[i] = c.s;
    sc.pxx[i] = pxx;
    sc.pyy[i] = pyy;
    sc.energy[i] = c.energy;
  }

  for (int i = 0; i < n; ++i)
    if (flagged[i]) sc.jump_flagged.push_back(i);
  for (int i = 0; i + 2 < n; ++i) {
    const double d0 = sc.pxx[i + 1] - sc.pxx[i];
    const double d1 = sc.pxx[i + 2] - sc.pxx[i + 1];
    if (d0 * d1 < 0.0) sc.nonmonotone_at.push_back(i + 1);
  }
  return sc;
}

}  // namespace rodnet
