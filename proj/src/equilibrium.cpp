#include "rodnet/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rodnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double refine_root(const std::function<double(double)>& deriv, double lo, double hi, double flo,
                   double tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = deriv(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Candidate {
  double s = 0.0;
  double c2 = 1.0;  // cos^2 theta (plane strain only)
  double energy = 0.0;
  bool is_root = false;
};

// Shared branch classification: candidates below s_split form the isotropic
// branch (s = 0 is always among them), the rest the nematic one. Lowest
// energy wins; ties within tie_tol go to the isotropic branch.
EquilibriumPoint assemble(const std::vector<Candidate>& cands, int n_roots,
                          const SolverOptions& opts) {
  EquilibriumPoint pt;
  pt.n_roots = n_roots;
  pt.e_iso = kInf;
  pt.e_nema = kInf;
  const Candidate* best_iso = nullptr;
  const Candidate* best_nema = nullptr;
  for (const auto& c : cands) {
    if (c.s < opts.s_split) {
      if (c.energy < pt.e_iso) {
        pt.e_iso = c.energy;
        best_iso = &c;
      }
    } else if (c.energy < pt.e_nema) {
      pt.e_nema = c.energy;
      best_nema = &c;
    }
  }
  const bool nematic = best_nema && pt.e_nema < pt.e_iso - opts.tie_tol;
  pt.label = nematic ? Phase::nematic : Phase::isotropic;
  const Candidate* best = nematic ? best_nema : best_iso;
  pt.s_star = best->s;
  pt.energy = best->energy;
  pt.theta_star = (std::abs(best->s) < opts.near_zero_s) ? 0.0 : std::acos(std::sqrt(best->c2));
  return pt;
}

void check_boundary_divergence(const std::function<double(double)>& energy,
                               const std::function<double(double)>& deriv, double best_energy,
                               const SolverOptions& opts) {
  const double lo = -0.5 + opts.s_margin;
  const double hi = 1.0 - opts.s_margin;
  const double edge = std::min(energy(lo), energy(hi));
  if (edge < best_energy - opts.tie_tol) {
    std::vector<double> gs, gd;
    const int n = 64;
    for (int i = 0; i <= n; ++i) {
      const double s = lo + (hi - lo) * i / n;
      gs.push_back(s);
      gd.push_back(deriv(s));
    }
    throw SolverFailure("energy decreases toward the order-parameter boundary; no interior minimum",
                        std::move(gs), std::move(gd));
  }
}

}  // namespace

std::vector<double> find_critical_points(const std::function<double(double)>& deriv,
                                         const SolverOptions& opts) {
  const double lo = -0.5 + opts.s_margin;
  const double hi = 1.0 - opts.s_margin;
  const int n = opts.s_points;
  std::vector<double> roots;
  const auto push = [&](double r) {
    if (roots.empty() || std::abs(r - roots.back()) > opts.root_tol) roots.push_back(r);
  };
  double prev_s = lo;
  double prev_f = deriv(lo);
  for (int i = 1; i <= n; ++i) {
    const double s = lo + (hi - lo) * i / n;
    const double f = deriv(s);
    if (prev_f == 0.0) {
      push(prev_s);
    } else if ((prev_f < 0.0) != (f < 0.0)) {
      push(refine_root(deriv, prev_s, s, prev_f, opts.root_tol));
    }
    prev_s = s;
    prev_f = f;
  }
  if (prev_f == 0.0) push(prev_s);
  return roots;
}

EquilibriumPoint solve_equilibrium_expansion(double rho, const MaterialParams& p,
                                             const BulkWellParams& w, const SolverOptions& opts) {
  if (!(rho > 0.0)) throw DomainError("density must be positive");
  const auto deriv = [&](double s) { return total_energy_expansion_ds(s, rho, p, w); };
  const auto energy = [&](double s) { return total_energy_expansion(s, rho, p, w); };

  const std::vector<double> roots = find_critical_points(deriv, opts);
  std::vector<Candidate> cands;
  for (double r : roots) cands.push_back({r, 1.0, energy(r), true});
  cands.push_back({0.0, 1.0, energy(0.0), false});

  double best = kInf;
  for (const auto& c : cands) best = std::min(best, c.energy);
  check_boundary_divergence(energy, deriv, best, opts);

  EquilibriumPoint pt = assemble(cands, static_cast<int>(roots.size()), opts);
  pt.control = rho;
  pt.rho = rho;
  pt.lambda = std::cbrt(p.rho0 / rho);
  pt.theta_star = 0.0;
  return pt;
}

EquilibriumPoint solve_equilibrium_plane(double lambda, const MaterialParams& p,
                                         const BulkWellParams& w, const SolverOptions& opts) {
  if (!(lambda > 0.0)) throw DomainError("stretch must be positive");
  std::vector<Candidate> cands;
  int n_roots = 0;
  double best = kInf;
  for (double c2 : {1.0, 0.0}) {
    const auto deriv = [&](double s) { return plane_energy_ds(s, c2, lambda, lambda, p, w); };
    const auto energy = [&](double s) { return plane_energy(s, c2, lambda, lambda, p, w); };
    const std::vector<double> roots = find_critical_points(deriv, opts);
    n_roots += static_cast<int>(roots.size());
    for (double r : roots) cands.push_back({r, c2, energy(r), true});
    if (c2 == 1.0) cands.push_back({0.0, c2, energy(0.0), false});
    for (const auto& c : cands) best = std::min(best, c.energy);
    check_boundary_divergence(energy, deriv, best, opts);
  }
  EquilibriumPoint pt = assemble(cands, n_roots, opts);
  pt.control = lambda;
  pt.lambda = lambda;
  pt.rho = p.rho0 / (lambda * lambda);
  return pt;
}

namespace {

EquilibriumPoint solve_point(Protocol protocol, double control, const MaterialParams& p,
                             const BulkWellParams& w, const SolverOptions& opts) {
  return protocol == Protocol::expansion ? solve_equilibrium_expansion(control, p, w, opts)
                                         : solve_equilibrium_plane(control, p, w, opts);
}

// Local re-solve around a previous minimizer: same candidate assembly, but
// the root search is restricted to a window around the warm start.
EquilibriumPoint solve_point_warm(Protocol protocol, double control, double s_prev,
                                  const MaterialParams& p, const BulkWellParams& w,
                                  const SolverOptions& opts) {
  SolverOptions local = opts;
  local.s_points = 128;
  const double lo = std::max(-0.5 + opts.s_margin, s_prev - opts.warm_window);
  const double hi = std::min(1.0 - opts.s_margin, s_prev + opts.warm_window);

  std::vector<Candidate> cands;
  int n_roots = 0;
  const auto scan = [&](const std::function<double(double)>& deriv,
                        const std::function<double(double)>& energy, double c2) {
    double prev_s = lo, prev_f = deriv(lo);
    for (int i = 1; i <= local.s_points; ++i) {
      const double s = lo + (hi - lo) * i / local.s_points;
      const double f = deriv(s);
      if ((prev_f < 0.0) != (f < 0.0)) {
        const double r = refine_root(deriv, prev_s, s, prev_f, opts.root_tol);
        cands.push_back({r, c2, energy(r), true});
        ++n_roots;
      }
      prev_s = s;
      prev_f = f;
    }
  };
  if (protocol == Protocol::expansion) {
    scan([&](double s) { return total_energy_expansion_ds(s, control, p, w); },
         [&](double s) { return total_energy_expansion(s, control, p, w); }, 1.0);
    cands.push_back({0.0, 1.0, total_energy_expansion(0.0, control, p, w), false});
  } else {
    for (double c2 : {1.0, 0.0}) {
      scan([&](double s) { return plane_energy_ds(s, c2, control, control, p, w); },
           [&](double s) { return plane_energy(s, c2, control, control, p, w); }, c2);
    }
    cands.push_back({0.0, 1.0, plane_energy(0.0, 1.0, control, control, p, w), false});
  }
  EquilibriumPoint pt = assemble(cands, n_roots, opts);
  pt.control = control;
  if (protocol == Protocol::expansion) {
    pt.rho = control;
    pt.lambda = std::cbrt(p.rho0 / control);
  } else {
    pt.lambda = control;
    pt.rho = p.rho0 / (control * control);
  }
  return pt;
}

}  // namespace

Branch sweep(Protocol protocol, double lo, double hi, int n, const MaterialParams& p,
             const BulkWellParams& w, const SolverOptions& opts, bool parallel) {
  if (!(n >= 2)) throw DomainError("sweep needs at least two points");
  if (!(lo > 0.0 && hi >= lo)) throw DomainError("sweep range must be positive");
  Branch br;
  br.protocol = protocol;
  br.points.resize(n);
  std::vector<char> ok(n, 0);

  // cold pass: independent per-point grid solves
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < n; ++i) {
    const double c = lo + (hi - lo) * i / (n - 1);
    try {
      br.points[i] = solve_point(protocol, c, p, w, opts);
      ok[i] = 1;
    } catch (const SolverFailure&) {
      br.points[i] = EquilibriumPoint{};
      br.points[i].control = c;
    }
  }

  // warm pass: sequential chain; the lower energy wins on disagreement
  for (int i = 1; i < n; ++i) {
    if (!ok[i] || !ok[i - 1]) continue;
    const double c = lo + (hi - lo) * i / (n - 1);
    EquilibriumPoint warm = solve_point_warm(protocol, c, br.points[i - 1].s_star, p, w, opts);
    if (warm.energy < br.points[i].energy - opts.energy_disagree_tol) {
      br.points[i] = warm;
      ++br.warm_cold_disagreements;
    }
  }

  for (int i = 0; i < n; ++i)
    if (!ok[i]) ++br.failed_points;
  for (int i = 1; i < n; ++i) {
    if (!ok[i] || !ok[i - 1]) continue;
    if (std::abs(br.points[i].s_star - br.points[i - 1].s_star) > opts.jump_threshold)
      br.discontinuities.push_back(br.points[i].control);
  }
  return br;
}

ThresholdResult threshold_density(double rho_lo, double rho_hi, const MaterialParams& p,
                                  const BulkWellParams& w, const SolverOptions& opts,
                                  int scan_points) {
  if (!(rho_lo > 0.0 && rho_hi > rho_lo)) throw DomainError("threshold range must be positive");
  ThresholdResult res;
  const auto label_at = [&](double rho) {
    return solve_equilibrium_expansion(rho, p, w, opts).label;
  };
  std::vector<Phase> labels(scan_points);
  std::vector<double> rhos(scan_points);
  for (int i = 0; i < scan_points; ++i) {
    rhos[i] = rho_lo + (rho_hi - rho_lo) * i / (scan_points - 1);
    labels[i] = label_at(rhos[i]);
  }
  for (int i = 0; i + 1 < scan_points; ++i)
    if (labels[i] != labels[i + 1]) res.switch_locations.push_back(0.5 * (rhos[i] + rhos[i + 1]));
  if (res.switch_locations.empty()) return res;
  res.multi_switch = res.switch_locations.size() > 1;

  // bisect the first switch
  int i0 = 0;
  while (labels[i0] == labels[i0 + 1]) ++i0;
  double a = rhos[i0], b = rhos[i0 + 1];
  const Phase la = labels[i0];
  const double tol = 1e-6 * rho_hi;
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (label_at(mid) == la)
      a = mid;
    else
      b = mid;
  }
  res.found = true;
  res.rho = 0.5 * (a + b);
  res.switch_locations[0] = res.rho;
  return res;
}

}  // namespace rodnet
