#include "rodnet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rodnet/constitutive.hpp"
#include "rodnet/order.hpp"
#include "rodnet/sampling.hpp"

namespace rodnet {

namespace {

constexpr double kTol = 1e-10;

// Rescale a traceless symmetric matrix so lambda_min >= floor (floor < 0).
Sym3 with_min_floor(const Sym3& q, double floor, double fill) {
  const double lmin = eig_sym(q).lambda[0];
  if (lmin >= floor) return q;
  return (fill * floor / lmin) * q;
}

template <typename Fn>
CheckResult randomized_check(const std::string& name, std::uint64_t seed, long trials,
                             bool parallel, Fn&& margin_of_trial) {
  CheckResult res;
  res.name = name;
  res.trials = trials;
  long violations = 0;
  double worst = std::numeric_limits<double>::infinity();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : violations) reduction(min : worst) \
    if (parallel)
#endif
  for (long i = 0; i < trials; ++i) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    const double m = margin_of_trial(rng);
    if (m < -kTol) ++violations;
    worst = std::min(worst, m);
  }
  res.violations = violations;
  res.worst_margin = worst;
  res.pass = violations == 0;
  return res;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerifyReport run_oracle_suite(std::uint64_t seed, long trials, bool parallel) {
  VerifyReport rep;

  rep.checks.push_back(randomized_check(
      "trace_estimate_ftlf", seed ^ 0x1ull, trials, parallel, [](Rng& rng) {
        const Sym3 l = random_spd(rng);
        const Mat3 f = random_mat(rng, 10.0);
        const FtlfCheck c = check_ftlf(l, f);
        return (c.lhs - c.rhs) / (1.0 + std::abs(c.rhs));
      }));

  rep.checks.push_back(randomized_check(
      "det_over_norm", seed ^ 0x2ull, trials, parallel, [](Rng& rng) {
        const DetOverNormCheck c = check_det_over_norm(random_spd(rng));
        return (c.lhs - c.rhs) / (1.0 + std::abs(c.rhs));
      }));

  rep.checks.push_back(randomized_check(
      "g_and_adj_g_bounds", seed ^ 0x3ull, trials, parallel, [](Rng& rng) {
        const Sym3 l = random_spd(rng, 1e-2, 1e2);
        const Sym3 l0 = random_spd(rng, 1e-2, 1e2);
        const Mat3 f = random_det_positive(rng, 2.0);
        const GBoundsCheck c = check_g_bounds(l, l0, f);
        const double m1 = (c.g_norm - c.c1_f_norm) / (1.0 + c.c1_f_norm);
        const double m2 = (c.adj_g_norm - c.c2_adj_f_norm) / (1.0 + c.c2_adj_f_norm);
        return std::min(m1, m2);
      }));

  rep.checks.push_back(randomized_check(
      "lambda_max_bound", seed ^ 0x4ull, trials, parallel, [](Rng& rng) {
        const EigResult e = eig_sym(random_traceless_bounded(rng));
        return -2.0 * e.lambda[0] - e.lambda[2];
      }));

  rep.checks.push_back(randomized_check(
      "min_eigenvalue_set_convexity", seed ^ 0x5ull, trials, parallel, [](Rng& rng) {
        const double a = rng.uniform(-1.0 / 3.0, -1e-3);
        const Sym3 q1 = with_min_floor(random_traceless_bounded(rng), a, rng.uniform(0.0, 1.0));
        const Sym3 q2 = with_min_floor(random_traceless_bounded(rng), a, rng.uniform(0.0, 1.0));
        const double w = rng.uniform(0.0, 1.0);
        const Sym3 mix = w * q1 + (1.0 - w) * q2;
        return eig_sym(mix).lambda[0] - a;
      }));

  // det L and det(Q + I/3) vanish together on the admissible boundary;
  // under L = a0 (Q + I/3) the ratio is exactly a0^3.
  {
    CheckResult res;
    res.name = "boundary_degeneracy";
    const double a0 = 3.0;
    long violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    long n = 0;
    for (int edge = 0; edge < 3; ++edge) {
      for (int path = 0; path < 100; ++path) {
        Rng rng(trial_seed(seed ^ 0x6ull, static_cast<std::uint64_t>(edge * 100 + path)));
        const Mat3 rot = haar_rotation(rng);
        const double mid = rng.uniform(-0.2, 0.4);
        double prev_detl = std::numeric_limits<double>::infinity();
        for (double eps = 1e-2; eps >= 1e-8; eps *= 1e-2) {
          double lam[3];
          lam[edge] = -1.0 / 3.0 + eps;
          lam[(edge + 1) % 3] = mid;
          lam[(edge + 2) % 3] = -lam[edge] - mid;
          if (lam[(edge + 2) % 3] < -1.0 / 3.0 || lam[(edge + 2) % 3] > 2.0 / 3.0 || mid > 2.0 / 3.0)
            continue;
          const Mat3 d = Mat3::diag(lam[0], lam[1], lam[2]);
          const Sym3 q = Sym3::from_mat(rot * d * transpose(rot));
          const Sym3 l = a0 * (q + (1.0 / 3.0) * Sym3::identity());
          const double detq = det(q + (1.0 / 3.0) * Sym3::identity());
          const double detl = det(l);
          ++n;
          const double ratio_err = std::abs(detl / detq - a0 * a0 * a0) / (a0 * a0 * a0);
          const double shrink = prev_detl - std::abs(detl);  // must decrease toward the edge
          const double m = std::min(1e-6 - ratio_err, shrink);
          if (m < -kTol) ++violations;
          worst = std::min(worst, m);
          prev_detl = std::abs(detl);
        }
      }
    }
    res.trials = n;
    res.violations = violations;
    res.worst_margin = worst;
    res.pass = violations == 0;
    res.note = "det L -> 0 with det(Q+I/3), ratio pinned at a0^3";
    rep.checks.push_back(res);
  }

  // eigenvalue-restricted estimates: lambda_min(Q) >= -1/3 + eps gives
  // lam_max(L) <= a0(1-2eps), lam_min(L0) >= a0 eps, |G| >= sqrt(eps)|F|,
  // |adj G| >= (eps/3)|adj F|.
  rep.checks.push_back(randomized_check(
      "restricted_g_estimates", seed ^ 0x7ull, trials / 10, parallel, [](Rng& rng) {
        const double a0 = 3.0;
        const double eps = rng.uniform(1e-3, 1.0 / 3.0);
        const double floor = -1.0 / 3.0 + eps;
        const Sym3 q = with_min_floor(random_traceless_bounded(rng), floor, 1.0);
        const Sym3 q0 = with_min_floor(random_traceless_bounded(rng), floor, 1.0);
        const Sym3 l = a0 * (q + (1.0 / 3.0) * Sym3::identity());
        const Sym3 l0 = a0 * (q0 + (1.0 / 3.0) * Sym3::identity());
        const Mat3 f = random_det_positive(rng, 2.0);
        const AnisoDeformation g = aniso_g_raw(l, l0, f);
        const double m1 = a0 * (1.0 - 2.0 * eps) - eig_sym(l).lambda[2];
        const double m2 = eig_sym(l0).lambda[0] - a0 * eps;
        const double m3 = frobenius(g.g) - std::sqrt(eps) * frobenius(f);
        const double m4 = frobenius(adjugate(g.g)) - (eps / 3.0) * frobenius(adjugate(f));
        return std::min(std::min(m1, m2), std::min(m3, m4));
      }));

  return rep;
}

std::vector<BulkMinimum> bulk_minima(double chi, const BulkWellParams& w, int ns, int nz,
                                     double z_lo, double z_hi) {
  const double s_lo = -0.5 + 1e-3, s_hi = 1.0 - 1e-3;
  std::vector<double> values(static_cast<std::size_t>(ns) * nz);
  const auto sv = [&](int i) { return s_lo + (s_hi - s_lo) * i / (ns - 1); };
  const auto zv = [&](int j) { return z_lo + (z_hi - z_lo) * j / (nz - 1); };
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nz; ++j)
      values[static_cast<std::size_t>(i) * nz + j] = bulk_f(sv(i), zv(j), chi, w);

  std::vector<BulkMinimum> mins;
  for (int i = 1; i + 1 < ns; ++i) {
    for (int j = 1; j + 1 < nz; ++j) {
      const double v = values[static_cast<std::size_t>(i) * nz + j];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (values[static_cast<std::size_t>(i + di) * nz + (j + dj)] <= v) {
            is_min = false;
            break;
          }
        }
      if (!is_min) continue;

      // coordinate-descent refinement on the analytic partials
      double s = sv(i), z = zv(j);
      const double hs = (s_hi - s_lo) / (ns - 1), hz = (z_hi - z_lo) / (nz - 1);
      for (int it = 0; it < 24; ++it) {
        double a = std::max(s_lo, s - 2 * hs), b = std::min(s_hi, s + 2 * hs);
        for (int k = 0; k < 60; ++k) {
          const double m = 0.5 * (a + b);
          (bulk_f_ds(m, z, chi, w) < 0.0 ? a : b) = m;
        }
        s = 0.5 * (a + b);
        a = std::max(1e-6, z - 2 * hz), b = z + 2 * hz;
        for (int k = 0; k < 60; ++k) {
          const double m = 0.5 * (a + b);
          (bulk_f_dz(s, m, chi, w) < 0.0 ? a : b) = m;
        }
        z = 0.5 * (a + b);
      }
      mins.push_back({s, z, bulk_f(s, z, chi, w)});
    }
  }
  return mins;
}

double well_depth_difference(double chi, const BulkWellParams& w) {
  const auto mins = bulk_minima(chi, w);
  double iso = std::numeric_limits<double>::quiet_NaN();
  double nem = std::numeric_limits<double>::quiet_NaN();
  for (const auto& m : mins) {
    if (m.s < 0.25) {
      if (std::isnan(iso) || m.value < iso) iso = m.value;
    } else {
      if (std::isnan(nem) || m.value < nem) nem = m.value;
    }
  }
  return iso - nem;  // NaN if either missing
}

double locate_chi_l(const BulkWellParams& w, double chi_lo, double chi_hi, double tol) {
  double flo = well_depth_difference(chi_lo, w);
  if (!(flo < 0.0)) return std::numeric_limits<double>::quiet_NaN();
  double a = chi_lo, b = chi_hi;
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    const double fm = well_depth_difference(mid, w);
    if (std::isnan(fm)) return std::numeric_limits<double>::quiet_NaN();
    if (fm < 0.0)
      a = mid;
    else
      b = mid;
  }
  return 0.5 * (a + b);
}

VerifyReport run_axiom_checks(const BulkWellParams& wells, const std::vector<double>& chi_set) {
  VerifyReport rep;
  wells.validate();

  // well-count progression: two wells at small chi collapsing to a single
  // nematic minimum at large chi
  {
    CheckResult res;
    res.name = "well_progression";
    res.trials = static_cast<long>(chi_set.size());
    bool ok = true;
    int prev = 3;
    std::ostringstream note;
    for (double chi : chi_set) {
      const auto mins = bulk_minima(chi, wells);
      const int n = static_cast<int>(mins.size());
      note << "chi=" << chi << ":" << n << " ";
      if (n < 1 || n > 2 || n > prev) ok = false;
      prev = n;
    }
    const auto first = bulk_minima(chi_set.front(), wells);
    const auto last = bulk_minima(chi_set.back(), wells);
    if (first.size() != 2) ok = false;
    if (last.size() != 1 || last.front().s < 0.3) ok = false;
    res.pass = ok;
    res.violations = ok ? 0 : 1;
    res.note = note.str();
    rep.checks.push_back(res);
  }

  // depth crossover chi_l: isotropic minimum lower below, nematic lower above
  {
    CheckResult res;
    res.name = "depth_crossover_chi_l";
    const double chi_l = locate_chi_l(wells);
    std::ostringstream note;
    note << "chi_l=" << chi_l;
    res.note = note.str();
    res.trials = 1;
    res.pass = std::isfinite(chi_l) && well_depth_difference(chi_l - 0.05, wells) < 0.0 &&
               well_depth_difference(chi_l + 0.05, wells) > 0.0;
    res.violations = res.pass ? 0 : 1;
    rep.checks.push_back(res);
  }

  // blow-up at the singular boundaries: monotone divergence over decades at
  // every chi, and the 1e3 magnitude within 1e-4 of each boundary attained
  // across the chi set (the chi-weighted well terms dominate at large chi)
  {
    CheckResult res;
    res.name = "boundary_blowup";
    bool diverges = true;
    double best_s_lo = -1e300, best_s_hi = -1e300, best_z0 = -1e300, best_zinf = -1e300;
    for (double chi : chi_set) {
      double prev_lo = -1e300, prev_hi = -1e300, prev_z = -1e300, prev_zi = -1e300;
      for (double d = 1e-1; d >= 1e-4 / 2; d *= 0.1) {
        const double f_lo = bulk_f(-0.5 + d, 1.0, chi, wells);
        const double f_hi = bulk_f(1.0 - d, 1.0, chi, wells);
        const double f_z0 = bulk_f(0.25, d, chi, wells);
        const double f_zi = bulk_f(0.25, 1.0 / d, chi, wells);
        if (!(f_lo > prev_lo && f_hi > prev_hi && f_z0 > prev_z && f_zi > prev_zi))
          diverges = false;
        prev_lo = f_lo;
        prev_hi = f_hi;
        prev_z = f_z0;
        prev_zi = f_zi;
      }
      best_s_lo = std::max(best_s_lo, bulk_f(-0.5 + 1e-4, 1.0, chi, wells));
      best_s_hi = std::max(best_s_hi, bulk_f(1.0 - 1e-4, 1.0, chi, wells));
      best_z0 = std::max(best_z0, bulk_f(0.25, 1e-4, chi, wells));
      best_zinf = std::max(best_zinf, bulk_f(0.25, 1e4, chi, wells));
    }
    const bool magnitude = best_s_lo > 1e3 && best_s_hi > 1e3 && best_z0 > 1e3 && best_zinf > 1e3;
    res.trials = static_cast<long>(chi_set.size()) * 4;
    res.pass = diverges && magnitude;
    res.violations = res.pass ? 0 : 1;
    std::ostringstream note;
    note << "max f near boundaries: " << best_s_lo << " " << best_s_hi << " " << best_z0 << " "
         << best_zinf;
    res.note = note.str();
    rep.checks.push_back(res);
  }

  return rep;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  trials=" << c.trials
       << " violations=" << c.violations;
    if (c.trials > 0 && c.note.empty()) os << " worst_margin=" << c.worst_margin;
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace rodnet
