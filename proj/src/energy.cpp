#include "rodnet/energy.hpp"

#include <cmath>
#include <string>

namespace rodnet {

void BulkWellParams::validate() const {
  if (!(eta_iso > 0.0 && eta_nem > 0.0)) throw DomainError("well widths eta must be positive");
  if (!(z_iso > 0.0 && z_nem > 0.0)) throw DomainError("well positions z must be positive");
  if (!(s_iso > -0.5 && s_iso < 1.0 && s_nem > -0.5 && s_nem < 1.0))
    throw DomainError("well positions s must lie in (-1/2, 1)");
}

void MaterialParams::validate() const {
  if (!(rho0 > 0.0 && sigma_x0 > 0.0 && aspect_ratio > 0.0 && chi > 0.0 && rt > 0.0 && a0 > 0.0))
    throw DomainError("material parameters must be positive");
}

double elastic_alpha(double s, const MaterialParams& p) {
  if (p.alpha_mode == AlphaMode::constant) return p.alpha_const;
  return 3.0 * s / (1.0 + 2.0 * s);
}

double elastic_alpha_ds(double s, const MaterialParams& p) {
  if (p.alpha_mode == AlphaMode::constant) return 0.0;
  const double d = 1.0 + 2.0 * s;
  return 3.0 / (d * d);
}

SpheroidAxes spheroid_axes(double s, const MaterialParams& p) {
  SpheroidAxes ax;
  double r;
  if (p.alpha_mode == AlphaMode::derived) {
    r = (1.0 - s) / (1.0 + 2.0 * s);
  } else {
    r = 1.0 - p.alpha_const;
  }
  if (!(r > 0.0)) throw DomainError("anisotropy ratio r must be positive");
  // l_par + 2 l_perp = a0 with l_perp = r l_par
  ax.l_par = p.a0 / (1.0 + 2.0 * r);
  ax.l_perp = r * ax.l_par;
  return ax;
}

void LdGCoefficients::validate() const {
  if (!(b > 0.0 && c > 0.0 && alpha_t > 0.0))
    throw DomainError("Landau-de Gennes coefficients b, c, alpha_t must be positive");
}

double ldg_poly(const OrderTensor& q, const LdGCoefficients& c) {
  const Mat3 m = q.tensor().to_mat();
  const Mat3 m2 = m * m;
  const double tr2 = trace(m2);
  const double tr3 = trace(m2 * m);
  return c.a() * tr2 - (c.b / 3.0) * tr3 + 0.25 * c.c * tr2 * tr2;
}

double ericksen_energy(double grad_s_sq, double s, double grad_n_sq, double k, double nu,
                       double bulk_value) {
  if (!(k >= 0.0)) throw DomainError("nematic elastic constant k must be nonnegative");
  return k * (grad_s_sq + s * s * grad_n_sq) + nu * bulk_value;
}

namespace {
void check_bulk_domain(double s, double z) {
  if (!(z > 0.0)) throw DomainError("bulk potential requires z = det F > 0");
  if (!(s > -0.5 && s < 1.0))
    throw DomainError("bulk potential requires s in (-1/2, 1), got " + std::to_string(s));
}
}  // namespace

BulkParts bulk_parts(double s, double z, double chi, const BulkWellParams& w) {
  check_bulk_domain(s, z);
  BulkParts out;
  const double dsi = s - w.s_iso, dzi = z - w.z_iso;
  const double dsn = s - w.s_nem, dzn = z - w.z_nem;
  const double di = dsi * dsi + dzi * dzi;
  const double dn = dsn * dsn + dzn * dzn;
  out.w_iso = std::atan(w.eta_iso * di) + di;
  out.w_nem = std::atan(w.eta_nem * dn);
  out.w_gr = -(std::log(z) + std::log((1.0 - s) * (s + 0.5))) + z * z;
  out.f = out.w_iso + chi * out.w_nem + out.w_gr;
  return out;
}

double bulk_f(double s, double z, double chi, const BulkWellParams& w) {
  return bulk_parts(s, z, chi, w).f;
}

double bulk_f_ds(double s, double z, double chi, const BulkWellParams& w) {
  check_bulk_domain(s, z);
  const double dsi = s - w.s_iso, dzi = z - w.z_iso;
  const double dsn = s - w.s_nem, dzn = z - w.z_nem;
  const double di = dsi * dsi + dzi * dzi;
  const double dn = dsn * dsn + dzn * dzn;
  const double ai = w.eta_iso / (1.0 + w.eta_iso * w.eta_iso * di * di);
  const double an = w.eta_nem / (1.0 + w.eta_nem * w.eta_nem * dn * dn);
  const double d_iso = (ai + 1.0) * 2.0 * dsi;
  const double d_nem = an * 2.0 * dsn;
  const double d_gr = 1.0 / (1.0 - s) - 1.0 / (0.5 + s);
  return d_iso + chi * d_nem + d_gr;
}

double bulk_f_dz(double s, double z, double chi, const BulkWellParams& w) {
  check_bulk_domain(s, z);
  const double dsi = s - w.s_iso, dzi = z - w.z_iso;
  const double dsn = s - w.s_nem, dzn = z - w.z_nem;
  const double di = dsi * dsi + dzi * dzi;
  const double dn = dsn * dsn + dzn * dzn;
  const double ai = w.eta_iso / (1.0 + w.eta_iso * w.eta_iso * di * di);
  const double an = w.eta_nem / (1.0 + w.eta_nem * w.eta_nem * dn * dn);
  return (ai + 1.0) * 2.0 * dzi + chi * an * 2.0 * dzn - 1.0 / z + 2.0 * z;
}

double bulk_f_rho(double s, double rho, const MaterialParams& p, const BulkWellParams& w) {
  if (!(rho > 0.0)) throw DomainError("density must be positive");
  return bulk_f(s, p.rho0 / rho, p.chi, w);
}

double trace_energy(const AnisoDeformation& g, double mu) {
  const double n = frobenius(g.g);
  return 0.5 * mu * n * n;
}

double btw_energy(const Mat3& f, double s, Vec3 n, const BtwReference& ref,
                  const MaterialParams& p) {
  if (!(s > -0.5 && s < 1.0)) throw DomainError("order parameter s outside (-1/2, 1)");
  if (std::abs(norm(n) - 1.0) > 1e-12) throw DomainError("director must be a unit vector");
  if (!(ref.r0 > 0.0)) throw DomainError("reference anisotropy r0 must be positive");
  const SpheroidAxes ax = spheroid_axes(s, p);
  const double r = ax.r();
  if (!(r > 0.0)) throw DomainError("anisotropy ratio r must be positive");
  const double fn2 = [&] {
    const Vec3 ftn = transpose(f) * n;
    return dot(ftn, ftn);
  }();
  const double f2 = frobenius(f) * frobenius(f);
  double w = f2 - (1.0 - r) * fn2;
  if (ref.n0) {
    const Vec3 n0 = *ref.n0;
    if (std::abs(norm(n0) - 1.0) > 1e-12)
      throw DomainError("crosslinking director must be a unit vector");
    const Vec3 fn0 = f * n0;
    const double ftn_dot_n0 = dot(transpose(f) * n, n0);
    w += ((1.0 - ref.r0) / ref.r0) * (dot(fn0, fn0) - (1.0 - r) * ftn_dot_n0 * ftn_dot_n0);
  }
  return 0.5 * p.mu() * (ref.l_perp0 / ax.l_perp) * w;
}

double total_energy_expansion(double s, double rho, const MaterialParams& p,
                              const BulkWellParams& w) {
  if (!(rho > 0.0)) throw DomainError("density must be positive");
  const double z = p.rho0 / rho;  // lambda^3
  const double alpha = elastic_alpha(s, p);
  return z * (p.mu() * (1.0 - alpha * s * s) + p.nu() * bulk_f(s, z, p.chi, w));
}

double total_energy_expansion_ds(double s, double rho, const MaterialParams& p,
                                 const BulkWellParams& w) {
  if (!(rho > 0.0)) throw DomainError("density must be positive");
  const double z = p.rho0 / rho;
  const double alpha = elastic_alpha(s, p);
  const double dalpha = elastic_alpha_ds(s, p);
  const double d_elastic = -p.mu() * (dalpha * s * s + 2.0 * alpha * s);
  return z * (d_elastic + p.nu() * bulk_f_ds(s, z, p.chi, w));
}

namespace {
// Reduced BTW density for F = diag(fxx, fyy, 1) and n = (cos t, 0, sin t):
// (mu/2) (l_perp0/l_perp) (|F|^2 - alpha(s) |F^T n|^2), l_perp0 = a0/3.
double plane_btw(double s, double c2, double fxx, double fyy, const MaterialParams& p) {
  const double f2 = fxx * fxx + fyy * fyy + 1.0;
  const double m = fxx * fxx * c2 + (1.0 - c2);  // |F^T n|^2
  const SpheroidAxes ax = spheroid_axes(s, p);
  const double lperp0 = p.a0 / 3.0;
  const double alpha = 1.0 - ax.r();
  return 0.5 * p.mu() * (lperp0 / ax.l_perp) * (f2 - alpha * m);
}
}  // namespace

double plane_energy(double s, double c2, double fxx, double fyy, const MaterialParams& p,
                    const BulkWellParams& w) {
  const double z = fxx * fyy;
  return z * (plane_btw(s, c2, fxx, fyy, p) + p.nu() * bulk_f(s, z, p.chi, w));
}

double plane_energy_ds(double s, double c2, double fxx, double fyy, const MaterialParams& p,
                       const BulkWellParams& w) {
  const double z = fxx * fyy;
  const double f2 = fxx * fxx + fyy * fyy + 1.0;
  const double m = fxx * fxx * c2 + (1.0 - c2);
  double d_btw;
  if (p.alpha_mode == AlphaMode::derived) {
    // l_perp0/l_perp = 1/(1-s); alpha = 3s/(1+2s)
    const double one_m = 1.0 - s;
    const double one_p2 = 1.0 + 2.0 * s;
    d_btw = 0.5 * p.mu() *
            (f2 / (one_m * one_m) - m * 3.0 * (1.0 + 2.0 * s * s) / (one_m * one_m * one_p2 * one_p2));
  } else {
    // axes independent of s in constant mode
    d_btw = 0.0;
  }
  return z * (d_btw + p.nu() * bulk_f_ds(s, z, p.chi, w));
}

double total_energy_plane_strain(double s, double theta, double lambda, const MaterialParams& p,
                                 const BulkWellParams& w) {
  if (!(lambda > 0.0)) throw DomainError("stretch must be positive");
  const double c = std::cos(theta);
  return plane_energy(s, c * c, lambda, lambda, p, w);
}

}  // namespace rodnet
