#pragma once

#include <optional>

#include "rodnet/constitutive.hpp"
#include "rodnet/errors.hpp"
#include "rodnet/mat3.hpp"
#include "rodnet/order.hpp"

namespace rodnet {

/// Well placement for the constructed bulk potential f(s, z; chi).
/// (s_iso, z_iso) carries quadratic growth plus an arctan dimple; the
/// nematic well at (s_nem, z_nem) is a pure arctan dimple whose weight
/// scales with chi, so short-linker networks develop a single nematic
/// minimum while loose ones keep only the isotropic well.
struct BulkWellParams {
  double s_iso = 0.0;
  double z_iso = 1.0;
  double eta_iso = 50.0;
  double s_nem = 0.5;
  double z_nem = 2.0 / 3.0;  // nematic well density 1.5 at rho0 = 1
  double eta_nem = 50.0;

  bool operator==(const BulkWellParams&) const = default;
  void validate() const;
};

enum class AlphaMode { derived, constant };

/// Material and scaling parameters. mu = RT sigma_x0 and nu = RT A_a rho0
/// are derived on the fly so they track any field change.
struct MaterialParams {
  double rho0 = 1.0;        // reference rod density (rod mass density 1)
  double sigma_x0 = 1.0;    // reference crosslink density
  double aspect_ratio = 1.0;  // A_a
  double chi = 1.0;         // rod length / crosslinker length
  double rt = 1.0;          // gas constant times temperature
  double a0 = 3.0;          // tr L; 3 makes L = I in the isotropic state
  AlphaMode alpha_mode = AlphaMode::derived;
  double alpha_const = 0.75;

  double mu() const { return rt * sigma_x0; }
  double nu() const { return rt * aspect_ratio * rho0; }

  /// Network-constant diagnostic implied by rho0 = K chi^3 / A_a^2.
  double implied_network_constant() const {
    return rho0 * aspect_ratio * aspect_ratio / (chi * chi * chi);
  }

  bool operator==(const MaterialParams&) const = default;
  void validate() const;
};

/// Elastic anisotropy factor alpha = 1 - r with r = l_perp / l_par from the
/// linear constitutive map: alpha(s) = 3s / (1 + 2s). Constant mode returns
/// the configured value regardless of s.
double elastic_alpha(double s, const MaterialParams& p);
double elastic_alpha_ds(double s, const MaterialParams& p);

/// Spheroid axes from the constitutive map at trace a0:
/// l_par = a0 (1 + 2s)/3, l_perp = a0 (1 - s)/3 in derived mode.
struct SpheroidAxes {
  double l_par = 1.0;
  double l_perp = 1.0;
  double r() const { return l_perp / l_par; }
};
SpheroidAxes spheroid_axes(double s, const MaterialParams& p);

/// Thermotropic Landau-de Gennes coefficients; a = (alpha_t/2)(t - t_ni).
struct LdGCoefficients {
  double b = 1.0;
  double c = 1.0;
  double alpha_t = 1.0;
  double t = 1.0;
  double t_ni = 1.0;

  double a() const { return 0.5 * alpha_t * (t - t_ni); }
  void validate() const;
};

/// a tr(Q^2) - (b/3) tr(Q^3) + (c/4) (tr Q^2)^2.
double ldg_poly(const OrderTensor& q, const LdGCoefficients& c);

/// Variable-degree-of-orientation density k(|grad s|^2 + s^2 |grad n|^2) + nu f(s).
/// Homogeneous states pass zero gradients, leaving the bulk term.
double ericksen_energy(double grad_s_sq, double s, double grad_n_sq, double k, double nu,
                       double bulk_value);

/// Component values of the constructed bulk potential at (s, z).
struct BulkParts {
  double w_iso = 0.0;
  double w_nem = 0.0;
  double w_gr = 0.0;
  double f = 0.0;  // w_iso + chi * w_nem + w_gr
};

/// f(s, z; chi): isotropic well + chi-weighted nematic well + growth terms
///   -log z - log((1-s)(s+0.5)) + z^2,
/// which blow up at s -> {-1/2, 1} and z -> {0, inf}.
/// Requires z > 0 and s strictly inside (-1/2, 1).
BulkParts bulk_parts(double s, double z, double chi, const BulkWellParams& w);
double bulk_f(double s, double z, double chi, const BulkWellParams& w);
double bulk_f_ds(double s, double z, double chi, const BulkWellParams& w);
double bulk_f_dz(double s, double z, double chi, const BulkWellParams& w);

/// Bulk potential against density: f(s, rho) = f(s, z) at z = rho0 / rho.
double bulk_f_rho(double s, double rho, const MaterialParams& p, const BulkWellParams& w);

/// Anisotropic neo-Hookean trace energy (mu/2) |G|^2 = (mu/2) tr(L0 F^T L^-1 F).
double trace_energy(const AnisoDeformation& g, double mu);

/// Reference state for the full BTW density: crosslinking director n0 (absent
/// selects the reduced form), anisotropy ratio r0 = l_perp0/l_par0, and l_perp0.
struct BtwReference {
  std::optional<Vec3> n0;
  double r0 = 1.0;
  double l_perp0 = 1.0;
};

/// Bladon-Terentjev-Warner density
///   (mu/2)(l_perp0/l_perp) [ |F|^2 - (1-r)|F^T n|^2
///        + ((1-r0)/r0)(|F n0|^2 - (1-r)(F^T n . n0)^2) ],
/// with r = l_perp/l_par taken from the constitutive map at s (or from the
/// constant-alpha mode). Dropping n0 (isotropic crosslinking, r0 = 1) removes
/// the second group.
double btw_energy(const Mat3& f, double s, Vec3 n, const BtwReference& ref,
                  const MaterialParams& p);

/// Homogeneous expansion energy at F = lambda I with rho lambda^3 = rho0:
///   E = lambda^3 ( mu (1 - alpha s^2) + nu f(s, rho; chi) ).
double total_energy_expansion(double s, double rho, const MaterialParams& p,
                              const BulkWellParams& w);
double total_energy_expansion_ds(double s, double rho, const MaterialParams& p,
                                 const BulkWellParams& w);

/// Plane-strain energy for F = diag(fxx, fyy, 1), director
/// n = (cos theta, 0, sin theta) parametrized by c2 = cos^2 theta:
///   E = det F ( W_btw-reduced(F, s, n) + nu f(s, det F; chi) ).
/// The curve protocol uses fxx = fyy = lambda with rho lambda^2 = rho0.
double plane_energy(double s, double c2, double fxx, double fyy, const MaterialParams& p,
                    const BulkWellParams& w);
double plane_energy_ds(double s, double c2, double fxx, double fyy, const MaterialParams& p,
                       const BulkWellParams& w);

double total_energy_plane_strain(double s, double theta, double lambda, const MaterialParams& p,
                                 const BulkWellParams& w);

}  // namespace rodnet
