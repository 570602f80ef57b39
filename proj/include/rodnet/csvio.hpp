#pragma once

#include <string>
#include <vector>

#include "rodnet/phase_diagram.hpp"

namespace rodnet {

/// Shortest round-trippable decimal form of a double (printf %.17g trimmed).
std::string format_double(double v);

/// Write `content` atomically: temp file in the same directory, then rename.
void write_atomic(const std::string& path, const std::string& content);

/// Branch export: control, rho, lambda, s_star, theta_star, energy, E_iso,
/// E_nema, label, n_roots. `header_lines` are emitted first as '#' comments.
std::string branch_csv(const Branch& b, const std::vector<std::string>& header_lines = {});

/// Phase diagram export: rho, A_a, label, s_star, energy_gap.
std::string phase_diagram_csv(const PhaseDiagram& d,
                              const std::vector<std::string>& header_lines = {});

/// Stress curve export: lambda, rho, s_star, P_xx.
std::string stress_csv(const StressCurve& s, const std::vector<std::string>& header_lines = {});

/// Bulk-energy surface export: s, z, rho, f, W_iso, W_nema, W_gr, total.
/// `total` is the expansion energy density at (s, z = rho0/rho).
std::string energy_surface_csv(const MaterialParams& p, const BulkWellParams& w, int s_samples,
                               int z_samples, double z_lo, double z_hi,
                               const std::vector<std::string>& header_lines = {});

}  // namespace rodnet
