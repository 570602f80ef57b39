#include "rodnet/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rodnet/errors.hpp"

namespace rodnet {

std::string format_double(double v) {
  if (!std::isfinite(v)) return v != v ? "nan" : (v > 0 ? "inf" : "-inf");
  if (std::abs(v) < 9.0e15 && v == static_cast<double>(static_cast<long long>(v))) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  double back = 0.0;
  for (int prec = 1; prec <= 16; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof probe, "%.*g", prec, v);
    std::sscanf(probe, "%lf", &back);
    if (back == v) return probe;
  }
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw ConfigError("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

namespace {
void emit_header(std::ostringstream& os, const std::vector<std::string>& lines) {
  for (const auto& l : lines) os << "# " << l << "\n";
}
const char* phase_name(Phase p) { return p == Phase::nematic ? "nematic" : "isotropic"; }
const char* cell_name(CellState s) {
  switch (s) {
    case CellState::nematic: return "nematic";
    case CellState::isotropic: return "isotropic";
    default: return "failed";
  }
}
}  // namespace

std::string branch_csv(const Branch& b, const std::vector<std::string>& header_lines) {
  std::ostringstream os;
  emit_header(os, header_lines);
  if (!b.discontinuities.empty()) {
    os << "# discontinuities:";
    for (double d : b.discontinuities) os << ' ' << format_double(d);
    os << "\n";
  }
  os << "control,rho,lambda,s_star,theta_star,energy,E_iso,E_nema,label,n_roots\n";
  for (const auto& p : b.points) {
    os << format_double(p.control) << ',' << format_double(p.rho) << ','
       << format_double(p.lambda) << ',' << format_double(p.s_star) << ','
       << format_double(p.theta_star) << ',' << format_double(p.energy) << ','
       << format_double(p.e_iso) << ',' << format_double(p.e_nema) << ',' << phase_name(p.label)
       << ',' << p.n_roots << "\n";
  }
  return os.str();
}

std::string phase_diagram_csv(const PhaseDiagram& d, const std::vector<std::string>& header_lines) {
  std::ostringstream os;
  emit_header(os, header_lines);
  os << "rho,A_a,label,s_star,energy_gap\n";
  for (int j = 0; j < d.spec.aa_steps; ++j)
    for (int i = 0; i < d.spec.rho_steps; ++i) {
      const Cell& c = d.at(i, j);
      os << format_double(d.spec.rho_at(i)) << ',' << format_double(d.spec.aa_at(j)) << ','
         << cell_name(c.state) << ',' << format_double(c.s_star) << ','
         << format_double(c.energy_gap) << "\n";
    }
  return os.str();
}

std::string stress_csv(const StressCurve& s, const std::vector<std::string>& header_lines) {
  std::ostringstream os;
  emit_header(os, header_lines);
  if (!s.nonmonotone_at.empty()) {
    os << "# nonmonotone_at_lambda:";
    for (int i : s.nonmonotone_at) os << ' ' << format_double(s.lambda[i]);
    os << "\n";
  }
  if (!s.jump_flagged.empty()) {
    os << "# one_sided_at_lambda:";
    for (int i : s.jump_flagged) os << ' ' << format_double(s.lambda[i]);
    os << "\n";
  }
  os << "lambda,rho,s_star,P_xx\n";
  for (std::size_t i = 0; i < s.lambda.size(); ++i)
    os << format_double(s.lambda[i]) << ',' << format_double(s.rho[i]) << ','
       << format_double(s.s_star[i]) << ',' << format_double(s.pxx[i]) << "\n";
  return os.str();
}

std::string energy_surface_csv(const MaterialParams& p, const BulkWellParams& w, int s_samples,
                               int z_samples, double z_lo, double z_hi,
                               const std::vector<std::string>& header_lines) {
  if (s_samples < 2 || z_samples < 2) throw DomainError("surface needs at least a 2x2 sampling");
  if (!(z_lo > 0.0 && z_hi > z_lo)) throw DomainError("surface z-range must be positive");
  std::ostringstream os;
  emit_header(os, header_lines);
  os << "s,z,rho,f,W_iso,W_nema,W_gr,total\n";
  const double s_lo = -0.5 + 1e-3, s_hi = 1.0 - 1e-3;
  for (int i = 0; i < s_samples; ++i) {
    const double s = s_lo + (s_hi - s_lo) * i / (s_samples - 1);
    for (int j = 0; j < z_samples; ++j) {
      const double z = z_lo + (z_hi - z_lo) * j / (z_samples - 1);
      const double rho = p.rho0 / z;
      const BulkParts parts = bulk_parts(s, z, p.chi, w);
      const double total = total_energy_expansion(s, rho, p, w);
      os << format_double(s) << ',' << format_double(z) << ',' << format_double(rho) << ','
         << format_double(parts.f) << ',' << format_double(parts.w_iso) << ','
         << format_double(parts.w_nem) << ',' << format_double(parts.w_gr) << ','
         << format_double(total) << "\n";
    }
  }
  return os.str();
}

}  // namespace rodnet
