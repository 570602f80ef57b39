#include "rodnet/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "rodnet/csvio.hpp"
#include "rodnet/errors.hpp"

namespace rodnet {

std::string command_name(Command c) {
  switch (c) {
    case Command::phase_diagram: return "phase-diagram";
    case Command::op_curve: return "op-curve";
    case Command::stress_curve: return "stress-curve";
    case Command::energy_surface: return "energy-surface";
    case Command::verify: return "verify";
    case Command::threshold: return "threshold";
  }
  return "verify";
}

Command command_from_name(const std::string& name) {
  for (Command c : {Command::phase_diagram, Command::op_curve, Command::stress_curve,
                    Command::energy_surface, Command::verify, Command::threshold})
    if (command_name(c) == name) return c;
  throw ConfigError("unknown command '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Parser {
  ExperimentConfig cfg;
  int line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("config line " + std::to_string(line_no) + ": " + msg);
  }

  double num(const std::string& key, const std::string& v) const {
    try {
      std::size_t pos = 0;
      const double d = std::stod(v, &pos);
      if (pos != v.size()) fail("trailing characters in value for '" + key + "'");
      return d;
    } catch (const std::invalid_argument&) {
      fail("value for '" + key + "' is not a number: '" + v + "'");
    } catch (const std::out_of_range&) {
      fail("value for '" + key + "' is out of range");
    }
  }

  double positive(const std::string& key, const std::string& v) const {
    const double d = num(key, v);
    if (!(d > 0.0)) fail("field '" + key + "' must be positive, got " + v);
    return d;
  }

  long integer(const std::string& key, const std::string& v, long lo) const {
    const double d = num(key, v);
    const long n = static_cast<long>(d);
    if (d != static_cast<double>(n) || n < lo)
      fail("field '" + key + "' must be an integer >= " + std::to_string(lo));
    return n;
  }

  std::vector<double> number_list(const std::string& key, const std::string& v) const {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) fail("empty entry in list for '" + key + "'");
      out.push_back(positive(key, item));
    }
    if (out.empty()) fail("list for '" + key + "' is empty");
    return out;
  }

  void global_key(const std::string& key, const std::string& v) {
    if (key == "command") cfg.command = command_from_name(v);
    else if (key == "out_dir") cfg.out_dir = v;
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(integer(key, v, 0));
    else if (key == "threads") cfg.threads = static_cast<int>(integer(key, v, 0));
    else if (key == "strict") {
      if (v == "true" || v == "1") cfg.strict = true;
      else if (v == "false" || v == "0") cfg.strict = false;
      else fail("field 'strict' must be true or false");
    } else fail("unknown key '" + key + "'");
  }

  void material_key(const std::string& key, const std::string& v) {
    auto& m = cfg.material;
    if (key == "rho0") m.rho0 = positive(key, v);
    else if (key == "sigma_x0") m.sigma_x0 = positive(key, v);
    else if (key == "aspect_ratio") m.aspect_ratio = positive(key, v);
    else if (key == "chi") m.chi = positive(key, v);
    else if (key == "rt") m.rt = positive(key, v);
    else if (key == "a0") m.a0 = positive(key, v);
    else if (key == "alpha_mode") {
      if (v == "derived") m.alpha_mode = AlphaMode::derived;
      else if (v == "constant") m.alpha_mode = AlphaMode::constant;
      else fail("field 'alpha_mode' must be derived or constant");
    } else if (key == "alpha_const") {
      const double d = num(key, v);
      if (!(d < 1.0)) fail("field 'alpha_const' must be < 1 so that r = 1 - alpha stays positive");
      m.alpha_const = d;
    } else fail("unknown key '" + key + "' in [material]");
  }

  void wells_key(const std::string& key, const std::string& v) {
    auto& w = cfg.wells;
    const auto order_param = [&](const std::string& val) {
      const double d = num(key, val);
      if (!(d > -0.5 && d < 1.0)) fail("field '" + key + "' must lie in (-1/2, 1)");
      return d;
    };
    if (key == "s_iso") w.s_iso = order_param(v);
    else if (key == "z_iso") w.z_iso = positive(key, v);
    else if (key == "eta_iso") w.eta_iso = positive(key, v);
    else if (key == "s_nem") w.s_nem = order_param(v);
    else if (key == "z_nem") w.z_nem = positive(key, v);
    else if (key == "eta_nem") w.eta_nem = positive(key, v);
    else fail("unknown key '" + key + "' in [wells]");
  }

  void grid_key(const std::string& key, const std::string& v) {
    auto& g = cfg.grid;
    if (key == "protocol") {
      if (v == "plane-strain") cfg.protocol = Protocol::plane_strain;
      else if (v == "expansion") cfg.protocol = Protocol::expansion;
      else fail("field 'protocol' must be plane-strain or expansion");
    } else if (key == "rho_min") g.rho_min = positive(key, v);
    else if (key == "rho_max") g.rho_max = positive(key, v);
    else if (key == "aa_min") g.aa_min = positive(key, v);
    else if (key == "aa_max") g.aa_max = positive(key, v);
    else if (key == "rho_steps") g.rho_steps = static_cast<int>(integer(key, v, 1));
    else if (key == "aa_steps") g.aa_steps = static_cast<int>(integer(key, v, 1));
    else fail("unknown key '" + key + "' in [grid]");
  }

  void sweep_key(const std::string& key, const std::string& v) {
    auto& s = cfg.sweep;
    if (key == "lambda_min") s.lambda_min = positive(key, v);
    else if (key == "lambda_max") s.lambda_max = positive(key, v);
    else if (key == "rho_min") s.rho_min = positive(key, v);
    else if (key == "rho_max") s.rho_max = positive(key, v);
    else if (key == "points") s.points = static_cast<int>(integer(key, v, 2));
    else if (key == "aspect_ratios") s.aspect_ratios = number_list(key, v);
    else fail("unknown key '" + key + "' in [sweep]");
  }

  void surface_key(const std::string& key, const std::string& v) {
    auto& s = cfg.surface;
    if (key == "s_samples") s.s_samples = static_cast<int>(integer(key, v, 2));
    else if (key == "z_samples") s.z_samples = static_cast<int>(integer(key, v, 2));
    else if (key == "z_min") s.z_min = positive(key, v);
    else if (key == "z_max") s.z_max = positive(key, v);
    else fail("unknown key '" + key + "' in [surface]");
  }

  void solver_key(const std::string& key, const std::string& v) {
    auto& s = cfg.solver;
    if (key == "s_points") s.s_points = static_cast<int>(integer(key, v, 16));
    else if (key == "s_margin") s.s_margin = positive(key, v);
    else if (key == "s_split") s.s_split = num(key, v);
    else if (key == "jump_threshold") s.jump_threshold = positive(key, v);
    else if (key == "fd_step") cfg.stress_fd_step = positive(key, v);
    else fail("unknown key '" + key + "' in [solver]");
  }

  void verify_key(const std::string& key, const std::string& v) {
    if (key == "trials") cfg.verify_trials = integer(key, v, 1);
    else fail("unknown key '" + key + "' in [verify]");
  }
};

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  Parser p;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  bool have_command = false;
  while (std::getline(in, raw)) {
    ++p.line_no;
    std::string line = raw;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') p.fail("unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "material" && section != "wells" && section != "grid" &&
          section != "sweep" && section != "surface" && section != "solver" &&
          section != "verify")
        p.fail("unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) p.fail("expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) p.fail("missing key before '='");
    if (value.empty()) p.fail("missing value for '" + key + "'");
    if (section.empty()) {
      p.global_key(key, value);
      if (key == "command") have_command = true;
    } else if (section == "material") p.material_key(key, value);
    else if (section == "wells") p.wells_key(key, value);
    else if (section == "grid") p.grid_key(key, value);
    else if (section == "sweep") p.sweep_key(key, value);
    else if (section == "surface") p.surface_key(key, value);
    else if (section == "solver") p.solver_key(key, value);
    else if (section == "verify") p.verify_key(key, value);
  }
  if (!have_command) throw ConfigError("config must set 'command'");

  // cross-field validation
  p.line_no = 0;
  try {
    p.cfg.material.validate();
    p.cfg.wells.validate();
    p.cfg.grid.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config validation: ") + e.what());
  }
  if (!(p.cfg.sweep.lambda_max > p.cfg.sweep.lambda_min))
    throw ConfigError("config validation: sweep lambda range is empty");
  if (!(p.cfg.sweep.rho_max > p.cfg.sweep.rho_min))
    throw ConfigError("config validation: sweep rho range is empty");
  if (!(p.cfg.surface.z_max > p.cfg.surface.z_min))
    throw ConfigError("config validation: surface z range is empty");
  return p.cfg;
}

std::string echo_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  const auto d = [](double v) { return format_double(v); };
  os << "command = " << command_name(cfg.command) << "\n";
  os << "out_dir = " << cfg.out_dir << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "threads = " << cfg.threads << "\n";
  os << "strict = " << (cfg.strict ? "true" : "false") << "\n\n";
  os << "[material]\n";
  os << "rho0 = " << d(cfg.material.rho0) << "\n";
  os << "sigma_x0 = " << d(cfg.material.sigma_x0) << "\n";
  os << "aspect_ratio = " << d(cfg.material.aspect_ratio) << "\n";
  os << "chi = " << d(cfg.material.chi) << "\n";
  os << "rt = " << d(cfg.material.rt) << "\n";
  os << "a0 = " << d(cfg.material.a0) << "\n";
  os << "alpha_mode = " << (cfg.material.alpha_mode == AlphaMode::derived ? "derived" : "constant")
     << "\n";
  os << "alpha_const = " << d(cfg.material.alpha_const) << "\n\n";
  os << "[wells]\n";
  os << "s_iso = " << d(cfg.wells.s_iso) << "\n";
  os << "z_iso = " << d(cfg.wells.z_iso) << "\n";
  os << "eta_iso = " << d(cfg.wells.eta_iso) << "\n";
  os << "s_nem = " << d(cfg.wells.s_nem) << "\n";
  os << "z_nem = " << d(cfg.wells.z_nem) << "\n";
  os << "eta_nem = " << d(cfg.wells.eta_nem) << "\n\n";
  os << "[grid]\n";
  os << "protocol = " << (cfg.protocol == Protocol::plane_strain ? "plane-strain" : "expansion")
     << "\n";
  os << "rho_min = " << d(cfg.grid.rho_min) << "\n";
  os << "rho_max = " << d(cfg.grid.rho_max) << "\n";
  os << "aa_min = " << d(cfg.grid.aa_min) << "\n";
  os << "aa_max = " << d(cfg.grid.aa_max) << "\n";
  os << "rho_steps = " << cfg.grid.rho_steps << "\n";
  os << "aa_steps = " << cfg.grid.aa_steps << "\n\n";
  os << "[sweep]\n";
  os << "lambda_min = " << d(cfg.sweep.lambda_min) << "\n";
  os << "lambda_max = " << d(cfg.sweep.lambda_max) << "\n";
  os << "rho_min = " << d(cfg.sweep.rho_min) << "\n";
  os << "rho_max = " << d(cfg.sweep.rho_max) << "\n";
  os << "points = " << cfg.sweep.points << "\n";
  os << "aspect_ratios = ";
  for (std::size_t i = 0; i < cfg.sweep.aspect_ratios.size(); ++i)
    os << (i ? "," : "") << d(cfg.sweep.aspect_ratios[i]);
  os << "\n\n";
  os << "[surface]\n";
  os << "s_samples = " << cfg.surface.s_samples << "\n";
  os << "z_samples = " << cfg.surface.z_samples << "\n";
  os << "z_min = " << d(cfg.surface.z_min) << "\n";
  os << "z_max = " << d(cfg.surface.z_max) << "\n\n";
  os << "[solver]\n";
  os << "s_points = " << cfg.solver.s_points << "\n";
  os << "s_margin = " << d(cfg.solver.s_margin) << "\n";
  os << "s_split = " << d(cfg.solver.s_split) << "\n";
  os << "jump_threshold = " << d(cfg.solver.jump_threshold) << "\n";
  os << "fd_step = " << d(cfg.stress_fd_step) << "\n\n";
  os << "[verify]\n";
  os << "trials = " << cfg.verify_trials << "\n";
  return os.str();
}

}  // namespace rodnet
