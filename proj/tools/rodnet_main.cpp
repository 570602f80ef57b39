#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rodnet/config.hpp"
#include "rodnet/errors.hpp"
#include "rodnet/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rodnet::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rodnet: phase transitions in crosslinked rigid-rod networks"};
  app.set_version_flag("--version", rodnet::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  bool strict = false;
  int threads = -1;
  long long seed = -1;

  for (const char* name : {"phase-diagram", "op-curve", "stress-curve", "energy-surface",
                           "verify", "threshold"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "experiment config file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides config and environment)");
    sub->add_flag("--strict", strict, "nonzero exit on any per-cell solver failure");
    sub->add_option("--threads", threads, "worker threads (0 = runtime default)");
    sub->add_option("--seed", seed, "random seed for verification sampling");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    rodnet::ExperimentConfig cfg = rodnet::parse_config(read_file(config_path));
    const std::string sub = app.get_subcommands().front()->get_name();
    if (rodnet::command_name(cfg.command) != sub)
      throw rodnet::ConfigError("config command '" + rodnet::command_name(cfg.command) +
                                "' does not match subcommand '" + sub + "'");
    // precedence: --out flag, then RODNET_OUT, then the config value
    if (const char* env = std::getenv("RODNET_OUT"); env && *env) cfg.out_dir = env;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (strict) cfg.strict = true;
    if (threads >= 0) cfg.threads = threads;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);

    return rodnet::run_experiment(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "rodnet: " << e.what() << "\n";
    return 2;
  }
}
