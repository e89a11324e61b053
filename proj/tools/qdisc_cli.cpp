// Command line front end. All behavior lives in the library; this file only
// turns flags and an optional JSON config file into a RunConfig. Flags given
// on the command line win over config file values.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdisc/cli.hpp"

namespace {

struct FlagSet {
  CLI::App* sub = nullptr;
  std::string check = "all";
  std::string suite = "paper";
  std::string function;
  std::string zeta;
  double q = 0.0;
  int order = 0;
  double rmax = 0.0;
  int angles = 0;
  double tol = 0.0;
  int samples = 0;
  std::string zeta_moduli;
  int zeta_args = 0;
  std::string out;
  std::string format = "auto";
  std::string mode = "auto";
  std::string config;
  bool stable = false;
};

void attach_flags(CLI::App* sub, FlagSet& f) {
  f.sub = sub;
  sub->add_option("--check", f.check, "check id from list-checks, or 'all'");
  sub->add_option("--suite", f.suite, "named verification suite (default: paper)");
  sub->add_option("--function", f.function, "restrict the sweep to one catalog entry");
  sub->add_option("--zeta", f.zeta, "operator parameter, e.g. 0.3+0.4i (|zeta| <= 1)");
  sub->add_option("--q", f.q, "real operator parameter in [0, 1)");
  sub->add_option("--order", f.order, "series truncation order (>= 8, default 128)");
  sub->add_option("--rmax", f.rmax, "outermost sample radius in (0, 1)");
  sub->add_option("--angles", f.angles, "samples per circle (>= 8)");
  sub->add_option("--tol", f.tol, "margin tolerance");
  sub->add_option("--samples", f.samples, "random samples for identity sweeps");
  sub->add_option("--zeta-moduli", f.zeta_moduli, "comma list of |zeta| values for explore");
  sub->add_option("--zeta-args", f.zeta_args, "arguments per modulus for explore");
  sub->add_option("--out", f.out, "write the report here instead of stdout");
  sub->add_option("--format", f.format, "json, csv, or auto (by file extension)");
  sub->add_option("--mode", f.mode, "evaluation mode: auto, exact, or series");
  sub->add_option("--config", f.config, "JSON file with the same keys as the flags");
  sub->add_flag("--stable-output", f.stable, "zero wall-clock fields for byte-stable reports");
}

bool parse_moduli(const std::string& text, std::vector<double>& out, std::string& problem) {
  out.clear();
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(piece, &used);
      while (used < piece.size() && std::isspace(static_cast<unsigned char>(piece[used]))) ++used;
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      problem = "bad modulus '" + piece + "' in --zeta-moduli";
      return false;
    }
  }
  if (out.empty()) {
    problem = "--zeta-moduli needs at least one value";
    return false;
  }
  return true;
}

// Config file keys mirror the long flags. Unknown keys are rejected so a
// typo cannot silently run the default sweep.
bool apply_config_file(const std::string& path, qdisc::RunConfig& cfg, std::string& problem) {
  std::ifstream in(path);
  if (!in) {
    problem = "cannot read config file '" + path + "'";
    return false;
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    problem = std::string("config file is not valid JSON: ") + e.what();
    return false;
  }
  if (!doc.is_object()) {
    problem = "config file must hold a JSON object";
    return false;
  }
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "check") cfg.check = value.get<std::string>();
      else if (key == "suite") cfg.suite = value.get<std::string>();
      else if (key == "function") cfg.function = value.get<std::string>();
      else if (key == "zeta") cfg.zeta_text = value.get<std::string>();
      else if (key == "q") cfg.q = value.get<double>();
      else if (key == "order") cfg.order = value.get<int>();
      else if (key == "rmax") cfg.rmax = value.get<double>();
      else if (key == "angles") cfg.angles = value.get<int>();
      else if (key == "tol") cfg.tol = value.get<double>();
      else if (key == "samples") cfg.samples = value.get<int>();
      else if (key == "zeta_moduli") cfg.zeta_moduli = value.get<std::vector<double>>();
      else if (key == "zeta_args") cfg.zeta_args = value.get<int>();
      else if (key == "out") cfg.out_path = value.get<std::string>();
      else if (key == "format") cfg.format = value.get<std::string>();
      else if (key == "mode") cfg.mode = value.get<std::string>();
      else if (key == "stable_output") cfg.stable_output = value.get<bool>();
      else {
        problem = "unknown config key '" + key + "'";
        return false;
      }
    }
  } catch (const std::exception& e) {
    problem = std::string("config value has the wrong type: ") + e.what();
    return false;
  }
  return true;
}

bool build_config(const FlagSet& f, const std::string& subcommand, qdisc::RunConfig& cfg,
                  std::string& problem) {
  cfg.subcommand = subcommand;
  if (f.sub->count("--config") && !apply_config_file(f.config, cfg, problem)) return false;

  auto given = [&](const char* flag) { return f.sub->count(flag) > 0; };
  if (given("--check")) cfg.check = f.check;
  if (given("--suite")) cfg.suite = f.suite;
  if (given("--function")) cfg.function = f.function;
  if (given("--zeta")) cfg.zeta_text = f.zeta;
  if (given("--q")) cfg.q = f.q;
  if (given("--order")) cfg.order = f.order;
  if (given("--rmax")) cfg.rmax = f.rmax;
  if (given("--angles")) cfg.angles = f.angles;
  if (given("--tol")) cfg.tol = f.tol;
  if (given("--samples")) cfg.samples = f.samples;
  if (given("--zeta-moduli")) {
    std::vector<double> moduli;
    if (!parse_moduli(f.zeta_moduli, moduli, problem)) return false;
    cfg.zeta_moduli = std::move(moduli);
  }
  if (given("--zeta-args")) cfg.zeta_args = f.zeta_args;
  if (given("--out")) cfg.out_path = f.out;
  if (given("--format")) cfg.format = f.format;
  if (given("--mode")) cfg.mode = f.mode;
  if (f.stable) cfg.stable_output = true;

  // explore defaults to the conjecture sweep
  if (subcommand == "explore" && !given("--check") && cfg.check == "all") cfg.check = "conjecture";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of ratio bounds for the zeta-difference operator"};
  app.require_subcommand(1);

  FlagSet verify_flags, explore_flags, identity_flags, catalog_flags, checks_flags;
  attach_flags(app.add_subcommand("verify", "run registered checks and write a report"),
               verify_flags);
  attach_flags(app.add_subcommand("explore", "sweep the open-question explorer"), explore_flags);
  attach_flags(app.add_subcommand("identity", "run a single identity check"), identity_flags);
  attach_flags(app.add_subcommand("list-catalog", "print the function catalog"), catalog_flags);
  attach_flags(app.add_subcommand("list-checks", "print the registered checks"), checks_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qdisc::kExitConfigInvalid;
  }

  const FlagSet* active = nullptr;
  std::string subcommand;
  for (const FlagSet* f : {&verify_flags, &explore_flags, &identity_flags, &catalog_flags,
                           &checks_flags}) {
    if (f->sub->parsed()) {
      active = f;
      subcommand = f->sub->get_name();
    }
  }
  if (!active) {
    std::cerr << "config: no subcommand given\n";
    return qdisc::kExitConfigInvalid;
  }

  qdisc::RunConfig cfg;
  std::string problem;
  if (!build_config(*active, subcommand, cfg, problem)) {
    std::cerr << "config: " << problem << "\n";
    return qdisc::kExitConfigInvalid;
  }
  return qdisc::run(cfg, std::cout, std::cerr);
}
