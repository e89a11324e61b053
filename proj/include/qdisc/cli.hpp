#pragma once

// Subcommand logic behind the command line tool, kept as library code so the
// test suite can drive it without spawning processes. The binary in tools/
// only parses flags into RunConfig and forwards here.
//
// Exit codes: 0 all verdicts as expected, 1 a check ran but its verdict was
// not the expected one, 2 invalid configuration, 3 a check failed to run.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qdisc/io.hpp"
#include "qdisc/registry.hpp"

namespace qdisc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitConfigInvalid = 2;
inline constexpr int kExitCheckError = 3;

struct RunConfig {
  std::string subcommand;  // verify | explore | identity | list-catalog | list-checks
  std::string check = "all";
  std::string suite = "paper";
  std::optional<std::string> function;
  std::optional<std::string> zeta_text;
  std::optional<double> q;
  std::optional<int> order;
  std::optional<double> rmax;
  std::optional<int> angles;
  std::optional<double> tol;
  std::optional<int> samples;
  std::optional<std::vector<double>> zeta_moduli;
  std::optional<int> zeta_args;
  std::string out_path;        // empty: report goes to the stdout stream
  std::string format = "auto"; // auto | json | csv
  std::string mode = "auto";   // auto | exact | series
  bool stable_output = false;
};

namespace detail {

inline std::string resolve_format(const RunConfig& cfg) {
  if (cfg.format != "auto") return cfg.format;
  if (cfg.out_path.size() >= 4 && cfg.out_path.substr(cfg.out_path.size() - 4) == ".csv")
    return "csv";
  return "json";
}

inline void zero_wall(AnyReport& rep) {
  std::visit([](auto& r) { r.wall_ms = 0.0; }, rep);
}

}  // namespace detail

// Returns an error message, or empty if the configuration is usable. Fills
// the parsed zeta and the override block as side outputs.
inline std::string validate_config(const RunConfig& cfg, RunOverrides& ov) {
  static const std::vector<std::string> subcommands = {"verify", "explore", "identity",
                                                       "list-catalog", "list-checks"};
  bool known_sub = false;
  for (const std::string& s : subcommands) known_sub = known_sub || s == cfg.subcommand;
  if (!known_sub) return "unknown subcommand '" + cfg.subcommand + "'";

  if (cfg.subcommand == "list-catalog" || cfg.subcommand == "list-checks") return "";

  if (cfg.suite != "paper") return "unknown suite '" + cfg.suite + "'";
  if (cfg.format != "auto" && cfg.format != "json" && cfg.format != "csv")
    return "unknown format '" + cfg.format + "'";

  if (cfg.check != "all" && !find_check(cfg.check)) return "unknown check '" + cfg.check + "'";
  if (cfg.subcommand == "identity") {
    if (cfg.check == "all") return "identity needs a single identity check id";
    if (find_check(cfg.check)->kind != CheckKind::Identity)
      return "check '" + cfg.check + "' is not an identity check";
  }
  if (cfg.subcommand == "explore" && cfg.check != "conjecture")
    return "explore only runs the 'conjecture' check";

  if (cfg.function) {
    bool known = false;
    for (const std::string& id : catalog_ids()) known = known || id == *cfg.function;
    if (!known) return "unknown function '" + *cfg.function + "'";
    ov.function = cfg.function;
  }
  if (cfg.zeta_text) {
    try {
      ComplexScalar z = parse_complex(*cfg.zeta_text);
      if (std::abs(z) > 1.0 + kZetaBoundarySlack)
        return "zeta must satisfy |zeta| <= 1, got " + fmt_complex(z);
      ov.zeta = z;
    } catch (const Error& e) {
      return std::string("bad zeta: ") + e.what();
    }
  }
  if (cfg.q) {
    if (!(*cfg.q >= 0.0 && *cfg.q < 1.0)) return "q must lie in [0, 1)";
    ov.q = cfg.q;
  }
  if (cfg.order) {
    if (*cfg.order < 8) return "order must be at least 8";
    ov.order = cfg.order;
  }
  if (cfg.rmax) {
    if (!(*cfg.rmax > 0.0 && *cfg.rmax < 1.0)) return "rmax must lie in (0, 1)";
    ov.rmax = cfg.rmax;
  }
  if (cfg.angles) {
    if (*cfg.angles < 8) return "angles must be at least 8";
    ov.angles = cfg.angles;
  }
  if (cfg.tol) {
    if (!(*cfg.tol > 0.0) || !is_finite(*cfg.tol)) return "tol must be a positive number";
    ov.tol = cfg.tol;
  }
  if (cfg.samples) {
    if (*cfg.samples < 1) return "samples must be positive";
    ov.samples = cfg.samples;
  }
  if (cfg.zeta_moduli) {
    if (cfg.zeta_moduli->empty()) return "zeta-moduli needs at least one value";
    for (double m : *cfg.zeta_moduli)
      if (!(m > 0.0 && m <= 1.0)) return "zeta moduli must lie in (0, 1]";
    ov.zeta_moduli = *cfg.zeta_moduli;
  }
  if (cfg.zeta_args) {
    if (*cfg.zeta_args < 1) return "zeta-args must be positive";
    ov.zeta_args = *cfg.zeta_args;
  }
  if (cfg.mode == "exact") ov.mode = EvalMode::ExactOnly;
  else if (cfg.mode == "series") ov.mode = EvalMode::SeriesOnly;
  else if (cfg.mode == "auto") ov.mode = EvalMode::Auto;
  else return "unknown mode '" + cfg.mode + "'";
  return "";
}

inline void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out_path.empty())
    out << payload << "\n";
  else
    write_text_file(cfg.out_path, payload);
}

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunOverrides ov;
  std::string problem = validate_config(cfg, ov);
  if (!problem.empty()) {
    err << "config: " << problem << "\n";
    return kExitConfigInvalid;
  }

  if (cfg.subcommand == "list-catalog") {
    for (const std::string& id : catalog_ids()) {
      CatalogEntry e = entry(id);
      out << e.id << "  [" << e.membership_list() << "]";
      if (e.parametrized) out << "  (parameter " << fmt_complex(e.param) << ")";
      out << "\n    " << e.summary << "\n";
    }
    return kExitOk;
  }
  if (cfg.subcommand == "list-checks") {
    for (const CheckInfo& info : check_registry()) {
      out << info.id << "  [" << (info.kind == CheckKind::Margin       ? "margin"
                                  : info.kind == CheckKind::Identity   ? "identity"
                                                                       : "conjecture")
          << ", expect " << expectation_name(info.expected) << "]\n    " << info.anchor << "\n";
    }
    return kExitOk;
  }

  try {
    std::vector<std::string> ids;
    if (cfg.check == "all") {
      for (const CheckInfo& info : check_registry()) ids.push_back(info.id);
    } else {
      ids.push_back(cfg.check);
    }

    std::vector<CheckRun> runs;
    runs.reserve(ids.size());
    for (const std::string& id : ids) {
      CheckRun run = run_check(id, ov);
      if (cfg.stable_output) detail::zero_wall(run.report);
      err << id << ": "
          << std::visit(
                 [](const auto& r) {
                   if constexpr (std::is_same_v<std::decay_t<decltype(r)>, ConjectureReport>)
                     return std::string(r.real_slice_consistent ? "CONSISTENT" : "INCONSISTENT");
                   else
                     return std::string(verdict_name(r.verdict));
                 },
                 run.report)
          << (run.as_expected ? " (as expected)" : " (NOT as expected)") << "\n";
      runs.push_back(std::move(run));
    }

    std::string format = detail::resolve_format(cfg);
    std::string payload;
    if (cfg.subcommand == "explore") {
      const auto& conj = std::get<ConjectureReport>(runs.front().report);
      payload = format == "csv" ? to_csv(conj) : to_json(runs.front());
    } else if (runs.size() == 1 && cfg.check != "all") {
      payload = format == "csv" ? suite_to_csv(runs) : to_json(runs.front());
    } else {
      payload = format == "csv" ? suite_to_csv(runs) : suite_to_json(cfg.suite, runs);
    }
    emit(cfg, payload, out);

    for (const CheckRun& run : runs)
      if (!run.as_expected) return kExitUnexpected;
    return kExitOk;
  } catch (const Error& e) {
    err << "check error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kExitCheckError;
  } catch (const std::exception& e) {
    err << "check error: " << e.what() << "\n";
    return kExitCheckError;
  }
}

}  // namespace qdisc
