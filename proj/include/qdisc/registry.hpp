#pragma once

// Named checks with their default sweeps and expected verdicts. Each entry
// aggregates a full sweep (corpus x parameter set) into one report; the
// CLI and the test suite both run checks through this table.

#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qdisc/theorems.hpp"

namespace qdisc {

enum class CheckKind { Margin, Identity, Conjecture };
enum class Expectation { Holds, Violation };

struct CheckInfo {
  std::string id;
  std::string anchor;
  std::string summary;
  CheckKind kind = CheckKind::Margin;
  Expectation expected = Expectation::Holds;
};

inline const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> table = {
      {"theorem1", "Re{(f'/dzf - zeta)/(1-zeta)} > 1/2 for convex f, |zeta| <= 1",
       "main ratio bound over the convex corpus and a closed-disc zeta lattice", CheckKind::Margin,
       Expectation::Holds},
      {"corollary1", "Re{f'/((1-zeta) dzf)} > Re{(1+zeta)/(2(1-zeta))} > 0 for convex f",
       "two-margin chain form, zeta != 1", CheckKind::Margin, Expectation::Holds},
      {"corollary2", "Re{f'/((1-zeta) dzf)} > (1-|zeta|^2)/(2|1-zeta|^2), sharp for z/(1-z)",
       "interior bound with sharpness gap ladder", CheckKind::Margin, Expectation::Holds},
      {"corollary3", "convex f => Re{f'/dqf} > (1+q)/2",
       "real-parameter ratio class containment", CheckKind::Margin, Expectation::Holds},
      {"corollary4", "p = (2 f'/dqf - (1+q))/(1-q) has Re{p} > 0 and p(0) = 1",
       "Herglotz normalization of the ratio", CheckKind::Margin, Expectation::Holds},
      {"theorem2", "(1+qr)/(1+r) <= Re{f'/dqf} and |f'/dqf| <= (1-qr)/(1-r) on |z| = r, sharp",
       "circle distortion bounds with attainment for z/(1-z)", CheckKind::Margin,
       Expectation::Holds},
      {"theorem3", "Re{f/D} > (1+q)/2 with D = [-log(1-z)] hadamard [z dqf]",
       "log-kernel ratio bound plus exact coefficient identity", CheckKind::Margin,
       Expectation::Holds},
      {"hzeta-starlike", "Re{z h'/h} > (1-|zeta|)/(2(1+|zeta|)) for the generator h",
       "generator starlikeness over the closed parameter disc", CheckKind::Margin,
       Expectation::Holds},
      {"convolution-closure", "convex * convex is convex; convex * starlike is starlike",
       "coefficientwise product closure on truncated series", CheckKind::Margin,
       Expectation::Holds},
      {"rotation-positivity",
       "Re{(e^{ia}/(1-e^{ia}) - e^{ib}/(1-e^{ib})) (f(e^{ib}z)-f(z))/(f(z)-f(e^{ia}z))} > 0",
       "rotation difference positivity with the argument-range clause", CheckKind::Margin,
       Expectation::Holds},
      {"angle-identity",
       "e^{ia}/(1-e^{ia}) - e^{ib}/(1-e^{ib}) = (i/2)(cot(a/2) - cot(b/2))",
       "boundary kernel difference identity on random angle pairs", CheckKind::Identity,
       Expectation::Holds},
      {"operator-equivalence",
       "(f(qz)-f(z))/((q-1)z) = sum [n]_q a_n z^{n-1} within the truncation budget",
       "difference quotient against the coefficient operator, point by point",
       CheckKind::Identity, Expectation::Holds},
      {"starlike-violation",
       "starlike f can violate Re{(f'/dzf - zeta)/(1-zeta)} > 1/2",
       "counterexample sweep on z + z^2/2; the violation is the expected outcome",
       CheckKind::Margin, Expectation::Violation},
      {"nonunivalent-example", "Re{dzf} > 0 does not imply univalence: f = z + z^2/(1+zeta)",
       "positive operator image with |a_2| > 1/2 and an interior critical point",
       CheckKind::Margin, Expectation::Holds},
      {"conjecture", "open: convex f => Re{f'/dzf} > (1+|zeta|)/2 for complex zeta?",
       "explorer sweep; complex-parameter outcome is reported, not asserted",
       CheckKind::Conjecture, Expectation::Holds},
  };
  return table;
}

inline const CheckInfo* find_check(const std::string& id) {
  for (const CheckInfo& info : check_registry())
    if (info.id == id) return &info;
  return nullptr;
}

struct RunOverrides {
  std::optional<std::string> function;
  std::optional<ComplexScalar> zeta;
  std::optional<double> q;
  std::optional<int> order;
  std::optional<double> rmax;
  std::optional<int> angles;
  std::optional<double> tol;
  std::optional<int> samples;
  std::vector<double> zeta_moduli = {0.3, 0.6, 0.9};
  int zeta_args = 64;
  EvalMode mode = EvalMode::Auto;
};

using AnyReport = std::variant<MarginReport, IdentityReport, ConjectureReport>;

struct CheckRun {
  CheckInfo info;
  AnyReport report;
  bool as_expected = false;
};

namespace detail {

struct MarginFold {
  bool any = false;
  MarginReport rep;
  ParamList witness;

  void add(const MarginReport& next, ParamList witness_params) {
    if (!any) {
      rep = next;
      witness = std::move(witness_params);
      any = true;
      return;
    }
    rep.points += next.points;
    rep.singular_skipped += next.singular_skipped;
    rep.tail_budget = std::max(rep.tail_budget, next.tail_budget);
    if (next.min_margin < rep.min_margin) {
      rep.min_margin = next.min_margin;
      rep.argmin = next.argmin;
      rep.witness_note = next.witness_note;
      witness = std::move(witness_params);
    }
    if (next.verdict == Verdict::FAIL || rep.verdict == Verdict::FAIL)
      rep.verdict = Verdict::FAIL;
    else if (next.verdict == Verdict::INCONCLUSIVE)
      rep.verdict = Verdict::INCONCLUSIVE;
  }

  MarginReport finish(const std::string& check_id, ParamList sweep_params) {
    rep.check_id = check_id;
    if (rep.witness_note.empty() && !witness.empty()) {
      std::string note = "minimum at";
      for (const auto& [k, v] : witness) note += " " + k + "=" + v;
      rep.witness_note = note;
    }
    for (auto& kv : witness) sweep_params.push_back(std::move(kv));
    rep.params = std::move(sweep_params);
    return rep;
  }
};

struct IdentityFold {
  bool any = false;
  IdentityReport rep;
  ParamList witness;

  void add(const IdentityReport& next, ParamList witness_params) {
    if (!any) {
      rep = next;
      witness = std::move(witness_params);
      any = true;
      return;
    }
    if (next.max_abs_deviation > rep.max_abs_deviation) {
      rep.max_abs_deviation = next.max_abs_deviation;
      rep.argmax = next.argmax;
      witness = std::move(witness_params);
    }
    if (next.verdict == Verdict::FAIL) rep.verdict = Verdict::FAIL;
  }

  IdentityReport finish(const std::string& check_id, ParamList sweep_params) {
    rep.check_id = check_id;
    for (auto& kv : witness) sweep_params.push_back(std::move(kv));
    rep.params = std::move(sweep_params);
    return rep;
  }
};

inline std::vector<CatalogEntry> sweep_functions(const RunOverrides& ov) {
  std::vector<CatalogEntry> out;
  if (ov.function) {
    out.push_back(entry(*ov.function));
  } else {
    for (const std::string& id : convex_corpus_ids()) out.push_back(entry(id));
  }
  return out;
}

inline std::vector<ComplexScalar> sweep_zetas(const RunOverrides& ov) {
  if (ov.zeta) return {*ov.zeta};
  return zeta_grid96();
}

inline std::vector<double> sweep_q(const RunOverrides& ov, std::vector<double> defaults) {
  if (ov.q) return {*ov.q};
  return defaults;
}

inline std::string join_ids(const std::vector<CatalogEntry>& fns) {
  std::string s;
  for (const CatalogEntry& f : fns) {
    if (!s.empty()) s += ",";
    s += f.id;
  }
  return s;
}

inline std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (double x : v) {
    if (!s.empty()) s += ",";
    s += fmt_double(x);
  }
  return s;
}

}  // namespace detail

// Aggregated default sweep for one registered check. Overrides narrow the
// sweep (a single function, zeta, or q) or retune grids and tolerances.
inline AnyReport run_registered_check(const std::string& id, const RunOverrides& ov = {}) {
  const CheckInfo* info = find_check(id);
  if (!info) throw Error(ErrorCode::INVALID_ARGUMENT, "unknown check id '" + id + "'");

  CheckOptions opts;
  opts.order = ov.order.value_or(128);
  opts.mode = ov.mode;
  double rmax = ov.rmax.value_or(0.95);
  int angles = ov.angles.value_or(256);
  bool series_path = id == "theorem3" || id == "convolution-closure" ||
                     (id == "theorem1" && ov.mode == EvalMode::SeriesOnly);
  opts.tol = ov.tol.value_or(series_path ? 1e-6 : 1e-9);
  DiscGrid grid = default_disc_grid(rmax, angles);

  if (id == "theorem1") {
    detail::MarginFold fold;
    std::vector<CatalogEntry> fns = detail::sweep_functions(ov);
    std::vector<ComplexScalar> zetas = detail::sweep_zetas(ov);
    for (const CatalogEntry& f : fns)
      for (ComplexScalar zeta : zetas)
        fold.add(check_theorem1(f, ZetaParam(zeta), grid, opts),
                 {{"witness_function", f.id}, {"witness_zeta", fmt_complex(zeta)}});
    return fold.finish(id, {{"functions", detail::join_ids(fns)},
                            {"zeta_samples", std::to_string(zetas.size())},
                            {"order", std::to_string(opts.order)},
                            {"mode", ov.mode == EvalMode::SeriesOnly ? "series" : "exact"},
                            {"grid", grid.describe()},
                            {"tol", fmt_double(opts.tol)}});
  }

  if (id == "corollary1") {
    detail::MarginFold fold;
    std::vector<CatalogEntry> fns = detail::sweep_functions(ov);
    std::vector<ComplexScalar> zetas = detail::sweep_zetas(ov);
    for (const CatalogEntry& f : fns)
      for (ComplexScalar zeta : zetas) {
        if (!ov.zeta && std::abs(1.0 - zeta) < 1e-12) continue;  // excluded by hypothesis
        fold.add(check_corollary1(f, ZetaParam(zeta), grid, opts),
                 {{"witness_function", f.id}, {"witness_zeta", fmt_complex(zeta)}});
      }
    return fold.finish(id, {{"functions", detail::join_ids(fns)},
                            {"zeta_samples", std::to_string(zetas.size())},
                            {"grid", grid.describe()},
                            {"tol", fmt_double(opts.tol)}});
  }

  if (id == "corollary2") {
    detail::MarginFold fold;
    std::vector<CatalogEntry> fns = detail::sweep_functions(ov);
    std::vector<ComplexScalar> zetas;
    if (ov.zeta) {
      zetas = {*ov.zeta};
    } else {
      for (ComplexScalar zeta : zeta_grid96())
        if (std::abs(zeta) < 1.0 - 1e-12) zetas.push_back(zeta);
    }
    for (const CatalogEntry& f : fns)
      for (ComplexScalar zeta : zetas)
        fold.add(check_corollary2(f, ZetaParam(zeta), grid, opts),
                 {{"witness_function", f.id}, {"witness_zeta", fmt_complex(zeta)}});
    ParamList sweep = {{"functions", detail::join_ids(fns)},
                       {"zeta_samples", std::to_string(zetas.size())},
                       {"grid", grid.describe()},
                       {"tol", fmt_double(opts.tol)}};
    if (!ov.zeta) {
      // sharpness diagnostics for the extremal function at zeta = 1/2
      std::vector<double> ladder = {0.8, 0.9, 0.95, 0.99};
      std::vector<double> gaps =
          corollary2_sharpness_gaps(ZetaParam(ComplexScalar(0.5, 0.0)), ladder, angles, opts);
      bool monotone = true;
      for (std::size_t i = 1; i < gaps.size(); ++i)
        if (!(gaps[i] < gaps[i - 1])) monotone = false;
      sweep.emplace_back("sharpness_rmax_ladder", detail::join_doubles(ladder));
      sweep.emplace_back("sharpness_gaps_zeta_half", detail::join_doubles(gaps));
      sweep.emplace_back("sharpness_gaps_decreasing", monotone ? "true" : "false");
    }
    return fold.finish(id, std::move(sweep));
  }

  if (id == "corollary3" || id == "corollary4") {
    detail::MarginFold fold;
    std::vector<CatalogEntry> fns = detail::sweep_functions(ov);
    std::vector<double> qs = detail::sweep_q(ov, id == "corollary3"
                                                     ? std::vector<double>{0.0, 0.25, 0.5, 0.9}
                                                     : std::vector<double>{0.25, 0.5, 0.9});
    for (const CatalogEntry& f : fns)
      for (double q : qs) {
        MarginReport r = id == "corollary3" ? check_corollary3(f, QParam(q), grid, opts)
                                            : check_corollary4(f, QParam(q), grid, opts);
        fold.add(r, {{"witness_function", f.id}, {"witness_q", fmt_double(q)}});
      }
    return fold.finish(id, {{"functions", detail::join_ids(fns)},
                            {"q_values", detail::join_doubles(qs)},
                            {"grid", grid.describe()},
                            {"tol", fmt_double(opts.tol)}});
  }

  if (id == "theorem2") {
    detail::MarginFold fold;
    std::vector<CatalogEntry> fns = detail::sweep_functions(ov);
    std::vector<double> qs = detail::sweep_q(ov, {0.3, 0.7});
    std::vector<double> radii = ov.rmax ? std::vector<double>{*ov.rmax}
                                        : std::vector<double>{0.5, 0.9};
    int circle_angles = ov.angles.value_or(512);
    for (const CatalogEntry& f : fns)
      for (double q : qs)
        for (double r : radii)
          fold.add(check_theorem2(f, QParam(q), r, circle_angles, opts),
                   {{"witness_function", f.id},
                    {"witness_q", fmt_double(q)},
                    {"witness_r", fmt_double(r)}});
    return fold.finish(id, {{"functions", detail::join_ids(fns)},
                            {"q_values", detail::join_doubles(qs)},
                            {"radii", detail::join_doubles(radii)},
                            {"angles", std::to_string(circle_angles)},
                            {"tol", fmt_double(opts.tol)}});
  }

  if (id == "theorem3") {
    detail::MarginFold fold;
    std::vector<CatalogEntry> fns = detail::sweep_functions(ov);
    std::vector<double> qs = detail::sweep_q(ov, {0.25, 0.5, 0.9});
    for (const CatalogEntry& f : fns)
      for (double q : qs)
        fold.add(check_theorem3(f, QParam(q), grid, opts),
                 {{"witness_function", f.id}, {"witness_q", fmt_double(q)}});
    return fold.finish(id, {{"functions", detail::join_ids(fns)},
                            {"q_values", detail::join_doubles(qs)},
                            {"order", std::to_string(opts.order)},
                            {"grid", grid.describe()},
                            {"tol", fmt_double(opts.tol)}});
  }

  if (id == "hzeta-starlike") {
    detail::MarginFold fold;
    std::vector<ComplexScalar> zetas = detail::sweep_zetas(ov);
    for (ComplexScalar zeta : zetas)
      fold.add(check_hzeta_starlike(ZetaParam(zeta), grid, opts),
               {{"witness_zeta", fmt_complex(zeta)}});
    return fold.finish(id, {{"zeta_samples", std::to_string(zetas.size())},
                            {"grid", grid.describe()},
                            {"tol", fmt_double(opts.tol)}});
  }

  if (id == "convolution-closure") {
    detail::MarginFold fold;
    CatalogEntry log_entry = entry("log_convex");
    DiscGrid convex_grid = default_disc_grid(std::min(rmax, 0.9), angles);
    fold.add(check_convolution_closure(log_entry, log_entry, convex_grid, opts),
             {{"witness_pair", "log_convex*log_convex"}});
    fold.add(check_convolution_closure(log_entry, entry("koebe"), grid, opts),
             {{"witness_pair", "log_convex*koebe"}});
    // identity element: termwise product with all-ones coefficients returns
    // the other factor bit for bit
    PowerSeries g = truncate(entry("koebe"), opts.order);
    PowerSeries prod = hadamard(truncate(entry("half_plane"), opts.order), g);
    bool identity_ok = prod.coeffs == g.coeffs;
    MarginReport rep = fold.finish(id, {{"pairs", "log_convex*log_convex,log_convex*koebe"},
                                        {"order", std::to_string(opts.order)},
                                        {"identity_element_exact", identity_ok ? "true" : "false"},
                                        {"tol", fmt_double(opts.tol)}});
    if (!identity_ok) rep.verdict = Verdict::FAIL;
    rep.anchor = "convex * convex is convex; convex * starlike is starlike";
    return rep;
  }

  if (id == "rotation-positivity") {
    detail::MarginFold fold;
    std::vector<CatalogEntry> fns = detail::sweep_functions(ov);
    const double base[] = {0.1, 0.5, 1.0, 2.0, 3.0};
    for (const CatalogEntry& f : fns)
      for (double a : base)
        for (double b : base) {
          if (!(b < a)) continue;
          for (double sign : {1.0, -1.0})
            fold.add(check_proof_rotation_inequality(f, sign * a, sign * b, grid, opts),
                     {{"witness_function", f.id},
                      {"witness_a", fmt_double(sign * a)},
                      {"witness_b", fmt_double(sign * b)}});
        }
    return fold.finish(id, {{"functions", detail::join_ids(fns)},
                            {"angle_set", "0.1,0.5,1,2,3 and mirrored negatives"},
                            {"grid", grid.describe()},
                            {"tol", fmt_double(opts.tol)}});
  }

  if (id == "angle-identity") return angle_identity_sweep(ov.samples.value_or(1000));

  if (id == "operator-equivalence") {
    detail::IdentityFold fold;
    std::vector<CatalogEntry> fns;
    if (ov.function) {
      fns.push_back(entry(*ov.function));
    } else {
      for (const std::string& eid : catalog_ids()) fns.push_back(entry(eid));
    }
    std::vector<double> qs = detail::sweep_q(ov, {0.0, 0.25, 0.5, 0.9});
    DiscGrid op_grid = operator_grid();
    for (const CatalogEntry& f : fns)
      for (double q : qs)
        fold.add(check_operator_equivalence(f, QParam(q), op_grid, opts),
                 {{"witness_function", f.id}, {"witness_q", fmt_double(q)}});
    return fold.finish(id, {{"functions", detail::join_ids(fns)},
                            {"q_values", detail::join_doubles(qs)},
                            {"order", std::to_string(opts.order)},
                            {"grid", op_grid.describe()}});
  }

  if (id == "starlike-violation")
    return find_starlike_counterexample(grid, detail::sweep_zetas(ov), opts);

  if (id == "nonunivalent-example") {
    detail::MarginFold fold;
    std::vector<ComplexScalar> zetas =
        ov.zeta ? std::vector<ComplexScalar>{*ov.zeta}
                : std::vector<ComplexScalar>{{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.9}};
    for (ComplexScalar zeta : zetas)
      fold.add(check_nonunivalent_example(ZetaParam(zeta), grid, opts),
               {{"witness_zeta", fmt_complex(zeta)}});
    return fold.finish(id, {{"zeta_samples", std::to_string(zetas.size())},
                            {"grid", grid.describe()},
                            {"tol", fmt_double(opts.tol)}});
  }

  if (id == "conjecture") {
    std::vector<CatalogEntry> fns = detail::sweep_functions(ov);
    std::vector<ComplexScalar> zetas =
        ov.zeta ? std::vector<ComplexScalar>{*ov.zeta}
                : zeta_polar_grid(ov.zeta_moduli, ov.zeta_args);
    return explore_conjecture(fns, zetas, grid, opts);
  }

  throw Error(ErrorCode::INVALID_ARGUMENT, "check '" + id + "' has no registered runner");
}

inline bool report_as_expected(const CheckInfo& info, const AnyReport& report) {
  if (const auto* c = std::get_if<ConjectureReport>(&report)) return c->real_slice_consistent;
  Verdict v = std::holds_alternative<MarginReport>(report)
                  ? std::get<MarginReport>(report).verdict
                  : std::get<IdentityReport>(report).verdict;
  return info.expected == Expectation::Violation ? v == Verdict::FAIL : v == Verdict::PASS;
}

inline CheckRun run_check(const std::string& id, const RunOverrides& ov = {}) {
  const CheckInfo* info = find_check(id);
  if (!info) throw Error(ErrorCode::INVALID_ARGUMENT, "unknown check id '" + id + "'");
  auto t0 = std::chrono::steady_clock::now();
  AnyReport rep = run_registered_check(id, ov);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::visit([ms](auto& r) { r.wall_ms = ms; }, rep);
  CheckRun run{*info, std::move(rep), false};
  run.as_expected = report_as_expected(*info, run.report);
  return run;
}

}  // namespace qdisc
