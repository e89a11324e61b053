#pragma once

// Report serialization. JSON is written by hand so the byte layout is fully
// pinned: fixed field order, %.17g numbers, complex values as "a+bi"
// strings. Two runs with the same configuration produce identical bytes
// (wall_ms is zeroed by the stable-output switch before serialization).

#include <cstdio>
#include <fstream>
#include <string>

#include "qdisc/registry.hpp"
#include "qdisc/report.hpp"

namespace qdisc {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

namespace detail {

inline std::string json_str(const std::string& s) { return "\"" + json_escape(s) + "\""; }

inline std::string json_num(double v) {
  if (!is_finite(v)) return json_str(v > 0 ? "inf" : v < 0 ? "-inf" : "nan");
  return fmt_double(v);
}

inline std::string json_params(const ParamList& params) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ",";
    first = false;
    out += json_str(k) + ":" + json_str(v);
  }
  return out + "}";
}

}  // namespace detail

// extra_fields, when nonempty, is a raw JSON fragment spliced in before
// wall_ms (used for the suite projection's expectation columns).
inline std::string to_json(const MarginReport& r, const std::string& extra_fields = "") {
  std::string out = "{";
  out += "\"schema_version\":1,";
  out += "\"kind\":\"margin\",";
  out += "\"check_id\":" + detail::json_str(r.check_id) + ",";
  out += "\"anchor\":" + detail::json_str(r.anchor) + ",";
  out += "\"params\":" + detail::json_params(r.params) + ",";
  out += "\"min_margin\":" + detail::json_num(r.min_margin) + ",";
  out += "\"argmin\":" + detail::json_str(fmt_complex(r.argmin)) + ",";
  out += "\"witness_note\":" + detail::json_str(r.witness_note) + ",";
  out += "\"tolerance\":" + detail::json_num(r.tolerance) + ",";
  out += "\"tail_budget\":" + detail::json_num(r.tail_budget) + ",";
  out += "\"singular_skipped\":" + std::to_string(r.singular_skipped) + ",";
  out += "\"points\":" + std::to_string(r.points) + ",";
  out += "\"verdict\":" + detail::json_str(verdict_name(r.verdict)) + ",";
  out += extra_fields;
  out += "\"wall_ms\":" + detail::json_num(r.wall_ms);
  return out + "}";
}

inline std::string to_json(const IdentityReport& r, const std::string& extra_fields = "") {
  std::string out = "{";
  out += "\"schema_version\":1,";
  out += "\"kind\":\"identity\",";
  out += "\"check_id\":" + detail::json_str(r.check_id) + ",";
  out += "\"anchor\":" + detail::json_str(r.anchor) + ",";
  out += "\"params\":" + detail::json_params(r.params) + ",";
  out += "\"max_abs_deviation\":" + detail::json_num(r.max_abs_deviation) + ",";
  out += "\"argmax\":" + detail::json_str(r.argmax) + ",";
  out += "\"tolerance\":" + detail::json_num(r.tolerance) + ",";
  out += "\"verdict\":" + detail::json_str(verdict_name(r.verdict)) + ",";
  out += extra_fields;
  out += "\"wall_ms\":" + detail::json_num(r.wall_ms);
  return out + "}";
}

inline std::string to_json(const ConjectureReport& r, const std::string& extra_fields = "") {
  std::string out = "{";
  out += "\"schema_version\":1,";
  out += "\"kind\":\"conjecture\",";
  out += "\"check_id\":" + detail::json_str(r.check_id) + ",";
  out += "\"anchor\":" + detail::json_str(r.anchor) + ",";
  out += "\"params\":" + detail::json_params(r.params) + ",";
  out += "\"rows\":[";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const ConjectureRow& row = r.rows[i];
    if (i) out += ",";
    out += "{\"function\":" + detail::json_str(row.function_id);
    out += ",\"zeta\":" + detail::json_str(fmt_complex(row.zeta));
    out += ",\"bound\":" + detail::json_num(row.bound);
    out += ",\"min_margin\":" + detail::json_num(row.min_margin);
    out += ",\"argmin\":" + detail::json_str(fmt_complex(row.argmin)) + "}";
  }
  out += "],";
  out += "\"global_min\":" + detail::json_num(r.global_min) + ",";
  out += "\"witness_function\":" + detail::json_str(r.witness_function) + ",";
  out += "\"witness_zeta\":" + detail::json_str(fmt_complex(r.witness_zeta)) + ",";
  out += "\"witness_z\":" + detail::json_str(fmt_complex(r.witness_z)) + ",";
  out += std::string("\"counterexample_found\":") + (r.counterexample_found ? "true" : "false") + ",";
  out += std::string("\"real_slice_consistent\":") + (r.real_slice_consistent ? "true" : "false") + ",";
  out += "\"tolerance\":" + detail::json_num(r.tolerance) + ",";
  out += "\"tail_budget\":" + detail::json_num(r.tail_budget) + ",";
  out += extra_fields;
  out += "\"wall_ms\":" + detail::json_num(r.wall_ms);
  return out + "}";
}

inline std::string to_json(const AnyReport& rep, const std::string& extra_fields = "") {
  return std::visit([&](const auto& r) { return to_json(r, extra_fields); }, rep);
}

inline std::string expectation_name(Expectation e) {
  return e == Expectation::Violation ? "violation" : "holds";
}

inline std::string to_json(const CheckRun& run) {
  std::string extra = "\"expected\":" + detail::json_str(expectation_name(run.info.expected)) +
                      ",\"as_expected\":" + (run.as_expected ? "true" : "false") + ",";
  return to_json(run.report, extra);
}

inline std::string suite_to_json(const std::string& suite_name, const std::vector<CheckRun>& runs) {
  std::string out = "{";
  out += "\"schema_version\":1,";
  out += "\"kind\":\"suite\",";
  out += "\"suite\":" + detail::json_str(suite_name) + ",";
  out += "\"checks\":[";
  bool all_ok = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ",";
    out += to_json(runs[i]);
    all_ok = all_ok && runs[i].as_expected;
  }
  out += "],";
  out += std::string("\"all_as_expected\":") + (all_ok ? "true" : "false");
  return out + "}";
}

// ---------------------------------------------------------------------------
// CSV projections. Complex values are split into _re/_im columns.

inline std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv(const ConjectureReport& r) {
  std::string out = "function,zeta_re,zeta_im,bound,min_margin,argmin_re,argmin_im\n";
  for (const ConjectureRow& row : r.rows) {
    out += csv_escape(row.function_id) + ",";
    out += fmt_double(row.zeta.real()) + "," + fmt_double(row.zeta.imag()) + ",";
    out += fmt_double(row.bound) + "," + fmt_double(row.min_margin) + ",";
    out += fmt_double(row.argmin.real()) + "," + fmt_double(row.argmin.imag()) + "\n";
  }
  return out;
}

// One row per check: the flattened view of a verify run.
inline std::string suite_to_csv(const std::vector<CheckRun>& runs) {
  std::string out =
      "check_id,kind,metric,tolerance,tail_budget,points,singular_skipped,verdict,expected,"
      "as_expected,witness\n";
  for (const CheckRun& run : runs) {
    std::string kind, metric, tail = "0", points = "0", singular = "0", verdict, witness;
    if (const auto* m = std::get_if<MarginReport>(&run.report)) {
      kind = "margin";
      metric = fmt_double(m->min_margin);
      tail = is_finite(m->tail_budget) ? fmt_double(m->tail_budget) : "inf";
      points = std::to_string(m->points);
      singular = std::to_string(m->singular_skipped);
      verdict = verdict_name(m->verdict);
      witness = m->witness_note.empty() ? "z=" + fmt_complex(m->argmin) : m->witness_note;
    } else if (const auto* idr = std::get_if<IdentityReport>(&run.report)) {
      kind = "identity";
      metric = fmt_double(idr->max_abs_deviation);
      verdict = verdict_name(idr->verdict);
      witness = idr->argmax;
    } else {
      const auto& c = std::get<ConjectureReport>(run.report);
      kind = "conjecture";
      metric = fmt_double(c.global_min);
      points = std::to_string(c.rows.size());
      verdict = c.real_slice_consistent ? "PASS" : "FAIL";
      witness = "function=" + c.witness_function + " zeta=" + fmt_complex(c.witness_zeta) +
                " z=" + fmt_complex(c.witness_z);
    }
    double tol = std::visit([](const auto& r) { return r.tolerance; }, run.report);
    out += csv_escape(run.info.id) + "," + kind + "," + metric + "," + fmt_double(tol) + "," +
           tail + "," + points + "," + singular + "," + verdict + "," +
           expectation_name(run.info.expected) + "," + (run.as_expected ? "true" : "false") + "," +
           csv_escape(witness) + "\n";
  }
  return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::INVALID_ARGUMENT, "cannot open output file '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::INVALID_ARGUMENT, "failed writing output file '" + path + "'");
}

}  // namespace qdisc
