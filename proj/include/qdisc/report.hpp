#pragma once

// Result records produced by every check. Strict inequalities are certified
// by margins: PASS means the grid minimum stayed above -(tolerance + tail
// budget). A sampler can refute a claim; it can only ever confirm it at the
// sampled points.

#include <string>
#include <utility>
#include <vector>

#include "qdisc/common.hpp"

namespace qdisc {

enum class Verdict { PASS, FAIL, INCONCLUSIVE };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

inline Verdict margin_verdict(double min_margin, double tolerance, double tail_budget) {
  if (!std::isfinite(tail_budget)) return Verdict::INCONCLUSIVE;
  return min_margin > -(tolerance + tail_budget) ? Verdict::PASS : Verdict::FAIL;
}

// Ordered key/value pairs; order is part of the serialized format.
using ParamList = std::vector<std::pair<std::string, std::string>>;

struct MarginReport {
  std::string check_id;
  std::string anchor;  // ASCII statement of the inequality this margin certifies
  ParamList params;
  double min_margin = 0.0;
  ComplexScalar argmin{0.0, 0.0};
  std::string witness_note;  // extra witness data (function id, zeta, ...) for sweeps
  double tolerance = 1e-9;
  double tail_budget = 0.0;
  std::size_t singular_skipped = 0;
  std::size_t points = 0;
  Verdict verdict = Verdict::INCONCLUSIVE;
  double wall_ms = 0.0;
};

struct IdentityReport {
  std::string check_id;
  std::string anchor;
  ParamList params;
  double max_abs_deviation = 0.0;
  std::string argmax;  // parameter tuple achieving the maximum
  double tolerance = 0.0;
  Verdict verdict = Verdict::INCONCLUSIVE;
  double wall_ms = 0.0;
};

struct ConjectureRow {
  std::string function_id;
  ComplexScalar zeta{0.0, 0.0};
  double bound = 0.0;       // (1+|zeta|)/2
  double min_margin = 0.0;  // min over the disc grid of Re{f'/dzf} - bound
  ComplexScalar argmin{0.0, 0.0};
};

struct ConjectureReport {
  std::string check_id;
  std::string anchor;
  ParamList params;
  std::vector<ConjectureRow> rows;
  double global_min = 0.0;
  std::string witness_function;
  ComplexScalar witness_zeta{0.0, 0.0};
  ComplexScalar witness_z{0.0, 0.0};
  bool counterexample_found = false;
  // The nonnegative-real-zeta rows restate a proved bound; they must never
  // show a violation. Complex rows are exploratory output, not assertions.
  bool real_slice_consistent = true;
  double tolerance = 1e-9;
  double tail_budget = 0.0;
  double wall_ms = 0.0;
};

}  // namespace qdisc
