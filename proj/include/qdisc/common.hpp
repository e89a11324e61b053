#pragma once

// Shared scalar type, error taxonomy, numeric guards, and the fixed
// complex/double text formats used by every report writer.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace qdisc {

using ComplexScalar = std::complex<double>;

// Guard thresholds. These are part of the library contract, not tuning knobs:
// tests pin behavior at the boundaries.
inline constexpr double kSingularGuard = 1e-14;     // |denominator| below this: grid point skipped, counted
inline constexpr double kOriginGuard = 1e-9;        // |z| below this: difference quotients use the f'(0) channel
inline constexpr double kZetaBoundarySlack = 1e-12; // admits zeta = e^{i theta} computed in floating point
inline constexpr double kZetaOneGuard = 1e-7;       // |1-zeta| below this: zeta = 1 limit formulas take over
inline constexpr double kInfiniteTail = std::numeric_limits<double>::infinity();

enum class ErrorCode {
  NORMALIZATION_VIOLATION,
  NONFINITE_COEFFICIENT,
  POINT_OUTSIDE_DISC,
  RADIUS_OUT_OF_RANGE,
  NOT_NORMALIZED,
  EMPTY_GRID,
  ALL_POINTS_SINGULAR,
  DENOMINATOR_SINGULAR,
  ZETA_EQUALS_ONE,
  ZETA_ON_BOUNDARY,
  ANGLE_OUT_OF_RANGE,
  NOT_CONVEX_INPUT,
  UNKNOWN_ENTRY,
  ZETA_OUT_OF_RANGE,
  Q_OUT_OF_RANGE,
  MEMBERSHIP_MISMATCH,
  INVALID_ARGUMENT,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NORMALIZATION_VIOLATION: return "NORMALIZATION_VIOLATION";
    case ErrorCode::NONFINITE_COEFFICIENT: return "NONFINITE_COEFFICIENT";
    case ErrorCode::POINT_OUTSIDE_DISC: return "POINT_OUTSIDE_DISC";
    case ErrorCode::RADIUS_OUT_OF_RANGE: return "RADIUS_OUT_OF_RANGE";
    case ErrorCode::NOT_NORMALIZED: return "NOT_NORMALIZED";
    case ErrorCode::EMPTY_GRID: return "EMPTY_GRID";
    case ErrorCode::ALL_POINTS_SINGULAR: return "ALL_POINTS_SINGULAR";
    case ErrorCode::DENOMINATOR_SINGULAR: return "DENOMINATOR_SINGULAR";
    case ErrorCode::ZETA_EQUALS_ONE: return "ZETA_EQUALS_ONE";
    case ErrorCode::ZETA_ON_BOUNDARY: return "ZETA_ON_BOUNDARY";
    case ErrorCode::ANGLE_OUT_OF_RANGE: return "ANGLE_OUT_OF_RANGE";
    case ErrorCode::NOT_CONVEX_INPUT: return "NOT_CONVEX_INPUT";
    case ErrorCode::UNKNOWN_ENTRY: return "UNKNOWN_ENTRY";
    case ErrorCode::ZETA_OUT_OF_RANGE: return "ZETA_OUT_OF_RANGE";
    case ErrorCode::Q_OUT_OF_RANGE: return "Q_OUT_OF_RANGE";
    case ErrorCode::MEMBERSHIP_MISMATCH: return "MEMBERSHIP_MISMATCH";
    case ErrorCode::INVALID_ARGUMENT: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline bool is_finite(ComplexScalar v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// 17 significant digits: enough to round-trip any double, and the fixed
// width keeps reports byte-identical across runs.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Canonical complex format "a+bi" / "a-bi"; the imaginary part is always
// printed, including zero.
inline std::string fmt_complex(ComplexScalar v) {
  std::string s = fmt_double(v.real());
  s += std::signbit(v.imag()) ? '-' : '+';
  s += fmt_double(std::fabs(v.imag()));
  s += 'i';
  return s;
}

// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" with decimal or scientific
// literals. Whitespace is not significant at the ends.
inline ComplexScalar parse_complex(const std::string& text) {
  const char* p = text.c_str();
  while (*p == ' ' || *p == '\t') ++p;
  auto fail = [&]() -> ComplexScalar {
    throw Error(ErrorCode::INVALID_ARGUMENT, "cannot parse complex value '" + text + "'");
  };
  auto unit = [&](const char*& q, double sign, double& out) {
    // bare "i" with an optional sign already consumed
    if (*q == 'i') {
      ++q;
      out = sign;
      return true;
    }
    return false;
  };

  double re = 0.0, im = 0.0;
  bool have_re = false, have_im = false;

  double sign = 1.0;
  const char* q = p;
  if (*q == '+' || *q == '-') {
    sign = (*q == '-') ? -1.0 : 1.0;
    ++q;
  }
  if (unit(q, sign, im)) {
    have_im = true;
    p = q;
  } else {
    char* end = nullptr;
    double first = std::strtod(p, &end);
    if (end == p) return fail();
    p = end;
    if (*p == 'i') {
      ++p;
      im = first;
      have_im = true;
    } else {
      re = first;
      have_re = true;
    }
  }

  if (have_re && (*p == '+' || *p == '-')) {
    sign = (*p == '-') ? -1.0 : 1.0;
    q = p + 1;
    if (unit(q, sign, im)) {
      have_im = true;
      p = q;
    } else {
      char* end = nullptr;
      double second = std::strtod(p, &end);
      if (end == p || *end != 'i') return fail();
      im = second;
      have_im = true;
      p = end + 1;
    }
  }

  while (*p == ' ' || *p == '\t') ++p;
  if (*p != '\0' || (!have_re && !have_im)) return fail();
  ComplexScalar v(re, im);
  if (!is_finite(v)) return fail();
  return v;
}

}  // namespace qdisc
