#pragma once

// The zeta-difference operator in coefficient form, the Jackson difference
// quotient in point form, bracket numbers [n]_zeta, and the generator series
// whose coefficients they are.

#include <functional>
#include <memory>
#include <utility>

#include "qdisc/common.hpp"
#include "qdisc/series.hpp"

namespace qdisc {

struct ZetaParam {
  ComplexScalar value;

  ZetaParam(ComplexScalar v) : value(v) {  // NOLINT: implicit by design
    if (!is_finite(v) || std::abs(v) > 1.0 + kZetaBoundarySlack)
      throw Error(ErrorCode::ZETA_OUT_OF_RANGE,
                  "zeta must lie in the closed unit disc, got " + fmt_complex(v));
  }
  ZetaParam(double re, double im) : ZetaParam(ComplexScalar(re, im)) {}
};

struct QParam {
  double value;

  QParam(double v) : value(v) {  // NOLINT: implicit by design
    if (!(v >= 0.0 && v < 1.0))
      throw Error(ErrorCode::Q_OUT_OF_RANGE, "q must lie in [0,1), got " + fmt_double(v));
  }
};

// [n]_zeta = 1 + zeta + ... + zeta^{n-1}, built by the cumulative recurrence
// s <- 1 + zeta*s. Never the quotient (1-zeta^n)/(1-zeta): the recurrence is
// regular at zeta = 1 (returns n exactly) and has no cancellation near it.
inline ComplexScalar bracket_n(ZetaParam zeta, int n) {
  if (n < 1) throw Error(ErrorCode::INVALID_ARGUMENT, "bracket_n requires n >= 1");
  ComplexScalar s(1.0);
  for (int k = 1; k < n; ++k) s = 1.0 + zeta.value * s;
  return s;
}

// z/((1-z)(1-zeta z)) truncated: coeff[n] = [n]_zeta.
inline PowerSeries h_zeta_series(ZetaParam zeta, int order) {
  if (order < 1) throw Error(ErrorCode::INVALID_ARGUMENT, "h_zeta_series requires order >= 1");
  std::vector<ComplexScalar> c(order + 1);
  c[0] = 0.0;
  ComplexScalar s(1.0);
  c[1] = s;
  for (int n = 2; n <= order; ++n) {
    s = 1.0 + zeta.value * s;
    c[n] = s;
  }
  return make_series(std::move(c), true);
}

// Coefficient form of the operator: (d_zeta f)(z) = sum [n]_zeta a_n z^{n-1}.
// Result order = f.order - 1; constant term is a_1 = 1 for normalized input.
inline PowerSeries zeta_derivative(const PowerSeries& f, ZetaParam zeta) {
  if (!f.normalized)
    throw Error(ErrorCode::NOT_NORMALIZED, "zeta_derivative requires a normalized series");
  std::vector<ComplexScalar> c(f.coeffs.size() - 1);
  ComplexScalar s(1.0);
  c[0] = f.coeffs[1];  // [1] = 1
  for (std::size_t n = 2; n < f.coeffs.size(); ++n) {
    s = 1.0 + zeta.value * s;
    c[n - 1] = s * f.coeffs[n];
  }
  return PowerSeries{std::move(c), false};
}

// A function known at points, with an explicit derivative-at-origin channel
// for the difference quotient's removable singularity.
struct PointEvaluator {
  std::function<ComplexScalar(ComplexScalar)> value;
  ComplexScalar derivative_at_origin{1.0, 0.0};
};

inline PointEvaluator series_evaluator(PowerSeries f) {
  ComplexScalar d1 = f.order() >= 1 ? f.coeffs[1] : ComplexScalar(0.0);
  auto shared = std::make_shared<PowerSeries>(std::move(f));
  return PointEvaluator{[shared](ComplexScalar z) { return evaluate(*shared, z); }, d1};
}

// (f(qz) - f(z)) / ((q-1) z); at the origin the quotient degenerates to f'(0).
inline ComplexScalar jackson_quotient(const PointEvaluator& f, QParam q, ComplexScalar z) {
  if (!(std::abs(z) < 1.0))
    throw Error(ErrorCode::POINT_OUTSIDE_DISC,
                "jackson_quotient requires |z| < 1, got " + fmt_complex(z));
  if (std::abs(z) < kOriginGuard) return f.derivative_at_origin;
  return (f.value(q.value * z) - f.value(z)) / ((q.value - 1.0) * z);
}

}  // namespace qdisc
