#pragma once

// Samplers for the geometric function classes: starlike of order alpha,
// convex, the operator-ratio class Re{f'/dzf} > alpha, and the normalized
// positive-real-part function attached to convex inputs.

#include <utility>

#include "qdisc/grid.hpp"
#include "qdisc/qcalc.hpp"
#include "qdisc/report.hpp"
#include "qdisc/series.hpp"

namespace qdisc {

namespace detail {

inline double nan_margin() { return std::numeric_limits<double>::quiet_NaN(); }

inline MarginReport finish_margin_scan(std::string check_id, std::string anchor, ParamList params,
                                       const DiscGrid& grid, const ScanResult& scan, double tol,
                                       double tail) {
  MarginReport rep;
  rep.check_id = std::move(check_id);
  rep.anchor = std::move(anchor);
  rep.params = std::move(params);
  rep.min_margin = scan.min_margin;
  rep.argmin = scan.argmin;
  rep.tolerance = tol;
  rep.tail_budget = tail;
  rep.singular_skipped = scan.singular_skipped;
  rep.points = grid.size();
  rep.verdict = margin_verdict(scan.min_margin, tol, tail);
  return rep;
}

}  // namespace detail

// min over the grid of Re{z f'(z)/f(z)} - alpha.
inline MarginReport starlike_margin(const PointEvaluator& f, const PointEvaluator& fprime,
                                    double alpha, const DiscGrid& grid, double tol = 1e-9,
                                    double tail_budget = 0.0) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw Error(ErrorCode::INVALID_ARGUMENT, "starlike order must lie in [0,1)");
  ScanResult scan = scan_min(grid, [&](ComplexScalar z) {
    ComplexScalar fz = f.value(z);
    if (std::abs(fz) < kSingularGuard) return detail::nan_margin();
    return (z * fprime.value(z) / fz).real() - alpha;
  });
  return detail::finish_margin_scan("starlike_margin", "Re{z f'/f} > alpha",
                                    {{"alpha", fmt_double(alpha)}, {"grid", grid.describe()}}, grid,
                                    scan, tol, tail_budget);
}

// min over the grid of Re{1 + z f''(z)/f'(z)}.
inline MarginReport convex_margin(const PointEvaluator& fprime, const PointEvaluator& fsecond,
                                  const DiscGrid& grid, double tol = 1e-9,
                                  double tail_budget = 0.0) {
  ScanResult scan = scan_min(grid, [&](ComplexScalar z) {
    ComplexScalar d1 = fprime.value(z);
    if (std::abs(d1) < kSingularGuard) return detail::nan_margin();
    return (1.0 + z * fsecond.value(z) / d1).real();
  });
  return detail::finish_margin_scan("convex_margin", "Re{1 + z f''/f'} > 0",
                                    {{"grid", grid.describe()}}, grid, scan, tol, tail_budget);
}

// min over the grid of Re{f'(z)/(d_zeta f)(z)} - alpha, from point evaluators.
inline MarginReport r_class_margin(const PointEvaluator& fprime, const PointEvaluator& dzf,
                                   ZetaParam zeta, double alpha, const DiscGrid& grid,
                                   double tol = 1e-9, double tail_budget = 0.0) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw Error(ErrorCode::INVALID_ARGUMENT, "class order must lie in [0,1)");
  ScanResult scan = scan_min(grid, [&](ComplexScalar z) {
    ComplexScalar den = dzf.value(z);
    if (std::abs(den) < kSingularGuard) return detail::nan_margin();
    return (fprime.value(z) / den).real() - alpha;
  });
  return detail::finish_margin_scan(
      "r_class_margin", "Re{f'/dzf} > alpha",
      {{"zeta", fmt_complex(zeta.value)}, {"alpha", fmt_double(alpha)}, {"grid", grid.describe()}},
      grid, scan, tol, tail_budget);
}

// Series form of the same margin: both numerator and denominator are
// materialized from f's coefficients and evaluated by Horner.
inline MarginReport r_class_margin(const PowerSeries& f, ZetaParam zeta, double alpha,
                                   const DiscGrid& grid, double tol = 1e-6,
                                   double tail_budget = 0.0) {
  PowerSeries num = differentiate(f);
  PowerSeries den = zeta_derivative(f, zeta);
  return r_class_margin(series_evaluator(std::move(num)), series_evaluator(std::move(den)), zeta,
                        alpha, grid, tol, tail_budget);
}

// p = (2 f'/d_q f - (1+q)) / (1-q); p(0) = 1 since both series open with the
// same coefficient. Positivity of Re{p} restates the (1+q)/2 class bound.
inline ComplexScalar herglotz_p(const PointEvaluator& fprime, const PointEvaluator& dqf, QParam q,
                                ComplexScalar z) {
  if (!(std::abs(z) < 1.0))
    throw Error(ErrorCode::POINT_OUTSIDE_DISC, "herglotz_p requires |z| < 1");
  ComplexScalar den = dqf.value(z);
  if (std::abs(den) < kSingularGuard)
    throw Error(ErrorCode::DENOMINATOR_SINGULAR, "d_q f vanished at " + fmt_complex(z));
  return (2.0 * fprime.value(z) / den - (1.0 + q.value)) / (1.0 - q.value);
}

inline ComplexScalar herglotz_p(const PowerSeries& f, QParam q, ComplexScalar z) {
  if (!f.normalized) throw Error(ErrorCode::NOT_NORMALIZED, "herglotz_p requires a normalized series");
  return herglotz_p(series_evaluator(differentiate(f)),
                    series_evaluator(zeta_derivative(f, ZetaParam(ComplexScalar(q.value, 0.0)))), q,
                    z);
}

}  // namespace qdisc
