#pragma once

// Truncated complex power series: construction, Horner evaluation,
// differentiation, Hadamard (coefficientwise) product, and closed-form
// bounds on the dropped tail.

#include <utility>
#include <vector>

#include "qdisc/common.hpp"

namespace qdisc {

struct PowerSeries {
  std::vector<ComplexScalar> coeffs;  // indexed by power, from 0
  bool normalized = false;            // claims coeff[0] = 0 and coeff[1] = 1 exactly

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline PowerSeries make_series(std::vector<ComplexScalar> coeffs, bool normalized_expected) {
  if (coeffs.empty())
    throw Error(ErrorCode::INVALID_ARGUMENT, "series needs at least one coefficient");
  for (const auto& c : coeffs)
    if (!is_finite(c))
      throw Error(ErrorCode::NONFINITE_COEFFICIENT, "coefficient is not finite");
  if (normalized_expected) {
    if (coeffs.size() < 2 || coeffs[0] != ComplexScalar(0.0) || coeffs[1] != ComplexScalar(1.0))
      throw Error(ErrorCode::NORMALIZATION_VIOLATION,
                  "normalized series requires coeff[0] = 0 and coeff[1] = 1");
  }
  return PowerSeries{std::move(coeffs), normalized_expected};
}

inline ComplexScalar evaluate(const PowerSeries& f, ComplexScalar z) {
  if (!(std::abs(z) < 1.0))
    throw Error(ErrorCode::POINT_OUTSIDE_DISC, "evaluate requires |z| < 1, got " + fmt_complex(z));
  ComplexScalar acc = f.coeffs.back();
  for (std::size_t i = f.coeffs.size() - 1; i-- > 0;) acc = acc * z + f.coeffs[i];
  return acc;
}

inline PowerSeries differentiate(const PowerSeries& f) {
  if (f.order() < 1)
    throw Error(ErrorCode::INVALID_ARGUMENT, "cannot differentiate a constant series");
  std::vector<ComplexScalar> d(f.coeffs.size() - 1);
  for (std::size_t n = 0; n < d.size(); ++n)
    d[n] = static_cast<double>(n + 1) * f.coeffs[n + 1];
  return PowerSeries{std::move(d), false};
}

inline PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g) {
  std::size_t len = std::min(f.coeffs.size(), g.coeffs.size());
  std::vector<ComplexScalar> h(len);
  for (std::size_t n = 0; n < len; ++n) h[n] = f.coeffs[n] * g.coeffs[n];
  return PowerSeries{std::move(h), f.normalized && g.normalized};
}

enum class TailKind { EXACT_CLOSED_FORM, CONVEX_COEFF_BOUND, STARLIKE_COEFF_BOUND, NONE };

inline const char* tail_kind_name(TailKind k) {
  switch (k) {
    case TailKind::EXACT_CLOSED_FORM: return "exact";
    case TailKind::CONVEX_COEFF_BOUND: return "convex-coeff";
    case TailKind::STARLIKE_COEFF_BOUND: return "starlike-coeff";
    case TailKind::NONE: return "none";
  }
  return "?";
}

namespace detail {
inline void require_radius(double r) {
  if (!(r > 0.0 && r < 1.0))
    throw Error(ErrorCode::RADIUS_OUT_OF_RANGE, "radius must lie in (0,1), got " + fmt_double(r));
}
}  // namespace detail

// sum_{n>N} r^n
inline double geometric_tail(int order, double r) {
  detail::require_radius(r);
  return std::pow(r, order + 1) / (1.0 - r);
}

// sum_{n>N} n r^n  =  r^{N+1} [ (N+1)/(1-r) + r/(1-r)^2 ]
inline double weighted_tail1(int order, double r) {
  detail::require_radius(r);
  double m = 1.0 - r;
  return std::pow(r, order + 1) * ((order + 1) / m + r / (m * m));
}

// sum_{n>N} n^2 r^n  =  r^{N+1} [ (N+1)^2/(1-r) + 2(N+1) r/(1-r)^2 + r(1+r)/(1-r)^3 ]
inline double weighted_tail2(int order, double r) {
  detail::require_radius(r);
  double m = 1.0 - r;
  double k = order + 1;
  return std::pow(r, order + 1) * (k * k / m + 2.0 * k * r / (m * m) + r * (1.0 + r) / (m * m * m));
}

// Bound on |sum_{n>N} a_n z^n| at |z| = r under the named coefficient family.
inline double tail_estimate(TailKind kind, int order, double r) {
  detail::require_radius(r);
  switch (kind) {
    case TailKind::EXACT_CLOSED_FORM: return 0.0;
    case TailKind::CONVEX_COEFF_BOUND: return geometric_tail(order, r);      // |a_n| <= 1
    case TailKind::STARLIKE_COEFF_BOUND: return weighted_tail1(order, r);    // |a_n| <= n
    case TailKind::NONE: return kInfiniteTail;
  }
  return kInfiniteTail;
}

struct TailBound {
  TailKind kind = TailKind::NONE;
  int order = 0;

  double at(double r) const { return tail_estimate(kind, order, r); }
};

// Error propagated into a quotient N/D when the computed values carry
// absolute errors tau_num, tau_den. Infinite when the denominator cannot be
// separated from zero; callers turn that into an INCONCLUSIVE verdict.
inline double ratio_error_bound(double num_mag, double den_mag, double tau_num, double tau_den) {
  if (!(den_mag > tau_den)) return kInfiniteTail;
  return (num_mag * tau_den + den_mag * tau_num) / (den_mag * (den_mag - tau_den));
}

}  // namespace qdisc
