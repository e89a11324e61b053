#pragma once

// Named analytic test functions: coefficient rule, closed-form evaluators
// for f, f', f'' and for the operator image d_zeta f, declared class
// memberships, and the coefficient-growth family that prices truncation.
//
// Closed forms for d_zeta f (operator parameter zeta, entry parameter xi):
//   z/(1-z)            -> 1/((1-z)(1-zeta z))
//   z/(1-z)^2          -> (1 - zeta z^2)/((1-zeta z)^2 (1-z)^2)
//   z/((1-z)(1-xi z))  -> [1/(1-z) - zeta/(1-zeta z) - xi/(1-xi z)
//                           + zeta xi/(1-zeta xi z)] / ((1-zeta)(1-xi))
//   -log(1-z)          -> [log(1-zeta z) - log(1-z)] / ((1-zeta) z)
//   atanh(z)           -> [atanh(z) - atanh(zeta z)] / ((1-zeta) z)
// Each formula degenerates to f' as zeta -> 1; the evaluators branch to the
// f' form inside |1-zeta| < 1e-7 where the generic form loses precision.

#include <functional>
#include <string>
#include <vector>

#include "qdisc/common.hpp"
#include "qdisc/qcalc.hpp"
#include "qdisc/series.hpp"

namespace qdisc {

enum class Membership : unsigned {
  CONVEX = 1u << 0,
  STARLIKE = 1u << 1,
  STARLIKE_HALF = 1u << 2,
  NOT_CONVEX = 1u << 3,
  NOT_UNIVALENT = 1u << 4,
};

inline const char* membership_name(Membership m) {
  switch (m) {
    case Membership::CONVEX: return "convex";
    case Membership::STARLIKE: return "starlike";
    case Membership::STARLIKE_HALF: return "starlike_half";
    case Membership::NOT_CONVEX: return "not_convex";
    case Membership::NOT_UNIVALENT: return "not_univalent";
  }
  return "?";
}

struct CatalogEntry {
  std::string id;
  std::string summary;
  ComplexScalar param{0.0, 0.0};  // entry parameter (h_zeta, quad_nonunivalent)
  bool parametrized = false;
  unsigned memberships = 0;
  TailKind tail_kind = TailKind::NONE;
  // |a_n| <= coeff_scale * n^coeff_power, used for truncation budgets.
  double coeff_scale = 1.0;
  int coeff_power = 0;

  std::function<ComplexScalar(int)> coeff_rule;                      // n >= 0
  std::function<ComplexScalar(ComplexScalar)> f, fprime, fsecond;    // closed forms
  std::function<ComplexScalar(ComplexScalar, ComplexScalar)> dzeta;  // (zeta, z)

  bool has(Membership m) const { return (memberships & static_cast<unsigned>(m)) != 0; }

  PointEvaluator f_eval() const { return PointEvaluator{f, ComplexScalar(1.0)}; }
  PointEvaluator fprime_eval() const { return PointEvaluator{fprime, ComplexScalar(0.0)}; }
  PointEvaluator fsecond_eval() const { return PointEvaluator{fsecond, ComplexScalar(0.0)}; }
  PointEvaluator dzeta_eval(ZetaParam zeta) const {
    ComplexScalar zv = zeta.value;
    auto d = dzeta;
    return PointEvaluator{[d, zv](ComplexScalar z) { return d(zv, z); }, ComplexScalar(0.0)};
  }

  std::string membership_list() const {
    std::string out;
    for (Membership m : {Membership::CONVEX, Membership::STARLIKE, Membership::STARLIKE_HALF,
                         Membership::NOT_CONVEX, Membership::NOT_UNIVALENT}) {
      if (!has(m)) continue;
      if (!out.empty()) out += ',';
      out += membership_name(m);
    }
    return out;
  }
};

namespace detail {

inline bool near_one(ComplexScalar zeta) { return std::abs(1.0 - zeta) < kZetaOneGuard; }

inline CatalogEntry make_half_plane() {
  CatalogEntry e;
  e.id = "half_plane";
  e.summary = "z/(1-z): convex map onto a half-plane, a_n = 1";
  e.memberships = static_cast<unsigned>(Membership::CONVEX) |
                  static_cast<unsigned>(Membership::STARLIKE) |
                  static_cast<unsigned>(Membership::STARLIKE_HALF);
  e.tail_kind = TailKind::CONVEX_COEFF_BOUND;
  e.coeff_scale = 1.0;
  e.coeff_power = 0;
  e.coeff_rule = [](int n) { return ComplexScalar(n >= 1 ? 1.0 : 0.0); };
  e.f = [](ComplexScalar z) { return z / (1.0 - z); };
  e.fprime = [](ComplexScalar z) {
    ComplexScalar m = 1.0 - z;
    return 1.0 / (m * m);
  };
  e.fsecond = [](ComplexScalar z) {
    ComplexScalar m = 1.0 - z;
    return 2.0 / (m * m * m);
  };
  e.dzeta = [](ComplexScalar zeta, ComplexScalar z) {
    return 1.0 / ((1.0 - z) * (1.0 - zeta * z));
  };
  return e;
}

inline CatalogEntry make_koebe() {
  CatalogEntry e;
  e.id = "koebe";
  e.summary = "z/(1-z)^2: extremal starlike map, a_n = n, not convex";
  e.memberships =
      static_cast<unsigned>(Membership::STARLIKE) | static_cast<unsigned>(Membership::NOT_CONVEX);
  e.tail_kind = TailKind::STARLIKE_COEFF_BOUND;
  e.coeff_scale = 1.0;
  e.coeff_power = 1;
  e.coeff_rule = [](int n) { return ComplexScalar(static_cast<double>(n >= 1 ? n : 0)); };
  e.f = [](ComplexScalar z) {
    ComplexScalar m = 1.0 - z;
    return z / (m * m);
  };
  e.fprime = [](ComplexScalar z) {
    ComplexScalar m = 1.0 - z;
    return (1.0 + z) / (m * m * m);
  };
  e.fsecond = [](ComplexScalar z) {
    ComplexScalar m = 1.0 - z;
    return (4.0 + 2.0 * z) / (m * m * m * m);
  };
  e.dzeta = [](ComplexScalar zeta, ComplexScalar z) {
    ComplexScalar mz = 1.0 - z, mzeta = 1.0 - zeta * z;
    return (1.0 - zeta * z * z) / (mzeta * mzeta * mz * mz);
  };
  return e;
}

inline CatalogEntry make_h_zeta(ComplexScalar xi) {
  if (!is_finite(xi) || std::abs(xi) > 1.0 + kZetaBoundarySlack)
    throw Error(ErrorCode::ZETA_OUT_OF_RANGE, "h_zeta parameter must lie in the closed unit disc");
  CatalogEntry e;
  e.id = "h_zeta";
  e.summary = "z/((1-z)(1-xi z)): operator generator, a_n = [n]_xi, starlike";
  e.param = xi;
  e.parametrized = true;
  e.memberships = static_cast<unsigned>(Membership::STARLIKE);
  e.tail_kind = TailKind::STARLIKE_COEFF_BOUND;  // |[n]_xi| <= n
  e.coeff_scale = 1.0;
  e.coeff_power = 1;
  e.coeff_rule = [xi](int n) {
    return n >= 1 ? bracket_n(ZetaParam(xi), n) : ComplexScalar(0.0);
  };
  e.f = [xi](ComplexScalar z) { return z / ((1.0 - z) * (1.0 - xi * z)); };
  e.fprime = [xi](ComplexScalar z) {
    ComplexScalar mz = 1.0 - z, mxi = 1.0 - xi * z;
    return (1.0 - xi * z * z) / (mz * mz * mxi * mxi);
  };
  e.fsecond = [xi](ComplexScalar z) {
    ComplexScalar mz = 1.0 - z, mxi = 1.0 - xi * z;
    ComplexScalar num = 2.0 + 2.0 * xi - 6.0 * xi * z + 2.0 * xi * xi * z * z * z;
    return num / (mz * mz * mz * mxi * mxi * mxi);
  };
  e.dzeta = [e_fprime = e.fprime, xi](ComplexScalar zeta, ComplexScalar z) -> ComplexScalar {
    if (near_one(zeta)) return e_fprime(z);
    if (near_one(xi)) {
      // entry degenerates to the Koebe map
      ComplexScalar mz = 1.0 - z, mzeta = 1.0 - zeta * z;
      return (1.0 - zeta * z * z) / (mzeta * mzeta * mz * mz);
    }
    ComplexScalar s = 1.0 / (1.0 - z) - zeta / (1.0 - zeta * z) - xi / (1.0 - xi * z) +
                      zeta * xi / (1.0 - zeta * xi * z);
    return s / ((1.0 - zeta) * (1.0 - xi));
  };
  return e;
}

inline CatalogEntry make_quad_starlike() {
  CatalogEntry e;
  e.id = "quad_starlike";
  e.summary = "z + z^2/2: starlike polynomial, not convex";
  e.memberships =
      static_cast<unsigned>(Membership::STARLIKE) | static_cast<unsigned>(Membership::NOT_CONVEX);
  e.tail_kind = TailKind::EXACT_CLOSED_FORM;
  e.coeff_scale = 1.0;
  e.coeff_power = 0;
  e.coeff_rule = [](int n) {
    if (n == 1) return ComplexScalar(1.0);
    if (n == 2) return ComplexScalar(0.5);
    return ComplexScalar(0.0);
  };
  e.f = [](ComplexScalar z) { return z + 0.5 * z * z; };
  e.fprime = [](ComplexScalar z) { return 1.0 + z; };
  e.fsecond = [](ComplexScalar) { return ComplexScalar(1.0); };
  e.dzeta = [](ComplexScalar zeta, ComplexScalar z) { return 1.0 + 0.5 * (1.0 + zeta) * z; };
  return e;
}

inline CatalogEntry make_quad_nonunivalent(ComplexScalar xi) {
  if (!is_finite(xi) || std::abs(xi) >= 1.0)
    throw Error(ErrorCode::ZETA_ON_BOUNDARY,
                "quad_nonunivalent needs |parameter| < 1 (at |xi| = 1 the coefficient hits "
                "the univalence threshold exactly)");
  CatalogEntry e;
  e.id = "quad_nonunivalent";
  e.summary = "z + z^2/(1+xi): not univalent, yet Re{d_xi f} = Re{1+z} > 0";
  e.param = xi;
  e.parametrized = true;
  e.memberships = static_cast<unsigned>(Membership::NOT_UNIVALENT) |
                  static_cast<unsigned>(Membership::NOT_CONVEX);
  e.tail_kind = TailKind::EXACT_CLOSED_FORM;
  e.coeff_scale = 1.0;
  e.coeff_power = 0;
  ComplexScalar a2 = 1.0 / (1.0 + xi);
  e.coeff_rule = [a2](int n) {
    if (n == 1) return ComplexScalar(1.0);
    if (n == 2) return a2;
    return ComplexScalar(0.0);
  };
  e.f = [a2](ComplexScalar z) { return z + a2 * z * z; };
  e.fprime = [a2](ComplexScalar z) { return 1.0 + 2.0 * a2 * z; };
  e.fsecond = [a2](ComplexScalar) { return 2.0 * a2; };
  e.dzeta = [a2](ComplexScalar zeta, ComplexScalar z) { return 1.0 + (1.0 + zeta) * a2 * z; };
  return e;
}

inline CatalogEntry make_log_convex() {
  CatalogEntry e;
  e.id = "log_convex";
  e.summary = "-log(1-z): convex, a_n = 1/n (the ratio-bound kernel)";
  e.memberships = static_cast<unsigned>(Membership::CONVEX) |
                  static_cast<unsigned>(Membership::STARLIKE) |
                  static_cast<unsigned>(Membership::STARLIKE_HALF);
  e.tail_kind = TailKind::CONVEX_COEFF_BOUND;
  e.coeff_scale = 1.0;
  e.coeff_power = -1;
  e.coeff_rule = [](int n) { return ComplexScalar(n >= 1 ? 1.0 / n : 0.0); };
  e.f = [](ComplexScalar z) { return -std::log(1.0 - z); };
  e.fprime = [](ComplexScalar z) { return 1.0 / (1.0 - z); };
  e.fsecond = [](ComplexScalar z) {
    ComplexScalar m = 1.0 - z;
    return 1.0 / (m * m);
  };
  e.dzeta = [](ComplexScalar zeta, ComplexScalar z) -> ComplexScalar {
    if (near_one(zeta)) return 1.0 / (1.0 - z);
    if (std::abs(z) < 1e-5) {
      // short Taylor branch: the generic form divides a log difference by z
      ComplexScalar b2 = 1.0 + zeta;
      ComplexScalar b3 = 1.0 + zeta * b2;
      ComplexScalar b4 = 1.0 + zeta * b3;
      return 1.0 + z * (b2 / 2.0 + z * (b3 / 3.0 + z * b4 / 4.0));
    }
    // both 1-z and 1-zeta z stay in the right half-plane, so principal logs subtract cleanly
    return (std::log(1.0 - zeta * z) - std::log(1.0 - z)) / ((1.0 - zeta) * z);
  };
  return e;
}

inline CatalogEntry make_strip_convex() {
  CatalogEntry e;
  e.id = "strip_convex";
  e.summary = "atanh(z): convex map onto a strip, odd a_n = 1/n (extra corpus entry)";
  e.memberships = static_cast<unsigned>(Membership::CONVEX) |
                  static_cast<unsigned>(Membership::STARLIKE) |
                  static_cast<unsigned>(Membership::STARLIKE_HALF);
  e.tail_kind = TailKind::CONVEX_COEFF_BOUND;
  e.coeff_scale = 1.0;
  e.coeff_power = -1;
  e.coeff_rule = [](int n) {
    return ComplexScalar(n >= 1 && n % 2 == 1 ? 1.0 / n : 0.0);
  };
  e.f = [](ComplexScalar z) { return std::atanh(z); };
  e.fprime = [](ComplexScalar z) { return 1.0 / (1.0 - z * z); };
  e.fsecond = [](ComplexScalar z) {
    ComplexScalar m = 1.0 - z * z;
    return 2.0 * z / (m * m);
  };
  e.dzeta = [](ComplexScalar zeta, ComplexScalar z) -> ComplexScalar {
    if (near_one(zeta)) return 1.0 / (1.0 - z * z);
    if (std::abs(z) < 1e-5) {
      ComplexScalar b3 = 1.0 + zeta * (1.0 + zeta);
      ComplexScalar b5 = 1.0 + zeta * (1.0 + zeta * b3);
      return 1.0 + z * z * (b3 / 3.0 + z * z * b5 / 5.0);
    }
    return (std::atanh(z) - std::atanh(zeta * z)) / ((1.0 - zeta) * z);
  };
  return e;
}

}  // namespace detail

inline ComplexScalar default_entry_param(const std::string& id) {
  if (id == "h_zeta") return ComplexScalar(0.5, 0.5);
  if (id == "quad_nonunivalent") return ComplexScalar(0.5, 0.0);
  return ComplexScalar(0.0, 0.0);
}

inline CatalogEntry entry(const std::string& id, ComplexScalar param) {
  if (id == "half_plane") return detail::make_half_plane();
  if (id == "koebe") return detail::make_koebe();
  if (id == "h_zeta") return detail::make_h_zeta(param);
  if (id == "quad_starlike") return detail::make_quad_starlike();
  if (id == "quad_nonunivalent") return detail::make_quad_nonunivalent(param);
  if (id == "log_convex") return detail::make_log_convex();
  if (id == "strip_convex") return detail::make_strip_convex();
  throw Error(ErrorCode::UNKNOWN_ENTRY, "no catalog entry named '" + id + "'");
}

inline CatalogEntry entry(const std::string& id) { return entry(id, default_entry_param(id)); }

inline const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {
      "half_plane", "koebe", "h_zeta", "quad_starlike", "quad_nonunivalent",
      "log_convex", "strip_convex",
  };
  return ids;
}

// Convex sweep corpus used by the theorem checks' default runs.
inline const std::vector<std::string>& convex_corpus_ids() {
  static const std::vector<std::string> ids = {"half_plane", "log_convex", "strip_convex"};
  return ids;
}

inline PowerSeries truncate(const CatalogEntry& e, int order) {
  if (order < 1) throw Error(ErrorCode::INVALID_ARGUMENT, "truncation order must be >= 1");
  std::vector<ComplexScalar> c(order + 1);
  for (int n = 0; n <= order; ++n) c[n] = e.coeff_rule(n);
  return make_series(std::move(c), true);
}

// Tail of |f| itself at radius r from the entry's coefficient family.
inline double entry_tail(const CatalogEntry& e, int order, double r) {
  switch (e.tail_kind) {
    case TailKind::EXACT_CLOSED_FORM: return 0.0;
    case TailKind::CONVEX_COEFF_BOUND: return e.coeff_scale * geometric_tail(order, r);
    case TailKind::STARLIKE_COEFF_BOUND: return e.coeff_scale * weighted_tail1(order, r);
    case TailKind::NONE: return kInfiniteTail;
  }
  return kInfiniteTail;
}

}  // namespace qdisc
