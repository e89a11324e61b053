#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "qdisc/catalog.hpp"
#include "qdisc/classes.hpp"
#include "qdisc/grid.hpp"
#include "qdisc/qcalc.hpp"
#include "qdisc/series.hpp"

using namespace qdisc;

namespace {

template <typename Fn>
void require_error(ErrorCode expected, Fn&& fn) {
  try {
    fn();
    FAIL("expected an Error to be thrown");
  } catch (const Error& e) {
    REQUIRE(e.code() == expected);
  }
}

const std::vector<ComplexScalar>& probe_points() {
  static const std::vector<ComplexScalar> zs = {
      {0.1, 0.0}, {-0.3, 0.2}, {0.0, 0.45}, {0.35, -0.35}, {-0.5, 0.0},
  };
  return zs;
}

}  // namespace

TEST_CASE("catalog lists seven entries with stable ids") {
  const auto& ids = catalog_ids();
  REQUIRE(ids == std::vector<std::string>{"half_plane", "koebe", "h_zeta", "quad_starlike",
                                          "quad_nonunivalent", "log_convex", "strip_convex"});
  for (const auto& id : ids) {
    CatalogEntry e = entry(id);
    REQUIRE(e.id == id);
    REQUIRE_FALSE(e.summary.empty());
  }
  REQUIRE(convex_corpus_ids() ==
          std::vector<std::string>{"half_plane", "log_convex", "strip_convex"});
  require_error(ErrorCode::UNKNOWN_ENTRY, [] { entry("no_such_function"); });
}

TEST_CASE("coefficient rules produce the documented sequences") {
  CatalogEntry hp = entry("half_plane");
  REQUIRE(hp.coeff_rule(0) == ComplexScalar(0.0, 0.0));
  for (int n : {1, 2, 17, 128}) REQUIRE(hp.coeff_rule(n) == ComplexScalar(1.0, 0.0));

  CatalogEntry k = entry("koebe");
  for (int n : {1, 2, 17, 128})
    REQUIRE(k.coeff_rule(n) == ComplexScalar(static_cast<double>(n), 0.0));

  CatalogEntry lg = entry("log_convex");
  for (int n : {1, 2, 17, 128}) REQUIRE(lg.coeff_rule(n) == ComplexScalar(1.0 / n, 0.0));

  CatalogEntry st = entry("strip_convex");
  REQUIRE(st.coeff_rule(2) == ComplexScalar(0.0, 0.0));
  REQUIRE(st.coeff_rule(3) == ComplexScalar(1.0 / 3.0, 0.0));
  REQUIRE(st.coeff_rule(128) == ComplexScalar(0.0, 0.0));

  CatalogEntry qs = entry("quad_starlike");
  REQUIRE(qs.coeff_rule(1) == ComplexScalar(1.0, 0.0));
  REQUIRE(qs.coeff_rule(2) == ComplexScalar(0.5, 0.0));
  REQUIRE(qs.coeff_rule(3) == ComplexScalar(0.0, 0.0));

  // h_zeta's coefficients are exactly the bracket numbers of its parameter.
  ZetaParam xi(ComplexScalar(0.5, 0.5));
  CatalogEntry hz = entry("h_zeta");
  REQUIRE(hz.param == xi.value);
  for (int n : {1, 2, 5, 33}) REQUIRE(hz.coeff_rule(n) == bracket_n(xi, n));

  CatalogEntry qn = entry("quad_nonunivalent");
  REQUIRE(qn.param == ComplexScalar(0.5, 0.0));
  REQUIRE(qn.coeff_rule(2) == ComplexScalar(1.0 / 1.5, 0.0));
}

TEST_CASE("parametrized entries validate their parameter") {
  REQUIRE(entry("h_zeta").parametrized);
  REQUIRE(entry("quad_nonunivalent").parametrized);
  REQUIRE_FALSE(entry("half_plane").parametrized);

  require_error(ErrorCode::ZETA_OUT_OF_RANGE, [] { entry("h_zeta", ComplexScalar(1.2, 0.0)); });
  require_error(ErrorCode::ZETA_ON_BOUNDARY,
                [] { entry("quad_nonunivalent", ComplexScalar(1.0, 0.0)); });
  require_error(ErrorCode::ZETA_ON_BOUNDARY,
                [] { entry("quad_nonunivalent", ComplexScalar(0.0, -1.0)); });

  // At parameter 1 the generator degenerates to the koebe map.
  CatalogEntry hz1 = entry("h_zeta", ComplexScalar(1.0, 0.0));
  CatalogEntry k = entry("koebe");
  for (int n : {1, 2, 7}) REQUIRE(hz1.coeff_rule(n) == k.coeff_rule(n));
  ComplexScalar zeta(0.3, 0.4), z(0.4, -0.2);
  REQUIRE(std::abs(hz1.dzeta(zeta, z) - k.dzeta(zeta, z)) < 1e-13);
}

TEST_CASE("membership flags encode the documented classes") {
  CatalogEntry hp = entry("half_plane");
  REQUIRE(hp.has(Membership::CONVEX));
  REQUIRE(hp.has(Membership::STARLIKE));
  REQUIRE(hp.has(Membership::STARLIKE_HALF));
  REQUIRE_FALSE(hp.has(Membership::NOT_CONVEX));
  REQUIRE(hp.membership_list() == "convex,starlike,starlike_half");

  CatalogEntry k = entry("koebe");
  REQUIRE(k.has(Membership::STARLIKE));
  REQUIRE(k.has(Membership::NOT_CONVEX));
  REQUIRE_FALSE(k.has(Membership::CONVEX));
  REQUIRE(k.membership_list() == "starlike,not_convex");

  REQUIRE(entry("quad_nonunivalent").has(Membership::NOT_UNIVALENT));
  REQUIRE(entry("h_zeta").membership_list() == "starlike");
}

TEST_CASE("declared class memberships hold on the sampling grid") {
  DiscGrid g = default_disc_grid();
  for (const auto& id : catalog_ids()) {
    CatalogEntry e = entry(id);
    if (e.has(Membership::STARLIKE)) {
      MarginReport rep = starlike_margin(e.f_eval(), e.fprime_eval(), 0.0, g);
      INFO(id);
      REQUIRE(rep.verdict == Verdict::PASS);
    }
    if (e.has(Membership::CONVEX)) {
      MarginReport rep = convex_margin(e.fprime_eval(), e.fsecond_eval(), g);
      INFO(id);
      REQUIRE(rep.verdict == Verdict::PASS);
    }
    if (e.has(Membership::NOT_CONVEX)) {
      MarginReport rep = convex_margin(e.fprime_eval(), e.fsecond_eval(), g);
      INFO(id);
      REQUIRE(rep.verdict == Verdict::FAIL);
      REQUIRE(rep.min_margin < -1e-3);
    }
  }

  // The non-univalent entry's derivative genuinely vanishes inside the disc.
  CatalogEntry qn = entry("quad_nonunivalent");
  REQUIRE(std::abs(qn.fprime(ComplexScalar(-0.75, 0.0))) < 1e-14);
}

TEST_CASE("closed forms agree with truncated series inside the budget") {
  for (const auto& id : catalog_ids()) {
    CatalogEntry e = entry(id);
    PowerSeries f = truncate(e, 96);
    REQUIRE(f.normalized);
    PowerSeries d1 = differentiate(f);
    PowerSeries d2 = differentiate(d1);
    auto fe = series_evaluator(f);
    auto d1e = series_evaluator(d1);
    auto d2e = series_evaluator(d2);
    double tail = entry_tail(e, 96, 0.5);
    REQUIRE(tail < 1e-12);  // every family is tiny at r = 0.5, order 96
    for (ComplexScalar z : probe_points()) {
      INFO(id << " at " << fmt_complex(z));
      REQUIRE(std::abs(fe.value(z) - e.f(z)) < 1e-11);
      REQUIRE(std::abs(d1e.value(z) - e.fprime(z)) < 1e-9);
      REQUIRE(std::abs(d2e.value(z) - e.fsecond(z)) < 1e-7);
    }
  }
}

TEST_CASE("operator closed forms match the coefficient operator") {
  const std::vector<ComplexScalar> zetas = {
      {0.3, 0.4}, {-0.9, 0.0}, {0.0, 0.99}, {0.25, 0.0},
  };
  for (const auto& id : catalog_ids()) {
    CatalogEntry e = entry(id);
    PowerSeries f = truncate(e, 128);
    for (ComplexScalar zv : zetas) {
      ZetaParam zeta(zv);
      auto dz = series_evaluator(zeta_derivative(f, zeta));
      for (ComplexScalar z : probe_points()) {
        INFO(id << " zeta=" << fmt_complex(zv) << " z=" << fmt_complex(z));
        REQUIRE(std::abs(dz.value(z) - e.dzeta(zv, z)) < 1e-10);
      }
    }
  }
}

TEST_CASE("operator closed forms stay continuous across the zeta = 1 seam") {
  // Inside |1 - zeta| < 1e-7 the evaluators switch to the f' formula; the
  // switch may differ from the true operator value by O(|1 - zeta| * n^2).
  for (const auto& id : catalog_ids()) {
    CatalogEntry e = entry(id);
    PowerSeries f = truncate(e, 128);

    ZetaParam exact(ComplexScalar(1.0, 0.0));
    auto dz1 = series_evaluator(zeta_derivative(f, exact));
    for (ComplexScalar z : probe_points()) {
      INFO(id << " zeta=1 z=" << fmt_complex(z));
      REQUIRE(std::abs(dz1.value(z) - e.dzeta(ComplexScalar(1.0, 0.0), z)) < 1e-11);
      REQUIRE(std::abs(e.dzeta(ComplexScalar(1.0, 0.0), z) - e.fprime(z)) < 1e-13);
    }

    ZetaParam near(ComplexScalar(1.0 - 1e-9, 0.0));
    auto dzn = series_evaluator(zeta_derivative(f, near));
    for (ComplexScalar z : probe_points()) {
      INFO(id << " zeta=1-1e-9 z=" << fmt_complex(z));
      REQUIRE(std::abs(dzn.value(z) - e.dzeta(near.value, z)) < 1e-7);
    }

    // Just outside the seam the generic formula is live. Its difference
    // structure cancels to O(|1-zeta|), costing about |1-zeta|^-1 ulps.
    ZetaParam outside(ComplexScalar(1.0 - 1e-6, 0.0));
    auto dzo = series_evaluator(zeta_derivative(f, outside));
    for (ComplexScalar z : probe_points()) {
      INFO(id << " zeta=1-1e-6 z=" << fmt_complex(z));
      REQUIRE(std::abs(dzo.value(z) - e.dzeta(outside.value, z)) < 1e-8);
    }
  }
}

TEST_CASE("log-family operator forms bridge the small-z branch") {
  for (const auto& id : {"log_convex", "strip_convex"}) {
    CatalogEntry e = entry(id);
    PowerSeries f = truncate(e, 64);
    ZetaParam zeta(ComplexScalar(0.4, 0.3));
    auto dz = series_evaluator(zeta_derivative(f, zeta));
    // one point well inside the Taylor branch, one just outside it; past the
    // seam the generic form divides a log difference by z, so its error
    // floor is a few ulps over |z| (~1e-11 at |z| = 2e-5)
    ComplexScalar zin(5e-6, 2e-6), zout(2e-5, -1e-5);
    INFO(id);
    REQUIRE(std::abs(dz.value(zin) - e.dzeta(zeta.value, zin)) < 1e-12);
    REQUIRE(std::abs(dz.value(zout) - e.dzeta(zeta.value, zout)) < 1e-10);
    // the operator image opens with d_zeta f(0) = a_1 = 1
    REQUIRE(std::abs(e.dzeta(zeta.value, ComplexScalar(1e-9, 0.0)) - ComplexScalar(1.0, 0.0)) <
            1e-8);
  }
}

TEST_CASE("truncate validates order and normalization") {
  CatalogEntry hp = entry("half_plane");
  PowerSeries f = truncate(hp, 8);
  REQUIRE(f.order() == 8);
  REQUIRE(f.coeffs[0] == ComplexScalar(0.0, 0.0));
  REQUIRE(f.coeffs[1] == ComplexScalar(1.0, 0.0));
  REQUIRE(f.normalized);
  require_error(ErrorCode::INVALID_ARGUMENT, [&] { truncate(hp, 0); });
}

TEST_CASE("entry tails dispatch on the coefficient family") {
  int order = 32;
  double r = 0.6;
  REQUIRE(entry_tail(entry("half_plane"), order, r) == geometric_tail(order, r));
  REQUIRE(entry_tail(entry("log_convex"), order, r) == geometric_tail(order, r));
  REQUIRE(entry_tail(entry("koebe"), order, r) == weighted_tail1(order, r));
  REQUIRE(entry_tail(entry("h_zeta"), order, r) == weighted_tail1(order, r));
  REQUIRE(entry_tail(entry("quad_starlike"), order, r) == 0.0);
  REQUIRE(entry_tail(entry("quad_nonunivalent"), order, r) == 0.0);

  CatalogEntry blank;
  REQUIRE(std::isinf(entry_tail(blank, order, r)));
}
