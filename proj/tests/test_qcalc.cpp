#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qdisc/catalog.hpp"
#include "qdisc/qcalc.hpp"

using namespace qdisc;

namespace {

template <typename F>
void require_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected an Error, none was thrown");
  } catch (const Error& e) {
    INFO(e.what());
    REQUIRE(e.code() == code);
  }
}

}  // namespace

TEST_CASE("parameter ranges are enforced at construction") {
  REQUIRE(ZetaParam(ComplexScalar(0.3, 0.4)).value == ComplexScalar(0.3, 0.4));
  REQUIRE_NOTHROW(ZetaParam(std::polar(1.0, 2.1)));  // boundary admitted
  require_error(ErrorCode::ZETA_OUT_OF_RANGE, [] { ZetaParam(ComplexScalar(1.2, 0.0)); });
  require_error(ErrorCode::ZETA_OUT_OF_RANGE, [] { ZetaParam(ComplexScalar(0.8, 0.8)); });

  REQUIRE(QParam(0.0).value == 0.0);
  REQUIRE(QParam(0.999).value == 0.999);
  require_error(ErrorCode::Q_OUT_OF_RANGE, [] { QParam(1.0); });
  require_error(ErrorCode::Q_OUT_OF_RANGE, [] { QParam(-0.1); });
}

TEST_CASE("bracket numbers follow the geometric-sum recurrence") {
  ZetaParam zeta(ComplexScalar(0.5, 0.0));
  REQUIRE(bracket_n(zeta, 1) == ComplexScalar(1.0, 0.0));
  REQUIRE(bracket_n(zeta, 2) == ComplexScalar(1.5, 0.0));
  REQUIRE(bracket_n(zeta, 3) == ComplexScalar(1.75, 0.0));  // dyadic, hence exact

  // at zeta = 1 the bracket is exactly n for every n a double can hold exactly
  ZetaParam one(ComplexScalar(1.0, 0.0));
  for (int n = 1; n <= 256; ++n) {
    REQUIRE(bracket_n(one, n) == ComplexScalar(static_cast<double>(n), 0.0));
  }

  // at zeta = 0 the bracket collapses to 1
  ZetaParam zero(ComplexScalar(0.0, 0.0));
  for (int n : {1, 2, 17, 128}) REQUIRE(bracket_n(zero, n) == ComplexScalar(1.0, 0.0));

  require_error(ErrorCode::INVALID_ARGUMENT, [&] { bracket_n(zeta, 0); });
}

TEST_CASE("generator series coefficients are the brackets, bit for bit") {
  for (ComplexScalar zv : {ComplexScalar(0.5, 0.5), ComplexScalar(-0.3, 0.7),
                           ComplexScalar(1.0, 0.0), std::polar(1.0, 1.0)}) {
    ZetaParam zeta(zv);
    PowerSeries h = h_zeta_series(zeta, 64);
    REQUIRE(h.normalized);
    REQUIRE(h.order() == 64);
    REQUIRE(h.coeffs[0] == ComplexScalar(0.0, 0.0));
    for (int n = 1; n <= 64; ++n)
      REQUIRE(h.coeffs[static_cast<std::size_t>(n)] == bracket_n(zeta, n));
  }
}

TEST_CASE("coefficient operator multiplies by brackets, bit for bit") {
  PowerSeries koebe = truncate(entry("koebe"), 128);
  for (ComplexScalar zv : {ComplexScalar(0.3, 0.4), ComplexScalar(0.9, 0.0),
                           std::polar(1.0, 2.5)}) {
    ZetaParam zeta(zv);
    PowerSeries d = zeta_derivative(koebe, zeta);
    REQUIRE(d.order() == 127);
    REQUIRE_FALSE(d.normalized);
    REQUIRE(d.coeffs[0] == koebe.coeffs[1]);
    for (int n = 2; n <= 128; ++n)
      REQUIRE(d.coeffs[static_cast<std::size_t>(n - 1)] ==
              bracket_n(zeta, n) * koebe.coeffs[static_cast<std::size_t>(n)]);
  }

  require_error(ErrorCode::NOT_NORMALIZED, [] {
    zeta_derivative(PowerSeries{{{0.0, 0.0}, {2.0, 0.0}}, false},
                    ZetaParam(ComplexScalar(0.5, 0.0)));
  });
}

TEST_CASE("operator degenerations: derivative at zeta=1, f/z at zeta=0") {
  ZetaParam one(ComplexScalar(1.0, 0.0));
  ZetaParam zero(ComplexScalar(0.0, 0.0));
  for (const std::string& id : catalog_ids()) {
    PowerSeries f = truncate(entry(id), 96);

    // [n]_1 = n exactly, so the operator IS termwise differentiation here
    PowerSeries d1 = zeta_derivative(f, one);
    PowerSeries fp = differentiate(f);
    REQUIRE(d1.coeffs == fp.coeffs);

    // [n]_0 = 1: the operator divides out one power of z
    PowerSeries d0 = zeta_derivative(f, zero);
    for (double r : {0.2, 0.6, 0.95}) {
      for (int k = 0; k < 8; ++k) {
        ComplexScalar z = std::polar(r, 2.0 * M_PI * k / 8.0 + 0.1);
        REQUIRE(std::abs(evaluate(d0, z) - evaluate(f, z) / z) < 1e-12);
      }
    }
  }
}

TEST_CASE("series evaluator carries the value and the origin derivative") {
  PowerSeries f = truncate(entry("half_plane"), 32);
  PointEvaluator ev = series_evaluator(f);
  REQUIRE(ev.derivative_at_origin == f.coeffs[1]);
  ComplexScalar z(0.3, -0.2);
  REQUIRE(ev.value(z) == evaluate(f, z));
}

TEST_CASE("difference quotient: closed form, origin channel, domain guard") {
  CatalogEntry hp = entry("half_plane");
  PointEvaluator f = hp.f_eval();
  QParam q(0.5);

  // for z/(1-z) the quotient is exactly 1/((1-z)(1-qz))
  for (double r : {0.1, 0.5, 0.9}) {
    for (int k = 0; k < 12; ++k) {
      ComplexScalar z = std::polar(r, 2.0 * M_PI * k / 12.0 + 0.05);
      ComplexScalar expected = 1.0 / ((1.0 - z) * (1.0 - q.value * z));
      REQUIRE(std::abs(jackson_quotient(f, q, z) - expected) < 1e-13);
    }
  }

  // q = 0 reduces to f(z)/z
  ComplexScalar z(0.4, 0.3);
  REQUIRE(std::abs(jackson_quotient(f, QParam(0.0), z) - hp.f(z) / z) < 1e-14);

  // below the origin guard the exact derivative channel answers
  REQUIRE(jackson_quotient(f, q, ComplexScalar(1e-10, 0.0)) == f.derivative_at_origin);
  REQUIRE(jackson_quotient(f, q, ComplexScalar(0.0, 0.0)) == ComplexScalar(1.0, 0.0));

  require_error(ErrorCode::POINT_OUTSIDE_DISC,
                [&] { jackson_quotient(f, q, ComplexScalar(1.0, 0.0)); });
}
