// Minimal tour: build a series, apply the difference operator, check one
// margin, and print the report as JSON.

#include <iostream>

#include "qdisc/qdisc.hpp"

int main() {
  using namespace qdisc;

  // the half-plane map z/(1-z) truncated at order 32
  CatalogEntry hp = entry("half_plane");
  PowerSeries f = truncate(hp, 32);

  // its zeta-difference derivative has coefficients [n]_zeta a_n
  ZetaParam zeta(ComplexScalar(0.3, 0.4));
  PowerSeries df = zeta_derivative(f, zeta);
  std::cout << "[3]_zeta          = " << fmt_complex(bracket_n(zeta, 3)) << "\n";
  std::cout << "df coeff at z^2   = " << fmt_complex(df.coeffs[2]) << "\n";

  // the difference quotient agrees with the coefficient form at a point
  ComplexScalar z(0.2, -0.1);
  ComplexScalar quotient = jackson_quotient(hp.f_eval(), QParam(0.5), z);
  std::cout << "difference quotient at z = " << fmt_complex(z) << " is "
            << fmt_complex(quotient) << "\n";

  // one margin check over the default grid, reported as JSON
  MarginReport rep = check_theorem1(hp, zeta, default_disc_grid(0.9, 64));
  std::cout << to_json(rep) << "\n";
  return rep.verdict == Verdict::PASS ? 0 : 1;
}
