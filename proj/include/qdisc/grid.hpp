#pragma once

// Polar sampling of the open unit disc, sampling lattices for the operator
// parameter, and the min/max scan driver. Enumeration is radius-major with
// angles ascending from 0; the reduction always walks that order, so reports
// are bit-identical no matter how many threads computed the values.

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "qdisc/common.hpp"

namespace qdisc {

struct DiscGrid {
  std::vector<double> radii;  // strictly increasing, all in (0,1)
  int angles_per_circle = 256;

  std::size_t size() const { return radii.size() * static_cast<std::size_t>(angles_per_circle); }

  ComplexScalar point(std::size_t index) const {
    std::size_t a = static_cast<std::size_t>(angles_per_circle);
    double r = radii[index / a];
    double theta = 2.0 * M_PI * static_cast<double>(index % a) / static_cast<double>(angles_per_circle);
    return std::polar(r, theta);
  }

  std::string describe() const {
    return std::to_string(radii.size()) + " radii (max " + fmt_double(radii.back()) + ") x " +
           std::to_string(angles_per_circle) + " angles";
  }
};

inline DiscGrid make_grid(std::vector<double> radii, int angles) {
  if (radii.empty()) throw Error(ErrorCode::EMPTY_GRID, "grid needs at least one radius");
  if (angles < 8) throw Error(ErrorCode::INVALID_ARGUMENT, "grid needs at least 8 angles per circle");
  double prev = 0.0;
  for (double r : radii) {
    if (!(r > prev && r < 1.0))
      throw Error(ErrorCode::RADIUS_OUT_OF_RANGE,
                  "grid radii must be strictly increasing in (0,1), got " + fmt_double(r));
    prev = r;
  }
  return DiscGrid{std::move(radii), angles};
}

// Radii 0.1, 0.2, ... below r_max, then r_max itself.
inline DiscGrid default_disc_grid(double r_max = 0.95, int angles = 256) {
  if (!(r_max > 0.0 && r_max < 1.0))
    throw Error(ErrorCode::RADIUS_OUT_OF_RANGE, "r_max must lie in (0,1), got " + fmt_double(r_max));
  std::vector<double> radii;
  for (int k = 1; k <= 9; ++k) {
    double r = 0.1 * k;
    if (r < r_max - 1e-12) radii.push_back(r);
  }
  radii.push_back(r_max);
  return make_grid(std::move(radii), angles);
}

// Dense lattice for difference-quotient vs coefficient-operator comparison:
// 40 radii 0.02..0.80 times 260 angles = 10400 points. Capped at 0.8 so the
// order-128 truncation budgets stay far below the agreement tolerance.
inline DiscGrid operator_grid() {
  std::vector<double> radii;
  for (int k = 1; k <= 40; ++k) radii.push_back(0.02 * k);
  return make_grid(std::move(radii), 260);
}

// 32 boundary points e^{2 pi i k/32}, then 16 arguments on each of the
// moduli 0.25, 0.5, 0.75, 0.95: 96 operator parameters covering the closed
// disc including its distinguished boundary.
inline std::vector<ComplexScalar> zeta_grid96() {
  std::vector<ComplexScalar> zs;
  zs.reserve(96);
  for (int k = 0; k < 32; ++k) zs.push_back(std::polar(1.0, 2.0 * M_PI * k / 32.0));
  for (double rho : {0.25, 0.5, 0.75, 0.95})
    for (int k = 0; k < 16; ++k) zs.push_back(std::polar(rho, 2.0 * M_PI * k / 16.0));
  return zs;
}

inline std::vector<ComplexScalar> zeta_polar_grid(const std::vector<double>& moduli, int args) {
  if (args < 1) throw Error(ErrorCode::INVALID_ARGUMENT, "need at least one argument sample");
  std::vector<ComplexScalar> zs;
  zs.reserve(moduli.size() * static_cast<std::size_t>(args));
  for (double rho : moduli) {
    if (!(rho >= 0.0 && rho <= 1.0))
      throw Error(ErrorCode::ZETA_OUT_OF_RANGE, "zeta modulus must lie in [0,1]");
    for (int k = 0; k < args; ++k) zs.push_back(std::polar(rho, 2.0 * M_PI * k / args));
  }
  return zs;
}

inline int parallel_width() {
  if (const char* env = std::getenv("QDISC_THREADS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
    if (w < 0) return 1;
    // 0 = auto
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct ScanResult {
  double min_margin = 0.0;
  ComplexScalar argmin{0.0, 0.0};
  double max_aux = 0.0;  // largest per-point error budget seen over the grid
  std::size_t singular_skipped = 0;
  std::size_t evaluated = 0;
};

// Point function returns {margin, budget}; NaN margin marks a skipped
// singular point. Values may be computed in parallel; the reduction is a
// serial walk in enumeration order (first occurrence wins ties).
inline ScanResult scan_min2(const DiscGrid& grid,
                            const std::function<std::pair<double, double>(ComplexScalar)>& fn) {
  std::size_t n = grid.size();
  if (n == 0) throw Error(ErrorCode::EMPTY_GRID, "empty grid");
  std::vector<std::pair<double, double>> vals(n);

  int width = parallel_width();
  if (width > 1 && n >= 2048) {
    std::vector<std::thread> pool;
    std::size_t chunk = (n + width - 1) / width;
    for (int t = 0; t < width; ++t) {
      std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi]() {
        for (std::size_t i = lo; i < hi; ++i) vals[i] = fn(grid.point(i));
      });
    }
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t i = 0; i < n; ++i) vals[i] = fn(grid.point(i));
  }

  ScanResult res;
  bool found = false;
  for (std::size_t i = 0; i < n; ++i) {
    double m = vals[i].first;
    if (std::isnan(m)) {
      ++res.singular_skipped;
      continue;
    }
    ++res.evaluated;
    if (vals[i].second > res.max_aux) res.max_aux = vals[i].second;
    if (!found || m < res.min_margin) {
      res.min_margin = m;
      res.argmin = grid.point(i);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::ALL_POINTS_SINGULAR, "every grid point was singular");
  return res;
}

inline ScanResult scan_min(const DiscGrid& grid, const std::function<double(ComplexScalar)>& fn) {
  return scan_min2(grid, [&](ComplexScalar z) { return std::make_pair(fn(z), 0.0); });
}

// Max-deviation variant for identity checks; same skip and order rules.
inline ScanResult scan_max(const DiscGrid& grid, const std::function<double(ComplexScalar)>& fn) {
  ScanResult neg = scan_min(grid, [&](ComplexScalar z) {
    double v = fn(z);
    return std::isnan(v) ? v : -v;
  });
  neg.min_margin = -neg.min_margin;
  return neg;
}

}  // namespace qdisc
