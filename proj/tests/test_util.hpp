#pragma once

#include <complex>
#include <random>
#include <vector>

#include "bezout/poly.hpp"

namespace testutil {

using bezout::Complex;
using bezout::Polynomial;

inline Complex random_unit_box(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return {d(rng), d(rng)};
}

inline Polynomial random_poly(std::mt19937_64& rng, int max_deg, double scale = 1.0) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  const int n = deg(rng);
  std::vector<Complex> c(n + 1);
  for (auto& v : c) v = scale * random_unit_box(rng);
  if (std::abs(c.back()) < 0.1) c.back() += Complex(0.5, 0.0);
  return Polynomial(std::move(c));
}

// Distinct points with pairwise separation at least min_sep.
inline std::vector<Complex> random_separated_points(std::mt19937_64& rng, int count,
                                                    double min_sep, double radius = 1.5) {
  std::uniform_real_distribution<double> d(-radius, radius);
  std::vector<Complex> pts;
  while (static_cast<int>(pts.size()) < count) {
    const Complex z{d(rng), d(rng)};
    bool ok = true;
    for (const Complex& w : pts)
      if (std::abs(z - w) < min_sep) {
        ok = false;
        break;
      }
    if (ok) pts.push_back(z);
  }
  return pts;
}

inline double coeff_distance(const Polynomial& a, const Polynomial& b) {
  double m = 0.0;
  const int n = std::max(a.degree(), b.degree());
  for (int j = 0; j <= n; ++j) m = std::max(m, std::abs(a.coeff(j) - b.coeff(j)));
  return m;
}

inline bool poly_close(const Polynomial& a, const Polynomial& b, double tol) {
  return coeff_distance(a, b) <= tol;
}

}  // namespace testutil
