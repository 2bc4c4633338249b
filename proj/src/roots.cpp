#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "bezout/poly.hpp"

namespace bezout {

namespace {

// Relative coefficient distance between p/lead and the monic expansion of the
// candidate root set. Used to steer cluster merging.
double roundtrip_residual(const Polynomial& p, const RootSet& rs) {
  const Polynomial rebuilt = from_roots(rs, p.leading());
  double err = 0.0;
  const int n = std::max(p.degree(), rebuilt.degree());
  for (int j = 0; j <= n; ++j) err = std::max(err, std::abs(p.coeff(j) - rebuilt.coeff(j)));
  const double scale = norm_coeff(p);
  return scale > 0.0 ? err / scale : err;
}

// Simultaneous Aberth-Ehrlich iteration for a polynomial with nonzero
// constant term (zero roots are stripped by the caller).
std::vector<Complex> aberth(const Polynomial& p) {
  const int n = p.degree();
  const Complex lead = p.leading();
  double radius = 0.0;
  for (int j = 0; j < n; ++j) radius = std::max(radius, std::abs(p.coeff(j) / lead));
  radius = 1.0 + radius;

  std::vector<Complex> z(n);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < n; ++i) {
    // perturbed circle start; the offset breaks symmetric stalls
    const double theta = two_pi * (i + 0.25) / n + 0.4371 / n;
    z[i] = std::polar(radius * (1.0 + 0.05 * std::sin(3.0 + 7.0 * i)), theta);
  }

  const Polynomial dp = p.derivative();
  std::vector<Complex> w(n);
  for (int iter = 0; iter < kRootMaxIter; ++iter) {
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      const Complex pv = p(z[i]);
      if (pv == Complex{}) {
        w[i] = Complex{};
        continue;
      }
      Complex dv = dp(z[i]);
      if (dv == Complex{}) dv = Complex(1e-30, 0.0);
      const Complex newton = pv / dv;
      Complex repulse{};
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (std::abs(diff) < 1e-30) diff = Complex(1e-30, 0.0);
        repulse += 1.0 / diff;
      }
      Complex denom = 1.0 - newton * repulse;
      if (std::abs(denom) < 1e-30) denom = Complex(1e-30, 0.0);
      w[i] = newton / denom;
      z[i] -= w[i];
      if (std::abs(w[i]) > kRootNewtonTol * (1.0 + std::abs(z[i]))) converged = false;
    }
    if (converged) break;
  }
  return z;
}

// Single-linkage clustering at the given threshold.
RootSet cluster(const std::vector<Complex>& pts, double eps) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) <= eps) parent[find(i)] = find(j);

  std::vector<Complex> sum(n);
  std::vector<int> count(n, 0);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    sum[r] += pts[i];
    ++count[r];
  }
  RootSet rs;
  for (int i = 0; i < n; ++i)
    if (count[i] > 0) rs.entries.push_back({sum[i] / static_cast<double>(count[i]), count[i]});
  return rs;
}

// Newton refinement of an m-fold root as a simple root of p^(m-1).
void polish(const Polynomial& p, RootSet& rs) {
  for (RootEntry& e : rs.entries) {
    const Polynomial target = e.multiplicity > 1 ? p.derivative(e.multiplicity - 1) : p;
    const Polynomial dt = target.derivative();
    Complex z = e.root;
    double best = std::abs(target(z));
    Complex best_z = z;
    for (int it = 0; it < 10; ++it) {
      const Complex dv = dt(z);
      if (std::abs(dv) < 1e-300) break;
      z -= target(z) / dv;
      const double v = std::abs(target(z));
      if (v < best) {
        best = v;
        best_z = z;
      } else {
        break;
      }
    }
    if (std::abs(best_z - e.root) <= 1e3 * kClusterEps) e.root = best_z;
  }
}

void sort_entries(RootSet& rs) {
  std::sort(rs.entries.begin(), rs.entries.end(), [](const RootEntry& a, const RootEntry& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
}

}  // namespace

RootSet find_roots(const Polynomial& p) {
  if (p.degree() < 1) raise(Errc::constant_polynomial, "find_roots: polynomial is constant");

  // Strip exact-scale zero roots at the origin first.
  const double scale = norm_coeff(p);
  int zero_mult = 0;
  while (zero_mult < p.degree() && std::abs(p.coeff(zero_mult)) <= 1e-14 * scale) ++zero_mult;
  std::vector<Complex> rest(p.coeffs().begin() + zero_mult, p.coeffs().end());
  const Polynomial q{std::vector<Complex>(rest)};

  RootSet rs;
  if (q.degree() >= 1) {
    const std::vector<Complex> pts = aberth(q);
    const Polynomial q_monic = (1.0 / q.leading()) * q;

    // Multiplicity-m clusters scatter like eps^(1/m), far beyond kClusterEps
    // for m >= 3, so try a ladder of clustering radii and keep the candidate
    // with the best polished round-trip residual. Near-ties go to the coarser
    // clustering: a true multiple root reconstructs orders of magnitude
    // better once merged, while genuinely distinct roots degrade sharply.
    double best_res = std::numeric_limits<double>::infinity();
    for (double threshold = kClusterEps; threshold <= 1.1e-2; threshold *= 10.0) {
      RootSet candidate = cluster(pts, threshold);
      if (threshold > kClusterEps && candidate.entries.size() == rs.entries.size()) continue;
      polish(q, candidate);
      const double res = roundtrip_residual(q_monic, candidate);
      if (res < best_res * 0.5 || (res <= best_res * 2.0 && res < 1e-12)) {
        best_res = res;
        rs = std::move(candidate);
      }
    }
    if (best_res > 1e-4)
      raise(Errc::numeric_failure, "find_roots: root set does not reproduce the polynomial");
  }

  if (zero_mult > 0) rs.entries.push_back({Complex{}, zero_mult});
  sort_entries(rs);
  return rs;
}

}  // namespace bezout
