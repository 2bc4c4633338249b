#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bezout/multi.hpp"
#include "test_util.hpp"

using namespace bezout;
using testutil::coeff_distance;
using testutil::poly_close;

namespace {

Polynomial P(std::initializer_list<Complex> c) { return Polynomial(std::vector<Complex>(c)); }

Complex inner(const std::vector<Complex>& v, const std::vector<Complex>& y) {
  Complex s{};
  for (size_t k = 0; k < v.size(); ++k) s += v[k] * std::conj(y[k]);
  return s;
}

double min_inner(const std::vector<std::vector<Complex>>& vs, const std::vector<Complex>& y) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& v : vs) m = std::min(m, std::abs(inner(v, y)));
  return m;
}

// Brute-force maximin over a phase/magnitude grid on the unit sphere of C^L
// (global phase fixed), at least 1e5 points for L in {2, 3}.
double plank_grid_max(const std::vector<std::vector<Complex>>& vs) {
  const size_t dim = vs[0].size();
  const double two_pi = 2.0 * std::numbers::pi;
  double best = 0.0;
  if (dim == 1) {
    return min_inner(vs, {Complex(1.0, 0.0)});
  }
  if (dim == 2) {
    const int mag = 400, ph = 400;
    for (int i = 0; i <= mag; ++i) {
      const double t = 0.5 * std::numbers::pi * i / mag;
      for (int j = 0; j < ph; ++j) {
        const double phi = two_pi * j / ph;
        best = std::max(
            best, min_inner(vs, {Complex(std::cos(t), 0), std::polar(std::sin(t), phi)}));
      }
    }
    return best;
  }
  const int m = 19;  // 19^4 = 130321 grid points
  for (int i1 = 0; i1 <= m; ++i1)
    for (int i2 = 0; i2 <= m; ++i2)
      for (int j1 = 0; j1 < m; ++j1)
        for (int j2 = 0; j2 < m; ++j2) {
          const double t1 = 0.5 * std::numbers::pi * i1 / m;
          const double t2 = 0.5 * std::numbers::pi * i2 / m;
          const double p1 = two_pi * j1 / m, p2 = two_pi * j2 / m;
          best = std::max(
              best,
              min_inner(vs, {Complex(std::cos(t1), 0),
                             std::polar(std::sin(t1) * std::cos(t2), p1),
                             std::polar(std::sin(t1) * std::sin(t2), p2)}));
        }
  return best;
}

std::vector<std::vector<Complex>> random_family(std::mt19937_64& rng, int n, int dim) {
  std::vector<std::vector<Complex>> vs(n, std::vector<Complex>(dim));
  for (auto& v : vs) {
    double norm = 0.0;
    for (Complex& c : v) {
      c = testutil::random_unit_box(rng);
      norm += std::norm(c);
    }
    norm = std::sqrt(norm);
    const double target = 1.0 + 2.0 * std::abs(testutil::random_unit_box(rng).real());
    for (Complex& c : v) c *= target / norm;  // norms in [1, 3]
  }
  return vs;
}

}  // namespace

TEST_CASE("plank: closed and symmetric cases") {
  const PlankCertificate single = plank_vector({{Complex(2, 0), Complex{}}});
  CHECK(single.achieved == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(single.bound == doctest::Approx(1.0).epsilon(1e-12));

  const PlankCertificate ortho =
      plank_vector({{Complex(1, 0), Complex{}}, {Complex{}, Complex(1, 0)}});
  CHECK(ortho.achieved == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));

  const PlankCertificate coincident =
      plank_vector({{Complex(1, 0), Complex{}}, {Complex(1, 0), Complex{}}});
  CHECK(coincident.achieved == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(plank_vector({}), Error);
  CHECK_THROWS_AS(plank_vector({{Complex(0.5, 0)}}), Error);
}

TEST_CASE("plank: certificate and grid oracle on random families") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int dim = 1 + static_cast<int>(rng() % 5);
    const auto vs = random_family(rng, n, dim);
    const PlankCertificate cert = plank_vector(vs, trial);
    CHECK(cert.achieved >= cert.bound - 1e-9);

    double ny = 0.0;
    for (const Complex& c : cert.y) ny += std::norm(c);
    CHECK(std::abs(std::sqrt(ny) - 1.0) <= 1e-12);
  }

  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int dim = 2 + static_cast<int>(rng() % 2);
    const auto vs = random_family(rng, n, dim);
    const PlankCertificate cert = plank_vector(vs, trial);
    CHECK(cert.achieved >= plank_grid_max(vs) - 1e-3);
  }
}

TEST_CASE("plank: deterministic for a fixed seed") {
  std::mt19937_64 rng(67);
  const auto vs = random_family(rng, 3, 3);
  const PlankCertificate c1 = plank_vector(vs, 5);
  const PlankCertificate c2 = plank_vector(vs, 5);
  REQUIRE(c1.y.size() == c2.y.size());
  for (size_t k = 0; k < c1.y.size(); ++k) CHECK(c1.y[k] == c2.y[k]);
  CHECK(c1.achieved == c2.achieved);
}

TEST_CASE("solve_multi: L=1 reduces to the single identity") {
  const int n = 3;
  const double delta = 0.25;
  const MultiBezoutSolution sol =
      solve_multi_bezout(Polynomial::monomial(n), {P({-delta, 1})}, delta);
  const double dn = std::pow(delta, -n);
  CHECK(poly_close(sol.r, P({dn}), 1e-9 * dn));
  REQUIRE(sol.s_list.size() == 1);
  CHECK(poly_close(sol.s_list[0], P({-4, -16, -64}), 1e-9 * dn));
  CHECK(sol.residual <= 1e-9 * (1 + sol.joint_norm));
}

TEST_CASE("solve_multi: constants with |c1|^2+|c2|^2 = delta^2") {
  const Complex c1(0.3, 0), c2(0, 0.4);
  const double delta = 0.5;
  const MultiBezoutSolution sol = solve_multi_bezout(P({0, 1}), {P({c1}), P({c2})}, delta);
  CHECK(sol.r.is_zero());
  CHECK(poly_close(sol.s_list[0], P({std::conj(c1) / (delta * delta)}), 1e-10));
  CHECK(poly_close(sol.s_list[1], P({std::conj(c2) / (delta * delta)}), 1e-10));
  CHECK(sol.residual <= 1e-12);
  // sum S_j c_j == 1
  const Complex check = sol.s_list[0].coeff(0) * c1 + sol.s_list[1].coeff(0) * c2;
  CHECK(std::abs(check - Complex(1, 0)) <= 1e-12);
}

TEST_CASE("solve_multi: random L=3 instances") {
  std::mt19937_64 rng(71);
  const Polynomial a = P({1, -2, 1}) * P({1, 1});  // (z-1)^2 (z+1)
  const RootSet roots_a = find_roots(a);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> bs(3);
    double total = 0.0;
    for (Polynomial& b : bs) {
      b = testutil::random_poly(rng, 4);
      const double nb = norm_coeff(b);
      total += nb * nb;
    }
    const double inv = 1.0 / std::sqrt(total);
    for (Polynomial& b : bs) b = inv * b;

    double min_sq = std::numeric_limits<double>::infinity();
    for (const RootEntry& e : roots_a.entries) {
      double s = 0.0;
      for (const Polynomial& b : bs) s += std::norm(b(e.root));
      min_sq = std::min(min_sq, s);
    }
    if (min_sq < 1e-4) continue;
    const double delta = std::sqrt(min_sq) * 0.999;

    const MultiBezoutSolution sol = solve_multi_bezout(a, bs, delta, SolveMethod::sylvester,
                                                       static_cast<uint64_t>(trial));
    CHECK(sol.residual <= 1e-9 * (1 + sol.joint_norm));

    // rank-one structure: S_j / conj(y_j) identical across j
    const Polynomial s_common = sol.s_list[0] * (1.0 / std::conj(sol.y.y[0]));
    for (size_t j = 1; j < 3; ++j) {
      if (std::abs(sol.y.y[j]) < 1e-8) continue;
      CHECK(coeff_distance(sol.s_list[j] * (1.0 / std::conj(sol.y.y[j])), s_common) <=
            1e-10 * (1 + norm_coeff(s_common)));
    }

    // norm identity |R|^2 + sum |S_j|^2 = |R|^2 + |S|^2
    CHECK(std::abs(sol.joint_norm - sol.single_joint_norm) <=
          1e-10 * (1 + sol.single_joint_norm));

    // combined-B lower bound at the roots of A
    for (const RootEntry& e : roots_a.entries)
      CHECK(std::abs(sol.combined_b(e.root)) >= delta * sol.y.bound - 1e-9);
  }
}

TEST_CASE("solve_multi: hypothesis violations") {
  CHECK_THROWS_AS(solve_multi_bezout(P({0, 1}), {P({2.0})}, 0.5), Error);  // |B|^2 > 1
  CHECK_THROWS_AS(solve_multi_bezout(P({0, 1}), {P({0.1})}, 0.9), Error);  // delta too big
  CHECK_THROWS_AS(solve_multi_bezout(P({1}), {P({0.5})}, 0.1), Error);     // constant A
  CHECK_THROWS_AS(solve_multi_bezout(P({0, 1}), {}, 0.1), Error);          // empty list
}
