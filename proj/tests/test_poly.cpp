#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bezout/poly.hpp"
#include "test_util.hpp"

using namespace bezout;
using testutil::coeff_distance;
using testutil::poly_close;

namespace {

Polynomial P(std::initializer_list<Complex> c) { return Polynomial(std::vector<Complex>(c)); }

// Independent sup-norm oracle: plain dense max, no refinement.
double sup_circle_oracle(const Polynomial& p, double radius, int samples = 100001) {
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / samples;
    best = std::max(best, std::abs(p(std::polar(radius, theta))));
  }
  return best;
}

}  // namespace

TEST_CASE("eval") {
  CHECK(P({-0.1, 1.0})(Complex(0, 0)) == Complex(-0.1, 0));
  CHECK(std::abs(P({0, 0, 1})(Complex(0, 1)) - Complex(-1, 0)) < 1e-15);
  // (z-eta)(z-1+eta) at 0 equals eta(1-eta)
  const double eta = 0.25;
  const Polynomial p = P({-eta, 1}) * P({eta - 1.0, 1});
  CHECK(std::abs(p(Complex{}) - Complex(0.1875, 0)) < 1e-15);
}

TEST_CASE("derivative") {
  const Polynomial z2 = P({0, 0, 1});
  CHECK(poly_close(z2.derivative(), P({0, 2}), 0));
  CHECK(z2.derivative(3).is_zero());
  CHECK(poly_close(P({1, 2, 3}).derivative(), P({2, 6}), 0));
}

TEST_CASE("ring operations") {
  CHECK(poly_close(P({-1, 1}) * P({1, 1}), P({-1, 0, 1}), 1e-15));
  CHECK((P({0, 0, 1}) + (-P({0, 0, 1}))).is_zero());
  CHECK(P({0, 0, 1}).degree() == 2);
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("ring distributivity on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = testutil::random_poly(rng, 8);
    const Polynomial q = testutil::random_poly(rng, 8);
    const Polynomial r = testutil::random_poly(rng, 8);
    CHECK(coeff_distance((p + q) * r, p * r + q * r) < 1e-12);
  }
}

TEST_CASE("from_roots") {
  CHECK(poly_close(from_roots({{{Complex(0.1, 0), 1}}}), P({-0.1, 1}), 1e-15));
  CHECK(poly_close(from_roots({{{Complex(1, 0), 2}}}), P({1, -2, 1}), 1e-15));
  CHECK(poly_close(from_roots({{{Complex{}, 1}, {Complex(1, 0), 1}}}), P({0, -1, 1}), 1e-15));
}

TEST_CASE("divide_by_linear") {
  CHECK(poly_close(divide_by_linear(P({-1, 0, 1}), Complex(1, 0)), P({1, 1}), 1e-15));
  CHECK(poly_close(divide_by_linear(P({0, 0, 1}), Complex{}), P({0, 1}), 1e-15));
  // (z-0.25)(z-0.75) / (z-0.25) = z-0.75, expanded and long-divided by hand
  const Polynomial p = P({-0.25, 1}) * P({-0.75, 1});
  CHECK(poly_close(divide_by_linear(p, Complex(0.25, 0)), P({-0.75, 1}), 1e-14));
  CHECK_THROWS_AS(divide_by_linear(P({-1, 0, 1}), Complex(0.5, 0)), Error);
}

TEST_CASE("division by a root leaves a tiny factor residual") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pts = testutil::random_separated_points(rng, 5, 0.02);
    RootSet rs;
    for (const Complex& z : pts) rs.entries.push_back({z, 1});
    const Polynomial p = from_roots(rs, testutil::random_unit_box(rng) + Complex(1.5, 0));
    const Complex u = pts[trial % pts.size()];
    const Polynomial q = divide_by_linear(p, u);
    CHECK(coeff_distance(p, P({-u, 1}) * q) <= 1e-10 * norm_coeff(p));
  }
}

TEST_CASE("poly_div_rem") {
  auto [q1, r1] = poly_div_rem(P({0, 0, 0, 1}), P({-1, 1}));
  CHECK(poly_close(q1, P({1, 1, 1}), 1e-15));
  CHECK(poly_close(r1, P({1}), 1e-15));

  auto [q2, r2] = poly_div_rem(P({1}), P({-1, 1}));
  CHECK(q2.is_zero());
  CHECK(poly_close(r2, P({1}), 0));

  // single subtraction step: z^2+1 = 1*(z^2-2z+1) + 2z
  auto [q3, r3] = poly_div_rem(P({1, 0, 1}), P({1, -2, 1}));
  CHECK(poly_close(q3, P({1}), 1e-15));
  CHECK(poly_close(r3, P({0, 2}), 1e-15));

  CHECK_THROWS_AS(poly_div_rem(P({1}), Polynomial()), Error);
}

TEST_CASE("division identity f = g*q + r") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = testutil::random_poly(rng, 9);
    const Polynomial g = testutil::random_poly(rng, 5);
    if (g.is_zero()) continue;
    auto [q, r] = poly_div_rem(f, g);
    CHECK(r.degree() < g.degree());
    // backward-error scale: the quotient can be large when g has small leading coefficient
    CHECK(coeff_distance(f, g * q + r) < 1e-12 * (1.0 + norm_coeff(f) + norm_coeff(g) * norm_coeff(q)));
  }
}

TEST_CASE("norms") {
  // S(z) = -1/delta - z/delta^2 with delta = 0.5 has coefficients (-2, -4)
  CHECK(norm_coeff(P({-2, -4})) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(norm_h2(P({1})) == doctest::Approx(1.0).epsilon(1e-15));

  const Polynomial p = P({1, 2});
  const double oracle = sup_circle_oracle(p, 3.0);
  CHECK(oracle == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(norm_sup_circle(p, 3.0) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("sup norm matches the dense oracle on random polynomials") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = testutil::random_poly(rng, 7);
    for (const double r : {1.0, 3.0}) {
      const double oracle = sup_circle_oracle(p, r);
      CHECK(norm_sup_circle(p, r) == doctest::Approx(oracle).epsilon(1e-8));
    }
  }
}

TEST_CASE("norm equivalence witnesses on P_K") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = testutil::random_poly(rng, 6);
    const int k = p.degree();
    if (k < 0) continue;
    const double sqrt_d = (k + 1) * std::pow(3.0, k);
    CHECK(norm_coeff(p) / sqrt_d <= norm_sup_circle(p, 1.0) * (1 + 1e-12));
    CHECK(norm_sup_circle(p, 3.0) <= sqrt_d * norm_coeff(p) * (1 + 1e-12));
    CHECK(norm_h2(p) >= norm_coeff(p) * (1 - 1e-12));
    CHECK(norm_h2(p) <= std::sqrt(k + 1.0) * norm_coeff(p) * (1 + 1e-12));
  }
}

TEST_CASE("roots: explicit cases") {
  const RootSet r1 = find_roots(P({1, -2, 1}));
  REQUIRE(r1.entries.size() == 1);
  CHECK(r1.entries[0].multiplicity == 2);
  CHECK(std::abs(r1.entries[0].root - Complex(1, 0)) < 1e-8);

  const RootSet r2 = find_roots(P({-0.1, 1}));
  REQUIRE(r2.entries.size() == 1);
  CHECK(std::abs(r2.entries[0].root - Complex(0.1, 0)) < 1e-13);

  // quadratic formula: (z-0.25)(z-0.75)
  const RootSet r3 = find_roots(P({-0.25, 1}) * P({-0.75, 1}));
  REQUIRE(r3.entries.size() == 2);
  CHECK(std::abs(r3.entries[0].root - Complex(0.25, 0)) < 1e-12);
  CHECK(std::abs(r3.entries[1].root - Complex(0.75, 0)) < 1e-12);

  CHECK_THROWS_AS(find_roots(P({1})), Error);
}

TEST_CASE("roots: high multiplicity clusters are merged and polished") {
  const Polynomial p = from_roots({{{Complex(1, 0), 3}, {Complex(-0.5, 0), 1}}});
  const RootSet rs = find_roots(p);
  REQUIRE(rs.entries.size() == 2);
  CHECK(rs.entries[0].multiplicity == 1);
  CHECK(std::abs(rs.entries[0].root - Complex(-0.5, 0)) < 1e-10);
  CHECK(rs.entries[1].multiplicity == 3);
  CHECK(std::abs(rs.entries[1].root - Complex(1, 0)) < 1e-8);

  const Polynomial z8 = Polynomial::monomial(8);
  const RootSet rz = find_roots(z8);
  REQUIRE(rz.entries.size() == 1);
  CHECK(rz.entries[0].multiplicity == 8);
  CHECK(std::abs(rz.entries[0].root) < 1e-12);
}

TEST_CASE("roots/from_roots round trip") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = 2 + static_cast<int>(rng() % 9);
    const auto pts = testutil::random_separated_points(rng, deg, 0.05);
    RootSet rs;
    for (const Complex& z : pts) rs.entries.push_back({z, 1});
    const Polynomial p = from_roots(rs);
    const RootSet found = find_roots(p);
    CHECK(found.total_multiplicity() == deg);
    const Polynomial rebuilt = from_roots(found, p.leading());
    CHECK(coeff_distance(p, rebuilt) <= 1e-8 * norm_coeff(p));
  }
}
