#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bezout/interpolation.hpp"
#include "test_util.hpp"

using namespace bezout;
using testutil::coeff_distance;
using testutil::poly_close;

namespace {

Polynomial P(std::initializer_list<Complex> c) { return Polynomial(std::vector<Complex>(c)); }

// Well-separated nodes with moderate derivative orders: the regime the Bezout
// construction uses (deg <= 6, multiplicities <= 3). Crowded high-order data
// is inherently ill-conditioned beyond the checked tolerance.
HermiteData random_hermite(std::mt19937_64& rng, int max_nodes, int max_order) {
  const int t = 1 + static_cast<int>(rng() % max_nodes);
  HermiteData data;
  data.nodes = testutil::random_separated_points(rng, t, 0.7, 1.2);
  for (int j = 0; j < t; ++j) {
    const int l = 1 + static_cast<int>(rng() % max_order);
    data.orders.push_back(l);
    std::vector<Complex> y(l);
    for (Complex& v : y) v = testutil::random_unit_box(rng);
    data.targets.push_back(std::move(y));
  }
  return data;
}

// Coprime pair where A carries prescribed root multiplicities.
std::pair<Polynomial, Polynomial> pair_with_multiplicity(std::mt19937_64& rng, int max_mult) {
  while (true) {
    const auto pts = testutil::random_separated_points(rng, 4, 0.25);
    RootSet ra;
    ra.entries.push_back({pts[0], 1 + static_cast<int>(rng() % max_mult)});
    ra.entries.push_back({pts[1], 1});
    const Polynomial a = from_roots(ra);
    RootSet rb;
    rb.entries.push_back({pts[2], 1});
    rb.entries.push_back({pts[3], 1});
    const Polynomial b = from_roots(rb, testutil::random_unit_box(rng) + Complex(1.2, 0));
    double gap = std::numeric_limits<double>::infinity();
    for (const RootEntry& e : ra.entries) gap = std::min(gap, std::abs(b(e.root)));
    for (const RootEntry& e : rb.entries) gap = std::min(gap, std::abs(a(e.root)));
    if (gap > 0.05) return {a, b};
  }
}

}  // namespace

TEST_CASE("lagrange") {
  CHECK(poly_close(lagrange_interpolate({Complex{}, Complex(1, 0)}, {Complex{}, Complex(1, 0)}),
                   P({0, 1}), 1e-14));
  CHECK(poly_close(
      lagrange_interpolate({Complex{}, Complex(1, 0), Complex(2, 0)},
                           {Complex(1, 0), Complex(1, 0), Complex(1, 0)}),
      P({1}), 1e-13));
  // single node delta with target 1/A(delta), A = z^3
  const double delta = 0.25;
  CHECK(poly_close(lagrange_interpolate({Complex(delta, 0)}, {Complex(64, 0)}), P({64}), 1e-10));
  CHECK_THROWS_AS(lagrange_interpolate({Complex(1, 0), Complex(1, 0)}, {Complex{}, Complex{}}),
                  Error);
}

TEST_CASE("hermite explicit cases") {
  HermiteData taylor;
  taylor.nodes = {Complex{}};
  taylor.orders = {2};
  taylor.targets = {{Complex(1, 0), Complex(2, 0)}};
  CHECK(poly_close(hermite_interpolate(taylor), P({1, 2}), 1e-14));

  HermiteData zero;
  zero.nodes = {Complex{}, Complex(1, 0)};
  zero.orders = {1, 1};
  zero.targets = {{Complex{}}, {Complex{}}};
  CHECK(hermite_interpolate(zero).is_zero());

  // degree-1 Taylor polynomial of z^2 at 1: values (1, 2) -> 2z - 1
  HermiteData t2;
  t2.nodes = {Complex(1, 0)};
  t2.orders = {2};
  t2.targets = {{Complex(1, 0), Complex(2, 0)}};
  CHECK(poly_close(hermite_interpolate(t2), P({-1, 2}), 1e-14));
}

TEST_CASE("hermite matches all prescribed derivative values") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const HermiteData data = random_hermite(rng, 4, 3);
    const Polynomial p = hermite_interpolate(data);
    CHECK(p.degree() <= data.total_order() - 1);
    double max_target = 0.0;
    for (const auto& row : data.targets)
      for (const Complex& y : row) max_target = std::max(max_target, std::abs(y));
    for (size_t j = 0; j < data.nodes.size(); ++j)
      for (int k = 0; k < data.orders[j]; ++k)
        CHECK(std::abs(p.derivative(k)(data.nodes[j]) - data.targets[j][k]) <=
              1e-9 * (1 + max_target));
  }
}

TEST_CASE("hermite decomposition per node") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const HermiteData data = random_hermite(rng, 3, 3);
    const std::vector<Polynomial> parts = hermite_decomposition(data);
    REQUIRE(parts.size() == data.nodes.size());

    Polynomial sum;
    for (const Polynomial& pj : parts) sum = sum + pj;
    CHECK(coeff_distance(sum, hermite_interpolate(data)) <=
          1e-9 * (1 + norm_coeff(sum)));

    double max_target = 0.0;
    for (const auto& row : data.targets)
      for (const Complex& y : row) max_target = std::max(max_target, std::abs(y));
    for (size_t j = 0; j < parts.size(); ++j)
      for (size_t i = 0; i < data.nodes.size(); ++i)
        for (int k = 0; k < data.orders[i]; ++k) {
          const Complex got = parts[j].derivative(k)(data.nodes[i]);
          const Complex want = i == j ? data.targets[j][k] : Complex{};
          CHECK(std::abs(got - want) <= 1e-9 * (1 + max_target));
        }
  }
}

TEST_CASE("bezout by interpolation: explicit cases") {
  for (const double delta : {0.5, 0.1}) {
    const BezoutSolution sol = bezout_by_interpolation(P({0, 0, 1}), P({-delta, 1}));
    CHECK(sol.method == SolveMethod::interpolation);
    CHECK(poly_close(sol.r, P({1.0 / (delta * delta)}), 1e-10 / (delta * delta)));
    CHECK(poly_close(sol.s, P({-1.0 / delta, -1.0 / (delta * delta)}),
                     1e-10 / (delta * delta)));
  }

  const double eta = 0.25, d24 = eta * (1 - eta);
  const BezoutSolution s24 =
      bezout_by_interpolation(P({0, 1}) * P({-1, 1}), P({-eta, 1}) * P({eta - 1, 1}));
  CHECK(poly_close(s24.r, P({-1.0 / d24}), 1e-9 / d24));
  CHECK(poly_close(s24.s, P({1.0 / d24}), 1e-9 / d24));

  // constant B: the empty root set forces R = 0
  const BezoutSolution sc = bezout_by_interpolation(P({-2, 1}), P({1}));
  CHECK(sc.r.is_zero());
  CHECK(poly_close(sc.s, P({1}), 1e-14));

  CHECK_THROWS_AS(bezout_by_interpolation(P({2}), P({3})), Error);
  const Polynomial shared = P({-1, 1});
  CHECK_THROWS_AS(bezout_by_interpolation(shared * P({0, 1}), shared), Error);
}

TEST_CASE("cross-method agreement, including multiple roots of A") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 120; ++trial) {
    const auto [a, b] = pair_with_multiplicity(rng, 3);
    const BezoutSolution by_interp = bezout_by_interpolation(a, b);
    const BezoutSolution by_sylv = solve_minimal_bezout(a, b);
    const double scale = 1 + by_sylv.joint_norm();
    CHECK(coeff_distance(by_interp.r, by_sylv.r) <= 1e-8 * scale);
    CHECK(coeff_distance(by_interp.s, by_sylv.s) <= 1e-8 * scale);
    CHECK(by_interp.residual <= 1e-9 * scale);
  }
}

TEST_CASE("Cor 2.4 decomposition sums to the interpolant") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [a, b] = pair_with_multiplicity(rng, 3);
    const HermiteData data = bezout_interpolation_data(a, b);  // S-side data
    const Polynomial s = hermite_interpolate(data);
    Polynomial sum;
    double part_scale = 0.0;
    for (const Polynomial& part : hermite_decomposition(data)) {
      sum = sum + part;
      part_scale = std::max(part_scale, norm_coeff(part));
    }
    CHECK(coeff_distance(sum, s) <= 1e-10 * (1 + norm_coeff(s) + part_scale));
  }
}

TEST_CASE("multiple-root solutions are limits of perturbed simple-root solutions") {
  // B has a double root; nudging it apart and solving by the Sylvester route
  // must approach the Leibniz-recursion solution.
  const Polynomial a = P({2, 1}) * P({2, 1});  // (z+2)^2
  const Complex beta(0.5, 0.0);
  const Polynomial b = P({-beta, 1}) * P({-beta, 1});
  const BezoutSolution at_limit = bezout_by_interpolation(a, b);

  const double eps = 1e-7;
  const Polynomial b_eps = P({-beta - eps, 1}) * P({-(beta - eps), 1.0});
  const BezoutSolution perturbed = solve_minimal_bezout(a, b_eps);
  const double scale = 1 + at_limit.joint_norm();
  CHECK(coeff_distance(at_limit.r, perturbed.r) <= 1e-4 * scale);
  CHECK(coeff_distance(at_limit.s, perturbed.s) <= 1e-4 * scale);
}
