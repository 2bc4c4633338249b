#include "bezout/interpolation.hpp"

#include <algorithm>
#include <cmath>

namespace bezout {

namespace {

void check_distinct(const std::vector<Complex>& nodes) {
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes[i] - nodes[j]) <= kClusterEps)
        raise(Errc::duplicate_nodes, "interpolation nodes must be pairwise distinct");
}

// Hermite targets for the factor "other" so that candidate*other == 1 to
// order l-1 at the node: value 1/other(x), then the Leibniz recursion
//   candidate^(k)(x) = -(1/other(x)) * sum_{i<k} C(k,i) candidate^(i)(x) other^(k-i)(x).
std::vector<Complex> leibniz_targets(const Polynomial& other, Complex x, int order) {
  const Complex base = other(x);
  std::vector<Complex> t(order);
  std::vector<Polynomial> derivs(order);
  derivs[0] = other;
  for (int k = 1; k < order; ++k) derivs[k] = derivs[k - 1].derivative();

  t[0] = 1.0 / base;
  for (int k = 1; k < order; ++k) {
    Complex acc{};
    double c = 1.0;  // C(k, i), built incrementally
    for (int i = 0; i < k; ++i) {
      acc += c * t[i] * derivs[k - i](x);
      c = c * (k - i) / (i + 1.0);
    }
    t[k] = -acc / base;
  }
  return t;
}

}  // namespace

int HermiteData::total_order() const {
  int s = 0;
  for (int l : orders) s += l;
  return s;
}

void HermiteData::validate() const {
  if (nodes.size() != orders.size() || nodes.size() != targets.size())
    raise(Errc::invalid_argument, "HermiteData: nodes/orders/targets length mismatch");
  for (size_t j = 0; j < orders.size(); ++j) {
    if (orders[j] < 1) raise(Errc::invalid_argument, "HermiteData: orders must be positive");
    if (static_cast<int>(targets[j].size()) != orders[j])
      raise(Errc::invalid_argument, "HermiteData: targets[j] must have orders[j] entries");
  }
  if (total_order() < 1) raise(Errc::invalid_argument, "HermiteData: empty data");
  check_distinct(nodes);
}

Polynomial lagrange_interpolate(const std::vector<Complex>& nodes,
                                const std::vector<Complex>& targets) {
  if (nodes.size() != targets.size())
    raise(Errc::invalid_argument, "lagrange_interpolate: nodes/targets length mismatch");
  if (nodes.empty()) return Polynomial();
  check_distinct(nodes);

  Polynomial p;
  for (size_t j = 0; j < nodes.size(); ++j) {
    Polynomial basis = Polynomial::constant(1.0);
    Complex denom(1.0, 0.0);
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (i == j) continue;
      basis = basis * Polynomial({-nodes[i], 1.0});
      denom *= nodes[j] - nodes[i];
    }
    p = p + (targets[j] / denom) * basis;
  }
  return p;
}

namespace {

// Single Newton-form pass; hermite_interpolate adds a refinement step on top.
Polynomial hermite_newton_pass(const HermiteData& data);

}  // namespace

Polynomial hermite_interpolate(const HermiteData& data) {
  data.validate();
  Polynomial p = hermite_newton_pass(data);

  // Residual-correction passes: re-interpolate the derivative defects until
  // they stop shrinking.
  HermiteData defect = data;
  double previous = std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < 3; ++pass) {
    double max_target = 0.0, max_defect = 0.0;
    for (size_t j = 0; j < data.nodes.size(); ++j)
      for (int k = 0; k < data.orders[j]; ++k) {
        defect.targets[j][k] = data.targets[j][k] - p.derivative(k)(data.nodes[j]);
        max_target = std::max(max_target, std::abs(data.targets[j][k]));
        max_defect = std::max(max_defect, std::abs(defect.targets[j][k]));
      }
    if (max_defect == 0.0 || max_defect > 1e-4 * (1.0 + max_target) ||
        max_defect >= previous * 0.5)
      break;
    previous = max_defect;
    p = p + hermite_newton_pass(defect);
  }
  return p;
}

namespace {

Polynomial hermite_newton_pass(const HermiteData& data) {
  const int total = data.total_order();

  // Repeated-node sequence and the matching node index per slot.
  std::vector<Complex> xs(total);
  std::vector<int> which(total);
  {
    int pos = 0;
    for (size_t j = 0; j < data.nodes.size(); ++j)
      for (int k = 0; k < data.orders[j]; ++k, ++pos) {
        xs[pos] = data.nodes[j];
        which[pos] = static_cast<int>(j);
      }
  }

  // Divided differences; coincident spans read y^(k)/k! directly.
  std::vector<Complex> d(total);
  for (int i = 0; i < total; ++i) d[i] = data.targets[which[i]][0];
  double factorial = 1.0;
  for (int k = 1; k < total; ++k) {
    factorial *= k;
    for (int i = total - 1; i >= k; --i) {
      if (which[i] == which[i - k])
        d[i] = data.targets[which[i]][k] / factorial;
      else
        d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - k]);
    }
  }

  Polynomial p;
  for (int k = total - 1; k >= 0; --k)
    p = p * Polynomial({-xs[k], 1.0}) + Polynomial::constant(d[k]);
  return p;
}

}  // namespace

std::vector<Polynomial> hermite_decomposition(const HermiteData& data) {
  data.validate();
  std::vector<Polynomial> parts(data.nodes.size());
  for (size_t j = 0; j < data.nodes.size(); ++j) {
    HermiteData single = data;
    for (size_t i = 0; i < data.nodes.size(); ++i)
      if (i != j) single.targets[i].assign(data.orders[i], Complex{});
    parts[j] = hermite_interpolate(single);
  }
  return parts;
}

HermiteData bezout_interpolation_data(const Polynomial& zeros_of, const Polynomial& other) {
  const double coprime_tol = 1e-13;
  HermiteData data;
  for (const RootEntry& e : find_roots(zeros_of).entries) {
    if (std::abs(other(e.root)) <= coprime_tol * std::max(1.0, norm_coeff(other)))
      raise(Errc::common_roots, "A and B share a root");
    data.nodes.push_back(e.root);
    data.orders.push_back(e.multiplicity);
    data.targets.push_back(leibniz_targets(other, e.root, e.multiplicity));
  }
  return data;
}

BezoutSolution bezout_by_interpolation(const Polynomial& a, const Polynomial& b) {
  const int n = a.degree(), k = b.degree();
  if (n < 1 && k < 1)
    raise(Errc::both_constant, "A and B must not both be constant polynomials");
  if (n < 0 || k < 0) raise(Errc::common_roots, "the zero polynomial shares every root");

  const auto build_half = [&](const Polynomial& zeros_of, const Polynomial& other) {
    return hermite_interpolate(bezout_interpolation_data(zeros_of, other));
  };

  BezoutSolution sol;
  sol.method = SolveMethod::interpolation;
  if (k < 1) {
    // B is a nonzero constant: the empty root set forces R = 0.
    if (b.coeff(0) == Complex{}) raise(Errc::common_roots, "B is the zero polynomial");
    sol.r = Polynomial();
    sol.s = build_half(a, b);
  } else if (n < 1) {
    if (a.coeff(0) == Complex{}) raise(Errc::common_roots, "A is the zero polynomial");
    sol.r = build_half(b, a);
    sol.s = Polynomial();
  } else {
    sol.r = build_half(b, a);
    sol.s = build_half(a, b);
  }
  sol.residual = norm_coeff(sol.r * a + sol.s * b - Polynomial::constant(1.0));
  return sol;
}

}  // namespace bezout
