#include "bezout/debranges.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace bezout {

namespace {

std::vector<Complex> circle_samples(int count) {
  std::vector<Complex> pts(count);
  for (int i = 0; i < count; ++i)
    pts[i] = std::polar(1.0, 2.0 * std::numbers::pi * (i + 0.5) / count);
  return pts;
}

// Cancels near-common linear factors of num against den roots.
void reduce_against(Polynomial& num, const Polynomial& den) {
  if (den.degree() < 1 || num.degree() < 1) return;
  for (const RootEntry& e : find_roots(den).entries)
    for (int k = 0; k < e.multiplicity && num.degree() >= 1; ++k) {
      if (std::abs(num(e.root)) > 1e-10 * std::max(1.0, norm_coeff(num))) break;
      num = divide_by_linear(num, e.root);
    }
}

struct SymbolSplit {
  RootSet exterior;
  RootSet boundary;  // one entry per contact point, multiplicity already halved
};

SymbolSplit split_symbol_roots(const Polynomial& symbol) {
  SymbolSplit out;
  if (symbol.degree() < 1) return out;

  RootSet circle_candidates;
  for (const RootEntry& e : find_roots(symbol).entries) {
    const double dist = std::abs(std::abs(e.root) - 1.0);
    if (dist <= kCircleTol)
      circle_candidates.entries.push_back(e);
    else if (std::abs(e.root) > 1.0)
      out.exterior.entries.push_back(e);
    // interior roots are the reflections of the exterior ones; dropped
  }

  // Merge circle candidates by proximity; each contact point must carry an
  // even total multiplicity, half of which belongs to the mate.
  std::vector<bool> used(circle_candidates.entries.size(), false);
  for (size_t i = 0; i < circle_candidates.entries.size(); ++i) {
    if (used[i]) continue;
    Complex weighted = circle_candidates.entries[i].root *
                       static_cast<double>(circle_candidates.entries[i].multiplicity);
    int total = circle_candidates.entries[i].multiplicity;
    used[i] = true;
    for (size_t j = i + 1; j < circle_candidates.entries.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(circle_candidates.entries[j].root - circle_candidates.entries[i].root) <=
          1e-5) {
        weighted += circle_candidates.entries[j].root *
                    static_cast<double>(circle_candidates.entries[j].multiplicity);
        total += circle_candidates.entries[j].multiplicity;
        used[j] = true;
      }
    }
    if (total % 2 != 0)
      raise(Errc::odd_circle_multiplicity,
            "pythagorean_mate: unimodular symbol root with odd multiplicity");
    Complex xi = weighted / static_cast<double>(total);
    xi /= std::abs(xi);  // project onto the circle
    out.boundary.entries.push_back({xi, total / 2});
  }
  std::sort(out.boundary.entries.begin(), out.boundary.entries.end(),
            [](const RootEntry& a, const RootEntry& b) {
              return std::arg(a.root) < std::arg(b.root);
            });
  return out;
}

}  // namespace

Polynomial conj_reversed(const Polynomial& r, int deg) {
  std::vector<Complex> c(static_cast<size_t>(deg) + 1);
  for (int j = 0; j <= deg; ++j) c[j] = std::conj(r.coeff(deg - j));
  return Polynomial(std::move(c));
}

PythagoreanMate pythagorean_mate(const RationalFunction& b) {
  const Polynomial& p = b.num;
  const Polynomial& q = b.den;
  if (q.is_zero()) raise(Errc::invalid_argument, "pythagorean_mate: zero denominator");
  if (q.degree() >= 1)
    for (const RootEntry& e : find_roots(q).entries) {
      if (std::abs(e.root) <= 1.0 + 1e-10)
        raise(Errc::invalid_argument,
              "pythagorean_mate: denominator has a zero in the closed unit disk");
      if (!p.is_zero() &&
          std::abs(p(e.root)) <= 1e-10 * std::max(1.0, norm_coeff(p)))
        raise(Errc::invalid_argument, "pythagorean_mate: b is not in reduced form");
    }

  const std::vector<Complex> samples = circle_samples(kMateSamples);
  double sup_b = 0.0, max_defect = 0.0;
  for (const Complex& z : samples) {
    const double m = std::abs(b(z));
    sup_b = std::max(sup_b, m);
    max_defect = std::max(max_defect, 1.0 - m * m);
  }
  if (sup_b > 1.0 + kFrTol)
    raise(Errc::not_schur_class, "pythagorean_mate: |b| exceeds 1 on the unit circle");
  if (max_defect <= 1e-12)
    raise(Errc::blaschke_product,
          "pythagorean_mate: 1 - |b|^2 vanishes identically (finite Blaschke product)");

  // Laurent symbol numerator: F = q q# - p p#, self-inversive of degree <= 2d.
  const int d = std::max(p.degree(), q.degree());
  const Polynomial symbol = q * conj_reversed(q, d) - p * conj_reversed(p, d);

  const SymbolSplit split = split_symbol_roots(symbol);
  Polynomial g = Polynomial::constant(1.0);
  if (!split.exterior.entries.empty() || !split.boundary.entries.empty()) {
    RootSet all = split.exterior;
    for (const RootEntry& e : split.boundary.entries) all.entries.push_back(e);
    g = from_roots(all);
  }
  reduce_against(g, q);

  // Scale so that |gamma g / q|^2 matches 1 - |b|^2 on the circle
  // (least squares over the samples keeps contact points harmless).
  double num_acc = 0.0, den_acc = 0.0;
  for (const Complex& z : samples) {
    const double target = 1.0 - std::norm(b(z));
    const double base = std::norm(g(z) / q(z));
    num_acc += target * base;
    den_acc += base * base;
  }
  if (!(den_acc > 0.0) || !(num_acc > 0.0))
    raise(Errc::numeric_failure, "pythagorean_mate: degenerate scaling data");
  const double gamma = std::sqrt(num_acc / den_acc);

  PythagoreanMate mate;
  mate.b = b;
  const Complex at_zero = g(Complex{}) / q(Complex{});
  if (std::abs(at_zero) == 0.0)
    raise(Errc::numeric_failure, "pythagorean_mate: mate vanishes at the origin");
  const Complex phase = std::conj(at_zero) / std::abs(at_zero);
  mate.a = RationalFunction{(gamma * phase) * g, q};
  mate.boundary_roots = split.boundary;
  mate.a1 = from_roots(split.boundary);
  mate.n_total = split.boundary.total_multiplicity();

  for (const Complex& z : samples) {
    const double dev = std::abs(std::norm(mate.a(z)) + std::norm(b(z)) - 1.0);
    mate.identity_dev = std::max(mate.identity_dev, dev);
  }
  if (mate.identity_dev > 1e-6)
    raise(Errc::numeric_failure,
          "pythagorean_mate: |a|^2 + |b|^2 = 1 failed beyond tolerance");
  return mate;
}

HbElement hb_decompose(const Polynomial& f, const PythagoreanMate& mate) {
  if (mate.n_total == 0) return {f, Polynomial()};  // a1 = 1: f = 1*f + 0
  auto [quot, rem] = poly_div_rem(f, mate.a1);
  return {std::move(quot), std::move(rem)};
}

double hb_norm(const Polynomial& f, const PythagoreanMate& mate) {
  const HbElement e = hb_decompose(f, mate);
  const double nt = norm_h2(e.f_tilde), np = norm_h2(e.p);
  return std::sqrt(nt * nt + np * np);
}

BoundaryBoundReport boundary_bound_check(const Polynomial& f, const PythagoreanMate& mate,
                                         int k, const std::vector<Complex>& samples,
                                         double eta) {
  if (k < 0 || k >= static_cast<int>(mate.boundary_roots.entries.size()))
    raise(Errc::index_out_of_range, "boundary_bound_check: no such boundary root");
  if (!(eta > 0.0)) raise(Errc::invalid_argument, "boundary_bound_check: eta must be positive");
  for (const Complex& z : samples)
    if (std::abs(z) >= 1.0)
      raise(Errc::sample_outside_disk, "boundary_bound_check: sample not in the open disk");

  const Complex xi = mate.boundary_roots.entries[k].root;
  const int n = mate.n_total;

  BoundaryBoundReport rep;
  const Polynomial a_sharp = divide_by_linear(mate.a1, xi);
  rep.a_sharp_sup = norm_sup_circle(a_sharp, 1.0);

  // Difference-quotient map on P_{N-1} in the monomial basis: column j holds
  // (z^j - xi^j)/(z - xi) = sum_{i<j} xi^{j-1-i} z^i.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 1; j < n; ++j) {
    Complex pw(1.0, 0.0);
    for (int i = j - 1; i >= 0; --i) {
      m(i, j) = pw;
      pw *= xi;
    }
  }
  const double sigma =
      n > 0 ? Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0) : 0.0;
  rep.ctilde_k = sigma * sigma;  // squared norms on both sides of the bound
  rep.c_k = 2.0 * std::max(rep.a_sharp_sup * rep.a_sharp_sup, rep.ctilde_k);

  const double f_norm = hb_norm(f, mate);
  const double f_at_xi = std::norm(f(xi));
  for (const Complex& z : samples) {
    const double lhs = std::norm(f(z));
    const double rhs = (1.0 + eta) * f_at_xi +
                       rep.c_k * (1.0 + 1.0 / eta) * std::norm(z - xi) /
                           (1.0 - std::norm(z)) * f_norm * f_norm;
    rep.max_violation = std::max(rep.max_violation, lhs - rhs);
  }
  rep.samples = static_cast<int>(samples.size());
  return rep;
}

MultiBezoutSolution corona_polynomial_data(const PythagoreanMate& mate,
                                           const std::vector<Polynomial>& p_list, double delta,
                                           SolveMethod method, uint64_t seed) {
  const int n = mate.n_total;
  if (n < 1)
    raise(Errc::hypothesis_violated,
          "corona_polynomial_data: mate has no boundary roots (N = 0)");
  if (p_list.empty()) raise(Errc::empty_input, "corona_polynomial_data: no data polynomials");
  if (!(delta > 0.0))
    raise(Errc::hypothesis_violated, "corona_polynomial_data: delta must be positive");
  for (const Polynomial& pj : p_list)
    if (pj.degree() >= n)
      raise(Errc::invalid_argument, "corona_polynomial_data: deg p_j must be < N");

  double min_sq = std::numeric_limits<double>::infinity();
  for (const RootEntry& e : mate.boundary_roots.entries) {
    double s = 0.0;
    for (const Polynomial& pj : p_list) s += std::norm(pj(e.root));
    min_sq = std::min(min_sq, s);
  }
  if (min_sq < delta * delta / 2.0 * (1.0 - 1e-9))
    raise(Errc::hypothesis_violated,
          "corona_polynomial_data: sum |p_j(xi)|^2 falls below delta^2/2 at a boundary root");

  // Normalize into the several-polynomial solver's unit-scale hypothesis.
  double scale_sq = 0.0;
  for (const Polynomial& pj : p_list) {
    const double np = norm_coeff(pj);
    scale_sq += np * np;
  }
  const double scale = std::max(1.0, std::sqrt(scale_sq));
  std::vector<Polynomial> scaled(p_list.size());
  for (size_t j = 0; j < p_list.size(); ++j) scaled[j] = (1.0 / scale) * p_list[j];

  MultiBezoutSolution sol =
      solve_multi_bezout(mate.a1, scaled, delta / (std::numbers::sqrt2 * scale), method, seed);
  for (Polynomial& qj : sol.s_list) qj = (1.0 / scale) * qj;

  Polynomial identity = sol.r * mate.a1 - Polynomial::constant(1.0);
  for (size_t j = 0; j < p_list.size(); ++j) identity = identity + sol.s_list[j] * p_list[j];
  sol.residual = norm_coeff(identity);

  double joint = norm_coeff(sol.r);
  joint *= joint;
  for (const Polynomial& qj : sol.s_list) {
    const double nq = norm_coeff(qj);
    joint += nq * nq;
  }
  sol.joint_norm = std::sqrt(joint);
  return sol;
}

}  // namespace bezout
