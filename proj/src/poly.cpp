#include "bezout/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bezout {

namespace {

double max_abs(std::span<const Complex> c) {
  double m = 0.0;
  for (const Complex& v : c) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

void Polynomial::trim() {
  const double cutoff = kTrimRel * max_abs(coeffs_);
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cutoff) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int k, Complex c) {
  if (k < 0) raise(Errc::invalid_argument, "monomial degree must be nonnegative");
  std::vector<Complex> v(static_cast<size_t>(k) + 1, Complex{});
  v.back() = c;
  return Polynomial(std::move(v));
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative(int order) const {
  if (order < 0) raise(Errc::invalid_argument, "derivative order must be nonnegative");
  std::vector<Complex> c(coeffs_.begin(), coeffs_.end());
  for (int k = 0; k < order; ++k) {
    if (c.empty()) break;
    for (size_t j = 1; j < c.size(); ++j) c[j - 1] = static_cast<double>(j) * c[j];
    c.pop_back();
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::conjugate() const {
  std::vector<Complex> c(coeffs_.size());
  for (size_t j = 0; j < coeffs_.size(); ++j) c[j] = std::conj(coeffs_[j]);
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex{});
  for (size_t j = 0; j < a.coeffs_.size(); ++j) c[j] += a.coeffs_[j];
  for (size_t j = 0; j < b.coeffs_.size(); ++j) c[j] += b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& a) {
  std::vector<Complex> c(a.coeffs_.size());
  for (size_t j = 0; j < a.coeffs_.size(); ++j) c[j] = -a.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex{});
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex c, const Polynomial& p) {
  std::vector<Complex> v(p.coeffs_.size());
  for (size_t j = 0; j < p.coeffs_.size(); ++j) v[j] = c * p.coeffs_[j];
  return Polynomial(std::move(v));
}

int RootSet::total_multiplicity() const {
  int n = 0;
  for (const RootEntry& e : entries) n += e.multiplicity;
  return n;
}

int RootSet::max_multiplicity() const {
  int m = 0;
  for (const RootEntry& e : entries) m = std::max(m, e.multiplicity);
  return m;
}

Polynomial from_roots(const RootSet& roots, Complex leading) {
  if (leading == Complex{}) raise(Errc::invalid_argument, "from_roots: zero leading coefficient");
  std::vector<Complex> c{leading};
  for (const RootEntry& e : roots.entries) {
    if (e.multiplicity < 1) raise(Errc::invalid_argument, "from_roots: multiplicity must be positive");
    for (int k = 0; k < e.multiplicity; ++k) {
      c.push_back(c.back());
      for (size_t j = c.size() - 2; j > 0; --j) c[j] = c[j - 1] - e.root * c[j];
      c[0] = -e.root * c[0];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial divide_by_linear(const Polynomial& p, Complex u) {
  const double scale = norm_coeff(p);
  if (std::abs(p(u)) > kDivEps * std::max(scale, 1e-300))
    raise(Errc::not_a_root, "divide_by_linear: point is not a root of the polynomial");
  if (p.degree() < 1) return Polynomial();
  const auto c = p.coeffs();
  std::vector<Complex> q(c.size() - 1);
  Complex acc = c.back();
  for (int j = static_cast<int>(c.size()) - 2; j >= 0; --j) {
    q[j] = acc;
    acc = c[j] + u * acc;
  }
  return Polynomial(std::move(q));
}

std::pair<Polynomial, Polynomial> poly_div_rem(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) raise(Errc::division_by_zero_polynomial, "poly_div_rem: zero divisor");
  if (f.degree() < g.degree()) return {Polynomial(), f};
  std::vector<Complex> rem(f.coeffs().begin(), f.coeffs().end());
  const int dg = g.degree();
  const Complex lead = g.leading();
  std::vector<Complex> quot(rem.size() - dg, Complex{});
  for (int j = static_cast<int>(rem.size()) - 1; j >= dg; --j) {
    const Complex q = rem[j] / lead;
    quot[j - dg] = q;
    if (q == Complex{}) continue;
    for (int k = 0; k <= dg; ++k) rem[j - dg + k] -= q * g.coeff(k);
    rem[j] = Complex{};
  }
  rem.resize(dg);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

double norm_coeff(const Polynomial& p) { return max_abs(p.coeffs()); }

double norm_h2(const Polynomial& p) {
  double s = 0.0;
  for (const Complex& c : p.coeffs()) s += std::norm(c);
  return std::sqrt(s);
}

double norm_sup_circle(const Polynomial& p, double radius) {
  if (radius <= 0.0) raise(Errc::invalid_argument, "norm_sup_circle: radius must be positive");
  if (p.is_zero()) return 0.0;
  if (p.degree() == 0) return std::abs(p.coeff(0));

  const double two_pi = 2.0 * std::numbers::pi;
  const auto value = [&](double theta) {
    return std::abs(p(std::polar(radius, theta)));
  };

  const double step = two_pi / kCircleSamples;
  double best = 0.0;
  int best_i = 0;
  for (int i = 0; i < kCircleSamples; ++i) {
    const double v = value(i * step);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }

  // Golden-section refinement inside the bracket around the best sample.
  double lo = (best_i - 1) * step, hi = (best_i + 1) * step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = value(x1);
    }
    best = std::max(best, std::max(f1, f2));
  }
  return best;
}

}  // namespace bezout
