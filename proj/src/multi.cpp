#include "bezout/multi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bezout/interpolation.hpp"

namespace bezout {

namespace {

constexpr double kPlankSlack = 1e-9;

Complex inner(const std::vector<Complex>& v, const std::vector<Complex>& y) {
  Complex s{};
  for (size_t k = 0; k < v.size(); ++k) s += v[k] * std::conj(y[k]);
  return s;
}

double vec_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& c : v) s += std::norm(c);
  return std::sqrt(s);
}

void normalize(std::vector<Complex>& y) {
  const double n = vec_norm(y);
  if (n == 0.0) return;
  for (Complex& c : y) c /= n;
}

double min_abs_inner(const std::vector<std::vector<Complex>>& vs,
                     const std::vector<Complex>& y) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& v : vs) m = std::min(m, std::abs(inner(v, y)));
  return m;
}

// Sphere-projected coordinate pattern search on the exact objective; follows
// maximin ridges that defeat gradient-based steps.
template <typename Objective>
void pattern_polish(std::vector<Complex>& y, Objective obj) {
  double value = obj(y);
  for (double h = 0.05; h > 1e-9;) {
    bool improved = false;
    for (size_t k = 0; k < y.size() && !improved; ++k) {
      for (const Complex d : {Complex(h, 0), Complex(-h, 0), Complex(0, h), Complex(0, -h)}) {
        std::vector<Complex> cand = y;
        cand[k] += d;
        normalize(cand);
        const double v = obj(cand);
        if (v > value + 1e-15) {
          y = std::move(cand);
          value = v;
          improved = true;
          break;
        }
      }
    }
    if (!improved) h *= 0.5;
  }
}

// Projected gradient ascent with backtracking; the gradient callback returns
// the complex ascent direction for the current y.
template <typename Objective, typename Gradient>
void ascend(std::vector<Complex>& y, int iters, double step0, Objective obj, Gradient grad) {
  double step = step0;
  double value = obj(y);
  for (int it = 0; it < iters; ++it) {
    const std::vector<Complex> g = grad(y);
    bool moved = false;
    for (int bt = 0; bt < 25; ++bt) {
      std::vector<Complex> cand = y;
      for (size_t k = 0; k < cand.size(); ++k) cand[k] += step * g[k];
      normalize(cand);
      const double v = obj(cand);
      if (v > value) {
        y = std::move(cand);
        value = v;
        step *= 1.3;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved && step < 1e-16) break;
  }
}

}  // namespace

PlankCertificate plank_vector(const std::vector<std::vector<Complex>>& vectors, uint64_t seed) {
  if (vectors.empty()) raise(Errc::empty_input, "plank_vector: no vectors given");
  const size_t dim = vectors[0].size();
  if (dim == 0) raise(Errc::empty_input, "plank_vector: zero-dimensional vectors");
  for (const auto& v : vectors) {
    if (v.size() != dim) raise(Errc::invalid_argument, "plank_vector: mixed dimensions");
    if (vec_norm(v) < 1.0 - 1e-12)
      raise(Errc::vector_too_short, "plank_vector: every vector must have norm at least 1");
  }

  const int n = static_cast<int>(vectors.size());
  PlankCertificate cert;
  cert.bound = 1.0 / std::sqrt(static_cast<double>(n));

  std::vector<std::vector<Complex>> unit = vectors;
  for (auto& v : unit) {
    const double nv = vec_norm(v);
    for (Complex& c : v) c /= nv;
  }

  if (n == 1) {
    cert.y = unit[0];
    cert.achieved = std::abs(inner(vectors[0], cert.y));
    return cert;
  }

  // The bound is certified through the unit-normalized vectors, but the
  // certificate reports (and the grid oracle probes) the original ones, so
  // the maximin runs on the original vectors with a product-objective warmup.
  const auto true_objective = [&](const std::vector<Complex>& y) {
    return min_abs_inner(vectors, y);
  };
  const auto log_product = [&](const std::vector<Complex>& y) {
    double s = 0.0;
    for (const auto& u : unit) s += std::log(std::max(std::abs(inner(u, y)), 1e-300));
    return s;
  };
  const auto product_grad = [&](const std::vector<Complex>& y) {
    std::vector<Complex> g(dim);
    for (const auto& u : unit) {
      const Complex c = inner(u, y);
      const double m = std::max(std::norm(c), 1e-300);
      for (size_t k = 0; k < dim; ++k) g[k] += std::conj(c) / m * u[k];
    }
    return g;
  };
  // Softmin of |<v_i,y>|^2 with temperature relative to the value spread.
  const auto softmin = [&](double tau_rel) {
    return [&, tau_rel](const std::vector<Complex>& y) {
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      std::vector<double> m(vectors.size());
      for (size_t i = 0; i < vectors.size(); ++i) {
        m[i] = std::norm(inner(vectors[i], y));
        lo = std::min(lo, m[i]);
        hi = std::max(hi, m[i]);
      }
      const double tau = tau_rel * std::max(hi, 1e-12);
      double s = 0.0;
      for (const double mi : m) s += std::exp(-(mi - lo) / tau);
      return lo - tau * std::log(s);
    };
  };
  const auto softmin_grad = [&](double tau_rel) {
    return [&, tau_rel](const std::vector<Complex>& y) {
      std::vector<double> m(vectors.size());
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      for (size_t i = 0; i < vectors.size(); ++i) {
        m[i] = std::norm(inner(vectors[i], y));
        lo = std::min(lo, m[i]);
        hi = std::max(hi, m[i]);
      }
      const double tau = tau_rel * std::max(hi, 1e-12);
      double wsum = 0.0;
      std::vector<double> w(vectors.size());
      for (size_t i = 0; i < vectors.size(); ++i) {
        w[i] = std::exp(-(m[i] - lo) / tau);
        wsum += w[i];
      }
      std::vector<Complex> g(dim);
      for (size_t i = 0; i < vectors.size(); ++i) {
        const Complex c = inner(vectors[i], y);
        for (size_t k = 0; k < dim; ++k)
          g[k] += (w[i] / wsum) * std::conj(c) * vectors[i][k];
      }
      return g;
    };
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> best_y;
  double best = -1.0;

  // Balanced seeds: phase combinations of sum e^{i theta_i} u_i. The global
  // maximin tends to have many active constraints and lives near one of these.
  std::vector<std::vector<Complex>> seeds;
  if (n <= 6) {
    size_t combos = 1;
    for (int i = 1; i < n; ++i) combos *= 4;
    std::vector<std::pair<double, std::vector<Complex>>> ranked;
    for (size_t code = 0; code < combos; ++code) {
      std::vector<Complex> y(dim);
      size_t c = code;
      for (int i = 0; i < n; ++i) {
        const Complex phase = i == 0 ? Complex(1.0, 0.0) : std::polar(1.0, 0.5 * std::numbers::pi * (c % 4));
        if (i > 0) c /= 4;
        for (size_t k = 0; k < dim; ++k) y[k] += phase * unit[i][k];
      }
      if (vec_norm(y) < 1e-9) continue;
      normalize(y);
      ranked.emplace_back(min_abs_inner(vectors, y), std::move(y));
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (size_t i = 0; i < ranked.size() && i < 8; ++i) seeds.push_back(ranked[i].second);
  }

  for (int restart = 0; restart < 32; ++restart) {
    std::vector<Complex> y(dim);
    if (restart == 0) {
      for (const auto& u : unit)
        for (size_t k = 0; k < dim; ++k) y[k] += u[k];
      if (vec_norm(y) < 1e-9) y[0] = Complex(1.0, 0.0);
    } else if (restart <= static_cast<int>(seeds.size())) {
      y = seeds[restart - 1];
    } else if (restart >= 20 && !best_y.empty()) {
      // explore around the incumbent with shrinking noise
      const double noise = 0.5 * std::pow(0.8, restart - 20);
      y = best_y;
      for (Complex& c : y) c += noise * Complex(gauss(rng), gauss(rng));
    } else {
      for (Complex& c : y) c = Complex(gauss(rng), gauss(rng));
    }
    normalize(y);

    ascend(y, 120, 0.2, log_product, product_grad);
    for (const double tau_rel : {0.5, 0.1, 0.02, 4e-3, 8e-4, 1e-4})
      ascend(y, 80, 0.05, softmin(tau_rel), softmin_grad(tau_rel));

    // Active-set polish: averaging the near-minimal gradients walks along the
    // maximin ridge where the softmin step only oscillates across it.
    for (const double atol : {3e-2, 1e-2, 3e-3, 1e-3, 1e-4, 1e-5}) {
      const auto active_grad = [&](const std::vector<Complex>& yy) {
        double mn = std::numeric_limits<double>::infinity();
        std::vector<double> m(vectors.size());
        for (size_t i = 0; i < vectors.size(); ++i) {
          m[i] = std::abs(inner(vectors[i], yy));
          mn = std::min(mn, m[i]);
        }
        std::vector<Complex> g(dim);
        for (size_t i = 0; i < vectors.size(); ++i) {
          if (m[i] > mn * (1.0 + atol)) continue;
          const Complex c = inner(vectors[i], yy);
          const double mag = std::max(m[i], 1e-300);
          for (size_t k = 0; k < dim; ++k) g[k] += std::conj(c) / mag * vectors[i][k];
        }
        return g;
      };
      ascend(y, 60, 0.02, true_objective, active_grad);
    }
    pattern_polish(y, true_objective);

    const double score = true_objective(y);
    if (score > best) {
      best = score;
      best_y = y;
    }
  }

  cert.y = best_y;
  cert.achieved = min_abs_inner(vectors, cert.y);
  if (cert.achieved < cert.bound - kPlankSlack)
    raise(Errc::numeric_failure,
          "plank_vector: optimizer failed to certify the 1/sqrt(n) bound");
  return cert;
}

MultiBezoutSolution solve_multi_bezout(const Polynomial& a,
                                       const std::vector<Polynomial>& b_list, double delta,
                                       SolveMethod method, uint64_t seed) {
  if (a.degree() < 1)
    raise(Errc::invalid_argument, "solve_multi_bezout: A must be nonconstant");
  if (b_list.empty()) raise(Errc::empty_input, "solve_multi_bezout: no B polynomials");
  if (!(delta > 0.0))
    raise(Errc::hypothesis_violated, "solve_multi_bezout: delta must be positive");

  double norm_sq = 0.0;
  for (const Polynomial& b : b_list) {
    const double nb = norm_coeff(b);
    norm_sq += nb * nb;
  }
  if (norm_sq > 1.0 + 1e-12)
    raise(Errc::hypothesis_violated, "solve_multi_bezout: sum of |B_j|^2 exceeds 1");

  const RootSet roots_a = find_roots(a);
  const size_t big_l = b_list.size();

  std::vector<std::vector<Complex>> v(roots_a.entries.size(), std::vector<Complex>(big_l));
  double min_sq = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < roots_a.entries.size(); ++i) {
    double s = 0.0;
    for (size_t j = 0; j < big_l; ++j) {
      const Complex val = b_list[j](roots_a.entries[i].root);
      v[i][j] = val / delta;
      s += std::norm(val);
    }
    min_sq = std::min(min_sq, s);
  }
  if (min_sq < delta * delta * (1.0 - 1e-9))
    raise(Errc::hypothesis_violated,
          "solve_multi_bezout: sum_j |B_j(alpha)|^2 falls below delta^2 at a root of A");

  MultiBezoutSolution sol;
  sol.method = method;
  sol.y = plank_vector(v, seed);

  Polynomial combined;
  for (size_t j = 0; j < big_l; ++j) combined = combined + std::conj(sol.y.y[j]) * b_list[j];
  sol.combined_b = combined;

  const double floor = delta * sol.y.bound - 1e-9;
  for (const RootEntry& e : roots_a.entries)
    if (std::abs(combined(e.root)) < floor)
      raise(Errc::common_roots_after_combination,
            "solve_multi_bezout: combined B vanishes at a root of A despite the certificate");

  const BezoutSolution single = method == SolveMethod::interpolation
                                    ? bezout_by_interpolation(a, combined)
                                    : solve_minimal_bezout(a, combined);
  sol.r = single.r;
  sol.s_list.resize(big_l);
  for (size_t j = 0; j < big_l; ++j) sol.s_list[j] = std::conj(sol.y.y[j]) * single.s;
  sol.single_joint_norm = single.joint_norm();

  Polynomial identity = sol.r * a - Polynomial::constant(1.0);
  for (size_t j = 0; j < big_l; ++j) identity = identity + sol.s_list[j] * b_list[j];
  sol.residual = norm_coeff(identity);

  double joint = norm_coeff(sol.r);
  joint *= joint;
  for (const Polynomial& s : sol.s_list) {
    const double ns = norm_coeff(s);
    joint += ns * ns;
  }
  sol.joint_norm = std::sqrt(joint);
  return sol;
}

}  // namespace bezout
