#pragma once

#include <vector>

#include "bezout/poly.hpp"
#include "bezout/sylvester.hpp"

namespace bezout {

/// Nodes with derivative orders and prescribed values y_j^0..y_j^(l_j-1).
struct HermiteData {
  std::vector<Complex> nodes;
  std::vector<int> orders;
  std::vector<std::vector<Complex>> targets;

  int total_order() const;
  void validate() const;
};

/// Unique p in P_{t-1} with p(x_j) = y_j, built from the Lagrange basis.
Polynomial lagrange_interpolate(const std::vector<Complex>& nodes,
                                const std::vector<Complex>& targets);

/// Unique p in P_{L-1} matching all prescribed derivative values
/// (Newton form with divided differences on the repeated-node sequence).
Polynomial hermite_interpolate(const HermiteData& data);

/// Per-node pieces p_j with p = sum p_j; p_j matches node j's targets and has
/// vanishing derivatives up to order l_i - 1 at every other node i.
std::vector<Polynomial> hermite_decomposition(const HermiteData& data);

/// Hermite data whose interpolant q satisfies q*other == 1 to order
/// multiplicity-1 at every distinct root of zeros_of (the Leibniz recursion
/// targets used by the interpolation-based Bezout construction).
HermiteData bezout_interpolation_data(const Polynomial& zeros_of, const Polynomial& other);

/// Minimal Bezout solution built by Hermite interpolation at the roots of B
/// (for R) and of A (for S), with the Leibniz target recursion at multiple roots.
BezoutSolution bezout_by_interpolation(const Polynomial& a, const Polynomial& b);

}  // namespace bezout
