#pragma once

// Product quadrature over the quaternions in the polar chart
// (t = r^2, theta, u = cos(phi), psi), tuned to integrands of the form
// polynomial(q, qbar) * exp(-|q|^2).
//
//   radial: Gauss-Laguerre in t = r^2, absorbing the weight 2 r e^{-r^2} dr
//           (moments become integer factorials: integral of t^m e^{-t} = m!)
//   theta : uniform nodes on [0, 2pi), weight 1/M each after folding 1/(2pi);
//           kills e^{i k theta} exactly for 0 < |k| < M
//   u,psi : Gauss-Legendre in u with the 1/(4pi) solid-angle factor folded in,
//           uniform psi nodes; the sphere average of any axis-polynomial of
//           degree <= certificate is exact
//
// Each grid carries an exactness certificate listing the maximal degrees the
// rule integrates exactly.  Node order is fixed and summation helpers are
// pairwise, so results are bit-reproducible for a given grid.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qcs/quaternion.hpp"

namespace qcs {

struct Rule1D {
  std::vector<double> x, w;
};

Rule1D gauss_legendre(int n);  // [-1,1], weight 1
Rule1D gauss_laguerre(int n);  // [0,inf), weight e^{-t}
Rule1D gauss_hermite(int n);   // (-inf,inf), weight e^{-x^2}

struct GridCertificate {
  int radial_degree = 0;  // max exact power of t = r^2
  int theta_degree = 0;   // max exact trig frequency in theta
  int u_degree = 0;       // max exact power of u = cos(phi)
  int psi_degree = 0;     // max exact trig frequency in psi
};

struct GridNode {
  Quaternion q;
  double w = 0.0;
};

struct QuadratureGrid {
  int radial_order = 0, theta_nodes = 0, phi_order = 0, psi_nodes = 0;
  GridCertificate certificate;
  Rule1D radial;              // nodes in t = r^2
  std::vector<double> theta;
  Rule1D u;
  std::vector<double> psi;
  std::vector<GridNode> nodes;  // flat, deterministic (t, theta, u, psi) order
};

// Explicit orders.  Throws std::invalid_argument on non-positive orders.
QuadratureGrid build_grid_orders(int radial_order, int theta_nodes, int phi_order,
                                 int psi_nodes);

// Orders derived from the truncation dimension and the maximal symbol degree:
// radial covers t-degree >= n_trunc + max_symbol_degree, theta covers
// frequencies through 2*n_trunc + max_symbol_degree.
QuadratureGrid build_grid(int n_trunc, int max_symbol_degree);

// sum_i w_i t_i^m, which must equal m! while m is inside the radial
// certificate.  Requests beyond the certificate throw std::domain_error.
double moment_check(const QuadratureGrid& g, int m);

// ---------------------------------------------------------------------------
// Grid for the deformed planar measure exp[-(1-s)x^2 - ((1-s)/s)y^2] dx dy
// times the normalised sphere average over the imaginary direction.  Nodes are
// quaternions x + y*I(u,psi); scaled Gauss-Hermite rules make polynomial
// moments in x and y exact through the certificate degrees.

struct HermiteGridCertificate {
  int x_degree = 0;
  int y_degree = 0;
  int u_degree = 0;
  int psi_degree = 0;
};

struct HermiteGrid {
  double s = 0.5;
  HermiteGridCertificate certificate;
  std::vector<GridNode> nodes;
};

HermiteGrid build_hermite_grid(double s, int x_order, int y_order, int phi_order,
                               int psi_nodes);

// ---------------------------------------------------------------------------
// Binary-counter pairwise summation.  For a fixed push order the result is a
// fixed binary tree over the inputs, independent of any threading of the
// producer, so accumulations are reproducible bit-for-bit.

template <class T>
class PairwiseAccumulator {
 public:
  void push(T v) {
    std::size_t idx = count_++;
    std::size_t level = 0;
    while (idx & 1u) {
      v = blocks_[level] + v;
      idx >>= 1;
      ++level;
    }
    if (level == blocks_.size())
      blocks_.push_back(std::move(v));
    else
      blocks_[level] = std::move(v);
  }

  // total(zero): fold occupied levels low-to-high
  T total(T zero) const {
    T s = std::move(zero);
    std::size_t bits = count_;
    for (std::size_t level = 0; bits != 0; ++level, bits >>= 1)
      if (bits & 1u) s = blocks_[level] + s;
    return s;
  }

  std::size_t count() const { return count_; }

 private:
  std::vector<T> blocks_;
  std::size_t count_ = 0;
};

}  // namespace qcs
