#include "qcs/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace qcs {

namespace {

constexpr int kMaxNewton = 200;
constexpr double kRootTol = 1e-15;

}  // namespace

Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  Rule1D rule;
  rule.x.assign(n, 0.0);
  rule.w.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-angle seed, then Newton on P_n
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    bool converged = false;
    for (int it = 0; it < kMaxNewton; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kRootTol) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("gauss_legendre: Newton did not converge");
    rule.x[i] = -z;
    rule.x[n - 1 - i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[n - 1 - i] = rule.w[i];
  }
  return rule;
}

Rule1D gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: order must be >= 1");
  Rule1D rule;
  rule.x.assign(n, 0.0);
  rule.w.assign(n, 0.0);
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    // standard seeds: first two roots from asymptotics, then linear extrapolation
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.x[i - 2]);
    }
    double p1 = 0.0, p2 = 0.0;
    bool converged = false;
    for (int it = 0; it < kMaxNewton; ++it) {
      p1 = 1.0;
      p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0 - z) * p2 - j * p3) / (j + 1.0);
      }
      const double pp = n * (p1 - p2) / z;  // L_n'(z) from L_n, L_{n-1}
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kRootTol * std::max(1.0, std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("gauss_laguerre: Newton did not converge");
    rule.x[i] = z;
    // w_i = x_i / ((n+1) L_{n+1}(x_i))^2
    double q1 = 1.0, q2 = 0.0;
    for (int j = 0; j < n + 1; ++j) {
      const double q3 = q2;
      q2 = q1;
      q1 = ((2.0 * j + 1.0 - z) * q2 - j * q3) / (j + 1.0);
    }
    const double denom = (n + 1.0) * q1;
    rule.w[i] = z / (denom * denom);
  }
  return rule;
}

Rule1D gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
  Rule1D rule;
  rule.x.assign(n, 0.0);
  rule.w.assign(n, 0.0);
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.x[n - 1];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.x[n - 2];
    } else {
      z = 2.0 * z - rule.x[n - i + 1];
    }
    double pp = 0.0;
    bool converged = false;
    for (int it = 0; it < kMaxNewton; ++it) {
      double p1 = pim4, p2 = 0.0;  // orthonormal Hermite recurrence
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(j / (j + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kRootTol * std::max(1.0, std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("gauss_hermite: Newton did not converge");
    // store descending positive roots at the tail, mirrored at the head
    rule.x[n - 1 - i] = z;
    rule.x[i] = -z;
    rule.w[n - 1 - i] = 2.0 / (pp * pp);
    rule.w[i] = rule.w[n - 1 - i];
  }
  if (n % 2 == 1) rule.x[n / 2] = 0.0;  // symmetric rule: centre node exactly 0
  return rule;
}

namespace {

Quaternion node_quaternion(double t, double theta, double u, double psi) {
  const double r = std::sqrt(t);
  const double sphi = std::sqrt(std::max(0.0, 1.0 - u * u));
  const double st = std::sin(theta), ct = std::cos(theta);
  return Quaternion(r * ct, r * st * sphi * std::cos(psi), r * st * sphi * std::sin(psi),
                    r * st * u);
}

}  // namespace

QuadratureGrid build_grid_orders(int radial_order, int theta_nodes, int phi_order,
                                 int psi_nodes) {
  if (radial_order < 1 || theta_nodes < 1 || phi_order < 1 || psi_nodes < 1)
    throw std::invalid_argument("build_grid_orders: all orders must be >= 1");
  QuadratureGrid g;
  g.radial_order = radial_order;
  g.theta_nodes = theta_nodes;
  g.phi_order = phi_order;
  g.psi_nodes = psi_nodes;
  g.radial = gauss_laguerre(radial_order);
  g.u = gauss_legendre(phi_order);
  g.theta.resize(theta_nodes);
  for (int i = 0; i < theta_nodes; ++i)
    g.theta[i] = 2.0 * std::numbers::pi * i / theta_nodes;
  g.psi.resize(psi_nodes);
  for (int i = 0; i < psi_nodes; ++i)
    g.psi[i] = 2.0 * std::numbers::pi * i / psi_nodes;
  g.certificate.radial_degree = 2 * radial_order - 1;
  g.certificate.theta_degree = theta_nodes - 1;
  g.certificate.u_degree = 2 * phi_order - 1;
  g.certificate.psi_degree = psi_nodes - 1;

  g.nodes.reserve(static_cast<std::size_t>(radial_order) * theta_nodes * phi_order *
                  psi_nodes);
  const double wth = 1.0 / theta_nodes;
  const double wps = 1.0 / psi_nodes;
  for (int ir = 0; ir < radial_order; ++ir)
    for (int it = 0; it < theta_nodes; ++it)
      for (int iu = 0; iu < phi_order; ++iu)
        for (int ip = 0; ip < psi_nodes; ++ip) {
          GridNode node;
          node.q = node_quaternion(g.radial.x[ir], g.theta[it], g.u.x[iu], g.psi[ip]);
          node.w = g.radial.w[ir] * wth * (g.u.w[iu] / 2.0) * wps;
          g.nodes.push_back(node);
        }
  return g;
}

QuadratureGrid build_grid(int n_trunc, int max_symbol_degree) {
  if (n_trunc < 1) throw std::invalid_argument("build_grid: n_trunc must be >= 1");
  if (max_symbol_degree < 0)
    throw std::invalid_argument("build_grid: symbol degree must be >= 0");
  const int radial = (n_trunc + max_symbol_degree + 2) / 2;  // 2K-1 >= N+deg
  const int theta = 2 * n_trunc + max_symbol_degree + 1;
  return build_grid_orders(radial, theta, 4, 8);
}

double moment_check(const QuadratureGrid& g, int m) {
  if (m < 0) throw std::invalid_argument("moment_check: m must be >= 0");
  if (m > g.certificate.radial_degree)
    throw std::domain_error("moment_check: moment beyond exactness certificate");
  PairwiseAccumulator<double> acc;
  for (std::size_t i = 0; i < g.radial.x.size(); ++i) {
    double p = 1.0;
    for (int k = 0; k < m; ++k) p *= g.radial.x[i];
    acc.push(g.radial.w[i] * p);
  }
  return acc.total(0.0);
}

HermiteGrid build_hermite_grid(double s, int x_order, int y_order, int phi_order,
                               int psi_nodes) {
  if (!(s > 0.0 && s < 1.0))
    throw std::invalid_argument("build_hermite_grid: s must lie in (0,1)");
  if (x_order < 1 || y_order < 1 || phi_order < 1 || psi_nodes < 1)
    throw std::invalid_argument("build_hermite_grid: all orders must be >= 1");
  HermiteGrid g;
  g.s = s;
  const Rule1D hx = gauss_hermite(x_order);
  const Rule1D hy = gauss_hermite(y_order);
  const Rule1D gu = gauss_legendre(phi_order);
  const double ax = std::sqrt(1.0 - s);        // x-weight exp[-(1-s)x^2]
  const double ay = std::sqrt((1.0 - s) / s);  // y-weight exp[-((1-s)/s)y^2]
  g.certificate.x_degree = 2 * x_order - 1;
  g.certificate.y_degree = 2 * y_order - 1;
  g.certificate.u_degree = 2 * phi_order - 1;
  g.certificate.psi_degree = psi_nodes - 1;
  g.nodes.reserve(static_cast<std::size_t>(x_order) * y_order * phi_order * psi_nodes);
  const double wps = 1.0 / psi_nodes;
  for (int ix = 0; ix < x_order; ++ix)
    for (int iy = 0; iy < y_order; ++iy)
      for (int iu = 0; iu < phi_order; ++iu)
        for (int ip = 0; ip < psi_nodes; ++ip) {
          const double x = hx.x[ix] / ax;
          const double y = hy.x[iy] / ay;
          const double u = gu.x[iu];
          const double psi = 2.0 * std::numbers::pi * ip / psi_nodes;
          const double sphi = std::sqrt(std::max(0.0, 1.0 - u * u));
          GridNode node;
          node.q = Quaternion(x, y * sphi * std::cos(psi), y * sphi * std::sin(psi),
                              y * u);
          node.w = (hx.w[ix] / ax) * (hy.w[iy] / ay) * (gu.w[iu] / 2.0) * wps;
          g.nodes.push_back(node);
        }
  return g;
}

}  // namespace qcs
