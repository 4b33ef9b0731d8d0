#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "qcs/quadrature.hpp"
#include "test_util.hpp"

using qcs::Quaternion;
using qcs_test::isapprox;
using qcs_test::Rng;

namespace {

double factorial(int m) {
  double f = 1.0;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

// sum of W * q^m * conj(q)^l over the grid
Quaternion grid_monomial(const qcs::QuadratureGrid& g, int m, int l) {
  qcs::PairwiseAccumulator<Quaternion> acc;
  for (const auto& node : g.nodes) {
    Quaternion p = Quaternion::one();
    for (int a = 0; a < m; ++a) p = p * node.q;
    for (int b = 0; b < l; ++b) p = p * node.q.conj();
    acc.push(p * node.w);
  }
  return acc.total(Quaternion::zero());
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("legendre rule: weights and monomial exactness") {
  const auto r = qcs::gauss_legendre(6);
  REQUIRE(r.x.size() == 6);
  double sw = std::accumulate(r.w.begin(), r.w.end(), 0.0);
  CHECK(isapprox(sw, 2.0, 1e-14));
  for (int k = 0; k <= 11; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::pow(r.x[i], k);
    const double want = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    CHECK(isapprox(s, want, 1e-13));
  }
  CHECK_THROWS_AS((void)qcs::gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("laguerre rule: factorial moments through degree 2n-1") {
  const auto r = qcs::gauss_laguerre(11);
  REQUIRE(r.x.size() == 11);
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    CHECK(r.x[i] > 0.0);
    if (i > 0) CHECK(r.x[i] > r.x[i - 1]);
    CHECK(r.w[i] > 0.0);
  }
  for (int m = 0; m <= 21; ++m) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::pow(r.x[i], m);
    CHECK(isapprox(s, factorial(m), 0.0, 1e-12));
  }
  CHECK_THROWS_AS((void)qcs::gauss_laguerre(-1), std::invalid_argument);
}

TEST_CASE("hermite rule: gaussian moments") {
  const auto r = qcs::gauss_hermite(8);
  const double spi = std::sqrt(std::numbers::pi);
  double m0 = 0, m1 = 0, m2 = 0, m4 = 0, m6 = 0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    m0 += r.w[i];
    m1 += r.w[i] * r.x[i];
    m2 += r.w[i] * r.x[i] * r.x[i];
    m4 += r.w[i] * std::pow(r.x[i], 4);
    m6 += r.w[i] * std::pow(r.x[i], 6);
  }
  CHECK(isapprox(m0, spi, 1e-13));
  CHECK(std::abs(m1) <= 1e-14);
  CHECK(isapprox(m2, spi / 2, 1e-13));
  CHECK(isapprox(m4, 3 * spi / 4, 1e-13));
  CHECK(isapprox(m6, 15 * spi / 8, 1e-12));
  // symmetric rule, centre node exact for odd order
  const auto r5 = qcs::gauss_hermite(5);
  CHECK(r5.x[2] == 0.0);
  CHECK(r5.x[0] == -r5.x[4]);
  CHECK(r5.w[0] == r5.w[4]);
}

TEST_CASE("grid: certificate and weight normalisation") {
  const auto g = qcs::build_grid(16, 4);
  CHECK(g.radial_order == 11);
  CHECK(g.theta_nodes == 37);
  CHECK(g.certificate.radial_degree == 21);
  CHECK(g.certificate.theta_degree == 36);
  CHECK(g.certificate.u_degree == 7);
  CHECK(g.nodes.size() ==
        static_cast<std::size_t>(g.radial_order) * g.theta_nodes * g.phi_order *
            g.psi_nodes);
  // total mass of exp(-|q|^2) under the normalised measure is 1
  qcs::PairwiseAccumulator<double> acc;
  for (const auto& node : g.nodes) acc.push(node.w);
  CHECK(isapprox(acc.total(0.0), 1.0, 0.0, 1e-13));
}

TEST_CASE("grid: factorial moments inside the certificate") {
  const auto g = qcs::build_grid(16, 4);
  for (int m = 0; m <= 20; ++m)
    CHECK(isapprox(qcs::moment_check(g, m), factorial(m), 0.0, 1e-12));
  CHECK_THROWS_AS((void)qcs::moment_check(g, g.certificate.radial_degree + 1),
                  std::domain_error);
}

TEST_CASE("grid: monomial integrals are diagonal factorials") {
  const auto g = qcs::build_grid(7, 0);
  for (int m = 0; m <= 6; ++m)
    for (int l = 0; l <= 6; ++l) {
      const Quaternion got = grid_monomial(g, m, l);
      const Quaternion want =
          (m == l) ? Quaternion(factorial(m), 0, 0, 0) : Quaternion::zero();
      CHECK((got - want).norm() <= 1e-11 * std::max(1.0, want.norm()));
    }
}

TEST_CASE("grid: component second moments") {
  // the chart measure averages a circle in the real/modulus plane and a
  // sphere over the imaginary axis, so the real direction carries weight
  // 1/2 and the three imaginary directions 1/6 each (sum = <|q|^2> = 1)
  const auto g = qcs::build_grid(4, 2);
  double s00 = 0, s11 = 0, s22 = 0, s33 = 0, s03 = 0;
  for (const auto& node : g.nodes) {
    s00 += node.w * node.q.x0 * node.q.x0;
    s11 += node.w * node.q.x1 * node.q.x1;
    s22 += node.w * node.q.x2 * node.q.x2;
    s33 += node.w * node.q.x3 * node.q.x3;
    s03 += node.w * node.q.x0 * node.q.x3;
  }
  CHECK(isapprox(s00, 0.5, 1e-13));
  CHECK(isapprox(s11, 1.0 / 6, 1e-13));
  CHECK(isapprox(s22, 1.0 / 6, 1e-13));
  CHECK(isapprox(s33, 1.0 / 6, 1e-13));
  CHECK(std::abs(s03) <= 1e-14);
}

TEST_CASE("grid: invalid orders throw") {
  CHECK_THROWS_AS((void)qcs::build_grid_orders(0, 4, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)qcs::build_grid(0, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)qcs::build_grid(4, -1), std::invalid_argument);
}

TEST_CASE("deformed planar grid: total mass matches the closed form") {
  // integral of the deformed gaussian over the plane is pi*sqrt(s)/(1-s)
  for (double s : {0.3, 0.5, 0.7}) {
    const auto g = qcs::build_hermite_grid(s, 8, 8, 4, 8);
    qcs::PairwiseAccumulator<double> acc;
    for (const auto& node : g.nodes) acc.push(node.w);
    const double want = std::numbers::pi * std::sqrt(s) / (1.0 - s);
    CHECK(isapprox(acc.total(0.0), want, 0.0, 1e-13));
  }
  CHECK_THROWS_AS((void)qcs::build_hermite_grid(1.5, 4, 4, 4, 4),
                  std::invalid_argument);
}

TEST_CASE("deformed planar grid: gaussian coordinate moments") {
  const double s = 0.5;
  const auto g = qcs::build_hermite_grid(s, 6, 6, 4, 8);
  // x^2 against exp[-(1-s)x^2]: variance 1/(2(1-s)); y likewise with s/(2(1-s))
  double mass = 0, mx2 = 0, my2 = 0, mxy = 0;
  for (const auto& node : g.nodes) {
    const double x = node.q.x0;
    const double y = std::sqrt(node.q.x1 * node.q.x1 + node.q.x2 * node.q.x2 +
                               node.q.x3 * node.q.x3);
    mass += node.w;
    mx2 += node.w * x * x;
    my2 += node.w * y * y;
    mxy += node.w * x * y;
  }
  CHECK(isapprox(mx2 / mass, 1.0 / (2 * (1 - s)), 0.0, 1e-12));
  CHECK(isapprox(my2 / mass, s / (2 * (1 - s)), 0.0, 1e-12));
  CHECK(isapprox(mxy / mass, 0.0, 1e-13));
}

TEST_CASE("pairwise accumulator") {
  qcs::PairwiseAccumulator<double> acc;
  for (int k = 1; k <= 1000; ++k) acc.push(static_cast<double>(k));
  CHECK(acc.total(0.0) == 500500.0);
  CHECK(acc.count() == 1000);

  // agrees with sequential summation to rounding, and is reproducible
  Rng rng(31);
  std::vector<double> vals;
  for (int k = 0; k < 777; ++k) vals.push_back(rng.next_sym(1.0));
  qcs::PairwiseAccumulator<double> a1, a2;
  for (double v : vals) a1.push(v);
  for (double v : vals) a2.push(v);
  CHECK(a1.total(0.0) == a2.total(0.0));
  const double seq = std::accumulate(vals.begin(), vals.end(), 0.0);
  CHECK(isapprox(a1.total(0.0), seq, 1e-12));

  qcs::PairwiseAccumulator<Quaternion> qa;
  qa.push(Quaternion::i());
  qa.push(Quaternion::j());
  CHECK(qa.total(Quaternion::zero()) == Quaternion(0, 1, 1, 0));
}

}  // TEST_SUITE
