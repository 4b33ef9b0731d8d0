#pragma once

// Integral quantization against the gaussian-weighted family of normalised
// power states: a symbol f becomes the matrix
//
//   A_f[m,l] = (m! l!)^{-1/2} * integral of q^m f(q) conj(q)^l exp(-|q|^2)
//
// over the chart measure, evaluated on a product grid.  For polynomial
// symbols inside the grid certificate the result is exact up to rounding;
// the coordinate symbol and its conjugate then reproduce the closed-form
// ladder matrices below, and the constant symbol resolves to the identity.

#include <cmath>
#include <cstddef>
#include <vector>

#include "qcs/quadrature.hpp"
#include "qcs/rq_linalg.hpp"
#include "qcs/symbol.hpp"

namespace qcs {

// 1/sqrt(m!) built by repeated division; stable for every m representable
inline double inv_sqrt_factorial(std::size_t m) {
  double v = 1.0;
  for (std::size_t k = 1; k <= m; ++k) v /= std::sqrt(static_cast<double>(k));
  return v;
}

// closed form of quantizing the coordinate symbol: sqrt(m+1) at (m, m+1);
// shifts basis index down, so it annihilates the lowest state
inline RQOperator ladder_lower(std::size_t n) {
  RQOperator op(n);
  for (std::size_t m = 0; m + 1 < n; ++m)
    op.at(m, m + 1) = Quaternion(std::sqrt(static_cast<double>(m + 1)), 0, 0, 0);
  return op;
}

// closed form of quantizing the conjugate coordinate: sqrt(k) at (k, k-1)
inline RQOperator ladder_raise(std::size_t n) {
  RQOperator op(n);
  for (std::size_t k = 1; k < n; ++k)
    op.at(k, k - 1) = Quaternion(std::sqrt(static_cast<double>(k)), 0, 0, 0);
  return op;
}

struct QuantizationResult {
  RQOperator op = RQOperator(0);
  GridCertificate certificate;
  // polynomial symbol whose every monomial lies inside the grid certificate
  bool certified = false;
  // polynomial symbols populate only the diagonals l-m = a-b; this is the
  // largest entry found off those diagonals (0 when nothing leaks, and 0 by
  // convention for opaque symbols where no pattern is predicted)
  double off_pattern = 0.0;
};

namespace detail {

inline bool grid_covers(const GridCertificate& cert, std::size_t n_trunc, int degree) {
  const int top = static_cast<int>(n_trunc) - 1;
  const int theta_need = 2 * top + degree;
  const int radial_need = (2 * top + degree + 1) / 2;
  return theta_need <= cert.theta_degree && radial_need <= cert.radial_degree &&
         cert.u_degree >= 2 && cert.psi_degree >= 2;
}

}  // namespace detail

inline QuantizationResult quantize(const Symbol& f, const QuadratureGrid& g,
                                   std::size_t n_trunc) {
  if (n_trunc < 1) throw std::invalid_argument("quantize: n_trunc must be >= 1");
  const std::size_t n = n_trunc;
  PairwiseAccumulator<RQOperator> acc;
  std::vector<Quaternion> qp(n), right(n);
  for (const auto& node : g.nodes) {
    qp[0] = Quaternion::one();
    for (std::size_t m = 1; m < n; ++m) qp[m] = qp[m - 1] * node.q;
    const Quaternion fq = f.evaluate(node.q);
    const Quaternion qb = node.q.conj();
    right[0] = fq * node.w;
    for (std::size_t l = 1; l < n; ++l) right[l] = right[l - 1] * qb;
    RQOperator contrib(n);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t l = 0; l < n; ++l) contrib.at(m, l) = qp[m] * right[l];
    acc.push(std::move(contrib));
  }
  QuantizationResult res;
  res.op = acc.total(RQOperator(n));
  std::vector<double> isf(n);
  for (std::size_t m = 0; m < n; ++m) isf[m] = inv_sqrt_factorial(m);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l)
      res.op.at(m, l) = res.op.at(m, l) * (isf[m] * isf[l]);
  res.certificate = g.certificate;
  if (f.is_polynomial()) {
    res.certified = detail::grid_covers(g.certificate, n_trunc, f.degree());
    // collect the populated diagonals and measure leakage off them
    std::vector<int> offsets;
    for (const auto& t : f.terms()) offsets.push_back(t.a - t.b);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t l = 0; l < n; ++l) {
        const int off = static_cast<int>(l) - static_cast<int>(m);
        bool allowed = false;
        for (int o : offsets) allowed = allowed || (off == o);
        if (!allowed)
          res.off_pattern = std::max(res.off_pattern, res.op.at(m, l).norm());
      }
  }
  return res;
}

// quantizing the constant symbol must give the identity; returns the
// largest entry deviation
inline double resolution_identity_defect(const QuadratureGrid& g,
                                         std::size_t n_trunc) {
  return quantize(Symbol::one(), g, n_trunc)
      .op.max_abs_diff(RQOperator::identity(n_trunc));
}

struct LadderCommutatorReport {
  // [lower, raise] against the identity over the doubly-safe block
  double safe_identity_dev = 0.0;
  // bottom-right entry must be 1-N, the truncation's trace-balancing value
  double corner_dev = 0.0;
  // product diagonals: lower*raise carries (1,...,N-1,0), raise*lower (0,...,N-1)
  double lower_raise_diag_dev = 0.0;
  double raise_lower_diag_dev = 0.0;
  // everything off-diagonal in both products
  double off_diag_dev = 0.0;
};

inline LadderCommutatorReport ladder_commutator_check(std::size_t n) {
  if (n < 2) throw std::invalid_argument("ladder_commutator_check: need n >= 2");
  const RQOperator a = ladder_lower(n), r = ladder_raise(n);
  const RQOperator ar = a * r, ra = r * a;
  const RQOperator comm = ar - ra;
  LadderCommutatorReport rep;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l) {
      const Quaternion arv = ar.at(m, l), rav = ra.at(m, l);
      if (m != l) {
        rep.off_diag_dev = std::max({rep.off_diag_dev, arv.norm(), rav.norm()});
        continue;
      }
      const double md = static_cast<double>(m);
      const double ar_want = (m + 1 < n) ? md + 1.0 : 0.0;
      rep.lower_raise_diag_dev =
          std::max(rep.lower_raise_diag_dev, (arv - Quaternion(ar_want, 0, 0, 0)).norm());
      rep.raise_lower_diag_dev =
          std::max(rep.raise_lower_diag_dev, (rav - Quaternion(md, 0, 0, 0)).norm());
      const Quaternion cv = comm.at(m, l);
      if (m + 1 < n)
        rep.safe_identity_dev =
            std::max(rep.safe_identity_dev, (cv - Quaternion::one()).norm());
      else
        rep.corner_dev = (cv - Quaternion(1.0 - static_cast<double>(n), 0, 0, 0)).norm();
    }
  return rep;
}

}  // namespace qcs
