#pragma once

// Two deformed Hermite families attached to the gaussian measures of the
// label states.
//
// One-index family: the classical polynomials H_n extended off the real axis.
// Real coefficients make the extension unambiguous (powers of one quaternion
// commute), and under the anisotropic planar weight
// exp[-(1-s)x^2 - ((1-s)/s) y^2] they stay orthogonal with squared norms
//   b_0 = pi sqrt(s)/(1-s),   b_{n+1}/b_n = 2 (1+s)(n+1)/(1-s).
// Their normalised diagonal kernel has the closed form
//   K_s(x,y) = (1-s^2)/(2 pi s) * exp[(1-s)x^2 + ((1-s)/s) y^2],
// which the partial sums must reproduce.
//
// Two-index family: H_{n,m} built from H_{0,m} = q^m by the coupled
// recurrences
//   H_{n+1,m} = qbar H_{n,m} - m H_{n,m-1}
//   H_{n,m+1} = q    H_{n,m} - n H_{n-1,m}
// For fixed first index the normalised members h_{n,m} = H_{n,m} isf(n) isf(m)
// form an orthonormal ladder for the gaussian pairing, and the n = 0 row
// reproduces the canonical ladder matrices under quantization.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qcs/quadrature.hpp"
#include "qcs/quantize.hpp"
#include "qcs/symbol.hpp"

namespace qcs {

namespace detail {
inline void check_squeeze(double s) {
  if (!(s > 0.0) || !(s < 1.0))
    throw std::invalid_argument("squeeze parameter must lie in (0, 1)");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// one-index family

// ascending coefficient list of H_n via the three-term recurrence
inline std::vector<double> hermite_coefficients(int n) {
  if (n < 0) throw std::invalid_argument("hermite_coefficients: negative degree");
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 2.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (int j = 0; j <= k; ++j) next[j + 1] = 2.0 * cur[j];
    for (int j = 0; j + 1 <= k; ++j) next[j] -= 2.0 * k * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Quaternion hermite_poly(int n, const Quaternion& q) {
  if (n < 0) throw std::invalid_argument("hermite_poly: negative degree");
  Quaternion prev = Quaternion::one();
  if (n == 0) return prev;
  Quaternion cur = q * 2.0;
  for (int k = 1; k < n; ++k) {
    const Quaternion next = q * cur * 2.0 - prev * (2.0 * k);
    prev = cur;
    cur = next;
  }
  return cur;
}

// independent evaluation path: the alternating factorial sum
// H_n = n! sum_m (-1)^m / (m! (n-2m)!) (2q)^{n-2m}
inline Quaternion hermite_poly_explicit(int n, const Quaternion& q) {
  if (n < 0) throw std::invalid_argument("hermite_poly_explicit: negative degree");
  double nfact = 1.0;
  for (int k = 2; k <= n; ++k) nfact *= k;
  const Quaternion two_q = q * 2.0;
  Quaternion acc = Quaternion::zero();
  for (int m = 0; 2 * m <= n; ++m) {
    double mfact = 1.0;
    for (int k = 2; k <= m; ++k) mfact *= k;
    double dfact = 1.0;
    for (int k = 2; k <= n - 2 * m; ++k) dfact *= k;
    Quaternion pw = Quaternion::one();
    for (int k = 0; k < n - 2 * m; ++k) pw = pw * two_q;
    const double coeff = (m % 2 == 0 ? 1.0 : -1.0) * nfact / (mfact * dfact);
    acc = acc + pw * coeff;
  }
  return acc;
}

inline double hermite_norm_ratio(int n, double s) {
  detail::check_squeeze(s);
  if (n < 0) throw std::invalid_argument("hermite_norm_ratio: negative index");
  return 2.0 * (1.0 + s) * (n + 1.0) / (1.0 - s);
}

inline double hermite_norm_sq(int n, double s) {
  detail::check_squeeze(s);
  if (n < 0) throw std::invalid_argument("hermite_norm_sq: negative index");
  double b = std::numbers::pi * std::sqrt(s) / (1.0 - s);
  for (int k = 0; k < n; ++k) b *= hermite_norm_ratio(k, s);
  return b;
}

struct HermiteGramReport {
  double diag_rel_dev = 0.0;  // diagonal against b_n, relative
  double off_rel_dev = 0.0;   // |G_nm| / sqrt(b_n b_m) off the diagonal
};

inline HermiteGramReport hermite_gram_check(int n_max, const HermiteGrid& grid) {
  if (n_max < 0) throw std::invalid_argument("hermite_gram_check: negative order");
  const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
  PairwiseAccumulator<RQOperator> acc;
  std::vector<Quaternion> h(dim);
  for (const auto& node : grid.nodes) {
    for (std::size_t k = 0; k < dim; ++k)
      h[k] = hermite_poly(static_cast<int>(k), node.q);
    RQOperator contrib(dim);
    for (std::size_t n = 0; n < dim; ++n) {
      const Quaternion left = conj(h[n]) * node.w;
      for (std::size_t m = 0; m < dim; ++m) contrib.at(n, m) = left * h[m];
    }
    acc.push(std::move(contrib));
  }
  const RQOperator g = acc.total(RQOperator(dim));
  HermiteGramReport rep;
  for (std::size_t n = 0; n < dim; ++n) {
    const double bn = hermite_norm_sq(static_cast<int>(n), grid.s);
    for (std::size_t m = 0; m < dim; ++m) {
      if (n == m) {
        rep.diag_rel_dev = std::max(
            rep.diag_rel_dev, (g.at(n, n) - Quaternion(bn, 0, 0, 0)).norm() / bn);
      } else {
        const double bm = hermite_norm_sq(static_cast<int>(m), grid.s);
        rep.off_rel_dev =
            std::max(rep.off_rel_dev, g.at(n, m).norm() / std::sqrt(bn * bm));
      }
    }
  }
  return rep;
}

inline double hermite_kernel_closed(double x, double y, double s) {
  detail::check_squeeze(s);
  return (1.0 - s * s) / (2.0 * std::numbers::pi * s) *
         std::exp((1.0 - s) * x * x + (1.0 - s) / s * y * y);
}

// partial sum of |H_n(x+iy)|^2 / b_n; converges geometrically at rate
// (1-s)/(1+s), so moderate term counts already pin the closed form
inline double hermite_kernel_partial(double x, double y, double s, int terms) {
  detail::check_squeeze(s);
  if (terms < 1) throw std::invalid_argument("hermite_kernel_partial: need terms >= 1");
  const std::complex<double> z(x, y);
  std::complex<double> prev(1.0, 0.0), cur = 2.0 * z;
  double b = std::numbers::pi * std::sqrt(s) / (1.0 - s);
  double sum = std::norm(prev) / b;
  for (int n = 1; n < terms; ++n) {
    b *= hermite_norm_ratio(n - 1, s);
    sum += std::norm(cur) / b;
    const std::complex<double> next = 2.0 * z * cur - 2.0 * double(n) * prev;
    prev = cur;
    cur = next;
  }
  return sum;
}

struct BandedQuantizeReport {
  RQOperator op;        // pairing of the coordinate against h_n = H_n/sqrt(b_n)
  RQOperator op_conj;   // same for the conjugated coordinate
  double band_dev = 0.0;      // sub/super-diagonal against the closed band values
  double off_band_dev = 0.0;  // leakage outside the two bands
  double adjoint_dev = 0.0;   // op_conj against the adjoint of op
};

// the recurrence 2 q H_n = H_{n+1} + 2n H_{n-1} forces the quantized
// coordinate to be two-banded: (l+1, l) carries sqrt(ratio_l)/2 and
// (l-1, l) carries l / sqrt(ratio_{l-1})
inline BandedQuantizeReport hermite_quantize_coordinate(std::size_t n_trunc,
                                                        const HermiteGrid& grid) {
  if (n_trunc < 2)
    throw std::invalid_argument("hermite_quantize_coordinate: need n_trunc >= 2");
  PairwiseAccumulator<RQOperator> acc, acc_conj;
  std::vector<Quaternion> h(n_trunc);
  for (const auto& node : grid.nodes) {
    for (std::size_t k = 0; k < n_trunc; ++k)
      h[k] = hermite_poly(static_cast<int>(k), node.q);
    RQOperator contrib(n_trunc), contrib_conj(n_trunc);
    for (std::size_t n = 0; n < n_trunc; ++n) {
      const Quaternion left = conj(h[n]) * node.w;
      const Quaternion left_q = left * node.q;
      const Quaternion left_qbar = left * conj(node.q);
      for (std::size_t l = 0; l < n_trunc; ++l) {
        contrib.at(n, l) = left_q * h[l];
        contrib_conj.at(n, l) = left_qbar * h[l];
      }
    }
    acc.push(std::move(contrib));
    acc_conj.push(std::move(contrib_conj));
  }
  BandedQuantizeReport rep{acc.total(RQOperator(n_trunc)),
                           acc_conj.total(RQOperator(n_trunc)), 0.0, 0.0, 0.0};
  std::vector<double> inv_sqrt_b(n_trunc);
  for (std::size_t n = 0; n < n_trunc; ++n)
    inv_sqrt_b[n] = 1.0 / std::sqrt(hermite_norm_sq(static_cast<int>(n), grid.s));
  for (std::size_t n = 0; n < n_trunc; ++n)
    for (std::size_t l = 0; l < n_trunc; ++l) {
      const double scale = inv_sqrt_b[n] * inv_sqrt_b[l];
      rep.op.at(n, l) = rep.op.at(n, l) * scale;
      rep.op_conj.at(n, l) = rep.op_conj.at(n, l) * scale;
    }
  for (std::size_t l = 0; l < n_trunc; ++l) {
    for (std::size_t n = 0; n < n_trunc; ++n) {
      if (n == l + 1) {
        const double want =
            0.5 * std::sqrt(hermite_norm_ratio(static_cast<int>(l), grid.s));
        rep.band_dev = std::max(
            rep.band_dev, (rep.op.at(n, l) - Quaternion(want, 0, 0, 0)).norm() / want);
      } else if (n + 1 == l) {
        const double want =
            l / std::sqrt(hermite_norm_ratio(static_cast<int>(n), grid.s));
        rep.band_dev = std::max(
            rep.band_dev, (rep.op.at(n, l) - Quaternion(want, 0, 0, 0)).norm() / want);
      } else {
        rep.off_band_dev = std::max(rep.off_band_dev, rep.op.at(n, l).norm());
      }
    }
  }
  rep.adjoint_dev = rep.op_conj.max_abs_diff(rep.op.adjoint());
  return rep;
}

// ---------------------------------------------------------------------------
// two-index family

// full value table H_{0..n_max, 0..m_max} at one point
inline std::vector<std::vector<Quaternion>> hermite2_table(int n_max, int m_max,
                                                           const Quaternion& q) {
  if (n_max < 0 || m_max < 0)
    throw std::invalid_argument("hermite2_table: negative index");
  std::vector<std::vector<Quaternion>> t(
      n_max + 1, std::vector<Quaternion>(m_max + 1, Quaternion::zero()));
  t[0][0] = Quaternion::one();
  for (int m = 1; m <= m_max; ++m) t[0][m] = q * t[0][m - 1];
  const Quaternion qb = conj(q);
  for (int n = 0; n < n_max; ++n)
    for (int m = 0; m <= m_max; ++m) {
      t[n + 1][m] = qb * t[n][m];
      if (m > 0) t[n + 1][m] = t[n + 1][m] - t[n][m - 1] * static_cast<double>(m);
    }
  return t;
}

inline Quaternion hermite2(int n, int m, const Quaternion& q) {
  return hermite2_table(n, m, q)[n][m];
}

// h_{n,m} = H_{n,m} / sqrt(n! m!)
inline Quaternion hermite2_unit(int n, int m, const Quaternion& q) {
  return hermite2(n, m, q) *
         (inv_sqrt_factorial(static_cast<std::size_t>(n)) *
          inv_sqrt_factorial(static_cast<std::size_t>(m)));
}

// partial sum over m of |h_{0,m}(q)|^2, which converges to e^{|q|^2}
inline double hermite2_kernel_row0_partial(const Quaternion& q, int terms) {
  if (terms < 1)
    throw std::invalid_argument("hermite2_kernel_row0_partial: need terms >= 1");
  const double t = q.norm_sq();
  double term = 1.0, sum = 1.0;
  for (int m = 1; m < terms; ++m) {
    term *= t / m;
    sum += term;
  }
  return sum;
}

// normalised cross Gram <h_{a,m} | h_{b,l}> over the gaussian grid; the exact
// value is delta_{ab} delta_{ml}, so the return is the deviation from that
inline double hermite2_gram_defect(int row_a, int row_b, int m_max) {
  if (row_a < 0 || row_b < 0 || m_max < 0)
    throw std::invalid_argument("hermite2_gram_defect: negative index");
  const QuadratureGrid grid =
      build_grid(m_max + std::max(row_a, row_b) + 1, std::abs(row_a - row_b));
  const std::size_t dim = static_cast<std::size_t>(m_max) + 1;
  PairwiseAccumulator<RQOperator> acc;
  for (const auto& node : grid.nodes) {
    const auto ta = hermite2_table(row_a, m_max, node.q);
    const auto tb = row_a == row_b ? ta : hermite2_table(row_b, m_max, node.q);
    RQOperator contrib(dim);
    for (std::size_t m = 0; m < dim; ++m) {
      const Quaternion left = conj(ta[row_a][m]) * node.w;
      for (std::size_t l = 0; l < dim; ++l)
        contrib.at(m, l) = left * tb[row_b][l];
    }
    acc.push(std::move(contrib));
  }
  const RQOperator g = acc.total(RQOperator(dim));
  const double ia = inv_sqrt_factorial(static_cast<std::size_t>(row_a));
  const double ib = inv_sqrt_factorial(static_cast<std::size_t>(row_b));
  double worst = 0.0;
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t l = 0; l < dim; ++l) {
      const Quaternion got =
          g.at(m, l) * (ia * ib * inv_sqrt_factorial(m) * inv_sqrt_factorial(l));
      const Quaternion want = (row_a == row_b && m == l) ? Quaternion::one()
                                                         : Quaternion::zero();
      worst = std::max(worst, (got - want).norm());
    }
  return worst;
}

// pairing of a symbol against the fixed-row family h_{row,0..n_trunc-1}:
// A[m,l] = isf(row)^2 isf(m) isf(l) * sum_W conj(H_{row,m}) f H_{row,l}.
// The conjugate sits on the left index, so the row-0 family pairs the
// coordinate into the raising matrix and its conjugate into the lowering one.
inline RQOperator hermite2_quantize(int row_n, const Symbol& f, std::size_t n_trunc) {
  if (row_n < 0) throw std::invalid_argument("hermite2_quantize: negative row");
  if (n_trunc < 1) throw std::invalid_argument("hermite2_quantize: empty truncation");
  const int deg = f.is_polynomial() ? std::max(1, f.degree()) : 2;
  const QuadratureGrid grid =
      build_grid(static_cast<int>(n_trunc) + row_n, deg);
  PairwiseAccumulator<RQOperator> acc;
  for (const auto& node : grid.nodes) {
    const auto t = hermite2_table(row_n, static_cast<int>(n_trunc) - 1, node.q);
    const Quaternion fw = f.evaluate(node.q) * node.w;
    RQOperator contrib(n_trunc);
    for (std::size_t m = 0; m < n_trunc; ++m) {
      const Quaternion left = conj(t[row_n][m]) * fw;
      for (std::size_t l = 0; l < n_trunc; ++l)
        contrib.at(m, l) = left * t[row_n][l];
    }
    acc.push(std::move(contrib));
  }
  RQOperator out = acc.total(RQOperator(n_trunc));
  const double irow = inv_sqrt_factorial(static_cast<std::size_t>(row_n));
  for (std::size_t m = 0; m < n_trunc; ++m)
    for (std::size_t l = 0; l < n_trunc; ++l)
      out.at(m, l) =
          out.at(m, l) * (irow * irow * inv_sqrt_factorial(m) * inv_sqrt_factorial(l));
  return out;
}

}  // namespace qcs
