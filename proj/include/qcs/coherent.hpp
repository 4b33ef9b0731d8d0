#pragma once

// Label states of the gaussian family: for a quaternion label q the state has
// components  gamma_q[m] = exp(-|q|^2/2) q^m / sqrt(m!)  in the truncated
// basis.  They are eigenstates of the lowering ladder with right eigenvalue q
// (up to the unavoidable top-component truncation defect), reproduce the
// two-sided exponential as their overlap kernel, and can be rebuilt by
// exponentiating the scaled raising ladder against the ground state.

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "qcs/quantize.hpp"
#include "qcs/rq_linalg.hpp"

namespace qcs {

// exp(-t) * sum_{m>=n} t^m/m! -- the squared-norm weight dropped by
// truncating at dimension n.  For t < n+1 the geometric majorant of the
// ratio-bounded tail gives a true analytic bound; past that point the
// truncation is unusable anyway and the trivial bound 1 is returned.
inline double cs_tail_weight(double t, std::size_t n) {
  if (t <= 0.0) return 0.0;
  const double nd = static_cast<double>(n);
  if (t >= nd + 1.0) return 1.0;
  const double log_first = -t + nd * std::log(t) - std::lgamma(nd + 1.0);
  return std::exp(log_first) * (nd + 1.0) / (nd + 1.0 - t);
}

struct CSVector {
  Quaternion label;
  RQVector vec = RQVector(0);
  double tail_bound = 0.0;
  bool truncation_warning = false;
};

inline CSVector cs_vector(const Quaternion& q, std::size_t n,
                          double warn_tol = 1e-12) {
  if (n < 1) throw std::invalid_argument("cs_vector: need n >= 1");
  CSVector out;
  out.label = q;
  out.vec = RQVector(n);
  const double t = q.norm_sq();
  Quaternion c(std::exp(-t / 2.0), 0, 0, 0);
  out.vec[0] = c;
  for (std::size_t m = 1; m < n; ++m) {
    c = c * q / std::sqrt(static_cast<double>(m));
    out.vec[m] = c;
  }
  out.tail_bound = cs_tail_weight(t, n);
  out.truncation_warning = out.tail_bound > warn_tol;
  return out;
}

// overlap(p, q) = <gamma_q | gamma_p>; the ordered exponential makes the
// label order matter, and conjugating swaps the labels
inline Quaternion overlap(const Quaternion& p, const Quaternion& q,
                          double tol = 1e-15) {
  const double scale = std::exp(-(p.norm_sq() + q.norm_sq()) / 2.0);
  return exp_pair(q.conj(), p, tol).value * scale;
}

// norm of (ladder_lower gamma_q - gamma_q q) over components 0..n-2; the top
// component is excluded because truncation forces a defect
// exp(-|q|^2/2)|q|^n/sqrt((n-1)!) there
inline double cs_eigen_defect(const Quaternion& q, std::size_t n) {
  if (n < 2) throw std::invalid_argument("cs_eigen_defect: need n >= 2");
  const RQVector gamma = cs_vector(q, n).vec;
  const RQVector d = ladder_lower(n).apply(gamma) - gamma.right_mul(q);
  double s = 0.0;
  for (std::size_t m = 0; m + 1 < n; ++m) s += d[m].norm_sq();
  return std::sqrt(s);
}

// ground state hit by the exponential of the label-scaled raising ladder,
// i.e. the partial sum of (scaled raise)^m / m! applied to e_0
inline RQVector cs_from_exponential(const Quaternion& q, std::size_t n) {
  if (n < 1) throw std::invalid_argument("cs_from_exponential: need n >= 1");
  const RQOperator raise = ladder_raise(n);
  const Quaternion alpha = q.conj();
  RQVector w = RQVector::basis(n, 0);
  RQVector acc = w;
  double inv_fact = 1.0;
  for (std::size_t m = 1; m < n; ++m) {
    w = scaled_apply(alpha, raise, w);
    inv_fact /= static_cast<double>(m);
    acc = acc + w * inv_fact;
  }
  return acc * std::exp(-q.norm_sq() / 2.0);
}

// Ratio-test probe of the label-state domain for a general positive weight
// sequence: the defining series converges at |q|^2 below the limit of
// weight(m+1)/weight(m).  Ratios still climbing between m = probe and
// m = 2*probe are read as divergence to an everywhere-defined family.
struct DomainEstimate {
  bool finite = false;
  double radius_sq = std::numeric_limits<double>::infinity();
};

inline DomainEstimate cs_domain_estimate(
    const std::function<double(std::size_t)>& weight, std::size_t probe = 24) {
  if (probe < 4) throw std::invalid_argument("cs_domain_estimate: probe too small");
  const double r1 = weight(probe) / weight(probe - 1);
  const double r2 = weight(2 * probe) / weight(2 * probe - 1);
  if (!(r1 > 0.0) || !(r2 > 0.0))
    throw std::invalid_argument("cs_domain_estimate: weights must be positive");
  DomainEstimate est;
  if (!std::isfinite(r2) || r2 > 1.5 * r1) return est;  // still climbing
  est.finite = true;
  est.radius_sq = r2;
  return est;
}

inline bool cs_domain_contains(const DomainEstimate& est, const Quaternion& q) {
  return !est.finite || q.norm_sq() < est.radius_sq;
}

}  // namespace qcs
