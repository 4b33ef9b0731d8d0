#pragma once

// Restriction of the oscillator to a single slice: fixing a unit imaginary
// direction I turns the slice into an ordinary complex plane, where the
// ladder pair yields canonically conjugate position/momentum matrices and a
// diagonal harmonic hamiltonian.  Embedding the complex matrices back as
// quaternion entries x + yI exercises the commutation relation inside the
// ambient algebra, where it must close on I itself.

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qcs/quadrature.hpp"
#include "qcs/quantize.hpp"

namespace qcs {

class CMatrix {
 public:
  explicit CMatrix(std::size_t n) : n_(n), m_(n * n) {}

  static CMatrix identity(std::size_t n) {
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1.0;
    return out;
  }

  std::size_t dim() const { return n_; }
  std::complex<double>& at(std::size_t r, std::size_t c) { return m_[r * n_ + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const {
    return m_[r * n_ + c];
  }

  CMatrix operator+(const CMatrix& o) const {
    check(o);
    CMatrix out(n_);
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] + o.m_[i];
    return out;
  }
  CMatrix operator-(const CMatrix& o) const {
    check(o);
    CMatrix out(n_);
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] - o.m_[i];
    return out;
  }
  CMatrix operator*(const CMatrix& o) const {
    check(o);
    CMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t k = 0; k < n_; ++k) {
        const std::complex<double> a = at(r, k);
        if (a == 0.0) continue;
        for (std::size_t c = 0; c < n_; ++c) out.at(r, c) += a * o.at(k, c);
      }
    return out;
  }
  CMatrix scale(const std::complex<double>& s) const {
    CMatrix out(n_);
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] = m_[i] * s;
    return out;
  }
  CMatrix adjoint() const {
    CMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out.at(r, c) = std::conj(at(c, r));
    return out;
  }
  double max_abs_diff(const CMatrix& o) const {
    check(o);
    double worst = 0.0;
    for (std::size_t i = 0; i < m_.size(); ++i)
      worst = std::max(worst, std::abs(m_[i] - o.m_[i]));
    return worst;
  }
  double max_abs() const {
    double worst = 0.0;
    for (const auto& v : m_) worst = std::max(worst, std::abs(v));
    return worst;
  }

 private:
  void check(const CMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CMatrix: dimension mismatch");
  }
  std::size_t n_;
  std::vector<std::complex<double>> m_;
};

struct SliceOperators {
  Quaternion I;
  CMatrix lower, raise, position, momentum, hamiltonian;
};

inline SliceOperators slice_operators(const Quaternion& I, std::size_t n) {
  if (!is_imaginary_unit(I))
    throw std::invalid_argument("slice_operators: axis must be a unit imaginary");
  if (n < 2) throw std::invalid_argument("slice_operators: need n >= 2");
  CMatrix lower(n), raise(n);
  for (std::size_t m = 0; m + 1 < n; ++m) {
    const double s = std::sqrt(static_cast<double>(m + 1));
    lower.at(m, m + 1) = s;
    raise.at(m + 1, m) = s;
  }
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  const std::complex<double> mi(0.0, -1.0);
  SliceOperators out{I,
                     lower,
                     raise,
                     (lower + raise).scale(inv_rt2),
                     (lower - raise).scale(mi * inv_rt2),
                     CMatrix(n)};
  out.hamiltonian =
      (out.position * out.position + out.momentum * out.momentum).scale(0.5);
  return out;
}

// complex entry x + yi becomes the quaternion x + y I
inline RQOperator slice_embed_operator(const CMatrix& m, const Quaternion& I) {
  RQOperator out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const std::complex<double> v = m.at(r, c);
      out.at(r, c) = Quaternion(v.real(), 0, 0, 0) + I * v.imag();
    }
  return out;
}

struct SliceCommutationReport {
  double safe_dev = 0.0;    // [position, momentum] against I on indices 0..n-2
  double corner_dev = 0.0;  // bottom corner against I(1-n)
  double off_dev = 0.0;     // off-diagonal entries of the commutator
};

// runs in the embedded quaternion arithmetic so the slice axis participates
inline SliceCommutationReport slice_commutation_check(const Quaternion& I,
                                                      std::size_t n) {
  const auto ops = slice_operators(I, n);
  const RQOperator Q = slice_embed_operator(ops.position, I);
  const RQOperator P = slice_embed_operator(ops.momentum, I);
  const RQOperator C = commutator(Q, P);
  SliceCommutationReport rep;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c) {
        rep.off_dev = std::max(rep.off_dev, C.at(r, c).norm());
      } else if (r + 1 < n) {
        rep.safe_dev = std::max(rep.safe_dev, (C.at(r, c) - I).norm());
      } else {
        rep.corner_dev =
            (C.at(r, c) - I * (1.0 - static_cast<double>(n))).norm();
      }
    }
  return rep;
}

struct SliceSpectrumReport {
  double diag_dev = 0.0;      // hamiltonian diagonal vs m + 1/2 on 0..n-2
  double off_dev = 0.0;       // any off-diagonal leakage
  double corner_value = 0.0;  // (n-1, n-1): truncation gives (n-1)/2
};

inline SliceSpectrumReport slice_spectrum_check(const Quaternion& I, std::size_t n) {
  const auto ops = slice_operators(I, n);
  SliceSpectrumReport rep;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::complex<double> v = ops.hamiltonian.at(r, c);
      if (r != c)
        rep.off_dev = std::max(rep.off_dev, std::abs(v));
      else if (r + 1 < n)
        rep.diag_dev =
            std::max(rep.diag_dev, std::abs(v - (static_cast<double>(r) + 0.5)));
      else
        rep.corner_value = v.real();
    }
  return rep;
}

// resolution of the identity over the slice: radial Laguerre nodes absorb the
// gaussian normalisation of the unnormalised monomial states, uniform theta
// kills the off-diagonal frequencies; returns the deviation from the identity
inline double slice_resolution_defect(const Quaternion& I, std::size_t n,
                                      int radial_order = -1, int theta_nodes = -1) {
  if (!is_imaginary_unit(I))
    throw std::invalid_argument("slice_resolution_defect: bad axis");
  if (radial_order < 1) radial_order = static_cast<int>(n / 2 + 1);
  if (theta_nodes < 1) theta_nodes = static_cast<int>(2 * n + 1);
  const Rule1D rad = gauss_laguerre(radial_order);
  CMatrix acc(n);
  std::vector<std::complex<double>> zp(n);
  for (int i = 0; i < radial_order; ++i) {
    const double r = std::sqrt(rad.x[i]);
    for (int a = 0; a < theta_nodes; ++a) {
      const double th = 2.0 * std::numbers::pi * a / theta_nodes;
      const std::complex<double> z = std::polar(r, th);
      const double w = rad.w[i] / theta_nodes;
      zp[0] = 1.0;
      for (std::size_t m = 1; m < n; ++m) zp[m] = zp[m - 1] * z;
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t l = 0; l < n; ++l)
          acc.at(m, l) += w * zp[m] * std::conj(zp[l]) *
                          (inv_sqrt_factorial(m) * inv_sqrt_factorial(l));
    }
  }
  return acc.max_abs_diff(CMatrix::identity(n));
}

// on a slice the classical pair does close on the squared modulus
inline double classical_slice_hamiltonian_defect(double x, double y) {
  const double s = std::sqrt(2.0);
  const double pos = s * x, mom = s * y;
  return std::abs(0.5 * (pos * pos + mom * mom) - (x * x + y * y));
}

}  // namespace qcs
