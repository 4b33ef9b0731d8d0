#pragma once

// Finite-dimensional right quaternionic Hilbert space: vectors with quaternion
// components, scalars acting from the right, inner product <u|v> = sum_m
// conj(u_m) v_m (linear in the right slot, conjugate-linear in the left).
// Operators are dense quaternion matrices acting from the left, so they
// commute with right scalar multiplication.  Quaternion scalars combine with
// operators through ScaledOperator, which keeps the defining action
//   (alpha O)|f> = (O|f>) * conj(alpha)
// intact instead of flattening the scalar into the matrix; that action is the
// reason (alpha O) fails to be right-linear for non-real alpha.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcs/quaternion.hpp"

namespace qcs {

class RQVector {
 public:
  RQVector() = default;
  explicit RQVector(std::size_t n) : c_(n) {}
  explicit RQVector(std::vector<Quaternion> c) : c_(std::move(c)) {}

  static RQVector basis(std::size_t n, std::size_t m, const Quaternion& scale = Quaternion::one()) {
    if (m >= n) throw std::out_of_range("RQVector::basis: index out of range");
    RQVector v(n);
    v[m] = scale;
    return v;
  }

  std::size_t dim() const { return c_.size(); }
  Quaternion& operator[](std::size_t m) { return c_[m]; }
  const Quaternion& operator[](std::size_t m) const { return c_[m]; }
  const std::vector<Quaternion>& components() const { return c_; }

  // right scalar multiple f*q: componentwise c_m * q
  RQVector right_mul(const Quaternion& q) const {
    RQVector out(c_.size());
    for (std::size_t m = 0; m < c_.size(); ++m) out[m] = c_[m] * q;
    return out;
  }

  // left multiple q*f = sum_m e_m (q c_m); with components this is q * c_m
  RQVector left_mul(const Quaternion& q) const {
    RQVector out(c_.size());
    for (std::size_t m = 0; m < c_.size(); ++m) out[m] = q * c_[m];
    return out;
  }

  RQVector operator*(double s) const {
    RQVector out(c_.size());
    for (std::size_t m = 0; m < c_.size(); ++m) out[m] = c_[m] * s;
    return out;
  }

  RQVector operator+(const RQVector& o) const {
    check_dim(o);
    RQVector out(c_.size());
    for (std::size_t m = 0; m < c_.size(); ++m) out[m] = c_[m] + o[m];
    return out;
  }
  RQVector operator-(const RQVector& o) const {
    check_dim(o);
    RQVector out(c_.size());
    for (std::size_t m = 0; m < c_.size(); ++m) out[m] = c_[m] - o[m];
    return out;
  }

  double norm() const;

  double max_component_diff(const RQVector& o) const {
    check_dim(o);
    double worst = 0.0;
    for (std::size_t m = 0; m < c_.size(); ++m)
      worst = std::max(worst, (c_[m] - o[m]).norm());
    return worst;
  }

 private:
  void check_dim(const RQVector& o) const {
    if (c_.size() != o.c_.size())
      throw std::invalid_argument("RQVector: dimension mismatch");
  }
  std::vector<Quaternion> c_;
};

inline Quaternion inner(const RQVector& u, const RQVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("inner: dimension mismatch");
  Quaternion s = Quaternion::zero();
  for (std::size_t m = 0; m < u.dim(); ++m) s += u[m].conj() * v[m];
  return s;
}

inline double RQVector::norm() const {
  return std::sqrt(inner(*this, *this).real());
}

// ---------------------------------------------------------------------------

class RQOperator {
 public:
  RQOperator() = default;
  explicit RQOperator(std::size_t n) : n_(n), a_(n * n) {}

  static RQOperator identity(std::size_t n) {
    RQOperator id(n);
    for (std::size_t m = 0; m < n; ++m) id.at(m, m) = Quaternion::one();
    return id;
  }

  std::size_t dim() const { return n_; }
  Quaternion& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Quaternion& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  RQVector apply(const RQVector& f) const {
    if (f.dim() != n_) throw std::invalid_argument("RQOperator::apply: dimension mismatch");
    RQVector out(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      Quaternion s = Quaternion::zero();
      for (std::size_t c = 0; c < n_; ++c) s += a_[r * n_ + c] * f[c];
      out[r] = s;
    }
    return out;
  }

  RQOperator operator*(const RQOperator& o) const {
    check_dim(o);
    RQOperator out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) {
        Quaternion s = Quaternion::zero();
        for (std::size_t k = 0; k < n_; ++k) s += a_[r * n_ + k] * o.a_[k * n_ + c];
        out.at(r, c) = s;
      }
    return out;
  }

  RQOperator operator+(const RQOperator& o) const {
    check_dim(o);
    RQOperator out(n_);
    for (std::size_t idx = 0; idx < a_.size(); ++idx) out.a_[idx] = a_[idx] + o.a_[idx];
    return out;
  }
  RQOperator operator-(const RQOperator& o) const {
    check_dim(o);
    RQOperator out(n_);
    for (std::size_t idx = 0; idx < a_.size(); ++idx) out.a_[idx] = a_[idx] - o.a_[idx];
    return out;
  }
  RQOperator operator-() const {
    RQOperator out(n_);
    for (std::size_t idx = 0; idx < a_.size(); ++idx) out.a_[idx] = -a_[idx];
    return out;
  }

  // real scalars commute; quaternion scalars must go through ScaledOperator
  RQOperator scale_real(double s) const {
    RQOperator out(n_);
    for (std::size_t idx = 0; idx < a_.size(); ++idx) out.a_[idx] = s * a_[idx];
    return out;
  }

  // (A+)_{rc} = conj(A_{cr}); satisfies <g|A f> = <A+ g|f>
  RQOperator adjoint() const {
    RQOperator out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out.at(r, c) = a_[c * n_ + r].conj();
    return out;
  }

  double max_abs_diff(const RQOperator& o) const {
    check_dim(o);
    double worst = 0.0;
    for (std::size_t idx = 0; idx < a_.size(); ++idx)
      worst = std::max(worst, (a_[idx] - o.a_[idx]).norm());
    return worst;
  }

  double max_abs() const {
    double worst = 0.0;
    for (const auto& q : a_) worst = std::max(worst, q.norm());
    return worst;
  }

 private:
  void check_dim(const RQOperator& o) const {
    if (n_ != o.n_) throw std::invalid_argument("RQOperator: dimension mismatch");
  }
  std::size_t n_ = 0;
  std::vector<Quaternion> a_;
};

inline RQOperator commutator(const RQOperator& a, const RQOperator& b) {
  return a * b - b * a;
}

inline bool approx_equal(const RQOperator& a, const RQOperator& b, double tol = 1e-12) {
  return a.max_abs_diff(b) <= tol;
}

// Cross-check oracle: embed each quaternion entry as its 2x2 complex block and
// multiply the 2N x 2N complex matrices.  Must agree with RQOperator::operator*.
inline RQOperator multiply_via_embedding(const RQOperator& x, const RQOperator& y) {
  const std::size_t n = x.dim();
  if (n != y.dim()) throw std::invalid_argument("multiply_via_embedding: dimension mismatch");
  const std::size_t n2 = 2 * n;
  std::vector<std::complex<double>> ex(n2 * n2), ey(n2 * n2), ez(n2 * n2);
  auto put = [n2](std::vector<std::complex<double>>& m, std::size_t r, std::size_t c,
                  const MatrixRep& blk) {
    m[(2 * r) * n2 + 2 * c] = blk.a;
    m[(2 * r) * n2 + 2 * c + 1] = blk.b;
    m[(2 * r + 1) * n2 + 2 * c] = blk.c;
    m[(2 * r + 1) * n2 + 2 * c + 1] = blk.d;
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      put(ex, r, c, to_matrix(x.at(r, c)));
      put(ey, r, c, to_matrix(y.at(r, c)));
    }
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t c = 0; c < n2; ++c) {
      std::complex<double> s{};
      for (std::size_t k = 0; k < n2; ++k) s += ex[r * n2 + k] * ey[k * n2 + c];
      ez[r * n2 + c] = s;
    }
  RQOperator out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      MatrixRep blk{ez[(2 * r) * n2 + 2 * c], ez[(2 * r) * n2 + 2 * c + 1],
                    ez[(2 * r + 1) * n2 + 2 * c], ez[(2 * r + 1) * n2 + 2 * c + 1]};
      out.at(r, c) = from_matrix(blk, 1e-9);
    }
  return out;
}

// ---------------------------------------------------------------------------
// alpha * O as a composite: never flattened to a matrix, because the action
// attaches conj(alpha) on the right of the output vector.

struct ScaledOperator {
  Quaternion alpha;
  RQOperator base;

  RQVector apply(const RQVector& f) const { return base.apply(f).right_mul(alpha.conj()); }

  // naive "adjoint": conj(alpha) * base^T-conj, again as a composite
  ScaledOperator naive_adjoint() const { return {alpha.conj(), base.adjoint()}; }
};

inline RQVector scaled_apply(const Quaternion& alpha, const RQOperator& op, const RQVector& f) {
  return ScaledOperator{alpha, op}.apply(f);
}

// The two sides of the adjoint relation for the scaled operator:
//   first  = <u | (alpha O) v>
//   second = <(conj(alpha) O+) u | v>
// For real alpha they coincide; for non-real alpha they differ whenever the
// relevant inner product leaves the slice of alpha.
inline std::pair<Quaternion, Quaternion> adjoint_defect(const Quaternion& alpha,
                                                        const RQOperator& op,
                                                        const RQVector& u, const RQVector& v) {
  const Quaternion first = inner(u, ScaledOperator{alpha, op}.apply(v));
  const Quaternion second = inner(ScaledOperator{alpha, op}.naive_adjoint().apply(u), v);
  return {first, second};
}

}  // namespace qcs
