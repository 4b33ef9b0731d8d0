#pragma once

// Quaternion algebra with the 2x2 complex matrix representation, the polar
// (modulus / rotation-angle / axis) chart, slice decomposition q = x + y*I,
// the two-argument exponential series E(p,q) = sum_m p^m q^m / m!, and
// anti-regular polynomials (polynomials in qbar with right coefficients)
// together with the Cullen derivative calculus on them.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace qcs {

struct Quaternion {
  double x0 = 0.0;  // real part
  double x1 = 0.0;  // i component
  double x2 = 0.0;  // j component
  double x3 = 0.0;  // k component

  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b, double c, double d)
      : x0(a), x1(b), x2(c), x3(d) {}
  // real embedding: reals commute with everything
  constexpr Quaternion(double a) : x0(a) {}

  static constexpr Quaternion zero() { return {0, 0, 0, 0}; }
  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3};
  }
  constexpr Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }

  // Hamilton product: ij = k, jk = i, ki = j, anti-commuting units.
  // imaginary rows group the scalar-cross and cyclic pairs so that products
  // against the conjugate cancel exactly: q * conj(q) is real to the bit
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {x0 * o.x0 - x1 * o.x1 - x2 * o.x2 - x3 * o.x3,
            (x0 * o.x1 + x1 * o.x0) + (x2 * o.x3 - x3 * o.x2),
            (x0 * o.x2 + x2 * o.x0) + (x3 * o.x1 - x1 * o.x3),
            (x0 * o.x3 + x3 * o.x0) + (x1 * o.x2 - x2 * o.x1)};
  }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  constexpr Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
  constexpr double norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  double norm() const { return std::sqrt(norm_sq()); }
  constexpr double real() const { return x0; }
  double imag_norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

  Quaternion inverse() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw std::domain_error("Quaternion::inverse: zero quaternion");
    return {x0 / n2, -x1 / n2, -x2 / n2, -x3 / n2};
  }

  constexpr bool operator==(const Quaternion& o) const {
    return x0 == o.x0 && x1 == o.x1 && x2 == o.x2 && x3 == o.x3;
  }
  constexpr bool operator!=(const Quaternion& o) const { return !(*this == o); }
};

inline constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.x0, s * q.x1, s * q.x2, s * q.x3};
}
inline constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }
inline constexpr Quaternion operator/(const Quaternion& q, double s) {
  return {q.x0 / s, q.x1 / s, q.x2 / s, q.x3 / s};
}

inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double abs(const Quaternion& q) { return q.norm(); }

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  return (a - b).norm() <= tol;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.x0 << " + " << q.x1 << "i + " << q.x2 << "j + " << q.x3 << "k)";
}

// ---------------------------------------------------------------------------
// 2x2 complex matrix representation.
//
//   q = [ x0 + i x3   -x2 + i x1 ]
//       [ x2 + i x1    x0 - i x3 ]
//
// Generated by i -> sqrt(-1)*s1, j -> -sqrt(-1)*s2, k -> sqrt(-1)*s3 with the
// Pauli triple taken as (s1, -s2, s3).  det = |q|^2, adjoint = conjugate.

struct MatrixRep {
  std::complex<double> a{}, b{}, c{}, d{};  // row-major [[a, b], [c, d]]

  static MatrixRep identity() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}}; }

  MatrixRep operator+(const MatrixRep& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  MatrixRep operator-(const MatrixRep& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  MatrixRep operator*(const MatrixRep& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  MatrixRep adjoint() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
  std::complex<double> det() const { return a * d - b * c; }
  std::complex<double> trace() const { return a + d; }

  double max_abs_diff(const MatrixRep& o) const {
    return std::max(std::max(std::abs(a - o.a), std::abs(b - o.b)),
                    std::max(std::abs(c - o.c), std::abs(d - o.d)));
  }
};

inline MatrixRep operator*(const std::complex<double>& s, const MatrixRep& m) {
  return {s * m.a, s * m.b, s * m.c, s * m.d};
}

inline MatrixRep to_matrix(const Quaternion& q) {
  return {{q.x0, q.x3}, {-q.x2, q.x1}, {q.x2, q.x1}, {q.x0, -q.x3}};
}

// Inverse of to_matrix.  The representation pattern (d = conj(a), c = -conj(b))
// is validated to `tol`; matrices outside the image are rejected.
inline Quaternion from_matrix(const MatrixRep& m, double tol = 1e-12) {
  if (std::abs(m.d - std::conj(m.a)) > tol || std::abs(m.c + std::conj(m.b)) > tol)
    throw std::invalid_argument("from_matrix: matrix is not in the representation image");
  return {m.a.real(), m.c.imag(), m.c.real(), m.a.imag()};
}

// ---------------------------------------------------------------------------
// Polar chart:
//   x0 = r cos(theta)
//   x1 = r sin(theta) sin(phi) cos(psi)
//   x2 = r sin(theta) sin(phi) sin(psi)
//   x3 = r sin(theta) cos(phi)
// with r >= 0, theta in [0, pi] (canonical sheet), phi in [0, pi],
// psi in [0, 2*pi).  Degenerate points canonicalise to zero angles:
// r = 0 -> all angles 0; sin(theta) = 0 -> phi = psi = 0; sin(phi) = 0 -> psi = 0.

struct PolarForm {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
};

inline Quaternion from_polar(const PolarForm& p) {
  const double st = std::sin(p.theta);
  return {p.r * std::cos(p.theta),
          p.r * st * std::sin(p.phi) * std::cos(p.psi),
          p.r * st * std::sin(p.phi) * std::sin(p.psi),
          p.r * st * std::cos(p.phi)};
}

inline PolarForm to_polar(const Quaternion& q) {
  PolarForm p;
  p.r = q.norm();
  if (p.r == 0.0) return p;
  const double s = q.imag_norm();
  p.theta = std::atan2(s, q.x0);
  if (s == 0.0) return p;  // real axis: phi = psi = 0
  const double n1 = q.x1 / s, n2 = q.x2 / s, n3 = q.x3 / s;
  p.phi = std::acos(std::max(-1.0, std::min(1.0, n3)));
  if (n1 == 0.0 && n2 == 0.0) return p;  // axis along k: psi = 0
  p.psi = std::atan2(n2, n1);
  if (p.psi < 0.0) p.psi += 2.0 * M_PI;
  return p;
}

// sigma(n-hat) for the axis with spherical angles (phi, psi):
//   [ cos(phi)                sin(phi) e^{ i psi} ]
//   [ sin(phi) e^{-i psi}    -cos(phi)            ]
// Hermitian, squares to the identity, trace zero.
inline MatrixRep sigma_axis(double phi, double psi) {
  const std::complex<double> e{std::cos(psi), std::sin(psi)};
  const double sp = std::sin(phi), cp = std::cos(phi);
  return {{cp, 0.0}, sp * e, sp * std::conj(e), {-cp, 0.0}};
}

// exp(i theta sigma(n)) = cos(theta) Id + i sin(theta) sigma(n); closed form
// valid because sigma(n)^2 = Id.
inline MatrixRep exp_axis_rotation(double theta, double phi, double psi) {
  const std::complex<double> I{0.0, 1.0};
  const MatrixRep s = sigma_axis(phi, psi);
  const double ct = std::cos(theta), st = std::sin(theta);
  MatrixRep id = MatrixRep::identity();
  return {ct * id.a + I * st * s.a, ct * id.b + I * st * s.b,
          ct * id.c + I * st * s.c, ct * id.d + I * st * s.d};
}

// ---------------------------------------------------------------------------
// Slice decomposition.  Every non-real q lies in exactly one slice
// L_I = R + I*R with I a unit pure-imaginary quaternion and y = |Im q| > 0.
// Real q are flagged degenerate and assigned I = i by convention.

struct SlicePoint {
  double x = 0.0;       // Re q
  double y = 0.0;       // |Im q|, >= 0
  Quaternion I;         // unit imaginary direction
  bool degenerate = false;
};

inline bool is_imaginary_unit(const Quaternion& I, double tol = 1e-12) {
  return std::abs(I.x0) <= tol && std::abs(I.norm() - 1.0) <= tol;
}

inline SlicePoint slice_decompose(const Quaternion& q) {
  SlicePoint s;
  s.x = q.x0;
  s.y = q.imag_norm();
  if (s.y == 0.0) {
    s.I = Quaternion::i();
    s.degenerate = true;
  } else {
    s.I = Quaternion{0, q.x1 / s.y, q.x2 / s.y, q.x3 / s.y};
  }
  return s;
}

inline Quaternion slice_embed(const SlicePoint& s) { return Quaternion{s.x} + s.y * s.I; }

inline std::complex<double> slice_complex(const SlicePoint& s) { return {s.x, s.y}; }

// ---------------------------------------------------------------------------
// E(p,q) = sum_m p^m q^m / m!.  Not exp(pq) unless p,q share a slice.
// Truncation index chosen from the scalar majorant: the tail after M terms is
// bounded by x^{M+1}/(M+1)! * (M+2)/(M+2-x) with x = |p||q|, valid once
// M+2 > x.  |E(p,q)| <= e^{|p||q|} always.

struct ExpPairResult {
  Quaternion value;
  int terms = 0;          // number of series terms summed
  double tail_bound = 0;  // analytic bound on the dropped tail
};

inline ExpPairResult exp_pair(const Quaternion& p, const Quaternion& q, double tol = 1e-15) {
  const double x = p.norm() * q.norm();
  ExpPairResult out;
  Quaternion pk = Quaternion::one(), qk = Quaternion::one();
  Quaternion sum = Quaternion::one();  // m = 0 term
  double fact = 1.0;                   // m!
  double mag = 1.0;                    // x^m / m!
  int terms = 1;
  for (int m = 1;; ++m) {
    if (m > 5000) throw std::runtime_error("exp_pair: series did not reach tolerance");
    pk *= p;
    qk *= q;
    fact *= m;
    sum += (pk * qk) / fact;
    mag *= x / m;
    ++terms;
    if (m + 2 > x) {
      const double tail = mag * (x / (m + 1)) * (double(m + 2) / (double(m + 2) - x));
      if (tail <= tol) {
        out.tail_bound = tail;
        break;
      }
    }
  }
  out.value = sum;
  out.terms = terms;
  return out;
}

// ---------------------------------------------------------------------------
// Anti-regular polynomials f(q) = sum_m qbar^m c_m (coefficients on the right).
// The Cullen (slice) derivative acts on them as d/dqbar.

class AntiRegularPoly {
 public:
  AntiRegularPoly() = default;
  explicit AntiRegularPoly(std::vector<Quaternion> coeffs) : c_(std::move(coeffs)) {}

  // phi_m = qbar^m / sqrt(m!), the orthonormal Fock basis function.
  static AntiRegularPoly phi(int m) {
    if (m < 0) throw std::invalid_argument("AntiRegularPoly::phi: negative index");
    std::vector<Quaternion> c(static_cast<std::size_t>(m) + 1);
    c.back() = Quaternion{inv_sqrt_factorial(m)};
    return AntiRegularPoly(std::move(c));
  }

  static double inv_sqrt_factorial(int m) {
    double v = 1.0;
    for (int k = 1; k <= m; ++k) v /= std::sqrt(double(k));
    return v;
  }

  const std::vector<Quaternion>& coeffs() const { return c_; }
  Quaternion coeff(std::size_t m) const { return m < c_.size() ? c_[m] : Quaternion::zero(); }

  // index of the last nonzero coefficient; -1 for the zero polynomial
  int degree() const {
    for (std::size_t m = c_.size(); m-- > 0;)
      if (c_[m] != Quaternion::zero()) return static_cast<int>(m);
    return -1;
  }

  Quaternion evaluate(const Quaternion& q) const {
    if (c_.empty()) return Quaternion::zero();
    const Quaternion qb = q.conj();
    Quaternion acc = c_.back();
    for (std::size_t m = c_.size() - 1; m-- > 0;) acc = qb * acc + c_[m];
    return acc;
  }

  // d/dqbar: sum_m qbar^m c_m -> sum_m m qbar^{m-1} c_m.
  AntiRegularPoly cullen_derivative() const {
    if (c_.size() <= 1) return AntiRegularPoly{};
    std::vector<Quaternion> d(c_.size() - 1);
    for (std::size_t m = 1; m < c_.size(); ++m) d[m - 1] = double(m) * c_[m];
    return AntiRegularPoly(std::move(d));
  }

  // left multiplication by qbar: pure index shift, no arithmetic.
  AntiRegularPoly multiply_by_conjugate_var() const {
    std::vector<Quaternion> d(c_.size() + 1);
    for (std::size_t m = 0; m < c_.size(); ++m) d[m + 1] = c_[m];
    return AntiRegularPoly(std::move(d));
  }

  AntiRegularPoly scaled(const Quaternion& s) const {  // right scale: f * s
    std::vector<Quaternion> d(c_.size());
    for (std::size_t m = 0; m < c_.size(); ++m) d[m] = c_[m] * s;
    return AntiRegularPoly(std::move(d));
  }

  double max_coeff_diff(const AntiRegularPoly& o) const {
    const std::size_t n = std::max(c_.size(), o.c_.size());
    double worst = 0.0;
    for (std::size_t m = 0; m < n; ++m)
      worst = std::max(worst, (coeff(m) - o.coeff(m)).norm());
    return worst;
  }

 private:
  std::vector<Quaternion> c_;
};

}  // namespace qcs
