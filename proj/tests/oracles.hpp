#pragma once

// Independent evaluation paths used only by tests.

#include <cmath>
#include <complex>
#include <numbers>

namespace qcs_test {

// Two-index family on a slice via discrete Cauchy contours: the (n,m) member
// equals (-1)^{n+m} e^{|z|^2} d^n/dz d^m/dw of e^{-zw} at w = conj(z), and
// each derivative is extracted by a trapezoid sum over a circle, which is
// spectrally accurate for entire integrands.  Shares no code with the
// recurrence implementation.
inline std::complex<double> hermite2_contour(int n, int m, std::complex<double> z0,
                                             int points = 32, double radius = 0.7) {
  const std::complex<double> w0 = std::conj(z0);
  std::complex<double> acc(0.0, 0.0);
  for (int a = 0; a < points; ++a) {
    const double phi = 2.0 * std::numbers::pi * a / points;
    const std::complex<double> zeta = z0 + std::polar(radius, phi);
    for (int b = 0; b < points; ++b) {
      const double th = 2.0 * std::numbers::pi * b / points;
      const std::complex<double> omega = w0 + std::polar(radius, th);
      acc += std::exp(-zeta * omega) *
             std::exp(std::complex<double>(0.0, -(n * phi + m * th)));
    }
  }
  double nm_fact = 1.0;
  for (int k = 2; k <= n; ++k) nm_fact *= k;
  for (int k = 2; k <= m; ++k) nm_fact *= k;
  const double scale =
      nm_fact / (static_cast<double>(points) * points * std::pow(radius, n + m));
  const double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(std::norm(z0)) * scale * acc;
}

}  // namespace qcs_test
