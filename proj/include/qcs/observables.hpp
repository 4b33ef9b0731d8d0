#pragma once

// Derived observables of the truncated oscillator: the number operator and
// its shift relations, lower (expectation) symbols along the label family,
// the self-adjoint position quadrature together with the failed naive
// momentum (whose adjoint defect is witnessed constructively), and the
// identification of the ladders with slice-derivative / coordinate
// multiplication on anti-regular polynomials.

#include <cmath>
#include <cstddef>

#include "qcs/coherent.hpp"
#include "qcs/quantize.hpp"

namespace qcs {

// diagonal (0, 1, ..., n-1): the closed form of ladder_raise * ladder_lower
inline RQOperator number_operator(std::size_t n) {
  RQOperator op(n);
  for (std::size_t m = 0; m < n; ++m)
    op.at(m, m) = Quaternion(static_cast<double>(m), 0, 0, 0);
  return op;
}

struct OscillatorReport {
  double product_diag_dev = 0.0;      // raise*lower against the integer diagonal
  double lower_shift_dev = 0.0;       // [N, lower] + lower
  double raise_shift_dev = 0.0;       // [N, raise] - raise
  double number_lower_entry_dev = 0.0;  // (N*lower)[m,m+1] vs m*sqrt(m+1)
};

inline OscillatorReport oscillator_algebra_check(std::size_t n) {
  if (n < 2) throw std::invalid_argument("oscillator_algebra_check: need n >= 2");
  const RQOperator lower = ladder_lower(n), raise = ladder_raise(n);
  const RQOperator num = number_operator(n);
  OscillatorReport rep;
  rep.product_diag_dev = (raise * lower).max_abs_diff(num);
  // the shift relations hold on every entry of the truncated matrices: the
  // ladders' support never touches the truncated corner product
  rep.lower_shift_dev = (commutator(num, lower) + lower).max_abs();
  rep.raise_shift_dev = (commutator(num, raise) - raise).max_abs();
  const RQOperator nl = num * lower;
  for (std::size_t m = 0; m + 1 < n; ++m) {
    const double want = static_cast<double>(m) *
                        std::sqrt(static_cast<double>(m + 1));
    rep.number_lower_entry_dev =
        std::max(rep.number_lower_entry_dev,
                 (nl.at(m, m + 1) - Quaternion(want, 0, 0, 0)).norm());
  }
  return rep;
}

// <gamma_p | A gamma_p> in the truncation carried by A
inline Quaternion lower_symbol_matrix(const RQOperator& A, const Quaternion& p) {
  const RQVector gamma = cs_vector(p, A.dim()).vec;
  return inner(gamma, A.apply(gamma));
}

struct LowerSymbolResult {
  Quaternion via_matrix, via_integral;
  double disagreement = 0.0;
};

// dual evaluation of the lower symbol of a quantized f: once through the
// matrix, once as the direct grid integral of
// exp(-|p|^2) E(conj(p), q) f(q) E(conj(q), p)
inline LowerSymbolResult lower_symbol(const Symbol& f, const Quaternion& p,
                                      const QuadratureGrid& g, std::size_t n_trunc) {
  LowerSymbolResult res;
  res.via_matrix = lower_symbol_matrix(quantize(f, g, n_trunc).op, p);
  PairwiseAccumulator<Quaternion> acc;
  const Quaternion pb = p.conj();
  for (const auto& node : g.nodes) {
    const Quaternion left = exp_pair(pb, node.q).value;
    const Quaternion right = exp_pair(node.q.conj(), p).value;
    acc.push(left * f.evaluate(node.q) * right * node.w);
  }
  res.via_integral = acc.total(Quaternion::zero()) * std::exp(-p.norm_sq());
  res.disagreement = (res.via_matrix - res.via_integral).norm();
  return res;
}

// (lower + raise)/sqrt(2): real symmetric, hence exactly self-adjoint
inline RQOperator position_operator(std::size_t n) {
  return (ladder_lower(n) + ladder_raise(n)).scale_real(1.0 / std::sqrt(2.0));
}

// the naive momentum guess scales (lower - raise) by a fixed imaginary unit
// from the right; the scalar does not commute with generic matrix elements,
// so the operator has no adjoint in the scaled class
inline ScaledOperator momentum_candidate(std::size_t n) {
  return ScaledOperator{Quaternion(0, -1.0 / std::sqrt(2.0), 0, 0),
                        ladder_lower(n) - ladder_raise(n)};
}

struct AdjointWitness {
  RQVector u = RQVector(0), v = RQVector(0);
  Quaternion forward, backward;  // <u|(aO)v> and <(conj(a)O+)u|v>
  double gap = 0.0;
};

// deterministic search over unit-scaled basis vectors for a pair where the
// naive adjoint pairing of the momentum candidate fails
inline AdjointWitness momentum_adjoint_witness(std::size_t n) {
  if (n < 2) throw std::invalid_argument("momentum_adjoint_witness: need n >= 2");
  const ScaledOperator P = momentum_candidate(n);
  const Quaternion units[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  const std::size_t top = std::min<std::size_t>(n, 3);
  for (std::size_t m = 0; m < top; ++m)
    for (std::size_t l = 0; l < top; ++l)
      for (const auto& a : units)
        for (const auto& b : units) {
          AdjointWitness w;
          w.u = RQVector::basis(n, m, a);
          w.v = RQVector::basis(n, l, b);
          const auto pair = adjoint_defect(P.alpha, P.base, w.u, w.v);
          w.forward = pair.first;
          w.backward = pair.second;
          w.gap = (w.forward - w.backward).norm();
          if (w.gap > 0.5) return w;
        }
  throw std::runtime_error("momentum_adjoint_witness: no witness found");
}

struct CullenModelReport {
  // operator action translated to the polynomial side, max coefficient defect
  double basis_defect = 0.0;
  // derivative of integer-coefficient monomials is exact to the bit
  bool monomial_exact = false;
  // conjugate-variable multiplication is a pure coefficient shift
  bool shift_exact = false;
};

// the lowering ladder acts on anti-regular polynomials as the slice
// derivative, the raising ladder as multiplication by the conjugate variable
inline CullenModelReport differential_model_check(std::size_t n) {
  if (n < 2) throw std::invalid_argument("differential_model_check: need n >= 2");
  CullenModelReport rep;
  for (std::size_t m = 0; m < n; ++m) {
    const AntiRegularPoly basis = AntiRegularPoly::phi(m);
    if (m >= 1) {
      const AntiRegularPoly got = basis.cullen_derivative();
      const AntiRegularPoly want =
          AntiRegularPoly::phi(m - 1).scaled(std::sqrt(static_cast<double>(m)));
      rep.basis_defect = std::max(rep.basis_defect, got.max_coeff_diff(want));
    }
    if (m + 1 < n) {
      const AntiRegularPoly got = basis.multiply_by_conjugate_var();
      const AntiRegularPoly want =
          AntiRegularPoly::phi(m + 1).scaled(std::sqrt(static_cast<double>(m + 1)));
      rep.basis_defect = std::max(rep.basis_defect, got.max_coeff_diff(want));
    }
  }

  rep.monomial_exact = true;
  for (std::size_t m = 1; m <= 20; ++m) {
    std::vector<Quaternion> coeffs(m + 1, Quaternion::zero());
    coeffs[m] = Quaternion::one();
    const auto d = AntiRegularPoly(coeffs).cullen_derivative();
    rep.monomial_exact = rep.monomial_exact &&
                         d.coeff(m - 1) == Quaternion(static_cast<double>(m), 0, 0, 0);
    for (std::size_t l = 0; l + 1 < m; ++l)
      rep.monomial_exact = rep.monomial_exact && d.coeff(l) == Quaternion::zero();
  }

  rep.shift_exact = true;
  std::vector<Quaternion> coeffs;
  for (std::size_t m = 0; m < 6; ++m)
    coeffs.push_back(Quaternion(1.0 / 3, -2.0 / 7, 0.625, static_cast<double>(m)));
  const AntiRegularPoly f(coeffs);
  const auto shifted = f.multiply_by_conjugate_var();
  rep.shift_exact = rep.shift_exact && shifted.coeff(0) == Quaternion::zero();
  for (std::size_t m = 0; m < 6; ++m)
    rep.shift_exact = rep.shift_exact && shifted.coeff(m + 1) == coeffs[m];
  return rep;
}

// the symbol-level pair (position, naive momentum) misses the squared
// modulus: returns |half(pos^2 + mom^2) - |q|^2| at the given label
inline double classical_hamiltonian_defect(const Quaternion& q) {
  const double s = 1.0 / std::sqrt(2.0);
  const Quaternion pos = (q + q.conj()) * s;
  const Quaternion mom = (Quaternion::i() * (q - q.conj())) * (-s);
  const Quaternion ham = (pos * pos + mom * mom) * 0.5;
  return (ham - Quaternion(q.norm_sq(), 0, 0, 0)).norm();
}

}  // namespace qcs
