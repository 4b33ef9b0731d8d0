// Release gate: one line per shipping criterion, every tolerance pinned in
// this file.  Composite criteria report their worst part, measured as the
// largest error-to-tolerance ratio, so a single glance at the line shows how
// much margin the build has.  Exit status is the number-of-failures signal
// used by CI: 0 all green, 1 otherwise.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcs/coherent.hpp"
#include "qcs/hermite.hpp"
#include "qcs/observables.hpp"
#include "qcs/quadrature.hpp"
#include "qcs/quantize.hpp"
#include "qcs/quaternion.hpp"
#include "qcs/rq_linalg.hpp"
#include "qcs/slice_qm.hpp"
#include "qcs/symbol.hpp"

using qcs::Quaternion;

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double next_sym(double a) { return a * (2.0 * next_double() - 1.0); }
  Quaternion next_quaternion(double a) {
    const double x0 = next_sym(a), x1 = next_sym(a), x2 = next_sym(a),
                 x3 = next_sym(a);
    return {x0, x1, x2, x3};
  }
  Quaternion next_label(double cap) {
    Quaternion q = next_quaternion(cap);
    const double n = q.norm();
    if (n > cap) q = q * (cap / n);
    return q;
  }

 private:
  std::uint64_t state_;
};

// one sub-check of a criterion: err against its pinned tolerance
struct Part {
  double err;
  double tol;
  double ratio() const {
    if (tol > 0.0) return err / tol;
    return err > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
};

struct Gate {
  int failures = 0;
  int count = 0;

  void criterion(const std::string& label, std::vector<Part> parts) {
    Part worst{0.0, 1.0};
    double worst_ratio = -1.0;
    for (const auto& p : parts)
      if (p.ratio() > worst_ratio) {
        worst_ratio = p.ratio();
        worst = p;
      }
    const bool pass = worst.err <= worst.tol;
    ++count;
    if (!pass) ++failures;
    std::printf("%s criterion-%02d max_err=%.3e tol=%.1e  %s\n",
                pass ? "PASS" : "FAIL", count, worst.err, worst.tol,
                label.c_str());
  }
};

}  // namespace

int main() {
  Gate gate;
  Rng rng(42);

  const std::size_t n16 = 16, n32 = 32;
  const qcs::QuadratureGrid grid16 = qcs::build_grid(static_cast<int>(n16), 2);

  // 1 — the coordinate and its conjugate quantize to the two ladders
  {
    const auto aq = qcs::quantize(qcs::Symbol::coordinate(), grid16, n16);
    const auto aqb =
        qcs::quantize(qcs::Symbol::conjugate_coordinate(), grid16, n16);
    const double err = std::max(aq.op.max_abs_diff(qcs::ladder_lower(n16)),
                                aqb.op.max_abs_diff(qcs::ladder_raise(n16)));
    gate.criterion("quantized coordinate pair reproduces the ladders",
                   {{err, 1e-12}, {(aq.certified && aqb.certified) ? 0.0 : 1.0, 0.0}});
  }

  // 2 — the constant symbol resolves the identity
  gate.criterion("unit symbol quantizes to the identity",
                 {{qcs::resolution_identity_defect(grid16, n16), 1e-12}});

  // 3 — the squared modulus shifts the number operator by one
  {
    const auto mod = qcs::quantize(qcs::Symbol::modulus_squared(), grid16, n16);
    const qcs::RQOperator want =
        qcs::number_operator(n16) + qcs::RQOperator::identity(n16);
    gate.criterion("squared modulus quantizes to number plus identity",
                   {{mod.op.max_abs_diff(want), 1e-10}});
  }

  // 4 — ladder commutator: identity on the safe block, 1 - dim in the corner
  {
    const auto lad = qcs::ladder_commutator_check(n16);
    const double err =
        std::max({lad.safe_identity_dev, lad.corner_dev, lad.off_diag_dev});
    gate.criterion("truncated canonical commutator has the exact corner defect",
                   {{err, 1e-13}});
  }

  // 5 — number operator shifts the ladders
  {
    const auto osc = qcs::oscillator_algebra_check(n16);
    gate.criterion("number operator satisfies both shift relations",
                   {{std::max(osc.lower_shift_dev, osc.raise_shift_dev), 1e-13}});
  }

  // 6 — frozen adjoint-defect witness, bitwise
  {
    const auto pair = qcs::adjoint_defect(
        Quaternion{0, 1, 2, 0}, qcs::RQOperator::identity(1),
        qcs::RQVector::basis(1, 0, Quaternion::k()),
        qcs::RQVector::basis(1, 0, Quaternion::j()));
    const double err = (pair.first - Quaternion{1, 0, 0, -2}).norm() +
                       (pair.second - Quaternion{1, 0, 0, 2}).norm();
    gate.criterion("scaled-identity pairing witness matches its closed form",
                   {{err, 0.0}});
  }

  // 7 — lower symbol of the number operator is the squared label norm
  {
    const qcs::RQOperator N = qcs::number_operator(n32);
    double err = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Quaternion p = rng.next_label(1.5);
      err = std::max(err, (qcs::lower_symbol_matrix(N, p) -
                           Quaternion{p.norm_sq()})
                              .norm());
    }
    gate.criterion("number operator lower symbol equals |p|^2", {{err, 1e-8}});
  }

  // 8 — closed-form overlap against the truncated inner product
  {
    double err = 0.0;
    for (int t = 0; t < 40; ++t) {
      const Quaternion p = rng.next_label(1.5), q = rng.next_label(1.5);
      const Quaternion direct = qcs::inner(qcs::cs_vector(q, n32).vec,
                                           qcs::cs_vector(p, n32).vec);
      err = std::max(err, (qcs::overlap(p, q) - direct).norm());
    }
    gate.criterion("overlap kernel matches the truncated inner product",
                   {{err, 1e-10}});
  }

  // 9 — slice pairs: axis-valued commutator and oscillator spectrum
  {
    const double r3 = 1.0 / std::sqrt(3.0);
    const Quaternion axes[] = {Quaternion::i(), Quaternion::j(),
                               Quaternion{0, r3, r3, r3}};
    double err = 0.0;
    for (const auto& I : axes) {
      const auto com = qcs::slice_commutation_check(I, n16);
      const auto spectrum = qcs::slice_spectrum_check(I, n16);
      err = std::max({err, com.safe_dev, com.off_dev, spectrum.diag_dev});
    }
    gate.criterion("slice position-momentum pairs close the oscillator algebra",
                   {{err, 1e-13}});
  }

  // 10 — lowering acts as the slice derivative on the basis
  {
    const auto cullen = qcs::differential_model_check(n16);
    gate.criterion("differential model of the lowering ladder",
                   {{cullen.basis_defect, 1e-15},
                    {(cullen.monomial_exact && cullen.shift_exact) ? 0.0 : 1.0,
                     0.0}});
  }

  // 11 — radial factorial moments through degree 20
  {
    const qcs::QuadratureGrid grid = qcs::build_grid(16, 4);
    double err = 0.0;
    double want = 1.0;
    for (int m = 0; m <= 20; ++m) {
      if (m > 1) want *= m;
      err = std::max(err, std::abs(qcs::moment_check(grid, m) - want) / want);
    }
    gate.criterion("grid reproduces the factorial moments through degree 20",
                   {{err, 1e-12}});
  }

  // 12 — squeezed-family orthogonality and the exact norm chain at s = 1/2
  {
    const double s = 0.5;
    const qcs::HermiteGrid grid = qcs::build_hermite_grid(s, 12, 12, 4, 8);
    const auto gram = qcs::hermite_gram_check(6, grid);
    double chain = 0.0;
    for (int k = 0; k < 10; ++k) {
      if (qcs::hermite_norm_sq(k + 1, s) !=
          qcs::hermite_norm_sq(k, s) * qcs::hermite_norm_ratio(k, s))
        chain = 1.0;
      if (qcs::hermite_norm_ratio(k, s) != 6.0 * (k + 1.0)) chain = 1.0;
    }
    gate.criterion("squeezed family is orthogonal with the exact norm chain",
                   {{std::max(gram.diag_rel_dev, gram.off_rel_dev), 1e-8},
                    {chain, 0.0}});
  }

  // 13 — two-index family: closed forms, contour oracle, kernel, quantization
  {
    double h11 = 0.0;
    Rng local(7);
    for (int t = 0; t < 30; ++t) {
      const Quaternion q = local.next_quaternion(1.4);
      const Quaternion v = qcs::hermite2(1, 1, q);
      h11 = std::max({h11, std::abs(v.x0 - (q.norm_sq() - 1.0)), std::abs(v.x1),
                      std::abs(v.x2), std::abs(v.x3)});
    }

    const std::complex<double> z0(0.4, 0.3);
    const auto tab = qcs::hermite2_table(5, 5, Quaternion{0.4, 0.3, 0, 0});
    double oracle = 0.0;
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) {
        const std::complex<double> ref = qcs_test::hermite2_contour(a, b, z0);
        oracle = std::max({oracle, std::abs(tab[a][b].x0 - ref.real()),
                           std::abs(tab[a][b].x1 - ref.imag()),
                           std::abs(tab[a][b].x2), std::abs(tab[a][b].x3)});
      }

    double kernel = 0.0;
    for (int t = 0; t < 25; ++t) {
      const Quaternion q = local.next_label(2.0);
      const double want = std::exp(q.norm_sq());
      kernel = std::max(
          kernel, std::abs(qcs::hermite2_kernel_row0_partial(q, 60) - want) / want);
    }

    const std::size_t dim = 12;
    const qcs::RQOperator a_q =
        qcs::hermite2_quantize(0, qcs::Symbol::coordinate(), dim);
    const qcs::RQOperator a_qb =
        qcs::hermite2_quantize(0, qcs::Symbol::conjugate_coordinate(), dim);
    const double row0 = std::max(a_q.max_abs_diff(qcs::ladder_raise(dim)),
                                 a_qb.max_abs_diff(qcs::ladder_lower(dim)));

    gate.criterion("two-index family: values, kernel, and pairing",
                   {{h11, 1e-13},
                    {oracle, 1e-10},
                    {kernel, 1e-8},
                    {row0, 1e-10}});
  }

  // 14 — label states are right eigenvectors of the lowering ladder
  {
    double err = 0.0;
    for (int t = 0; t < 30; ++t)
      err = std::max(err, qcs::cs_eigen_defect(rng.next_label(1.0), n32));
    gate.criterion("label states pass the eigenvector gate", {{err, 1e-12}});
  }

  std::printf("%d criteria, %d passed, %d failed\n", gate.count,
              gate.count - gate.failures, gate.failures);
  return gate.failures > 0 ? 1 : 0;
}
