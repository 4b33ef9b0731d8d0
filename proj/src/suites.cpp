#include "qcs/suites.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qcs/coherent.hpp"
#include "qcs/hermite.hpp"
#include "qcs/observables.hpp"
#include "qcs/quadrature.hpp"
#include "qcs/quantize.hpp"
#include "qcs/quaternion.hpp"
#include "qcs/rq_linalg.hpp"
#include "qcs/slice_qm.hpp"
#include "qcs/symbol.hpp"

namespace qcs {
namespace {

// splitmix64: tiny, seedable, and stable across platforms, so the randomized
// checks are reproducible from the configured seed alone
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double next_double() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
  double next_sym(double a) { return a * (2.0 * next_double() - 1.0); }
  Quaternion next_quaternion(double a) {
    const double x0 = next_sym(a), x1 = next_sym(a), x2 = next_sym(a),
                 x3 = next_sym(a);
    return {x0, x1, x2, x3};
  }
  Quaternion next_label(double max_norm) {
    Quaternion q = next_quaternion(max_norm);
    const double n = q.norm();
    if (n > max_norm) q = q * (max_norm / n);
    return q;
  }
  RQVector next_vector(std::size_t n, double a) {
    RQVector v(n);
    for (std::size_t m = 0; m < n; ++m) v[m] = next_quaternion(a);
    return v;
  }
  RQOperator next_operator(std::size_t n, double a) {
    RQOperator op(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) op.at(r, c) = next_quaternion(a);
    return op;
  }

 private:
  std::uint64_t state_;
};

struct Recorder {
  double tol_override = 0.0;
  std::vector<CheckRecord> checks;

  void add(std::string id, std::string anchor, double max_error, double default_tol,
           std::vector<std::pair<std::string, Quaternion>> values = {}) {
    CheckRecord c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.max_error = max_error;
    c.tolerance = tol_override > 0.0 ? tol_override : default_tol;
    c.passed = max_error <= c.tolerance;
    c.values = std::move(values);
    checks.push_back(std::move(c));
  }

  // separation checks: the measured gap must clear min_gap, and any
  // shortfall is the reported error
  void add_witness(std::string id, std::string anchor, double gap, double min_gap,
                   std::vector<std::pair<std::string, Quaternion>> values = {}) {
    add(std::move(id), std::move(anchor), gap >= min_gap ? 0.0 : min_gap - gap,
        0.0, std::move(values));
  }
};

// canonical gaussian grid honoring explicit order overrides
QuadratureGrid suite_grid(const SuiteConfig& cfg, int degree) {
  const int n = static_cast<int>(cfg.trunc_dim);
  const int radial = cfg.radial_order > 0 ? cfg.radial_order : (n + degree + 2) / 2;
  const int theta = cfg.theta_nodes > 0 ? cfg.theta_nodes : 2 * n + degree + 1;
  return build_grid_orders(radial, theta, cfg.phi_order, cfg.psi_nodes);
}

double entry_dev(const MatrixRep& a, const MatrixRep& b) {
  return std::max(std::max(std::abs(a.a - b.a), std::abs(a.b - b.b)),
                  std::max(std::abs(a.c - b.c), std::abs(a.d - b.d)));
}

// ---------------------------------------------------------------------------

void run_core_algebra(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed);
  const Quaternion one = Quaternion::one(), qi = Quaternion::i(),
                   qj = Quaternion::j(), qk = Quaternion::k();

  {
    double dev = 0.0;
    dev = std::max(dev, (qi * qj - qk).norm());
    dev = std::max(dev, (qj * qk - qi).norm());
    dev = std::max(dev, (qk * qi - qj).norm());
    dev = std::max(dev, (qj * qi + qk).norm());
    dev = std::max(dev, (qi * qi + one).norm());
    dev = std::max(dev, (qj * qj + one).norm());
    dev = std::max(dev, (qk * qk + one).norm());
    rec.add("mult-table", "i j = k, j k = i, k i = j, i i = j j = k k = -1", dev,
            0.0);
  }
  {
    double dev = 0.0;
    for (int t = 0; t < 120; ++t) {
      const Quaternion p = rng.next_quaternion(1.5), q = rng.next_quaternion(1.5),
                       r = rng.next_quaternion(1.5);
      dev = std::max(dev, ((p * q) * r - p * (q * r)).norm());
      dev = std::max(dev, (p * (q + r) - (p * q + p * r)).norm());
    }
    rec.add("ring-axioms", "(p q) r = p (q r), p (q + r) = p q + p r", dev, 1e-12);
  }
  {
    double dev_c = 0.0, dev_n = 0.0, dev_r = 0.0;
    for (int t = 0; t < 120; ++t) {
      const Quaternion p = rng.next_quaternion(1.5), q = rng.next_quaternion(1.5);
      dev_c = std::max(dev_c, (conj(p * q) - conj(q) * conj(p)).norm());
      dev_n = std::max(dev_n, std::abs((p * q).norm() - p.norm() * q.norm()));
      const Quaternion qq = q * conj(q);
      dev_r = std::max({dev_r, std::abs(qq.x1), std::abs(qq.x2), std::abs(qq.x3)});
    }
    rec.add("conj-anti-automorphism", "conj(p q) = conj(q) conj(p)", dev_c, 1e-13);
    rec.add("norm-multiplicative", "|p q| = |p| |q|", dev_n, 1e-13);
    rec.add("conj-product-real", "q conj(q) has exactly no imaginary part", dev_r,
            0.0);
  }
  {
    double hom = 0.0, det = 0.0;
    for (int t = 0; t < 60; ++t) {
      const Quaternion p = rng.next_quaternion(1.5), q = rng.next_quaternion(1.5);
      hom = std::max(hom, entry_dev(to_matrix(p * q), to_matrix(p) * to_matrix(q)));
      const MatrixRep m = to_matrix(q);
      det = std::max(det, std::abs(m.a * m.d - m.b * m.c -
                                   std::complex<double>(q.norm_sq(), 0.0)));
    }
    const std::complex<double> im(0.0, 1.0);
    double basis = 0.0;
    basis = std::max(basis, entry_dev(to_matrix(qi), MatrixRep{0.0, im, im, 0.0}));
    basis = std::max(basis, entry_dev(to_matrix(qj), MatrixRep{0.0, -1.0, 1.0, 0.0}));
    basis = std::max(basis, entry_dev(to_matrix(qk), MatrixRep{im, 0.0, 0.0, -im}));
    rec.add("matrix-rep-homomorphism", "M(p q) = M(p) M(q)", hom, 1e-13);
    rec.add("matrix-rep-det", "det M(q) = |q|^2", det, 1e-13);
    rec.add("matrix-rep-basis", "M(i), M(j), M(k) equal their closed forms", basis,
            0.0);
  }
  {
    double rt = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Quaternion q = rng.next_quaternion(1.5);
      rt = std::max(rt, (from_polar(to_polar(q)) - q).norm());
    }
    rec.add("polar-roundtrip", "from_polar(to_polar(q)) = q", rt, 1e-13);
    const PolarForm pk = to_polar(qk);
    const double frozen = std::abs(pk.r - 1.0) +
                          std::abs(pk.theta - std::numbers::pi / 2.0) +
                          std::abs(pk.phi) + std::abs(pk.psi);
    rec.add("polar-axis-k", "k maps to (r, theta, phi, psi) = (1, pi/2, 0, 0)",
            frozen, 0.0);
  }
  {
    // same-slice pairs: the ordered series collapses to the plane exponential
    double dev = 0.0, tail = 0.0;
    for (int t = 0; t < 40; ++t) {
      Quaternion axis = rng.next_quaternion(1.0);
      axis.x0 = 0.0;
      if (axis.norm() < 1e-6) axis = qi;
      const Quaternion I = axis * (1.0 / axis.norm());
      const std::complex<double> z1(rng.next_sym(1.2), rng.next_sym(1.2));
      const std::complex<double> z2(rng.next_sym(1.2), rng.next_sym(1.2));
      const Quaternion p = Quaternion{z1.real()} + I * z1.imag();
      const Quaternion q = Quaternion{z2.real()} + I * z2.imag();
      const auto res = exp_pair(p, q);
      const std::complex<double> w = std::exp(z1 * z2);
      const Quaternion want = Quaternion{w.real()} + I * w.imag();
      dev = std::max(dev, (res.value - want).norm());
      tail = std::max(tail, res.tail_bound);
    }
    rec.add("exp-pair-slice", "E(p, q) = e^{p q} when p and q share a slice", dev,
            1e-12);
    rec.add("exp-pair-tail", "series tail majorant reaches the tolerance", tail,
            1e-12);
    const Quaternion eij = exp_pair(qi, qj).value;
    const Quaternion frozen{std::cosh(1.0), 0.0, 0.0, std::sinh(1.0)};
    rec.add("exp-pair-ordered-frozen", "E(i, j) = cosh(1) + k sinh(1)",
            (eij - frozen).norm(), 1e-13, {{"E(i,j)", eij}});
    const Quaternion expk{std::cos(1.0), 0.0, 0.0, std::sin(1.0)};
    rec.add_witness("exp-pair-noncommuting",
                    "E(i, j) stays away from e^{i j} = cos(1) + k sin(1)",
                    (eij - expk).norm(), 1.0,
                    {{"E(i,j)", eij}, {"exp(k)", expk}});
  }
  {
    double dev = 0.0;
    for (int m = 1; m <= 12; ++m) {
      const AntiRegularPoly d = AntiRegularPoly::phi(m).cullen_derivative();
      const AntiRegularPoly lower = AntiRegularPoly::phi(m - 1);
      const double s = std::sqrt(static_cast<double>(m));
      for (std::size_t c = 0; c < static_cast<std::size_t>(m); ++c)
        dev = std::max(dev, (d.coeff(c) - lower.coeff(c) * s).norm());
    }
    rec.add("slice-derivative-basis", "D phi_m = phi_{m-1} sqrt(m)", dev, 1e-14);
    double shift_dev = 0.0;
    const AntiRegularPoly f({Quaternion{0.25}, qj, Quaternion{-1.5}});
    const AntiRegularPoly g = f.multiply_by_conjugate_var();
    shift_dev += (g.coeff(0) - Quaternion::zero()).norm();
    for (int c = 0; c <= 2; ++c) shift_dev += (g.coeff(c + 1) - f.coeff(c)).norm();
    rec.add("conjugate-shift-exact",
            "multiplying by the conjugate variable shifts coefficients by one",
            shift_dev, 0.0);
  }
  {
    double dev = 0.0, shape = 0.0;
    for (int t = 0; t < 80; ++t) {
      const Quaternion q = rng.next_quaternion(1.5);
      const SlicePoint sp = slice_decompose(q);
      dev = std::max(dev, (slice_embed(sp) - q).norm());
      shape = std::max(shape, std::max(0.0, -sp.y));
      if (!sp.degenerate) shape = std::max(shape, std::abs(sp.I.norm() - 1.0));
    }
    rec.add("slice-roundtrip", "x + y I reassembles q with y >= 0 and |I| = 1",
            std::max(dev, shape), 1e-13);
  }
}

// ---------------------------------------------------------------------------

void run_hilbert_axioms(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed + 1);
  const std::size_t n = cfg.trunc_dim;

  {
    double sym = 0.0, lin = 0.0, left = 0.0, pos = 0.0, cs = 0.0;
    for (int t = 0; t < 40; ++t) {
      const RQVector u = rng.next_vector(n, 1.0), v = rng.next_vector(n, 1.0);
      const Quaternion s = rng.next_quaternion(1.0);
      sym = std::max(sym, (inner(u, v) - conj(inner(v, u))).norm());
      lin = std::max(lin, (inner(u, v.right_mul(s)) - inner(u, v) * s).norm());
      left = std::max(left, (inner(u.right_mul(s), v) - conj(s) * inner(u, v)).norm());
      const Quaternion uu = inner(u, u);
      pos = std::max({pos, std::abs(uu.x1), std::abs(uu.x2), std::abs(uu.x3),
                      std::max(0.0, -uu.x0)});
      cs = std::max(cs, inner(u, v).norm() - u.norm() * v.norm());
    }
    rec.add("inner-conj-symmetry", "<u|v> = conj(<v|u>)", sym, 1e-13);
    rec.add("inner-right-linearity", "<u|v s> = <u|v> s", lin, 1e-13);
    rec.add("inner-left-conjugation", "<u s|v> = conj(s) <u|v>", left, 1e-13);
    rec.add("inner-positivity", "<u|u> is real and nonnegative", pos, 0.0);
    rec.add("cauchy-schwarz", "|<u|v>| <= |u| |v|", std::max(0.0, cs), 1e-12);
  }
  {
    double assoc = 0.0, prod_adj = 0.0, defining = 0.0, oracle = 0.0;
    for (int t = 0; t < 12; ++t) {
      const RQOperator A = rng.next_operator(n, 1.0), B = rng.next_operator(n, 1.0);
      const RQVector f = rng.next_vector(n, 1.0), g = rng.next_vector(n, 1.0);
      assoc = std::max(assoc, ((A * B).apply(f) - A.apply(B.apply(f))).norm());
      prod_adj = std::max(prod_adj,
                          ((A * B).adjoint()).max_abs_diff(B.adjoint() * A.adjoint()));
      defining =
          std::max(defining, (inner(A.adjoint().apply(f), g) - inner(f, A.apply(g))).norm());
      oracle = std::max(oracle, (A * B).max_abs_diff(multiply_via_embedding(A, B)));
    }
    rec.add("operator-associativity", "(A B) f = A (B f)", assoc, 1e-11);
    rec.add("product-adjoint", "(A B)+ = B+ A+", prod_adj, 1e-13);
    rec.add("adjoint-defining-property", "<A+ f|g> = <f|A g>", defining, 1e-11);
    rec.add("embedding-product-oracle",
            "operator product agrees with the complex-embedded product", oracle,
            1e-10);
  }
  {
    // frozen scaled-operator defect: alpha = i + 2j on the 1-dim identity
    const Quaternion alpha{0, 1, 2, 0};
    const RQVector u = RQVector::basis(1, 0, Quaternion::k());
    const RQVector v = RQVector::basis(1, 0, Quaternion::j());
    const auto pair = adjoint_defect(alpha, RQOperator::identity(1), u, v);
    const Quaternion want_first{1, 0, 0, -2}, want_second{1, 0, 0, 2};
    rec.add("scaled-adjoint-frozen",
            "<u|(alpha Id)v> = 1 - 2k while <(conj(alpha) Id)u|v> = 1 + 2k",
            (pair.first - want_first).norm() + (pair.second - want_second).norm(),
            0.0, {{"forward", pair.first}, {"backward", pair.second}});
    rec.add_witness("scaled-adjoint-gap",
                    "the naive adjoint of a scaled operator mispairs",
                    (pair.first - pair.second).norm(), 1.0,
                    {{"forward", pair.first}, {"backward", pair.second}});
  }
  {
    double ident = 0.0;
    for (int t = 0; t < 25; ++t) {
      const Quaternion alpha = rng.next_quaternion(1.2);
      const RQOperator O = rng.next_operator(2, 1.0);
      const RQVector u = rng.next_vector(2, 1.0), v = rng.next_vector(2, 1.0);
      const auto pair = adjoint_defect(alpha, O, u, v);
      const Quaternion w = inner(u, O.apply(v));
      const Quaternion ab = conj(alpha);
      ident = std::max(ident,
                       ((pair.first - pair.second) - (w * ab - ab * w)).norm());
    }
    rec.add("defect-commutator-identity",
            "pairing defect equals [<u|O v>, conj(alpha)]", ident, 1e-12);
  }
  {
    // right-linearity breaks for scaled operators: alpha = i on the identity
    const ScaledOperator P{Quaternion::i(), RQOperator::identity(1)};
    const RQVector f = RQVector::basis(1, 0, Quaternion::one());
    const RQVector lhs = P.apply(f.right_mul(Quaternion::j()));
    const RQVector rhs = P.apply(f).right_mul(Quaternion::j());
    rec.add_witness("scaled-right-linearity-witness",
                    "(alpha O)(f j) differs from ((alpha O) f) j",
                    (lhs - rhs).norm(), 1.0, {{"lhs", lhs[0]}, {"rhs", rhs[0]}});
    double real_ok = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Quaternion alpha{rng.next_sym(2.0), 0, 0, 0};
      const RQOperator O = rng.next_operator(2, 1.0);
      const RQVector u = rng.next_vector(2, 1.0), v = rng.next_vector(2, 1.0);
      const auto pair = adjoint_defect(alpha, O, u, v);
      real_ok = std::max(real_ok, (pair.first - pair.second).norm());
    }
    rec.add("real-scalar-compatible",
            "real scalars keep the naive adjoint pairing exact", real_ok, 1e-13);
  }
}

// ---------------------------------------------------------------------------

void run_cs(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed + 2);
  const std::size_t n = cfg.trunc_dim;
  // tail-sensitive checks need headroom beyond the configured truncation:
  // with labels capped near 1.4 the discarded components stay below 1e-12
  // once the working dimension reaches 24
  const std::size_t big = std::max<std::size_t>(2 * n, 24);

  {
    double comp = 0.0;
    for (int t = 0; t < 30; ++t) {
      const Quaternion q = rng.next_label(1.3);
      const CSVector cs = cs_vector(q, n);
      const double pre = std::exp(-q.norm_sq() / 2.0);
      Quaternion pw = Quaternion::one();
      for (std::size_t m = 0; m < n; ++m) {
        const Quaternion want = pw * (pre * inv_sqrt_factorial(m));
        comp = std::max(comp, (cs.vec[m] - want).norm());
        pw = pw * q;
      }
    }
    rec.add("components-closed-form",
            "gamma_q[m] = e^{-|q|^2/2} q^m / sqrt(m!)", comp, 1e-13);
  }
  {
    // labels in the 1-j plane keep every component inside that plane exactly
    const Quaternion q{0.8, 0.0, -1.1, 0.0};
    const CSVector cs = cs_vector(q, n);
    double leak = 0.0;
    for (std::size_t m = 0; m < n; ++m)
      leak = std::max({leak, std::abs(cs.vec[m].x1), std::abs(cs.vec[m].x3)});
    rec.add("slice-membership", "label states stay in the label's slice", leak,
            0.0);
  }
  {
    double bound_dev = 0.0, over = 0.0;
    for (int t = 0; t < 25; ++t) {
      const Quaternion q = rng.next_label(1.4);
      const CSVector cs = cs_vector(q, big);
      const double nsq = inner(cs.vec, cs.vec).x0;
      bound_dev = std::max(bound_dev, (1.0 - nsq) - cs.tail_bound);
      over = std::max(over, nsq - 1.0);
    }
    rec.add("norm-tail-bound",
            "1 - |gamma|^2 lies below the analytic tail bound",
            std::max(0.0, std::max(bound_dev, over)), 1e-12);
  }
  {
    double defect = 0.0;
    for (int t = 0; t < 25; ++t)
      defect = std::max(defect, cs_eigen_defect(rng.next_label(1.0), big));
    rec.add("lowering-eigenvector", "A gamma_q = gamma_q q on the safe block",
            defect, 1e-12);
  }
  {
    double rel = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Quaternion q = rng.next_label(1.2);
      if (q.norm() < 0.3) continue;
      const CSVector cs = cs_vector(q, big);
      const RQVector lowered = ladder_lower(big).apply(cs.vec);
      const Quaternion top = lowered[big - 1] - cs.vec[big - 1] * q;
      const double want = std::exp(-q.norm_sq() / 2.0) *
                          std::pow(q.norm(), static_cast<double>(big)) *
                          inv_sqrt_factorial(big - 1);
      rel = std::max(rel, std::abs(top.norm() - want) / want);
    }
    rec.add("truncation-top-defect",
            "the one broken component has size e^{-t/2} |q|^n / sqrt((n-1)!)",
            rel, 1e-9);
  }
  {
    double herm = 0.0, norm1 = 0.0, agree = 0.0;
    for (int t = 0; t < 30; ++t) {
      const Quaternion p = rng.next_label(1.2), q = rng.next_label(1.2);
      herm = std::max(herm, (overlap(p, q) - conj(overlap(q, p))).norm());
      norm1 = std::max(norm1, (overlap(q, q) - Quaternion::one()).norm());
      const Quaternion direct =
          inner(cs_vector(q, big).vec, cs_vector(p, big).vec);
      agree = std::max(agree, (overlap(p, q) - direct).norm());
    }
    rec.add("overlap-hermitian", "<gamma_p|gamma_q> = conj(<gamma_q|gamma_p>)",
            herm, 1e-13);
    rec.add("overlap-normalised", "<gamma_q|gamma_q> = 1", norm1, 1e-12);
    rec.add("overlap-vs-inner",
            "closed-form overlap matches the truncated inner product", agree,
            1e-10);
  }
  {
    double dev = 0.0;
    for (int t = 0; t < 15; ++t) {
      const Quaternion q = rng.next_label(1.2);
      dev = std::max(dev, (cs_from_exponential(q, n) - cs_vector(q, n).vec).norm());
    }
    rec.add("exponential-construction",
            "e^{-t/2} exp(scaled raise) e_0 rebuilds gamma_q", dev, 1e-12);
  }
  {
    const auto factorial = cs_domain_estimate(
        [](std::size_t m) { return std::tgamma(static_cast<double>(m) + 1.0); });
    const auto geometric = cs_domain_estimate(
        [](std::size_t m) { return std::pow(4.0, static_cast<double>(m)); });
    rec.add("domain-factorial-infinite",
            "factorial weights give an unbounded label domain",
            factorial.finite ? 1.0 : 0.0, 0.0);
    rec.add("domain-geometric-radius",
            "weights 4^m give the squared radius 4 exactly",
            geometric.finite ? std::abs(geometric.radius_sq - 4.0) : 1.0, 0.0);
  }
}

// ---------------------------------------------------------------------------

void run_quantize_canonical(const SuiteConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.trunc_dim;
  const QuadratureGrid grid = suite_grid(cfg, 2);

  rec.add("resolution-identity", "quantizing 1 returns the identity",
          resolution_identity_defect(grid, n), 1e-12);
  {
    const auto aq = quantize(Symbol::coordinate(), grid, n);
    const auto aqb = quantize(Symbol::conjugate_coordinate(), grid, n);
    rec.add("coordinate-lowers", "A_q is the lowering ladder sqrt(m+1) E_{m,m+1}",
            aq.op.max_abs_diff(ladder_lower(n)), 1e-12);
    rec.add("conjugate-raises", "A_qbar is the raising ladder sqrt(k) E_{k,k-1}",
            aqb.op.max_abs_diff(ladder_raise(n)), 1e-12);
    rec.add("grid-certified", "the configured grid covers both symbols",
            (aq.certified && aqb.certified) ? 0.0 : 1.0, 0.0);
    rec.add("off-pattern-leakage", "no mass lands off the allowed diagonals",
            std::max(aq.off_pattern, aqb.off_pattern), 1e-13);
  }
  {
    const auto mod = quantize(Symbol::modulus_squared(), grid, n);
    const RQOperator want = number_operator(n) + RQOperator::identity(n);
    rec.add("modulus-squared-number", "A_{|q|^2} = N + Id on every entry",
            mod.op.max_abs_diff(want), 1e-10);
  }
  {
    const auto sq = quantize(Symbol::monomial(2, Quaternion::one(), 0), grid, n);
    double dev = 0.0;
    for (std::size_t m = 0; m + 2 < n; ++m) {
      const double want = std::sqrt(static_cast<double>((m + 1) * (m + 2)));
      dev = std::max(dev, (sq.op.at(m, m + 2) - Quaternion{want}).norm());
    }
    rec.add("squared-coordinate-band",
            "A_{q^2} carries sqrt((m+1)(m+2)) on the second superdiagonal", dev,
            1e-10);
  }
  {
    const Symbol f = Symbol::polynomial(
        {{1, Quaternion{0.5, -0.25, 0, 0.75}, 0},
         {0, Quaternion{0, 1, 0, 0}, 1},
         {1, Quaternion{-0.3, 0, 0.6, 0}, 1}});
    const auto a = quantize(f, grid, n);
    const auto b = quantize(f.conjugate_reversed(), grid, n);
    rec.add("adjoint-covariance", "A_f+ = A_{reversed conj f}",
            a.op.adjoint().max_abs_diff(b.op), 1e-10);
  }
  {
    const auto lad = ladder_commutator_check(n);
    rec.add("ladder-commutator-safe",
            "[A_q, A_qbar] = Id away from the truncation corner",
            lad.safe_identity_dev, 1e-13);
    rec.add("ladder-commutator-corner",
            "the truncation corner carries 1 - N", lad.corner_dev, 1e-13);
    rec.add("ladder-products",
            "ladder products are the exact integer diagonals",
            std::max({lad.lower_raise_diag_dev, lad.raise_lower_diag_dev,
                      lad.off_diag_dev}),
            1e-13);
  }
  {
    // full monomial matrix at high degree; the off-diagonal targets are zero,
    // and the achieved angular cancellation is measured against the absolute
    // mass actually summed (~Gamma((m+l)/2+1) near the top), where any fixed
    // denominator would be arbitrary
    const int top = 20;
    const QuadratureGrid mgrid = build_grid(top + 1, 0);
    std::vector<std::vector<PairwiseAccumulator<Quaternion>>> acc(
        top + 1, std::vector<PairwiseAccumulator<Quaternion>>(top + 1));
    std::vector<double> mass(2 * top + 1, 0.0);
    std::vector<Quaternion> pw(top + 1);
    std::vector<double> spw(2 * top + 1);
    for (const auto& node : mgrid.nodes) {
      pw[0] = Quaternion::one();
      for (int a = 1; a <= top; ++a) pw[a] = pw[a - 1] * node.q;
      const double st = node.q.norm();
      spw[0] = 1.0;
      for (int a = 1; a <= 2 * top; ++a) spw[a] = spw[a - 1] * st;
      for (int m = 0; m <= top; ++m)
        for (int l = 0; l <= top; ++l)
          acc[m][l].push(pw[m] * pw[l].conj() * node.w);
      for (int d = 0; d <= 2 * top; ++d) mass[d] += spw[d] * node.w;
    }
    double dev = 0.0;
    double fact = 1.0;
    for (int m = 0; m <= top; ++m) {
      if (m > 1) fact *= m;
      for (int l = 0; l <= top; ++l) {
        const Quaternion want{m == l ? fact : 0.0};
        const Quaternion got = acc[m][l].total(Quaternion::zero());
        dev = std::max(dev,
                       (got - want).norm() / std::max(1.0, mass[m + l]));
      }
    }
    rec.add("monomial-moments",
            "integral of q^m conj(q)^l = delta_ml m! through degree 20", dev,
            1e-12);
  }
  {
    const int radial = grid.radial_order + 3;
    const int theta = grid.theta_nodes + 7;
    const QuadratureGrid fine =
        build_grid_orders(radial, theta, cfg.phi_order, cfg.psi_nodes);
    const auto base = quantize(Symbol::coordinate(), grid, n);
    const auto refined = quantize(Symbol::coordinate(), fine, n);
    rec.add("refinement-invariance",
            "certified results do not move under grid refinement",
            base.op.max_abs_diff(refined.op), 1e-11);
  }
}

// ---------------------------------------------------------------------------

void run_observables(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed + 3);
  const std::size_t n = cfg.trunc_dim;
  const std::size_t big = std::max<std::size_t>(2 * n, 24);

  {
    const auto osc = oscillator_algebra_check(n);
    rec.add("number-product-diag", "N = A_qbar A_q with integer diagonal",
            osc.product_diag_dev, 1e-13);
    rec.add("number-shift-relations", "[N, A_q] = -A_q and [N, A_qbar] = A_qbar",
            std::max(osc.lower_shift_dev, osc.raise_shift_dev), 1e-13);
    rec.add("number-lower-entry", "(N A_q)[m, m+1] = m sqrt(m+1) to the bit",
            osc.number_lower_entry_dev, 0.0);
  }
  {
    // the grid must certify the enlarged working dimension, so derive it
    // from big rather than from the configured truncation
    SuiteConfig wide = cfg;
    wide.trunc_dim = big;
    const QuadratureGrid grid = suite_grid(wide, 2);
    const RQOperator N = number_operator(big);
    const RQOperator Aq = quantize(Symbol::coordinate(), grid, big).op;
    const RQOperator Amod = quantize(Symbol::modulus_squared(), grid, big).op;
    double num = 0.0, coord = 0.0, vals = 0.0;
    for (int t = 0; t < 25; ++t) {
      const Quaternion p = rng.next_label(1.2);
      num = std::max(num,
                     (lower_symbol_matrix(N, p) - Quaternion{p.norm_sq()}).norm());
      coord = std::max(coord, (lower_symbol_matrix(Aq, p) - p).norm());
      vals = std::max(vals, (lower_symbol_matrix(Amod, p) -
                             Quaternion{p.norm_sq() + 1.0})
                                .norm());
    }
    double dual = 0.0;
    for (int t = 0; t < 4; ++t) {
      const Quaternion p = rng.next_label(1.2);
      const auto low = lower_symbol(Symbol::coordinate(), p, grid, big);
      dual = std::max(dual, low.disagreement);
      const auto mod = lower_symbol(Symbol::modulus_squared(), p, grid, big);
      dual = std::max(dual, mod.disagreement);
      vals = std::max(vals,
                      (mod.via_integral - Quaternion{p.norm_sq() + 1.0}).norm());
    }
    rec.add("lower-symbol-number", "<gamma_p| N gamma_p> = |p|^2", num, 1e-8);
    rec.add("lower-symbol-coordinate", "the lower symbol of A_q is the label",
            coord, 1e-8);
    rec.add("lower-symbol-dual-path",
            "matrix and direct-integral lower symbols agree", dual, 1e-8);
    rec.add("lower-symbol-values", "the lower symbol of A_{|q|^2} is |p|^2 + 1",
            vals, 1e-8);
  }
  {
    const RQOperator Q = position_operator(n);
    rec.add("position-self-adjoint", "(A_q + A_qbar)/sqrt(2) is self-adjoint",
            Q.max_abs_diff(Q.adjoint()), 0.0);
    const RQOperator Q2 = Q * Q;
    double diag = 0.0;
    for (std::size_t m = 0; m + 1 < n; ++m)
      diag = std::max(diag,
                      (Q2.at(m, m) - Quaternion{static_cast<double>(m) + 0.5}).norm());
    rec.add("position-squared-diag", "Q^2 carries m + 1/2 on the safe diagonal",
            diag, 1e-13);
  }
  {
    const auto w = momentum_adjoint_witness(n);
    rec.add_witness("momentum-adjoint-witness",
                    "the scaled ladder difference has no naive adjoint", w.gap,
                    0.5, {{"forward", w.forward}, {"backward", w.backward}});
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    const double frozen =
        (w.forward - Quaternion{0, 0, 0, -inv_rt2}).norm() +
        (w.backward - Quaternion{0, 0, 0, inv_rt2}).norm();
    rec.add("momentum-witness-frozen",
            "the first witness pair is (-k/sqrt(2), +k/sqrt(2))", frozen, 0.0);
    const ScaledOperator P = momentum_candidate(n);
    const auto agree = adjoint_defect(
        P.alpha, P.base, RQVector::basis(n, 0, Quaternion::j()),
        RQVector::basis(n, 1, Quaternion::k()));
    rec.add("momentum-agreeing-pair",
            "slice-compatible pairs keep both pairings equal",
            (agree.first - agree.second).norm(), 0.0);
  }
  {
    const auto cullen = differential_model_check(n);
    rec.add("differential-model-basis",
            "lowering acts as the slice derivative on the basis",
            cullen.basis_defect, 1e-15);
    rec.add("differential-model-exact",
            "integer monomial derivatives and shifts are bitwise exact",
            (cullen.monomial_exact && cullen.shift_exact) ? 0.0 : 1.0, 0.0);
  }
  {
    double scalar = 0.0;
    scalar = std::max(scalar, classical_hamiltonian_defect(Quaternion{1.7}));
    scalar = std::max(scalar, classical_hamiltonian_defect(Quaternion{0.4, -0.9, 0, 0}));
    for (int t = 0; t < 20; ++t)
      scalar = std::max(scalar, classical_hamiltonian_defect(
                                    {rng.next_sym(1.5), rng.next_sym(1.5), 0, 0}));
    rec.add("classical-defect-slice-labels",
            "scalar-compatible labels close on |q|^2", scalar, 1e-13);
    const double off = std::max(
        std::abs(classical_hamiltonian_defect(Quaternion::j()) - 2.0),
        std::abs(classical_hamiltonian_defect(Quaternion{1, 0, 0, 1}) - 2.0));
    rec.add("classical-defect-nonscalar",
            "j and 1 + k labels break the closure by exactly 2", off, 1e-13);
  }
}

// ---------------------------------------------------------------------------

void run_slice(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed + 4);
  const std::size_t n = cfg.trunc_dim;
  const double r3 = 1.0 / std::sqrt(3.0);
  const Quaternion axes[] = {Quaternion::i(), Quaternion::j(),
                             Quaternion{0, r3, r3, r3}};

  double safe = 0.0, corner = 0.0, off = 0.0;
  double hdiag = 0.0, hoff = 0.0, hcorner = 0.0;
  double embed = 0.0, selfadj = 0.0, resolution = 0.0;
  for (const auto& I : axes) {
    const auto com = slice_commutation_check(I, n);
    safe = std::max(safe, com.safe_dev);
    corner = std::max(corner, com.corner_dev);
    off = std::max(off, com.off_dev);
    const auto spectrum = slice_spectrum_check(I, n);
    hdiag = std::max(hdiag, spectrum.diag_dev);
    hoff = std::max(hoff, spectrum.off_dev);
    hcorner = std::max(
        hcorner,
        std::abs(spectrum.corner_value - (static_cast<double>(n) - 1.0) / 2.0));
    const auto ops = slice_operators(I, n);
    embed = std::max(embed, slice_embed_operator(ops.position, I)
                                .max_abs_diff(position_operator(n)));
    selfadj = std::max(selfadj, ops.position.max_abs_diff(ops.position.adjoint()));
    selfadj = std::max(selfadj, ops.momentum.max_abs_diff(ops.momentum.adjoint()));
    resolution = std::max(resolution, slice_resolution_defect(I, n));
  }
  rec.add("commutator-safe", "[Q_I, P_I] = I away from the corner", safe, 1e-13);
  rec.add("commutator-corner", "the corner carries I (1 - N)", corner, 1e-13);
  rec.add("commutator-off-diagonal", "the commutator has no off-diagonal mass",
          off, 1e-13);
  rec.add("hamiltonian-diag", "(Q^2 + P^2)/2 carries m + 1/2 on the safe block",
          hdiag, 1e-13);
  rec.add("hamiltonian-off-diagonal",
          "the quadratic cross terms cancel exactly off the diagonal", hoff, 0.0);
  rec.add("hamiltonian-corner", "truncation leaves (N-1)/2 in the corner",
          hcorner, 1e-12);
  rec.add("embedded-position-consistency",
          "the embedded slice position equals the ambient one", embed, 0.0);
  rec.add("slice-self-adjoint", "Q_I and P_I are self-adjoint by construction",
          selfadj, 0.0);
  rec.add("slice-resolution", "slice label states resolve the identity",
          resolution, 1e-11);
  {
    double classical = 0.0;
    for (int t = 0; t < 40; ++t)
      classical = std::max(classical, classical_slice_hamiltonian_defect(
                                          rng.next_sym(2.0), rng.next_sym(2.0)));
    rec.add("classical-slice-pair",
            "(q_I^2 + p_I^2)/2 = x^2 + y^2 on the slice", classical, 1e-13);
  }
}

// ---------------------------------------------------------------------------

void run_hermite_one(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed + 5);
  const double s = 0.5;
  const int order = static_cast<int>(cfg.trunc_dim) + 6;
  const HermiteGrid grid =
      build_hermite_grid(s, order, order, cfg.phi_order, cfg.psi_nodes);

  {
    double dev = 0.0;
    const std::vector<double> h2{-2.0, 0.0, 4.0}, h3{0.0, -12.0, 0.0, 8.0};
    const auto c2 = hermite_coefficients(2), c3 = hermite_coefficients(3);
    for (std::size_t k = 0; k < h2.size(); ++k)
      dev = std::max(dev, std::abs(c2[k] - h2[k]));
    for (std::size_t k = 0; k < h3.size(); ++k)
      dev = std::max(dev, std::abs(c3[k] - h3[k]));
    rec.add("frozen-coefficients", "H_2 = 4 q^2 - 2 and H_3 = 8 q^3 - 12 q", dev,
            0.0);
  }
  {
    double dual = 0.0;
    for (int deg = 0; deg <= 10; ++deg)
      for (int t = 0; t < 6; ++t) {
        const Quaternion q = rng.next_quaternion(1.5);
        const Quaternion a = hermite_poly(deg, q);
        dual = std::max(dual, (a - hermite_poly_explicit(deg, q)).norm() /
                                  (1.0 + a.norm()));
      }
    rec.add("dual-evaluation-paths",
            "recurrence and alternating-sum evaluations agree", dual, 1e-11);
  }
  {
    double axis = 0.0;
    for (int deg = 0; deg <= 12; ++deg)
      for (int t = 0; t < 6; ++t) {
        const double x = rng.next_sym(2.0);
        const double ref = std::hermite(static_cast<unsigned>(deg), x);
        axis = std::max(axis, std::abs(hermite_poly(deg, Quaternion{x}).x0 - ref) /
                                  (1.0 + std::abs(ref)));
      }
    rec.add("real-axis-oracle", "real arguments reproduce std::hermite", axis,
            1e-12);
  }
  {
    const double seed_dev =
        std::abs(hermite_norm_sq(0, 0.5) - std::numbers::pi * std::sqrt(2.0));
    double chain = 0.0;
    for (int k = 0; k < 10; ++k)
      chain = std::max(chain, std::abs(hermite_norm_sq(k + 1, s) -
                                       hermite_norm_sq(k, s) *
                                           hermite_norm_ratio(k, s)));
    rec.add("norm-seed-frozen", "b_0(1/2) = pi sqrt(2)", seed_dev, 0.0);
    rec.add("norm-ratio-chain", "b_{n+1} = b_n 2 (1+s)(n+1)/(1-s) to the bit",
            chain, 0.0);
  }
  {
    const auto gram = hermite_gram_check(6, grid);
    rec.add("gram-orthogonality", "<H_n|H_m> = delta_nm b_n under the s-measure",
            std::max(gram.diag_rel_dev, gram.off_rel_dev), 1e-8);
  }
  {
    double kern = 0.0;
    for (int t = 0; t < 20; ++t) {
      const double x = rng.next_sym(1.2), y = rng.next_sym(1.2);
      const double closed = hermite_kernel_closed(x, y, s);
      kern = std::max(kern,
                      std::abs(hermite_kernel_partial(x, y, s, 80) - closed) /
                          closed);
    }
    rec.add("kernel-closed-form",
            "partial kernel sums reach (1-s^2)/(2 pi s) e^{(1-s)x^2 + (1-s)y^2/s}",
            kern, 1e-9);
  }
  {
    const auto banded = hermite_quantize_coordinate(cfg.trunc_dim, grid);
    rec.add("quantize-band-values",
            "the quantized coordinate carries the two closed-form bands",
            banded.band_dev, 1e-9);
    rec.add("quantize-off-band", "nothing lands outside the two bands",
            banded.off_band_dev, 1e-9);
    rec.add("quantize-adjoint-pairing", "A_qbar = A_q+ for the s-family",
            banded.adjoint_dev, 1e-9);
  }
}

// ---------------------------------------------------------------------------

void run_hermite_two(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed + 6);
  const std::size_t n = cfg.trunc_dim;

  {
    double dev = 0.0;
    for (int t = 0; t < 30; ++t) {
      const Quaternion q = rng.next_quaternion(1.4);
      const Quaternion h11 = hermite2(1, 1, q);
      dev = std::max({dev, std::abs(h11.x0 - (q.norm_sq() - 1.0)),
                      std::abs(h11.x1), std::abs(h11.x2), std::abs(h11.x3)});
    }
    rec.add("frozen-h11", "H_{1,1} = |q|^2 - 1", dev, 1e-13);
  }
  {
    double swap = 0.0, second = 0.0;
    for (int t = 0; t < 12; ++t) {
      const Quaternion q = rng.next_quaternion(1.3);
      const auto tab = hermite2_table(5, 5, q);
      for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
          swap = std::max(swap, (conj(tab[a][b]) - tab[b][a]).norm() /
                                    (1.0 + tab[a][b].norm()));
      for (int a = 1; a <= 4; ++a)
        for (int b = 0; b < 5; ++b) {
          const Quaternion rhs =
              q * tab[a][b] - tab[a - 1][b] * static_cast<double>(a);
          second = std::max(second,
                            (tab[a][b + 1] - rhs).norm() / (1.0 + rhs.norm()));
        }
    }
    rec.add("conjugation-swaps-indices", "conj(H_{n,m}) = H_{m,n}", swap, 1e-11);
    rec.add("coupled-recurrences",
            "the q-direction recurrence is consistent with the table", second,
            1e-11);
  }
  {
    double kern = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Quaternion q = rng.next_label(2.0);
      const double want = std::exp(q.norm_sq());
      kern = std::max(kern,
                      std::abs(hermite2_kernel_row0_partial(q, 60) - want) / want);
    }
    rec.add("row0-kernel", "sum_m |h_{0,m}|^2 converges to e^{|q|^2}", kern, 1e-8);
  }
  {
    const double gram = std::max({hermite2_gram_defect(0, 0, 5),
                                  hermite2_gram_defect(1, 1, 4),
                                  hermite2_gram_defect(0, 1, 4)});
    rec.add("row-orthonormality",
            "<h_{a,m}|h_{b,l}> = delta_ab delta_ml under the gaussian", gram,
            1e-9);
  }
  {
    const RQOperator a_q = hermite2_quantize(0, Symbol::coordinate(), n);
    const RQOperator a_qb = hermite2_quantize(0, Symbol::conjugate_coordinate(), n);
    rec.add("row0-quantize-raises",
            "the n = 0 family pairs the coordinate into the raising ladder",
            a_q.max_abs_diff(ladder_raise(n)), 1e-10);
    rec.add("row0-quantize-lowers",
            "the n = 0 family pairs the conjugate into the lowering ladder",
            a_qb.max_abs_diff(ladder_lower(n)), 1e-10);
  }
  {
    const std::size_t small = std::min<std::size_t>(n, 8);
    const RQOperator a1 = hermite2_quantize(1, Symbol::coordinate(), small);
    const RQOperator a1b =
        hermite2_quantize(1, Symbol::conjugate_coordinate(), small);
    rec.add("row1-quantize-raises",
            "the n = 1 row reproduces the same raising ladder",
            a1.max_abs_diff(ladder_raise(small)), 1e-9);
    rec.add("row1-adjoint-covariance", "A_qbar = A_q+ on the n = 1 row",
            a1b.max_abs_diff(a1.adjoint()), 1e-9);
  }
}

// ---------------------------------------------------------------------------

using SuiteFn = void (*)(const SuiteConfig&, Recorder&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"core-algebra", run_core_algebra},
    {"hilbert-axioms", run_hilbert_axioms},
    {"cs", run_cs},
    {"quantize-canonical", run_quantize_canonical},
    {"observables", run_observables},
    {"slice", run_slice},
    {"hermite-one", run_hermite_one},
    {"hermite-two", run_hermite_two},
};

void validate_config(const SuiteConfig& cfg) {
  if (cfg.trunc_dim < 2)
    throw std::invalid_argument("trunc_dim must be at least 2");
  if (cfg.radial_order < 0 || cfg.theta_nodes < 0)
    throw std::invalid_argument("grid orders must be nonnegative");
  if (cfg.phi_order < 1 || cfg.psi_nodes < 1)
    throw std::invalid_argument("sphere orders must be at least 1");
  if (cfg.tolerance < 0.0)
    throw std::invalid_argument("tolerance must be nonnegative");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  if (name == "all") return true;
  for (const auto& s : kSuites)
    if (name == s.name) return true;
  return false;
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate_config(config);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = config;
  Recorder rec;
  rec.tol_override = config.tolerance;
  if (config.suite == "all") {
    for (const auto& entry : kSuites) {
      Recorder sub;
      sub.tol_override = config.tolerance;
      entry.fn(config, sub);
      for (auto& c : sub.checks) {
        c.id = std::string(entry.name) + "/" + c.id;
        rec.checks.push_back(std::move(c));
      }
    }
  } else {
    const SuiteEntry* found = nullptr;
    for (const auto& entry : kSuites)
      if (config.suite == entry.name) found = &entry;
    if (!found) throw std::invalid_argument("unknown suite: " + config.suite);
    found->fn(config, rec);
  }
  report.checks = std::move(rec.checks);
  const auto stop = std::chrono::steady_clock::now();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace qcs
