#include <cmath>

#include "doctest.h"
#include "qcs/quantize.hpp"
#include "test_util.hpp"

using qcs::Quaternion;
using qcs::RQOperator;
using qcs::Symbol;
using qcs_test::qdist;
using qcs_test::Rng;

TEST_SUITE("quantize") {

TEST_CASE("symbol evaluation and termwise conjugation") {
  Rng rng(41);
  const Symbol mod2 = Symbol::modulus_squared();
  for (int t = 0; t < 20; ++t) {
    const Quaternion q = rng.next_quaternion(1.5);
    const Quaternion v = mod2.evaluate(q);
    CHECK(qdist(v, Quaternion(q.norm_sq(), 0, 0, 0)) <= 1e-14);
    // sandwiched coefficient: q^1 j conj(q)^2 reverses to q^2 (-j) conj(q)^1
    const Symbol f = Symbol::monomial(1, Quaternion::j(), 2);
    const Symbol g = f.conjugate_reversed();
    CHECK(qdist(g.evaluate(q), f.evaluate(q).conj()) <= 1e-13);
  }
  CHECK(Symbol::modulus_squared().degree() == 2);
  CHECK(Symbol::one().degree() == 0);
  CHECK_THROWS_AS((void)Symbol::monomial(-1, Quaternion::one(), 0),
                  std::invalid_argument);
  const Symbol opaque = Symbol::callable(
      [](const Quaternion& q) { return q; });
  CHECK_FALSE(opaque.is_polynomial());
  CHECK_THROWS_AS((void)opaque.degree(), std::logic_error);
  CHECK_THROWS_AS((void)opaque.conjugate_reversed(), std::logic_error);
}

TEST_CASE("ladder matrices: frozen entries") {
  const auto low = qcs::ladder_lower(5);
  const auto rai = qcs::ladder_raise(5);
  for (std::size_t m = 0; m < 5; ++m)
    for (std::size_t l = 0; l < 5; ++l) {
      if (l == m + 1)
        CHECK(low.at(m, l) == Quaternion(std::sqrt(static_cast<double>(l)), 0, 0, 0));
      else
        CHECK(low.at(m, l) == Quaternion::zero());
      if (l + 1 == m)
        CHECK(rai.at(m, l) == Quaternion(std::sqrt(static_cast<double>(m)), 0, 0, 0));
      else
        CHECK(rai.at(m, l) == Quaternion::zero());
    }
  // they are mutual adjoints, exactly
  CHECK(low.adjoint().max_abs_diff(rai) == 0.0);
  // lowering annihilates the ground state, raising annihilates the top
  CHECK(low.apply(qcs::RQVector::basis(5, 0)).norm() == 0.0);
  CHECK(rai.apply(qcs::RQVector::basis(5, 4)).norm() == 0.0);
}

TEST_CASE("constant symbol quantizes to the identity") {
  const auto g = qcs::build_grid(10, 2);
  CHECK(qcs::resolution_identity_defect(g, 10) <= 1e-12);
}

TEST_CASE("coordinate symbols quantize to the ladders") {
  const auto g = qcs::build_grid(10, 1);
  const auto aq = qcs::quantize(Symbol::coordinate(), g, 10);
  CHECK(aq.certified);
  CHECK(aq.op.max_abs_diff(qcs::ladder_lower(10)) <= 1e-12);
  CHECK(aq.off_pattern <= 1e-13);
  const auto ar = qcs::quantize(Symbol::conjugate_coordinate(), g, 10);
  CHECK(ar.certified);
  CHECK(ar.op.max_abs_diff(qcs::ladder_raise(10)) <= 1e-12);
}

TEST_CASE("modulus-squared symbol quantizes to the shifted number diagonal") {
  const std::size_t n = 10;
  const auto g = qcs::build_grid(n, 2);
  const auto res = qcs::quantize(Symbol::modulus_squared(), g, n);
  CHECK(res.certified);
  RQOperator want(n);
  for (std::size_t m = 0; m < n; ++m)
    want.at(m, m) = Quaternion(static_cast<double>(m) + 1.0, 0, 0, 0);
  CHECK(res.op.max_abs_diff(want) <= 1e-10);
}

TEST_CASE("quadratic monomial: frozen diagonal values") {
  const std::size_t n = 8;
  const auto g = qcs::build_grid(n, 2);
  const auto res = qcs::quantize(Symbol::monomial(2, Quaternion::one(), 0), g, n);
  CHECK(res.certified);
  CHECK(res.off_pattern <= 1e-12);
  for (std::size_t m = 0; m + 2 < n; ++m) {
    const double want = std::sqrt(static_cast<double>((m + 1) * (m + 2)));
    CHECK(qdist(res.op.at(m, m + 2), Quaternion(want, 0, 0, 0)) <= 1e-11);
  }
}

TEST_CASE("quantization intertwines symbol conjugation with the adjoint") {
  Rng rng(42);
  const std::size_t n = 8;
  const auto g = qcs::build_grid(n, 4);
  for (int t = 0; t < 3; ++t) {
    std::vector<qcs::SymbolTerm> terms;
    for (int i = 0; i < 3; ++i) {
      qcs::SymbolTerm term;
      term.a = static_cast<int>(rng.next_u64() % 3);
      term.b = static_cast<int>(rng.next_u64() % 3);
      term.c = rng.next_quaternion(1.0);
      terms.push_back(term);
    }
    const Symbol f = Symbol::polynomial(terms);
    const auto af = qcs::quantize(f, g, n);
    const auto afc = qcs::quantize(f.conjugate_reversed(), g, n);
    CHECK(af.certified);
    CHECK(af.op.adjoint().max_abs_diff(afc.op) <= 1e-11);
  }
}

TEST_CASE("opaque symbols evaluate but are never certified") {
  const auto g = qcs::build_grid(8, 1);
  const Symbol f = Symbol::callable([](const Quaternion& q) { return q; });
  const auto res = qcs::quantize(f, g, 8);
  CHECK_FALSE(res.certified);
  CHECK(res.op.max_abs_diff(qcs::ladder_lower(8)) <= 1e-12);
  CHECK(res.off_pattern == 0.0);
}

TEST_CASE("undersized grids are flagged") {
  const auto g = qcs::build_grid_orders(2, 5, 4, 8);
  const auto res = qcs::quantize(Symbol::coordinate(), g, 10);
  CHECK_FALSE(res.certified);
}

TEST_CASE("grid refinement does not move certified results") {
  const auto g1 = qcs::build_grid(10, 1);
  const auto g2 = qcs::build_grid_orders(g1.radial_order + 3, g1.theta_nodes + 5, 6, 12);
  const auto a1 = qcs::quantize(Symbol::coordinate(), g1, 10);
  const auto a2 = qcs::quantize(Symbol::coordinate(), g2, 10);
  CHECK(a1.op.max_abs_diff(a2.op) <= 1e-12);
}

TEST_CASE("truncated ladder commutator") {
  const auto rep = qcs::ladder_commutator_check(16);
  CHECK(rep.safe_identity_dev <= 1e-13);
  CHECK(rep.corner_dev <= 1e-13);
  CHECK(rep.lower_raise_diag_dev <= 1e-13);
  CHECK(rep.raise_lower_diag_dev <= 1e-13);
  CHECK(rep.off_diag_dev == 0.0);
  CHECK_THROWS_AS((void)qcs::ladder_commutator_check(1), std::invalid_argument);
}

TEST_CASE("one-dimensional truncation edge") {
  const auto g = qcs::build_grid(1, 0);
  const auto res = qcs::quantize(Symbol::one(), g, 1);
  CHECK(qdist(res.op.at(0, 0), Quaternion::one()) <= 1e-13);
  CHECK(qcs::ladder_lower(1).max_abs() == 0.0);
}

}  // TEST_SUITE
