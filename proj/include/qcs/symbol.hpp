#pragma once

// Classical symbols f(q) destined for quantization.  The workhorse form is a
// two-sided polynomial, a sum of terms q^a c conj(q)^b with quaternion
// coefficients sandwiched between the powers (left and right powers do not
// commute past c, so the sandwich position matters).  Opaque callables are
// accepted too; they evaluate fine on a grid but carry no degree information,
// so results built from them cannot be certified exact.

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcs/quaternion.hpp"

namespace qcs {

struct SymbolTerm {
  int a = 0;           // left power of q
  Quaternion c;        // sandwiched coefficient
  int b = 0;           // right power of conj(q)
};

class Symbol {
 public:
  static Symbol one() { return monomial(0, Quaternion::one(), 0); }
  static Symbol coordinate() { return monomial(1, Quaternion::one(), 0); }
  static Symbol conjugate_coordinate() { return monomial(0, Quaternion::one(), 1); }
  static Symbol modulus_squared() { return monomial(1, Quaternion::one(), 1); }

  static Symbol monomial(int a, const Quaternion& c, int b) {
    return polynomial({SymbolTerm{a, c, b}});
  }

  static Symbol polynomial(std::vector<SymbolTerm> terms) {
    for (const auto& t : terms)
      if (t.a < 0 || t.b < 0)
        throw std::invalid_argument("Symbol: powers must be non-negative");
    Symbol s;
    s.terms_ = std::move(terms);
    s.poly_ = true;
    return s;
  }

  static Symbol callable(std::function<Quaternion(const Quaternion&)> fn) {
    Symbol s;
    s.fn_ = std::move(fn);
    s.poly_ = false;
    return s;
  }

  bool is_polynomial() const { return poly_; }

  const std::vector<SymbolTerm>& terms() const {
    if (!poly_) throw std::logic_error("Symbol: opaque symbol has no term list");
    return terms_;
  }

  // max a+b over terms (0 for the empty polynomial)
  int degree() const {
    if (!poly_) throw std::logic_error("Symbol: opaque symbol has no degree");
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.a + t.b);
    return d;
  }

  Quaternion evaluate(const Quaternion& q) const {
    if (!poly_) return fn_(q);
    Quaternion sum = Quaternion::zero();
    for (const auto& t : terms_) {
      Quaternion left = Quaternion::one();
      for (int i = 0; i < t.a; ++i) left = left * q;
      Quaternion v = left * t.c;
      const Quaternion qb = q.conj();
      for (int i = 0; i < t.b; ++i) v = v * qb;
      sum += v;
    }
    return sum;
  }

  // termwise image under f(q) -> conj(f(q)): q^a c conj(q)^b becomes
  // q^b conj(c) conj(q)^a
  Symbol conjugate_reversed() const {
    if (!poly_)
      throw std::logic_error("Symbol: cannot conjugate an opaque symbol termwise");
    std::vector<SymbolTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(SymbolTerm{t.b, t.c.conj(), t.a});
    return polynomial(std::move(out));
  }

 private:
  Symbol() = default;
  std::vector<SymbolTerm> terms_;
  std::function<Quaternion(const Quaternion&)> fn_;
  bool poly_ = true;
};

}  // namespace qcs
