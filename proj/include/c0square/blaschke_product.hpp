#pragma once

// Finite Blaschke products
//
//     m(z) = c * prod_i ((z - a_i) / (1 - conj(a_i) z))^{k_i},   |a_i| < 1, |c| = 1,
//
// together with the symbolic criteria this library is built around:
//  - parity of m (zero multiset symmetric under negation, degree parity),
//  - division by one Moebius factor,
//  - minimal even inner divisor,
//  - the even/odd split  b(z^2) = m(z) + m(-z),  z d(z^2) = m(z) - m(-z),
//    computed exactly as rational-function algebra.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "c0square/complex_polynomial.hpp"
#include "c0square/errors.hpp"
#include "c0square/rational_function.hpp"
#include "c0square/rng.hpp"

namespace c0square {

struct ZeroFactor {
  Complex value;
  int multiplicity = 1;
};

enum class SymmetryClass { Even, Odd, Neither };

namespace detail {
// Zeros a and b count as a negated pair when |a + b| < tol.
inline constexpr double kZeroMatchTol = 1e-9;
}  // namespace detail

class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(std::vector<ZeroFactor> zeros, Complex constant = Complex(1.0))
      : constant_(constant), zeros_(std::move(zeros)) {
    const double mod = std::abs(constant_);
    if (std::abs(mod - 1.0) > 1e-9) throw precondition_error("constant must be unimodular");
    constant_ /= mod;
    for (const ZeroFactor& z : zeros_) {
      if (z.multiplicity < 1) throw precondition_error("zero multiplicity must be >= 1");
      if (std::abs(z.value) >= 1.0) throw precondition_error("zeros must lie in the open unit disk");
    }
  }

  static BlaschkeProduct from_zeros(const std::vector<Complex>& zeros,
                                    Complex constant = Complex(1.0)) {
    std::vector<ZeroFactor> zf;
    zf.reserve(zeros.size());
    for (Complex z : zeros) zf.push_back({z, 1});
    return BlaschkeProduct(std::move(zf), constant);
  }

  const std::vector<ZeroFactor>& zeros() const { return zeros_; }
  Complex constant() const { return constant_; }

  int degree() const {
    int n = 0;
    for (const ZeroFactor& z : zeros_) n += z.multiplicity;
    return n;
  }

  std::vector<Complex> flattened_zeros() const {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (const ZeroFactor& z : zeros_)
      for (int k = 0; k < z.multiplicity; ++k) out.push_back(z.value);
    return out;
  }

  BlaschkeProduct with_constant(Complex c) const { return BlaschkeProduct(zeros_, c); }

  // Factor-wise evaluation; each Moebius factor has modulus <= 1 on the
  // closed disk, so no intermediate overflow. Poles sit at 1/conj(a_i).
  Complex eval(Complex z) const {
    Complex acc = constant_;
    for (const ZeroFactor& f : zeros_) {
      const Complex den = Complex(1.0) - std::conj(f.value) * z;
      if (std::abs(den) < 1e-13) throw domain_error("evaluation at a Blaschke pole");
      const Complex factor = (z - f.value) / den;
      for (int k = 0; k < f.multiplicity; ++k) acc *= factor;
    }
    return acc;
  }

  // Expanded numerator c * prod (z - a_i)^{k_i}.
  ComplexPolynomial numerator() const {
    return constant_ * ComplexPolynomial::from_roots(flattened_zeros());
  }

  // Expanded denominator prod (1 - conj(a_i) z)^{k_i}; constant term 1.
  ComplexPolynomial denominator() const {
    ComplexPolynomial q = ComplexPolynomial::one();
    for (const Complex& a : flattened_zeros())
      q = q * ComplexPolynomial({Complex(1.0), -std::conj(a)});
    return q;
  }

  RationalFunction as_rational() const { return RationalFunction(numerator(), denominator()); }

 private:
  Complex constant_;
  std::vector<ZeroFactor> zeros_;
};

namespace detail {

// Greedy matching of the flattened zero multiset against its negation.
inline bool zeros_negation_symmetric(const std::vector<Complex>& zs, double tol) {
  std::vector<bool> used(zs.size(), false);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (used[i]) continue;
    if (std::abs(zs[i]) < tol / 2) {  // a zero at the origin is its own negative
      used[i] = true;
      continue;
    }
    std::size_t best = zs.size();
    double best_dist = tol;
    for (std::size_t j = 0; j < zs.size(); ++j) {
      if (j == i || used[j]) continue;
      const double d = std::abs(zs[i] + zs[j]);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == zs.size()) return false;
    used[i] = used[best] = true;
  }
  return true;
}

}  // namespace detail

// Parity of m, decided algebraically (negation-symmetric zero multiset plus
// degree parity) and confirmed by sampling m(z) -/+ m(-z) at 32 random points.
inline SymmetryClass symmetry_class(const BlaschkeProduct& m, std::uint64_t seed = 0) {
  const std::vector<Complex> zs = m.flattened_zeros();
  const bool symmetric = detail::zeros_negation_symmetric(zs, detail::kZeroMatchTol);
  SymmetryClass cls = SymmetryClass::Neither;
  if (symmetric) cls = (m.degree() % 2 == 0) ? SymmetryClass::Even : SymmetryClass::Odd;

  Rng rng(seed ^ 0x5e7a11ull);
  double even_dev = 0.0, odd_dev = 0.0;
  for (int i = 0; i < 32; ++i) {
    const Complex z = rng.complex_in_disk(0.95);
    const Complex mp = m.eval(z), mm = m.eval(-z);
    even_dev = std::max(even_dev, std::abs(mp - mm));
    odd_dev = std::max(odd_dev, std::abs(mp + mm));
  }
  // Confirming a parity needs the deviation to be tiny; refuting Neither only
  // needs it to clear numerical noise, or knife-edge inputs would false-alarm.
  if (cls == SymmetryClass::Even && even_dev > 1e-8)
    throw consistency_error("even classification contradicted by sampling");
  if (cls == SymmetryClass::Odd && odd_dev > 1e-8)
    throw consistency_error("odd classification contradicted by sampling");
  if (cls == SymmetryClass::Neither && (even_dev <= 1e-12 || odd_dev <= 1e-12))
    throw consistency_error("asymmetric zero multiset but sampled function has a parity");
  return cls;
}

// Remove one Moebius factor (z - zero0)/(1 - conj(zero0) z); constant kept.
inline BlaschkeProduct divide_factor(const BlaschkeProduct& m, Complex zero0) {
  std::vector<ZeroFactor> zf = m.zeros();
  std::size_t best = zf.size();
  double best_dist = detail::kZeroMatchTol;
  for (std::size_t i = 0; i < zf.size(); ++i) {
    const double d = std::abs(zf[i].value - zero0);
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  if (best == zf.size()) throw divisor_error("requested factor is not a zero of the product");
  if (--zf[best].multiplicity == 0) zf.erase(zf.begin() + static_cast<std::ptrdiff_t>(best));
  return BlaschkeProduct(std::move(zf), m.constant());
}

// Minimal (degree-2) even inner divisor: a zero pair {a, -a}, which includes
// a double zero at the origin. Constant of the divisor is 1. Absent exactly
// when no such pair exists in the zero multiset.
inline std::optional<BlaschkeProduct> even_inner_divisor(const BlaschkeProduct& m) {
  const std::vector<Complex> zs = m.flattened_zeros();
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (std::abs(zs[i] + zs[j]) < detail::kZeroMatchTol)
        return BlaschkeProduct::from_zeros({zs[i], zs[j]});
  return std::nullopt;
}

// The even/odd split of m: rational functions b, d with
//   b(z^2) = m(z) + m(-z)   and   z d(z^2) = m(z) - m(-z),
// so b(0) = 2 m(0) and d(0) = 2 m'(0). Both share the denominator
// Qt(z) = prod (1 - conj(a_i)^2 z), obtained from Q(z)Q(-z) = Qt(z^2).
// The odd (resp. even) coefficients of the intermediate products cancel
// exactly, term by term, so the split below is plain coefficient surgery.
struct EvenOddSplit {
  RationalFunction b;
  RationalFunction d;
};

inline EvenOddSplit even_odd_split(const BlaschkeProduct& m) {
  const ComplexPolynomial p = m.numerator();
  const ComplexPolynomial q = m.denominator();
  const ComplexPolynomial pm = p.reflect_negate();
  const ComplexPolynomial qm = q.reflect_negate();

  const ComplexPolynomial pqm = p * qm;
  const ComplexPolynomial pmq = pm * q;
  const ComplexPolynomial qt = (q * qm).even_part_in_square();
  const ComplexPolynomial e = (pqm + pmq).even_part_in_square();
  const ComplexPolynomial o = (pqm - pmq).odd_part_in_square();

  return {RationalFunction(e, qt), RationalFunction(o, qt)};
}

}  // namespace c0square
