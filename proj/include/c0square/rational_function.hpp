#pragma once

// Quotients of complex polynomials, analytic on the closed unit disk in all
// uses here (denominator roots lie outside). Canonical form keeps the
// denominator's constant term at 1, so equality of coefficient vectors is
// meaningful across routes that build the same function differently.

#include <complex>
#include <utility>

#include "c0square/complex_polynomial.hpp"
#include "c0square/errors.hpp"

namespace c0square {

class RationalFunction {
 public:
  RationalFunction() : num_(ComplexPolynomial::zero()), den_(ComplexPolynomial::one()) {}

  RationalFunction(ComplexPolynomial numerator, ComplexPolynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
    normalize();
  }

  static RationalFunction constant(Complex c) {
    return RationalFunction(ComplexPolynomial({c}), ComplexPolynomial::one());
  }

  const ComplexPolynomial& numerator() const { return num_; }
  const ComplexPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_negligible(double rel_tol, double scale) const {
    return num_.is_negligible(rel_tol, scale);
  }

  Complex eval(Complex z) const {
    const Complex d = den_.eval(z);
    if (std::abs(d) < 1e-13) throw domain_error("evaluation at a pole");
    return num_.eval(z) / d;
  }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(Complex s, const RationalFunction& a) {
    return RationalFunction(s * a.num_, a.den_);
  }

 private:
  void normalize() {
    const Complex c0 = den_.coefficient(0);
    if (std::abs(c0) < 1e-300) return;  // constant-term-free denominator; leave as built
    const Complex inv = Complex(1.0) / c0;
    num_ = inv * num_;
    den_ = inv * den_;
  }

  ComplexPolynomial num_;
  ComplexPolynomial den_;
};

}  // namespace c0square
