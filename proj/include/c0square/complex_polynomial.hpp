#pragma once

// Dense complex polynomials, coefficients stored in ascending degree.
// Degrees stay small here (a few dozen at most), so plain O(n^2)
// convolution and long division are used throughout.

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "c0square/errors.hpp"

namespace c0square {

using Complex = std::complex<double>;

class ComplexPolynomial {
 public:
  ComplexPolynomial() = default;

  explicit ComplexPolynomial(std::vector<Complex> coefficients)
      : coeffs_(std::move(coefficients)) {
    strip_exact_zeros();
  }

  ComplexPolynomial(std::initializer_list<Complex> coefficients)
      : ComplexPolynomial(std::vector<Complex>(coefficients)) {}

  static ComplexPolynomial zero() { return ComplexPolynomial(); }
  static ComplexPolynomial one() { return ComplexPolynomial({Complex(1.0)}); }

  // Monic product of (z - r) over the given roots.
  static ComplexPolynomial from_roots(const std::vector<Complex>& roots) {
    ComplexPolynomial p = one();
    for (const Complex& r : roots) p = p * ComplexPolynomial({-r, Complex(1.0)});
    return p;
  }

  const std::vector<Complex>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Complex coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex(0.0);
  }

  Complex eval(Complex z) const {
    Complex acc(0.0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
  }

  double max_coefficient_norm() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  // Zero up to a relative tolerance against an external scale.
  bool is_negligible(double rel_tol, double scale) const {
    return max_coefficient_norm() <= rel_tol * std::max(scale, 1e-300);
  }

  // p(-z): flip the sign of odd coefficients.
  ComplexPolynomial reflect_negate() const {
    std::vector<Complex> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return ComplexPolynomial(std::move(c));
  }

  ComplexPolynomial conjugate_coefficients() const {
    std::vector<Complex> c = coeffs_;
    for (Complex& x : c) x = std::conj(x);
    return ComplexPolynomial(std::move(c));
  }

  // For p even/odd in z, the polynomial q with p(z) = q(z^2) resp. z*q(z^2).
  ComplexPolynomial even_part_in_square() const {
    std::vector<Complex> c;
    for (std::size_t i = 0; i < coeffs_.size(); i += 2) c.push_back(coeffs_[i]);
    return ComplexPolynomial(std::move(c));
  }
  ComplexPolynomial odd_part_in_square() const {
    std::vector<Complex> c;
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) c.push_back(coeffs_[i]);
    return ComplexPolynomial(std::move(c));
  }

  ComplexPolynomial derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<Complex> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = double(i) * coeffs_[i];
    return ComplexPolynomial(std::move(c));
  }

  // Drop leading coefficients below rel_tol relative to the largest one.
  ComplexPolynomial trimmed(double rel_tol) const {
    const double cut = rel_tol * max_coefficient_norm();
    std::vector<Complex> c = coeffs_;
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
    return ComplexPolynomial(std::move(c));
  }

  friend ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return ComplexPolynomial(std::move(c));
  }

  friend ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return ComplexPolynomial(std::move(c));
  }

  friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ComplexPolynomial(std::move(c));
  }

  friend ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) {
    std::vector<Complex> c = p.coeffs_;
    for (Complex& x : c) x *= s;
    return ComplexPolynomial(std::move(c));
  }

  // Long division: a = q * b + r with deg r < deg b.
  static std::pair<ComplexPolynomial, ComplexPolynomial> divide(const ComplexPolynomial& a,
                                                                const ComplexPolynomial& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    std::vector<Complex> rem = a.coeffs_;
    const int db = b.degree();
    const Complex lead = b.coeffs_.back();
    if (a.degree() < db) return {zero(), a};
    std::vector<Complex> quot(a.degree() - db + 1, Complex(0.0));
    for (int k = a.degree(); k >= db; --k) {
      const Complex f = rem[static_cast<std::size_t>(k)] / lead;
      quot[static_cast<std::size_t>(k - db)] = f;
      for (int j = 0; j <= db; ++j)
        rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return {ComplexPolynomial(std::move(quot)), ComplexPolynomial(std::move(rem))};
  }

  // All complex roots, via the companion-matrix eigenvalues.
  std::vector<Complex> roots(double lead_trim = 1e-12) const {
    const ComplexPolynomial p = trimmed(lead_trim);
    const int n = p.degree();
    if (n <= 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    const Complex lead = p.coeffs_.back();
    for (int i = 0; i < n - 1; ++i) companion(i + 1, i) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeffs_[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return out;
  }

 private:
  void strip_exact_zeros() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
  }

  std::vector<Complex> coeffs_;
};

}  // namespace c0square
