#pragma once

// Zero-level decision procedures for the square of a compressed shift:
//
//  - reducibility: the square is reducible iff m is even, m is odd, or m
//    splits off one Moebius factor whose cofactor is even (the odd case is
//    the mu = 0 instance of the factor case, reported distinctly);
//  - split_reducible: for a reducible square, constant unitaries built from
//    the projection pair diagonalize Theta; the two diagonal inner functions
//    are recovered as Blaschke products by sampling and root-fitting;
//  - analyze: the combined criteria (A) m not even, (B) no single-factor
//    quotient even, (C) an even inner divisor exists, plus the derived
//    verdicts (D) irreducible and (E) invariant lattice strictly smaller
//    than the hyperinvariant one. Multiplicity-freeness is exactly not-C.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "c0square/blaschke_product.hpp"
#include "c0square/errors.hpp"
#include "c0square/projection_pair.hpp"
#include "c0square/theta_function.hpp"

namespace c0square {

enum class ReducibilityCase { Even, Odd, Factor, Irreducible };

struct ReducibilityVerdict {
  ReducibilityCase kind = ReducibilityCase::Irreducible;
  std::optional<Complex> mu;  // factor parameter: m(z) = p(z) (z+mu)/(1+conj(mu) z), p even

  bool reducible() const { return kind != ReducibilityCase::Irreducible; }
};

inline ReducibilityVerdict reducibility(const BlaschkeProduct& m, std::uint64_t seed = 0) {
  if (m.degree() < 2) throw dimension_error("reducibility needs degree >= 2");
  const SymmetryClass cls = symmetry_class(m, seed);
  if (cls == SymmetryClass::Even) return {ReducibilityCase::Even, std::nullopt};
  if (cls == SymmetryClass::Odd) return {ReducibilityCase::Odd, Complex(0.0)};
  for (const ZeroFactor& z : m.zeros()) {
    const BlaschkeProduct quotient = divide_factor(m, z.value);
    if (symmetry_class(quotient, seed) == SymmetryClass::Even)
      return {ReducibilityCase::Factor, -z.value};
  }
  return {ReducibilityCase::Irreducible, std::nullopt};
}

namespace detail {

// Unit vector spanning the range of the rank-one projection with parameters (q, th).
inline Eigen::Vector2cd range_vector(double q, Complex th) {
  if (q <= 0.0) return Eigen::Vector2cd(Complex(0.0), Complex(1.0));
  Eigen::Vector2cd f(Complex(std::sqrt(q)), std::sqrt(1.0 - q) * th);
  return f.normalized();
}

inline Eigen::Vector2cd orthogonal_complement(const Eigen::Vector2cd& f) {
  return Eigen::Vector2cd(-std::conj(f(1)), std::conj(f(0)));
}

// Least-squares fit of a polynomial of degree <= max_degree through the
// samples (points on the unit circle, so the Vandermonde is well behaved).
inline ComplexPolynomial fit_polynomial(const std::vector<Complex>& points,
                                        const std::vector<Complex>& values, int max_degree) {
  const int rows = static_cast<int>(points.size());
  Eigen::MatrixXcd vand(rows, max_degree + 1);
  Eigen::VectorXcd rhs(rows);
  for (int i = 0; i < rows; ++i) {
    Complex p(1.0);
    for (int j = 0; j <= max_degree; ++j) {
      vand(i, j) = p;
      p *= points[static_cast<std::size_t>(i)];
    }
    rhs(i) = values[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXcd sol = vand.colPivHouseholderQr().solve(rhs);
  std::vector<Complex> coeffs(static_cast<std::size_t>(max_degree + 1));
  for (int j = 0; j <= max_degree; ++j) coeffs[static_cast<std::size_t>(j)] = sol(j);
  return ComplexPolynomial(std::move(coeffs));
}

// Recover an inner function sampled on the unit circle as a Blaschke product,
// given the common denominator of the sampled rational function.
inline BlaschkeProduct fit_blaschke(const std::vector<Complex>& points,
                                    const std::vector<Complex>& values,
                                    const ComplexPolynomial& denominator, int max_degree,
                                    double residual_tol) {
  std::vector<Complex> scaled(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) scaled[i] = values[i] * denominator.eval(points[i]);
  const ComplexPolynomial u = fit_polynomial(points, scaled, max_degree);

  std::vector<Complex> inside;
  for (const Complex& r : u.roots(1e-10))
    if (std::abs(r) < 1.0) inside.push_back(r);

  // Merge numerically coincident roots back into multiplicities.
  std::vector<ZeroFactor> zeros;
  for (const Complex& r : inside) {
    bool merged = false;
    for (ZeroFactor& z : zeros) {
      if (std::abs(z.value - r) < 1e-7) {
        z.value = (z.value * double(z.multiplicity) + r) / double(z.multiplicity + 1);
        ++z.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) zeros.push_back({r, 1});
  }

  const BlaschkeProduct no_constant(zeros);
  Complex c = values[0] / no_constant.eval(points[0]);
  if (std::abs(std::abs(c) - 1.0) > 1e-6)
    throw consistency_error("recovered diagonal entry is not inner");
  c /= std::abs(c);
  const BlaschkeProduct fitted(std::move(zeros), c);

  double residual = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    residual = std::max(residual, std::abs(values[i] - fitted.eval(points[i])));
  if (residual > residual_tol)
    throw consistency_error("Blaschke root-fit residual too large");
  return fitted;
}

}  // namespace detail

// Diagonalize Theta with constant unitaries built from the projection pair
// and return the two diagonal inner functions as Blaschke products. Their
// degrees sum to deg m and their zero multisets union to the squares of the
// zeros of m.
inline std::pair<BlaschkeProduct, BlaschkeProduct> split_reducible(const BlaschkeProduct& m,
                                                                   const ProjectionPair& pair) {
  if (m.degree() < 2) throw precondition_error("split needs degree >= 2");
  if (!reducibility(m).reducible())
    throw precondition_error("split requires a reducible square");

  const ThetaFunction theta = build_theta(m);
  const Eigen::Vector2cd f1 = detail::range_vector(pair.q1, pair.theta);
  const Eigen::Vector2cd f2 = detail::range_vector(pair.q2, pair.theta);
  const Eigen::Vector2cd g1 = detail::orthogonal_complement(f1);
  const Eigen::Vector2cd g2 = detail::orthogonal_complement(f2);

  const int n = m.degree();
  const int count = 4 * n;
  std::vector<Complex> points(static_cast<std::size_t>(count));
  std::vector<Complex> diag1(points.size()), diag2(points.size());
  double off_diag = 0.0;
  for (int k = 0; k < count; ++k) {
    const Complex z = std::polar(1.0, 2.0 * Rng::pi() * k / count);
    const Eigen::Matrix2cd t = theta.eval(z);
    points[static_cast<std::size_t>(k)] = z;
    diag1[static_cast<std::size_t>(k)] = f1.dot(t * f2);  // Eigen dot conjugates the left factor
    diag2[static_cast<std::size_t>(k)] = g1.dot(t * g2);
    off_diag = std::max(off_diag, std::abs(f1.dot(t * g2)));
    off_diag = std::max(off_diag, std::abs(g1.dot(t * f2)));
  }
  if (off_diag > 1e-8)
    throw consistency_error("projection pair does not diagonalize the characteristic matrix");

  const ComplexPolynomial& qt = theta.b().denominator();
  BlaschkeProduct theta1 = detail::fit_blaschke(points, diag1, qt, n, 1e-8);
  BlaschkeProduct theta2 = detail::fit_blaschke(points, diag2, qt, n, 1e-8);
  if (theta1.degree() + theta2.degree() != n)
    throw consistency_error("split factor degrees do not sum to the original degree");
  return {std::move(theta1), std::move(theta2)};
}

struct OracleAgreement {
  bool irreducible_match = false;  // analyzer verdict vs. commutant search
  bool cyclic_match = false;       // even-divisor absence vs. nonderogatory test
  bool lat_witness_consistent = false;
  double eig_residual = 0.0;
};

struct AnalysisReport {
  bool cond_a = false;  // m is not even
  bool cond_b = false;  // no single-factor quotient of m is even
  bool cond_c = false;  // m has a nontrivial even inner divisor
  bool cond_d = false;  // the square is irreducible (== A and B)
  bool cond_e = false;  // invariant and hyperinvariant lattices differ (== C)
  ReducibilityVerdict verdict;
  bool multiplicity_free = false;
  bool lat_equal = false;
  std::optional<BlaschkeProduct> even_divisor;
  std::optional<ProjectionPair> pair;
  std::optional<std::pair<BlaschkeProduct, BlaschkeProduct>> split;
  std::optional<OracleAgreement> oracle_agreement;  // filled by the report layer
};

inline AnalysisReport analyze(const BlaschkeProduct& m, std::uint64_t seed = 0) {
  if (m.degree() < 2) throw dimension_error("analysis needs degree >= 2");
  AnalysisReport report;
  report.cond_a = symmetry_class(m, seed) != SymmetryClass::Even;
  report.cond_b = true;
  for (const ZeroFactor& z : m.zeros()) {
    if (symmetry_class(divide_factor(m, z.value), seed) == SymmetryClass::Even) {
      report.cond_b = false;
      break;
    }
  }
  report.even_divisor = even_inner_divisor(m);
  report.cond_c = report.even_divisor.has_value();
  report.verdict = reducibility(m, seed);

  if ((report.cond_a && report.cond_b) != (report.verdict.kind == ReducibilityCase::Irreducible))
    throw consistency_error("reducibility verdict contradicts conditions A and B");

  report.multiplicity_free = !report.cond_c;
  report.lat_equal = report.multiplicity_free;
  report.cond_d = report.verdict.kind == ReducibilityCase::Irreducible;
  report.cond_e = !report.lat_equal;

  report.pair = projection_pair(build_theta(m), seed);
  if (report.pair.has_value() != report.verdict.reducible())
    throw consistency_error("projection pair existence contradicts the reducibility verdict");
  if (report.pair) report.split = split_reducible(m, *report.pair);
  return report;
}

}  // namespace c0square
