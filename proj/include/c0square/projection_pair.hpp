#pragma once

// Rank-one orthogonal projection pairs (Q1, Q2) intertwining the
// characteristic matrix, Theta(z) Q2 = Q1 Theta(z) on the disk. Such a pair
// exists precisely when the squared operator is reducible. A rank-one
// projection is parametrized as
//
//     Q = [ q          r conj(th) ]      r = sqrt(q (1-q)),  |th| = 1.
//         [ r th       1 - q      ]
//
// Three regimes:
//   b == 0  : Q1 = diag(1,0), Q2 = diag(0,1)    (odd m)
//   d == 0  : Q1 = Q2 = any rank-one projection (even m)
//   else    : requires b/d to be a linear polynomial c0 + c1 z with
//             c1 = -conj(c0) != 0; then rho = |c0|, th = conj(c0)/rho and
//             q1 = 1/2 +- 1/2 (4 rho^2 + 1)^{-1/2}. The sign is fixed by
//             validating both candidates against the intertwining relation.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

#include "c0square/errors.hpp"
#include "c0square/rng.hpp"
#include "c0square/theta_function.hpp"

namespace c0square {

enum class PairCase { CaseI, CaseII, CaseIII };

struct ProjectionPair {
  double q1 = 0.0;
  double q2 = 0.0;
  Complex theta = Complex(1.0);  // shared unimodular phase of both projections
  double rho = 0.0;              // CaseIII only
  PairCase case_tag = PairCase::CaseIII;

  static Eigen::Matrix2cd projection(double q, Complex th) {
    const double r = std::sqrt(std::max(0.0, q * (1.0 - q)));
    Eigen::Matrix2cd out;
    out << Complex(q), r * std::conj(th), r * th, Complex(1.0 - q);
    return out;
  }

  Eigen::Matrix2cd Q1() const { return projection(q1, theta); }
  Eigen::Matrix2cd Q2() const { return projection(q2, theta); }

  // Roots of rho*th*z^2 + z - rho*conj(th) scaled by th: delta+ * delta- = -1.
  double delta_plus() const { return (-1.0 + std::sqrt(4.0 * rho * rho + 1.0)) / (2.0 * rho); }
  double delta_minus() const { return (-1.0 - std::sqrt(4.0 * rho * rho + 1.0)) / (2.0 * rho); }

  // The Moebius-factor parameter carried by a CaseIII pair: m(-mu) = 0.
  Complex mu() const { return std::conj(theta) * delta_plus(); }
};

// Max residual of the intertwining relation over sample points in the disk.
inline double intertwining_residual(const ThetaFunction& theta, const ProjectionPair& pair,
                                    std::uint64_t seed = 0, int samples = 32) {
  Rng rng(seed ^ 0x1e7e57ull);
  const Eigen::Matrix2cd p1 = pair.Q1();
  const Eigen::Matrix2cd p2 = pair.Q2();
  double residual = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Complex z = rng.complex_in_disk(0.95);
    const Eigen::Matrix2cd t = theta.eval(z);
    residual = std::max(residual, (t * p2 - p1 * t).norm());
  }
  return residual;
}

inline std::optional<ProjectionPair> projection_pair(const ThetaFunction& theta,
                                                     std::uint64_t seed = 0) {
  const ComplexPolynomial& e = theta.b().numerator();
  const ComplexPolynomial& o = theta.d().numerator();
  const double scale = std::max(e.max_coefficient_norm(), o.max_coefficient_norm());
  const double rel = 1e-9;

  if (e.is_negligible(rel, scale)) {
    return ProjectionPair{1.0, 0.0, Complex(1.0), 0.0, PairCase::CaseI};
  }
  if (o.is_negligible(rel, scale)) {
    return ProjectionPair{0.5, 0.5, Complex(1.0), 0.0, PairCase::CaseII};
  }

  // b/d as rational functions reduces to e/o (shared denominator cancels).
  if (e.degree() < o.degree()) return std::nullopt;
  auto [quot, rem] = ComplexPolynomial::divide(e, o);
  if (!rem.is_negligible(rel, scale)) return std::nullopt;
  if (quot.degree() != 1) return std::nullopt;
  const Complex c0 = quot.coefficient(0);
  const Complex c1 = quot.coefficient(1);
  if (std::abs(c1 + std::conj(c0)) > rel * std::max(1.0, std::abs(c0))) return std::nullopt;
  if (std::abs(c0) <= rel) return std::nullopt;

  const double rho = std::abs(c0);
  const Complex th = std::conj(c0) / rho;
  const double s = 1.0 / std::sqrt(4.0 * rho * rho + 1.0);

  // Try both sign choices for q1 and keep the one the relation accepts.
  ProjectionPair best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (const double q1 : {0.5 - 0.5 * s, 0.5 + 0.5 * s}) {
    const ProjectionPair candidate{q1, 1.0 - q1, th, rho, PairCase::CaseIII};
    const double r = intertwining_residual(theta, candidate, seed);
    if (r < best_residual) {
      best_residual = r;
      best = candidate;
    }
  }
  if (best_residual > 1e-9)
    throw consistency_error("no sign choice satisfies the intertwining relation");
  return best;
}

}  // namespace c0square
