#pragma once

// The 2x2 characteristic matrix function of the square of a compressed
// shift with minimal function m:
//
//     Theta(z) = 1/2 [ b(z)   z d(z) ]
//                    [ d(z)   b(z)   ]
//
// with b, d from the even/odd split of m. Theta is inner (unitary boundary
// values) and, for deg m >= 2, pure: the largest eigenvalue of
// Theta(0)* Theta(0) stays strictly below 1.

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "c0square/blaschke_product.hpp"
#include "c0square/errors.hpp"
#include "c0square/rational_function.hpp"

namespace c0square {

class ThetaFunction {
 public:
  ThetaFunction(RationalFunction b, RationalFunction d) : b_(std::move(b)), d_(std::move(d)) {}

  const RationalFunction& b() const { return b_; }
  const RationalFunction& d() const { return d_; }

  // Entries as rational functions: [[b/2, z d/2], [d/2, b/2]].
  std::array<std::array<RationalFunction, 2>, 2> entries() const {
    const RationalFunction half_b = Complex(0.5) * b_;
    const RationalFunction half_d = Complex(0.5) * d_;
    const RationalFunction z(ComplexPolynomial({Complex(0.0), Complex(1.0)}),
                             ComplexPolynomial::one());
    return {{{half_b, z * half_d}, {half_d, half_b}}};
  }

  Eigen::Matrix2cd eval(Complex z) const {
    const Complex bv = b_.eval(z);
    const Complex dv = d_.eval(z);
    Eigen::Matrix2cd out;
    out << 0.5 * bv, 0.5 * z * dv, 0.5 * dv, 0.5 * bv;
    return out;
  }

  Eigen::Matrix2cd at_zero() const { return eval(Complex(0.0)); }

 private:
  RationalFunction b_;
  RationalFunction d_;
};

inline ThetaFunction build_theta(const BlaschkeProduct& m) {
  if (m.degree() < 2) throw dimension_error("characteristic matrix needs degree >= 2");
  EvenOddSplit split = even_odd_split(m);
  return ThetaFunction(std::move(split.b), std::move(split.d));
}

struct ThetaChecks {
  double inner_residual = 0.0;       // max over boundary samples of |Theta* Theta - I|
  bool pure = false;                 // largest eigenvalue of Theta(0)* Theta(0) < 1 - 1e-10
  double zero_point_top_eigenvalue = 0.0;
};

inline ThetaChecks theta_checks(const ThetaFunction& theta, int boundary_samples = 512) {
  ThetaChecks out;
  for (int k = 0; k < boundary_samples; ++k) {
    const Complex z = std::polar(1.0, 2.0 * Rng::pi() * k / boundary_samples);
    const Eigen::Matrix2cd t = theta.eval(z);
    const Eigen::Matrix2cd r = t.adjoint() * t - Eigen::Matrix2cd::Identity();
    out.inner_residual = std::max(out.inner_residual, r.norm());
  }
  const Eigen::Matrix2cd t0 = theta.at_zero();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(t0.adjoint() * t0);
  out.zero_point_top_eigenvalue = es.eigenvalues().maxCoeff();
  out.pure = out.zero_point_top_eigenvalue < 1.0 - 1e-10;
  return out;
}

}  // namespace c0square
