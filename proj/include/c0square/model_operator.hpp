#pragma once

// Matrix model of the compressed shift on H^2 (-) m H^2 for a finite
// Blaschke product m = P/Q of degree n.
//
// The raw basis is {z^k / Q(z)}, k = 0..n-1. In that basis the shift acts as
// the companion matrix of the monic numerator: multiplying the top basis
// element by z and subtracting the multiple of m that cancels the degree-n
// term is exact polynomial division, so the only numerics live in the Gram
// matrix. Gram entries are Hardy-space boundary inner products of rational
// functions with poles off the circle; equispaced trapezoid sampling is
// spectrally accurate for those, 2048 points by default. A Cholesky factor
// of the Gram matrix then rotates the raw action into an orthonormal basis.

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "c0square/blaschke_product.hpp"
#include "c0square/errors.hpp"
#include "c0square/rng.hpp"

namespace c0square {

struct ModelOperator {
  Eigen::MatrixXcd matrix;  // T in an orthonormal basis of the model space
  Eigen::MatrixXcd gram;    // Gram matrix of the raw basis {z^k / Q}
  BlaschkeProduct blaschke;
};

inline ModelOperator model_matrix(const BlaschkeProduct& m, int boundary_samples = 2048) {
  const int n = m.degree();
  if (n < 1) throw dimension_error("model space needs degree >= 1");
  for (const ZeroFactor& z : m.zeros())
    if (std::abs(z.value) > 1.0 - 1e-6)
      throw conditioning_error("zero too close to the unit circle for the quadrature");

  const ComplexPolynomial q = m.denominator();

  // Gram matrix is Hermitian Toeplitz: G(j,k) = g(k-j) with
  // g(s) = (1/N) sum_t z_t^s / |Q(z_t)|^2.
  std::vector<Complex> g(static_cast<std::size_t>(n), Complex(0.0));
  for (int t = 0; t < boundary_samples; ++t) {
    const Complex z = std::polar(1.0, 2.0 * Rng::pi() * t / boundary_samples);
    const double w = 1.0 / std::norm(q.eval(z));
    Complex zs(1.0);
    for (int s = 0; s < n; ++s) {
      g[static_cast<std::size_t>(s)] += w * zs;
      zs *= z;
    }
  }
  for (Complex& v : g) v /= double(boundary_samples);

  Eigen::MatrixXcd gram(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      gram(j, k) = k >= j ? g[static_cast<std::size_t>(k - j)]
                          : std::conj(g[static_cast<std::size_t>(j - k)]);

  // Companion matrix of the monic numerator prod (z - a_i).
  const ComplexPolynomial monic = ComplexPolynomial::from_roots(m.flattened_zeros());
  Eigen::MatrixXcd raw = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) raw(i + 1, i) = 1.0;
  for (int i = 0; i < n; ++i) raw(i, n - 1) = -monic.coefficient(static_cast<std::size_t>(i));

  Eigen::LLT<Eigen::MatrixXcd> llt(gram);
  if (llt.info() != Eigen::Success)
    throw conditioning_error("Gram matrix is not positive definite within tolerance");
  const Eigen::MatrixXcd upper = llt.matrixL().adjoint();
  const Eigen::MatrixXcd matrix =
      upper * raw * upper.triangularView<Eigen::Upper>().solve(Eigen::MatrixXcd::Identity(n, n));

  return ModelOperator{matrix, gram, m};
}

inline Eigen::MatrixXcd square_model(const ModelOperator& model) {
  return model.matrix * model.matrix;
}

// Split a truncated power series into its even- and odd-index parts. This is
// the finite shadow of the unitary that carries h(z) to (h0, h1) with
// h(z) = h0(z^2) + z h1(z^2); it preserves norms and intertwines the double
// shift with the shift on each summand.
inline std::pair<std::vector<Complex>, std::vector<Complex>> even_odd_embed(
    const std::vector<Complex>& coefficients) {
  std::vector<Complex> h0, h1;
  h0.reserve((coefficients.size() + 1) / 2);
  h1.reserve(coefficients.size() / 2);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    (i % 2 == 0 ? h0 : h1).push_back(coefficients[i]);
  return {std::move(h0), std::move(h1)};
}

struct SpectralCheck {
  double eig_residual = 0.0;  // Hausdorff distance, spectrum of T vs. zero multiset
  int defect_t = 0;           // rank of I - T* T
  int defect_t2 = 0;          // rank of I - (T^2)* T^2
};

namespace detail {

inline int defect_rank(const Eigen::MatrixXcd& a, double tol = 1e-8) {
  const Eigen::MatrixXcd d =
      Eigen::MatrixXcd::Identity(a.rows(), a.cols()) - a.adjoint() * a;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;
  return rank;
}

inline double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double h = 0.0;
  for (const auto& [from, to] : {std::make_pair(&a, &b), std::make_pair(&b, &a)}) {
    for (const Complex& x : *from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const Complex& y : *to) nearest = std::min(nearest, std::abs(x - y));
      h = std::max(h, nearest);
    }
  }
  return h;
}

}  // namespace detail

inline SpectralCheck spectral_check(const ModelOperator& model) {
  SpectralCheck out;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(model.matrix, /*computeEigenvectors=*/false);
  std::vector<Complex> spectrum(static_cast<std::size_t>(model.matrix.rows()));
  for (int i = 0; i < model.matrix.rows(); ++i) spectrum[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  out.eig_residual = detail::hausdorff_distance(spectrum, model.blaschke.flattened_zeros());
  out.defect_t = detail::defect_rank(model.matrix);
  out.defect_t2 = detail::defect_rank(square_model(model));
  return out;
}

}  // namespace c0square
