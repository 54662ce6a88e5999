#pragma once

// Brute-force matrix oracle. Everything the symbolic layer decides about
// the square of the model operator is re-derived here from the matrix alone:
//
//  - the commutant {A}' as the nullspace of X -> XA - AX (SVD of the n^2 x n^2
//    commutation operator);
//  - irreducibility: the *-commutant {A, A*}' contains only scalars;
//  - cyclicity: geometric multiplicity one for every eigenvalue cluster,
//    cross-checked by randomized Krylov dimensions;
//  - invariant-but-not-hyperinvariant subspace witnesses;
//  - the maximal-vector property: a vector with full annihilator is cyclic
//    for the commutant.
//
// Rank decisions use a relative tolerance of 1e-8 (1e-9 for commutant
// nullspaces). Where a misranking would silently flip a classification, a
// singular value inside the band [tol, 10*tol) raises conditioning_error
// instead of classifying.

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "c0square/errors.hpp"
#include "c0square/rng.hpp"

namespace c0square {

struct CommutantBasis {
  std::vector<Eigen::MatrixXcd> matrices;  // unit Frobenius norm, span {A}'
  int dimension = 0;
};

namespace detail {

// vec(XA - AX) = (A^T kron I - I kron A) vec(X), column-major vec.
inline Eigen::MatrixXcd commutation_operator(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        k(i + j * n, i + l * n) += a(l, j);  // right multiplication by A
        k(l + j * n, i + j * n) -= a(l, i);  // left multiplication by A
      }
  return k;
}

inline Eigen::MatrixXcd unvec(const Eigen::VectorXcd& v, int n) {
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), n, n);
}

// Count singular values below rel_tol times the problem scale; values inside
// the decade above the cut are ambiguous and raise instead of classifying.
// The scale is the norm of the operator under study, not of the matrix being
// decomposed: a commutation operator built from a near-scalar matrix is
// itself near zero, and its own sigma_max would promote rounding noise to
// structure.
inline int guarded_nullity(const Eigen::VectorXd& singular_values, double rel_tol,
                           double scale) {
  const double top =
      std::max(singular_values.size() > 0 ? singular_values(0) : 0.0, scale);
  if (top <= 0.0) return static_cast<int>(singular_values.size());
  const double cut = rel_tol * top;
  int nullity = 0;
  for (int i = 0; i < singular_values.size(); ++i) {
    const double s = singular_values(i);
    if (s < cut)
      ++nullity;
    else if (s < 10.0 * cut)
      throw conditioning_error("singular value inside the rank ambiguity band");
  }
  return nullity;
}

// Plain numerical rank with normalized columns, no ambiguity band.
inline int column_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-8) {
  Eigen::MatrixXcd scaled = m;
  for (int j = 0; j < scaled.cols(); ++j) {
    const double norm = scaled.col(j).norm();
    if (norm > 0.0) scaled.col(j) /= norm;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(scaled);
  const double top = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > rel_tol * top) ++rank;
  return rank;
}

struct EigenCluster {
  Complex mean;
  int count = 0;
};

// Merging at 5e-6 absorbs the sqrt(eps)-scale splitting a defective
// eigenvalue suffers in the eigensolver; genuinely distinct eigenvalues
// closer than 1e-5 are ambiguous and flagged instead of classified.
inline std::vector<EigenCluster> cluster_eigenvalues(const Eigen::MatrixXcd& a,
                                                     double merge_tol = 5e-6,
                                                     double flag_gap = 1e-5) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, /*computeEigenvectors=*/false);
  std::vector<Complex> vals(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) vals[static_cast<std::size_t>(i)] = es.eigenvalues()(i);

  std::vector<EigenCluster> clusters;
  for (const Complex& v : vals) {
    bool merged = false;
    for (EigenCluster& c : clusters) {
      if (std::abs(c.mean - v) < merge_tol) {
        c.mean = (c.mean * double(c.count) + v) / double(c.count + 1);
        ++c.count;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back({v, 1});
  }
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (std::size_t j = i + 1; j < clusters.size(); ++j)
      if (std::abs(clusters[i].mean - clusters[j].mean) < flag_gap)
        throw conditioning_error("eigenvalue gap below the classification threshold");
  return clusters;
}

inline int eigenspace_nullity(const Eigen::MatrixXcd& a, Complex shift, double rel_tol = 1e-8) {
  const Eigen::MatrixXcd shifted =
      a - shift * Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
  return guarded_nullity(svd.singularValues(), rel_tol, a.norm());
}

inline Eigen::MatrixXcd eigenspace_basis(const Eigen::MatrixXcd& a, Complex shift, int nullity) {
  const Eigen::MatrixXcd shifted =
      a - shift * Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(nullity);
}

}  // namespace detail

inline CommutantBasis commutant_basis(const Eigen::MatrixXcd& a, double rel_tol = 1e-9) {
  const int n = static_cast<int>(a.rows());
  const Eigen::MatrixXcd k = detail::commutation_operator(a);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeFullV);
  const int dim = detail::guarded_nullity(svd.singularValues(), rel_tol, a.norm());
  CommutantBasis out;
  out.dimension = dim;
  out.matrices.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i)
    out.matrices.push_back(detail::unvec(svd.matrixV().col(n * n - 1 - i), n));
  return out;
}

// Dimension of {X : XA = AX, XA* = A*X}; scalars only means irreducible.
inline int star_commutant_dimension(const Eigen::MatrixXcd& a, double rel_tol = 1e-9) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd stacked(2 * n * n, n * n);
  stacked.topRows(n * n) = detail::commutation_operator(a);
  stacked.bottomRows(n * n) = detail::commutation_operator(a.adjoint());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  return detail::guarded_nullity(svd.singularValues(), rel_tol, a.norm());
}

inline bool is_irreducible(const Eigen::MatrixXcd& a) {
  return star_commutant_dimension(a) == 1;
}

// A nontrivial orthogonal projection commuting with A and A*, when one
// exists: a spectral projection of a non-scalar Hermitian *-commutant element.
inline std::optional<Eigen::MatrixXcd> reducing_projection(const Eigen::MatrixXcd& a,
                                                           double rel_tol = 1e-9) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd stacked(2 * n * n, n * n);
  stacked.topRows(n * n) = detail::commutation_operator(a);
  stacked.bottomRows(n * n) = detail::commutation_operator(a.adjoint());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
  const int dim = detail::guarded_nullity(svd.singularValues(), rel_tol, a.norm());
  if (dim <= 1) return std::nullopt;

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd best;
  double best_dev = -1.0;
  for (int i = 0; i < dim; ++i) {
    const Eigen::MatrixXcd x = detail::unvec(svd.matrixV().col(n * n - 1 - i), n);
    const Eigen::MatrixXcd y = x - (x.trace() / double(n)) * id;
    if (y.norm() > best_dev) {
      best_dev = y.norm();
      best = y;
    }
  }
  Eigen::MatrixXcd herm = 0.5 * (best + best.adjoint());
  const Eigen::MatrixXcd skew_herm = Complex(0.0, -0.5) * (best - best.adjoint());
  if (skew_herm.norm() > herm.norm()) herm = skew_herm;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
  const Eigen::VectorXd ev = es.eigenvalues();
  int split = 0;
  double widest = -1.0;
  for (int i = 0; i + 1 < n; ++i) {
    if (ev(i + 1) - ev(i) > widest) {
      widest = ev(i + 1) - ev(i);
      split = i + 1;
    }
  }
  const Eigen::MatrixXcd low = es.eigenvectors().leftCols(split);
  Eigen::MatrixXcd proj = low * low.adjoint();
  const double scale = std::max(1.0, a.norm());
  if ((proj * a - a * proj).norm() > 1e-7 * scale ||
      (proj * a.adjoint() - a.adjoint() * proj).norm() > 1e-7 * scale)
    throw consistency_error("reducing projection fails to commute");
  return proj;
}

// Degree of the minimal polynomial: the number of linearly independent
// matrices among the normalized powers I, A, A^2, ...
inline int minimal_poly_degree(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd powers(n * n, n + 1);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 0; k <= n; ++k) {
    const double norm = p.norm();
    if (norm < 1e-14) return k;  // A^k vanished: minimal polynomial is z^k
    powers.col(k) = Eigen::Map<const Eigen::VectorXcd>(p.data(), n * n);
    p = p * a;
  }
  return detail::column_rank(powers);
}

inline int krylov_rank(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd krylov(n, n);
  Eigen::VectorXcd w = v;
  for (int k = 0; k < n; ++k) {
    krylov.col(k) = w;
    w = a * w;
  }
  return detail::column_rank(krylov);
}

// Nonderogatory test: every eigenvalue cluster has geometric multiplicity 1,
// confirmed by the best Krylov dimension over 16 random starting vectors.
inline bool is_cyclic(const Eigen::MatrixXcd& a, std::uint64_t seed = 0) {
  const int n = static_cast<int>(a.rows());
  bool geometric_cyclic = true;
  for (const detail::EigenCluster& c : detail::cluster_eigenvalues(a))
    if (detail::eigenspace_nullity(a, c.mean) != 1) {
      geometric_cyclic = false;
      break;
    }

  Rng rng(seed ^ 0xc7c11cull);
  int best = 0;
  for (int trial = 0; trial < 16 && best < n; ++trial) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.gaussian();
    v.normalize();
    best = std::max(best, krylov_rank(a, v));
  }
  const bool krylov_cyclic = best == n;
  if (krylov_cyclic != geometric_cyclic)
    throw conditioning_error("cyclicity routes disagree; instance too ill-conditioned");
  return geometric_cyclic;
}

// Subspace given by orthonormal columns: invariant under every commutant
// element? Precondition: invariant under A itself.
inline bool hyperinvariant_test(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& subspace,
                                const CommutantBasis& commutant, double tol = 1e-8) {
  const int n = static_cast<int>(a.rows());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(subspace);
  const Eigen::MatrixXcd q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(n, static_cast<int>(subspace.cols()));
  const Eigen::MatrixXcd proj = q * q.adjoint();
  const Eigen::MatrixXcd complement = Eigen::MatrixXcd::Identity(n, n) - proj;
  if ((complement * a * proj).norm() >= tol)
    throw precondition_error("subspace is not invariant under the operator");
  for (const Eigen::MatrixXcd& x : commutant.matrices)
    if ((complement * x * proj).norm() >= tol) return false;
  return true;
}

struct SubspaceWitness {
  Eigen::MatrixXcd basis;  // orthonormal columns
  bool invariant_under_a = false;
  bool hyperinvariant = false;
};

// For a non-cyclic matrix, produce an invariant subspace that is not
// hyperinvariant: a generic line inside an eigenspace of geometric
// multiplicity >= 2, falling back to a deficient Krylov span. Absent when
// the matrix is cyclic.
inline std::optional<SubspaceWitness> lat_witness(const Eigen::MatrixXcd& a,
                                                  std::uint64_t seed = 0, double tol = 1e-8) {
  const int n = static_cast<int>(a.rows());
  if (is_cyclic(a, seed)) return std::nullopt;
  const CommutantBasis commutant = commutant_basis(a);
  Rng rng(seed ^ 0x1a7711ull);

  for (const detail::EigenCluster& c : detail::cluster_eigenvalues(a)) {
    const int nullity = detail::eigenspace_nullity(a, c.mean);
    if (nullity < 2) continue;
    const Eigen::MatrixXcd basis = detail::eigenspace_basis(a, c.mean, nullity);
    for (int attempt = 0; attempt < 8; ++attempt) {
      Eigen::VectorXcd coeffs(nullity);
      for (int i = 0; i < nullity; ++i) coeffs(i) = rng.gaussian();
      Eigen::VectorXcd v = basis * coeffs;
      v.normalize();
      if (!hyperinvariant_test(a, v, commutant, tol))
        return SubspaceWitness{v, true, false};
    }
  }

  // Deficient Krylov span of a random vector (always proper here: every
  // annihilator degree is at most the minimal polynomial degree < n).
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.gaussian();
    v.normalize();
    Eigen::MatrixXcd q(n, n);
    int dim = 0;
    Eigen::VectorXcd w = v;
    while (dim < n) {
      Eigen::VectorXcd r = w;
      for (int i = 0; i < dim; ++i) r -= q.col(i).dot(w) * q.col(i);
      if (r.norm() < 1e-8) break;  // Krylov space saturated
      q.col(dim) = r / r.norm();
      w = a * q.col(dim);
      ++dim;
    }
    if (dim == 0 || dim == n) continue;
    const Eigen::MatrixXcd subspace = q.leftCols(dim);
    if (!hyperinvariant_test(a, subspace, commutant, tol))
      return SubspaceWitness{subspace, true, false};
  }
  throw search_error("no non-hyperinvariant invariant subspace found for a derogatory matrix");
}

// Maximal-vector property: a vector whose annihilator degree equals the
// minimal polynomial degree is cyclic for the commutant. m_degree is the
// degree of the minimal function of the underlying model operator (the
// ambient dimension, for both the model matrix and its square).
inline bool maximal_vector_check(const Eigen::MatrixXcd& a, int m_degree, std::uint64_t seed = 0) {
  const int n = static_cast<int>(a.rows());
  if (m_degree < 1) throw precondition_error("minimal function degree must be >= 1");
  const int degree = minimal_poly_degree(a);

  Rng rng(seed ^ 0x4ea411ull);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXcd f(n);
    for (int i = 0; i < n; ++i) f(i) = rng.gaussian();
    f.normalize();
    if (krylov_rank(a, f) != degree) continue;  // not maximal, rare
    const CommutantBasis commutant = commutant_basis(a);
    Eigen::MatrixXcd orbit(n, commutant.dimension);
    for (int i = 0; i < commutant.dimension; ++i)
      orbit.col(i) = commutant.matrices[static_cast<std::size_t>(i)] * f;
    return detail::column_rank(orbit) == n;
  }
  throw search_error("no maximal vector found in 64 random draws");
}

}  // namespace c0square
