#pragma once

// Random Blaschke products for property suites. Plain draws are almost
// surely irreducible, so a share of instances is given structure (negated
// zero pairs, symmetric zero sets, repeated zeros, double zeros at the
// origin) to keep every verdict branch exercised.

#include <cstdint>
#include <vector>

#include "c0square/blaschke_product.hpp"
#include "c0square/rng.hpp"

namespace c0square {

inline BlaschkeProduct random_blaschke(Rng& rng, int degree, double max_modulus = 0.8) {
  std::vector<Complex> zeros;
  zeros.reserve(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) zeros.push_back(rng.complex_in_disk(max_modulus));
  const Complex c = rng.uniform() < 0.5 ? rng.unit_complex() : Complex(1.0);
  return BlaschkeProduct::from_zeros(zeros, c);
}

// The matrix oracle refuses to classify spectra with near-degenerate gaps,
// so agreement corpora must keep the squared zeros either exactly coincident
// (negated pairs and repeated zeros square to the same double) or clearly
// separated. Accidental draws in between are rejected and redrawn.
inline bool classifiable_squared_spectrum(const std::vector<Complex>& zeros) {
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j) {
      const double gap = std::abs(zeros[i] * zeros[i] - zeros[j] * zeros[j]);
      if (gap > 1e-9 && gap < 1e-4) return false;
    }
  return true;
}

inline BlaschkeProduct random_corpus_instance(Rng& rng, int min_degree, int max_degree,
                                              double max_modulus = 0.8);

namespace detail {
inline BlaschkeProduct draw_corpus_instance(Rng& rng, int min_degree, int max_degree,
                                            double max_modulus) {
  const int degree = rng.uniform_int(min_degree, max_degree);
  const double roll = rng.uniform();
  std::vector<Complex> zeros;

  if (roll < 0.45) {  // generic
    for (int i = 0; i < degree; ++i) zeros.push_back(rng.complex_in_disk(max_modulus));
  } else if (roll < 0.65) {  // one negated pair, rest generic
    const Complex a = rng.complex_in_disk(max_modulus);
    zeros.push_back(a);
    zeros.push_back(-a);
    for (int i = 2; i < degree; ++i) zeros.push_back(rng.complex_in_disk(max_modulus));
  } else if (roll < 0.75) {  // fully negation-symmetric (even or odd)
    for (int i = 0; i + 1 < degree; i += 2) {
      const Complex a = rng.complex_in_disk(max_modulus);
      zeros.push_back(a);
      zeros.push_back(-a);
    }
    if (degree % 2 == 1) zeros.push_back(Complex(0.0));
  } else if (roll < 0.85) {  // a repeated zero
    const Complex a = rng.complex_in_disk(max_modulus);
    zeros.push_back(a);
    zeros.push_back(a);
    for (int i = 2; i < degree; ++i) zeros.push_back(rng.complex_in_disk(max_modulus));
  } else {  // double zero at the origin
    zeros.push_back(Complex(0.0));
    zeros.push_back(Complex(0.0));
    for (int i = 2; i < degree; ++i) zeros.push_back(rng.complex_in_disk(max_modulus));
  }

  const Complex c = rng.uniform() < 0.5 ? rng.unit_complex() : Complex(1.0);
  return BlaschkeProduct::from_zeros(zeros, c);
}
}  // namespace detail

inline BlaschkeProduct random_corpus_instance(Rng& rng, int min_degree, int max_degree,
                                              double max_modulus) {
  for (;;) {
    BlaschkeProduct m = detail::draw_corpus_instance(rng, min_degree, max_degree, max_modulus);
    if (classifiable_squared_spectrum(m.flattened_zeros())) return m;
  }
}

// Degree-3 products with a forced negated zero pair {a, -a, b}.
inline BlaschkeProduct random_forced_pair_cubic(Rng& rng, double max_modulus = 0.8) {
  for (;;) {
    const Complex a = rng.complex_in_disk(max_modulus);
    const Complex b = rng.complex_in_disk(max_modulus);
    if (!classifiable_squared_spectrum({a, -a, b})) continue;
    return BlaschkeProduct::from_zeros({a, -a, b});
  }
}

}  // namespace c0square
