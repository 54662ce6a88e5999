#include <catch2/catch_amalgamated.hpp>

#include "c0square/blaschke_product.hpp"
#include "c0square/corpus.hpp"

using c0square::BlaschkeProduct;
using c0square::Complex;
using c0square::SymmetryClass;

namespace {
const double kPi = c0square::Rng::pi();
}

TEST_CASE("evaluation of simple products") {
  const BlaschkeProduct identity = BlaschkeProduct::from_zeros({Complex(0.0)});
  REQUIRE(std::abs(identity.eval(Complex(0.5)) - Complex(0.5)) < 1e-15);

  const BlaschkeProduct half = BlaschkeProduct::from_zeros({Complex(0.5)});
  REQUIRE(std::abs(half.eval(Complex(0.5))) < 1e-15);

  const BlaschkeProduct two = BlaschkeProduct::from_zeros({Complex(0.3), Complex(0.0, 0.4)});
  const Complex boundary = std::polar(1.0, kPi / 7.0);
  REQUIRE(std::abs(std::abs(two.eval(boundary)) - 1.0) < 1e-12);
}

TEST_CASE("boundary modulus is 1 for random products") {
  c0square::Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const BlaschkeProduct m = c0square::random_blaschke(rng, rng.uniform_int(1, 6));
    for (int k = 0; k < 16; ++k) {
      const Complex z = rng.unit_complex();
      REQUIRE(std::abs(std::abs(m.eval(z)) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("numerator over denominator agrees with factorwise evaluation") {
  c0square::Rng rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const BlaschkeProduct m = c0square::random_blaschke(rng, rng.uniform_int(1, 5));
    const auto rational = m.as_rational();
    for (int k = 0; k < 8; ++k) {
      const Complex z = rng.complex_in_disk(0.9);
      REQUIRE(std::abs(rational.eval(z) - m.eval(z)) < 1e-12);
    }
  }
}

TEST_CASE("symmetry classification") {
  REQUIRE(symmetry_class(BlaschkeProduct::from_zeros({Complex(0.5), Complex(-0.5)})) ==
          SymmetryClass::Even);
  REQUIRE(symmetry_class(BlaschkeProduct::from_zeros({Complex(0.0)})) == SymmetryClass::Odd);

  const BlaschkeProduct neither = BlaschkeProduct::from_zeros({Complex(0.3), Complex(0.0, 0.4)});
  REQUIRE(symmetry_class(neither) == SymmetryClass::Neither);

  // Independent sampling oracle for the Neither case: both deviations are
  // visibly nonzero at random points.
  c0square::Rng rng(23);
  double even_dev = 0.0, odd_dev = 0.0;
  for (int k = 0; k < 32; ++k) {
    const Complex z = rng.complex_in_disk(0.9);
    even_dev = std::max(even_dev, std::abs(neither.eval(z) - neither.eval(-z)));
    odd_dev = std::max(odd_dev, std::abs(neither.eval(z) + neither.eval(-z)));
  }
  REQUIRE(even_dev > 1e-3);
  REQUIRE(odd_dev > 1e-3);
}

TEST_CASE("symmetry respects multiplicities") {
  // {a, a, -a} is not negation-symmetric even though values match up to sign.
  const Complex a(0.4, 0.1);
  REQUIRE(symmetry_class(BlaschkeProduct::from_zeros({a, a, -a})) == SymmetryClass::Neither);
  REQUIRE(symmetry_class(BlaschkeProduct::from_zeros({a, a, -a, -a})) == SymmetryClass::Even);
}

TEST_CASE("divide_factor removes one Moebius factor") {
  const BlaschkeProduct m =
      BlaschkeProduct::from_zeros({Complex(0.5), Complex(-0.5), Complex(0.3)});
  const BlaschkeProduct p = divide_factor(m, Complex(0.3));
  REQUIRE(p.degree() == 2);
  REQUIRE(symmetry_class(p) == SymmetryClass::Even);

  const BlaschkeProduct doubled =
      BlaschkeProduct::from_zeros({Complex(0.0, 0.3), Complex(0.0, 0.3)});
  const BlaschkeProduct once = divide_factor(doubled, Complex(0.0, 0.3));
  REQUIRE(once.degree() == 1);
  REQUIRE(once.zeros().size() == 1);
  REQUIRE(once.zeros()[0].multiplicity == 1);

  REQUIRE_THROWS_AS(divide_factor(BlaschkeProduct::from_zeros({Complex(0.5)}), Complex(0.4)),
                    c0square::divisor_error);
}

TEST_CASE("divide_factor leaves the quotient a true divisor") {
  c0square::Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const BlaschkeProduct m = c0square::random_blaschke(rng, rng.uniform_int(2, 5));
    const Complex zero0 = m.flattened_zeros()[0];
    const BlaschkeProduct p = divide_factor(m, zero0);
    for (int k = 0; k < 8; ++k) {
      const Complex z = rng.complex_in_disk(0.9);
      const Complex factor = (z - zero0) / (Complex(1.0) - std::conj(zero0) * z);
      REQUIRE(std::abs(m.eval(z) - p.eval(z) * factor) < 1e-11);
    }
  }
}

TEST_CASE("even inner divisor search") {
  const auto divisor = even_inner_divisor(
      BlaschkeProduct::from_zeros({Complex(0.5), Complex(-0.5), Complex(0.3)}));
  REQUIRE(divisor.has_value());
  REQUIRE(divisor->degree() == 2);
  REQUIRE(symmetry_class(*divisor) == SymmetryClass::Even);
  // Quotient check by sampling: m / p is analytic and unimodular on the circle.
  const BlaschkeProduct m =
      BlaschkeProduct::from_zeros({Complex(0.5), Complex(-0.5), Complex(0.3)});
  const BlaschkeProduct rest = BlaschkeProduct::from_zeros({Complex(0.3)});
  c0square::Rng rng(25);
  for (int k = 0; k < 16; ++k) {
    const Complex z = rng.complex_in_disk(0.9);
    REQUIRE(std::abs(m.eval(z) - divisor->eval(z) * rest.eval(z)) < 1e-12);
  }

  const auto squared = even_inner_divisor(
      BlaschkeProduct::from_zeros({Complex(0.0), Complex(0.0)}));
  REQUIRE(squared.has_value());
  const Complex z(0.3, 0.2);
  REQUIRE(std::abs(squared->eval(z) - z * z) < 1e-14);

  // Exhaustive pair search over the two-element multiset {0.3, 0.4}: no pair.
  const std::vector<Complex> zs = {Complex(0.3), Complex(0.4)};
  bool has_pair = false;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (std::abs(zs[i] + zs[j]) < 1e-9) has_pair = true;
  REQUIRE_FALSE(has_pair);
  REQUIRE_FALSE(even_inner_divisor(BlaschkeProduct::from_zeros(zs)).has_value());
}

TEST_CASE("even/odd split closed forms") {
  // m(z) = z: b = 0, d = 2.
  const auto split_shift = even_odd_split(BlaschkeProduct::from_zeros({Complex(0.0)}));
  REQUIRE(split_shift.b.is_zero());
  REQUIRE(split_shift.d.numerator().degree() == 0);
  REQUIRE(std::abs(split_shift.d.eval(Complex(0.7, 0.1)) - Complex(2.0)) < 1e-14);

  // m(z) = z^2: b = 2z, d = 0.
  const auto split_square =
      even_odd_split(BlaschkeProduct::from_zeros({Complex(0.0), Complex(0.0)}));
  REQUIRE(split_square.d.is_zero());
  REQUIRE(std::abs(split_square.b.eval(Complex(0.3)) - Complex(0.6)) < 1e-14);

  // Single zero at 0.5: b = (z - 1)/(1 - z/4), d = (3/2)/(1 - z/4).
  const auto split_half = even_odd_split(BlaschkeProduct::from_zeros({Complex(0.5)}));
  const Complex z(0.2, -0.3);
  REQUIRE(std::abs(split_half.b.eval(z) - (z - 1.0) / (1.0 - 0.25 * z)) < 1e-13);
  REQUIRE(std::abs(split_half.d.eval(z) - 1.5 / (1.0 - 0.25 * z)) < 1e-13);
}

TEST_CASE("split identities hold at sampled points") {
  c0square::Rng rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const BlaschkeProduct m = c0square::random_corpus_instance(rng, 1, 6);
    const auto split = even_odd_split(m);
    // d(0) = 2 m'(0), independently via the rational derivative.
    const auto dm = m.as_rational().derivative();
    REQUIRE(std::abs(split.d.eval(Complex(0.0)) - 2.0 * dm.eval(Complex(0.0))) < 1e-10);
    for (int k = 0; k < 64; ++k) {
      const Complex z = rng.complex_in_disk(0.95);
      const Complex plus = m.eval(z) + m.eval(-z);
      const Complex minus = m.eval(z) - m.eval(-z);
      REQUIRE(std::abs(split.b.eval(z * z) - plus) < 1e-9);
      REQUIRE(std::abs(z * split.d.eval(z * z) - minus) < 1e-9);
    }
  }
}

TEST_CASE("constructor rejects bad inputs") {
  REQUIRE_THROWS_AS(BlaschkeProduct::from_zeros({Complex(1.2)}), c0square::precondition_error);
  REQUIRE_THROWS_AS(BlaschkeProduct({{Complex(0.1), 0}}), c0square::precondition_error);
  REQUIRE_THROWS_AS(BlaschkeProduct::from_zeros({Complex(0.1)}, Complex(2.0)),
                    c0square::precondition_error);
}

TEST_CASE("evaluation at a pole raises a domain error") {
  const BlaschkeProduct m = BlaschkeProduct::from_zeros({Complex(0.5)});
  REQUIRE_THROWS_AS(m.eval(Complex(2.0)), c0square::domain_error);  // pole at 1/conj(0.5)
  REQUIRE_NOTHROW(m.eval(Complex(1.0)));                            // boundary is fine
}
