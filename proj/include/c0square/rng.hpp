#pragma once

// Seeded deterministic random sources. std::uniform_real_distribution is
// implementation-defined, so doubles are derived from the raw mt19937_64
// stream directly; identical seeds give identical values on every platform.

#include <complex>
#include <cstdint>
#include <random>

namespace c0square {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t bits() { return engine_(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(static_cast<double>(hi - lo + 1) * uniform());
  }

  // Uniform angle, modulus uniform in [0, max_modulus].
  std::complex<double> complex_in_disk(double max_modulus) {
    const double r = max_modulus * uniform();
    const double t = 2.0 * pi() * uniform();
    return std::polar(r, t);
  }

  std::complex<double> unit_complex() { return std::polar(1.0, 2.0 * pi() * uniform()); }

  // Standard complex Gaussian (Box-Muller on the deterministic stream).
  std::complex<double> gaussian() {
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double v = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u));
    return {mag * std::cos(2.0 * pi() * v), mag * std::sin(2.0 * pi() * v)};
  }

  // Derive an independent stream for a sub-task (splitmix64 mix).
  std::uint64_t fork_seed() {
    std::uint64_t z = engine_() + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static constexpr double pi() { return 3.141592653589793238462643383279502884; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace c0square
