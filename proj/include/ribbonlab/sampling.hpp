#pragma once

// Seeded random inputs for property checks. Every draw goes through
// modular reduction of mt19937_64 output, so streams are reproducible
// across platforms.

#include "ribbonlab/conormal.hpp"
#include "ribbonlab/exact.hpp"
#include "ribbonlab/poly.hpp"
#include "ribbonlab/rnc.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ribbonlab {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  /// Independent stream for item `index` of a run seeded with `seed`.
  static Sampler stream(std::uint64_t seed, std::uint64_t index);

  /// Uniform in [lo, hi].
  long integer(long lo, long hi);
  /// numerator in [-bound, bound], denominator in [1, den_bound].
  Rational rational(long bound = 5, long den_bound = 3);

  /// Random symmetric form; with `degenerate` set, a sum of fewer than g-2
  /// rank-one terms (so det = 0).
  QuadForm quad_form(int g, bool degenerate);
  LambdaFunctional lambda(int g);
  /// Small integer coefficients with nonzero discriminant.
  BinaryForm squarefree_form(int degree);
  /// Random nonzero v-linear form.
  WPoly v_linear(int g);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ribbonlab
