#include "ribbonlab/sampling.hpp"

#include "ribbonlab/families.hpp"

namespace ribbonlab {

Sampler Sampler::stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  return Sampler(rng());
}

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational(long bound, long den_bound) {
  Rational r(integer(-bound, bound), integer(1, den_bound));
  r.canonicalize();
  return r;
}

QuadForm Sampler::quad_form(int g, bool degenerate) {
  const auto n = static_cast<std::size_t>(g - 2);
  RatMatrix m(n, n);
  if (!degenerate) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = rational();
        m(j, i) = m(i, j);
      }
    return QuadForm(g, std::move(m));
  }
  const long terms = integer(0, static_cast<long>(n) - 1);
  for (long t = 0; t < terms; ++t) {
    RatVector v(n);
    for (Rational& x : v) x = rational(3, 2);
    const Rational c = rational(4, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) += c * v[i] * v[j];
  }
  return QuadForm(g, std::move(m));
}

LambdaFunctional Sampler::lambda(int g) {
  RatVector c(static_cast<std::size_t>(g - 2));
  do {
    for (Rational& x : c) x = rational(4, 2);
  } while (is_zero(c));
  return LambdaFunctional(g, std::move(c));
}

BinaryForm Sampler::squarefree_form(int degree) {
  while (true) {
    RatVector c(static_cast<std::size_t>(degree + 1));
    for (Rational& x : c) x = Rational(integer(-4, 4));
    BinaryForm f(degree, std::move(c));
    if (!f.is_zero() && binary_discriminant(f) != 0) return f;
  }
}

WPoly Sampler::v_linear(int g) {
  while (true) {
    WPoly l(g);
    for (int j = 0; j < g - 2; ++j) l += WPoly::v(g, j) * Rational(integer(-3, 3));
    if (!l.is_zero()) return l;
  }
}

}  // namespace ribbonlab
