#include "ribbonlab/rnc.hpp"
#include "ribbonlab/sampling.hpp"

#include <doctest.h>

using namespace ribbonlab;

namespace {

WPoly uu(int g, int i, int j) { return WPoly::u(g, i) * WPoly::u(g, j); }

// Dimension of the kernel of the evaluation map on degree-d u-monomials,
// computed directly from monomial exponents.
std::size_t evaluation_kernel_dimension(int g, int d) {
  const MonomialBasis mb = make_monomial_basis(g, Grading::weighted, d, VariableSet::u_only);
  const std::size_t top = static_cast<std::size_t>(d * (g - 1));
  RatMatrix m(top + 1, mb.size());
  for (std::size_t c = 0; c < mb.size(); ++c) {
    std::size_t x0 = 0;
    for (int i = 0; i < g; ++i) x0 += static_cast<std::size_t>(i) * mb.monomials[c][i];
    m(x0, c) = 1;
  }
  return mb.size() - rank(m);
}

}  // namespace

TEST_CASE("hankel generators") {
  CHECK(hankel_generators(3) == std::vector<WPoly>{uu(3, 0, 2) - uu(3, 1, 1)});
  const IdealSlice g4 = make_slice(4, 2, hankel_generators(4));
  CHECK(g4 == make_slice(4, 2, {uu(4, 0, 2) - uu(4, 1, 1), uu(4, 0, 3) - uu(4, 1, 2), uu(4, 1, 3) - uu(4, 2, 2)}));
  CHECK(hankel_generators(6).size() == 10);
  CHECK(make_slice(6, 2, hankel_generators(6)).dimension() == 10);
}

TEST_CASE("q_to_quadric examples") {
  for (int g = 3; g <= 6; ++g)
    for (int i = 0; i < g - 2; ++i)
      CHECK(q_to_quadric(QuadForm::unit(g, i, i)) == uu(g, i, i + 2) - uu(g, i + 1, i + 1));
  CHECK(q_to_quadric(QuadForm::zero(5)).is_zero());
  CHECK(q_to_quadric(QuadForm::unit(4, 0, 1)) == uu(4, 0, 3) - uu(4, 1, 2));
}

TEST_CASE("ideal slice dimensions") {
  CHECK(ideal_slice(3, 1).dimension() == 0);
  CHECK(ideal_slice(3, 2).dimension() == 1);
  CHECK(ideal_slice(5, 2).dimension() == 6);
  for (int g = 3; g <= 6; ++g)
    for (int d = 1; d <= 4; ++d) {
      const IdealSlice s = ideal_slice(g, d);
      CHECK(s.dimension() == expected_ideal_dimension(g, d));
      CHECK(s.dimension() == evaluation_kernel_dimension(g, d));
      for (const WPoly& p : s.basis) CHECK(veronese_pullback(p, d).is_zero());
    }
}

TEST_CASE("quadric space is the image of symmetric tensors") {
  for (int g = 3; g <= 8; ++g) {
    CHECK(ideal_slice(g, 2).dimension() == static_cast<std::size_t>((g - 1) * (g - 2) / 2));
    CHECK(make_slice(g, 2, hankel_generators(g)) == ideal_slice(g, 2));
  }
}

TEST_CASE("square of the ideal") {
  const WPoly f = uu(3, 0, 2) - uu(3, 1, 1);
  CHECK(ideal_square_slice(3, 4) == make_slice(3, 4, {f * f}));
  const IdealSlice g3d5 = ideal_square_slice(3, 5);
  CHECK(g3d5.dimension() == 3);
  CHECK(g3d5 == make_slice(3, 5, {WPoly::u(3, 0) * f * f, WPoly::u(3, 1) * f * f, WPoly::u(3, 2) * f * f}));

  std::vector<WPoly> products;
  const auto gens = hankel_generators(4);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) products.push_back(gens[a] * gens[b]);
  CHECK(products.size() == 6);
  CHECK(ideal_square_slice(4, 4) == make_slice(4, 4, products));

  for (int g = 3; g <= 6; ++g)
    for (int d = 4; d <= 5; ++d) CHECK(ideal_square_slice(g, d).is_subspace_of(ideal_slice(g, d)));
}

TEST_CASE("slices are canonical") {
  Sampler s(21);
  for (int g = 4; g <= 6; ++g) {
    const IdealSlice base = ideal_slice(g, 2);
    std::vector<WPoly> mixed;
    for (std::size_t k = 0; k < base.dimension(); ++k) {
      WPoly x(g);
      for (const WPoly& b : base.basis) x += b * s.rational();
      mixed.push_back(x);
    }
    const IdealSlice again = make_slice(g, 2, mixed);
    if (again.dimension() == base.dimension()) {
      CHECK(again == base);
      CHECK(again.basis == base.basis);
    }
  }
}
