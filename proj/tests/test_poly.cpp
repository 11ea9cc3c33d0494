#include "ribbonlab/json_io.hpp"
#include "ribbonlab/poly.hpp"
#include "ribbonlab/sampling.hpp"

#include <doctest.h>

using namespace ribbonlab;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

WPoly random_u_poly(Sampler& s, int g, int degree) {
  const MonomialBasis mb = make_monomial_basis(g, Grading::weighted, degree, VariableSet::u_only);
  WPoly p(g);
  for (const Monomial& m : mb.monomials)
    if (s.integer(0, 2) == 0) p.add_term(m, s.rational());
  return p;
}

}  // namespace

TEST_CASE("veronese pullback examples") {
  const BinaryForm u1 = veronese_pullback(WPoly::u(3, 1));
  CHECK(u1 == BinaryForm::monomial(2, 1));
  const WPoly conic = WPoly::u(3, 0) * WPoly::u(3, 2) - WPoly::u(3, 1) * WPoly::u(3, 1);
  const BinaryForm zero = veronese_pullback(conic);
  CHECK(zero.degree() == 4);
  CHECK(zero.is_zero());
  const WPoly q = WPoly::u(4, 0) * WPoly::u(4, 3) - WPoly::u(4, 1) * WPoly::u(4, 2);
  CHECK(veronese_pullback(q).is_zero());
  CHECK(veronese_pullback(WPoly::u(4, 0)) == BinaryForm::monomial(3, 0));
}

TEST_CASE("quartic lift examples") {
  const WPoly a = quartic_lift(BinaryForm::monomial(8, 8), 3);
  CHECK(a == WPoly::u(3, 2) * WPoly::u(3, 2) * WPoly::u(3, 2) * WPoly::u(3, 2));
  const WPoly b = quartic_lift(BinaryForm::monomial(8, 0), 3);
  CHECK(b == WPoly::u(3, 0) * WPoly::u(3, 0) * WPoly::u(3, 0) * WPoly::u(3, 0));
  const WPoly c = quartic_lift(BinaryForm::monomial(8, 5), 3);
  CHECK(c == WPoly::u(3, 2) * WPoly::u(3, 2) * WPoly::u(3, 1) * WPoly::u(3, 0));
  CHECK(veronese_pullback(c) == BinaryForm::monomial(8, 5));
}

TEST_CASE("quartic lift is a section of the pullback") {
  Sampler s(5);
  for (int g = 3; g <= 6; ++g) {
    const int deg = 4 * (g - 1);
    RatVector coeffs(static_cast<std::size_t>(deg + 1));
    for (Rational& x : coeffs) x = s.rational();
    const BinaryForm f(deg, coeffs);
    CHECK(veronese_pullback(quartic_lift(f, g)) == f);
  }
}

TEST_CASE("pullback is a ring map and Euler identity holds") {
  Sampler s(9);
  for (int g = 3; g <= 6; ++g) {
    const WPoly p = random_u_poly(s, g, 2), q = random_u_poly(s, g, 3);
    CHECK(veronese_pullback(p * q, 5) == veronese_pullback(p, 2) * veronese_pullback(q, 3));
    WPoly euler(g);
    for (int i = 0; i < g; ++i) euler += WPoly::u(g, i) * partial(q, u_var(i));
    CHECK(euler == q * Rational(3));
  }
}

TEST_CASE("monomial basis sizes and order") {
  for (int g = 3; g <= 6; ++g)
    for (int d = 0; d <= 4; ++d) {
      const MonomialBasis mb = make_monomial_basis(g, Grading::weighted, d, VariableSet::u_only);
      CHECK(mb.size() == binomial(static_cast<std::size_t>(g - 1 + d), static_cast<std::size_t>(d)));
      for (std::size_t k = 0; k < mb.size(); ++k) CHECK(mb.index_of(mb.monomials[k]) == k);
      for (std::size_t k = 1; k < mb.size(); ++k) CHECK(compare_lex(mb.monomials[k - 1], mb.monomials[k], g) > 0);
    }
  // Koszul degree 1 has all 2g-2 variables; weighted degree 2 has the g-2 v's
  // plus the g(g+1)/2 quadratic u-monomials.
  CHECK(make_monomial_basis(5, Grading::koszul, 1).size() == 8);
  CHECK(make_monomial_basis(5, Grading::weighted, 2).size() == 3 + 15);
}

TEST_CASE("binary forms") {
  const BinaryForm f = parse_binary_form("x0^2 + x1^2", 2);
  CHECK(f[2] == 1);
  CHECK(f[0] == 1);
  CHECK(f[1] == 0);
  CHECK(f.d_x0() == BinaryForm::monomial(1, 1, 2));
  const auto q = (f * BinaryForm::monomial(3, 1)).divide_by_monomial(1, 2);
  REQUIRE(q.has_value());
  CHECK(*q == f);
  CHECK_FALSE(f.divide_by_monomial(1, 0).has_value());
}

TEST_CASE("text and JSON round trips") {
  const WPoly p = parse_wpoly("u0*u2 - u1^2 + 3/2*v0", 3);
  CHECK(p.coefficient(variable_monomial(v_var(3, 0))) == Rational(3, 2));
  CHECK(p.homogeneous_degree(Grading::weighted) == 2);
  CHECK_FALSE(p.homogeneous_degree(Grading::koszul).has_value());
  CHECK(wpoly_from_json(to_json(p), 3) == p);
  CHECK(parse_wpoly(p.to_string(), 3) == p);
  CHECK_THROWS(parse_wpoly("u7", 3));
  CHECK_THROWS(parse_wpoly("u0 +* u1", 3));
}

TEST_CASE("v-linear forms and binary forms correspond") {
  for (int g = 3; g <= 6; ++g) {
    Sampler s(static_cast<std::uint64_t>(g));
    const WPoly l = s.v_linear(g);
    const BinaryForm f = v_linear_to_form(l);
    CHECK(f.degree() == g - 3);
    CHECK(form_to_v_linear(f, g) == l);
  }
}
