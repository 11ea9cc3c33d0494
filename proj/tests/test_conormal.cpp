#include "ribbonlab/conormal.hpp"
#include "ribbonlab/rnc.hpp"
#include "ribbonlab/sampling.hpp"

#include <doctest.h>

using namespace ribbonlab;

namespace {

RatMatrix mat2(long a, long b, long c, long d) {
  RatMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

// Independent route to phi_d: write x = sum c * m * Q_ij with m a monomial of
// degree d-2 and Q_ij = q_to_quadric(e_i.e_j), then use phi_2(Q_ij) = e_i.e_j
// and the module property.
std::vector<BinaryForm> oracle_phi_rows(const WPoly& x, int d) {
  const int g = x.genus();
  const auto n = static_cast<std::size_t>(g - 2);
  std::vector<QuadForm> units;
  for (int i = 0; i < g - 2; ++i)
    for (int j = i; j < g - 2; ++j) units.push_back(QuadForm::unit(g, i, j));
  const MonomialBasis lower = make_monomial_basis(g, Grading::weighted, d - 2, VariableSet::u_only);
  const MonomialBasis target = make_monomial_basis(g, Grading::weighted, d, VariableSet::u_only);
  RatMatrix system(target.size(), lower.size() * units.size());
  for (std::size_t a = 0; a < lower.size(); ++a)
    for (std::size_t k = 0; k < units.size(); ++k) {
      const RatVector col = target.coordinates(WPoly::term(g, lower.monomials[a]) * q_to_quadric(units[k]));
      for (std::size_t r = 0; r < col.size(); ++r) system(r, a * units.size() + k) = col[r];
    }
  const LinearSolution sol = solve(system, target.coordinates(x));
  REQUIRE(sol.status != LinearSolution::Status::inconsistent);
  const int cols = (d - 1) * (g - 1) - 1;
  std::vector<BinaryForm> rows(n, BinaryForm(cols - 1));
  for (std::size_t a = 0; a < lower.size(); ++a)
    for (std::size_t k = 0; k < units.size(); ++k) {
      const Rational& c = sol.x[a * units.size() + k];
      if (c == 0) continue;
      const BinaryForm mult = veronese_pullback(WPoly::term(g, lower.monomials[a]), d - 2);
      for (std::size_t r = 0; r < n; ++r)
        rows[r] += mult * BinaryForm(g - 3, units[k].matrix().row_vector(r)) * c;
    }
  return rows;
}

}  // namespace

TEST_CASE("phi_2 inverts q_to_quadric") {
  Sampler s(31);
  for (int g = 3; g <= 6; ++g)
    for (int k = 0; k < 20; ++k) {
      const QuadForm q = s.quad_form(g, k % 3 == 0);
      CHECK(phi_d(q_to_quadric(q), 2).matrix == q.matrix());
      CHECK(rank(phi_d(q_to_quadric(q), 2).matrix) == rank(q.matrix()));
    }
}

TEST_CASE("phi_d agrees with the module-property oracle") {
  Sampler s(37);
  for (int g = 3; g <= 5; ++g)
    for (int d = 2; d <= 4; ++d) {
      const IdealSlice slice = ideal_slice(g, d);
      WPoly x(g);
      for (const WPoly& b : slice.basis) x += b * s.rational();
      if (x.is_zero()) continue;
      const ConormalMatrix phi = phi_d(x, d);
      CHECK(phi.matrix.rows() == static_cast<std::size_t>(g - 2));
      CHECK(phi.matrix.cols() == conormal_cols(g, d));
      const auto rows = oracle_phi_rows(x, d);
      for (std::size_t r = 0; r < rows.size(); ++r) CHECK(phi.row_form(r) == rows[r]);
    }
}

TEST_CASE("phi_d vanishes on the square of the ideal") {
  for (int g = 3; g <= 5; ++g)
    for (const WPoly& x : ideal_square_slice(g, 4).basis) CHECK(phi_d(x, 4).matrix.is_zero());
}

TEST_CASE("module property example") {
  const WPoly q = WPoly::u(4, 1) * WPoly::u(4, 3) - WPoly::u(4, 2) * WPoly::u(4, 2);
  const ConormalMatrix phi3 = phi_d(WPoly::u(4, 0) * q, 3);
  const ConormalMatrix phi2 = phi_d(q, 2);
  const BinaryForm x1_cubed = BinaryForm::monomial(3, 0);
  CHECK(veronese_pullback(WPoly::u(4, 0)) == x1_cubed);
  for (std::size_t r = 0; r < 2; ++r) CHECK(phi3.row_form(r) == phi2.row_form(r) * x1_cubed);
}

TEST_CASE("psi examples") {
  for (int g = 3; g <= 6; ++g) {
    const auto n = static_cast<std::size_t>(g - 2);
    const WPoly x = q_to_quadric(QuadForm(g, RatMatrix::identity(n)));
    CHECK(psi_d(LambdaFunctional(g, unit_vector(n, 0)), x, 2) == BinaryForm::monomial(g - 3, 0));
  }
  const QuadForm q(4, mat2(1, 2, 2, 4));
  RatVector kernel{Rational(2), Rational(-1)};
  CHECK(psi_d(LambdaFunctional(4, kernel), q_to_quadric(q), 2).is_zero());
  for (const WPoly& x : ideal_square_slice(4, 4).basis)
    CHECK(psi_d(LambdaFunctional(4, {Rational(3), Rational(-5)}), x, 4).is_zero());
}

TEST_CASE("limit quadric examples") {
  const QuadricVerdict g3 = is_limit_quadric(QuadForm(3, RatMatrix::identity(1)));
  CHECK_FALSE(g3.degenerate);
  CHECK_FALSE(g3.witness.has_value());

  const QuadricVerdict zero = is_limit_quadric(QuadForm::zero(5));
  CHECK(zero.degenerate);
  CHECK(zero.witness.has_value());

  const QuadricVerdict rank1 = is_limit_quadric(QuadForm(4, mat2(1, 0, 0, 0)));
  CHECK(rank1.degenerate);
  REQUIRE(rank1.witness.has_value());
  CHECK(*rank1.witness == unit_vector(2, 1));

  const QuadricVerdict split = is_limit_quadric(QuadForm(4, mat2(1, 0, 0, -1)));
  CHECK_FALSE(split.degenerate);
  CHECK(split.determinant == -1);
}

TEST_CASE("limit relation examples") {
  for (const WPoly& x : ideal_square_slice(4, 4).basis) {
    const RelationVerdict v = is_limit_relation(x, 4);
    CHECK(v.limit);
    CHECK(v.rank == 0);
  }
  const WPoly xq = q_to_quadric(QuadForm(4, mat2(1, 0, 0, 1)));
  const RelationVerdict v = is_limit_relation(WPoly::u(4, 0) * xq, 3);
  CHECK_FALSE(v.limit);
  CHECK(v.rank == 2);
  CHECK_THROWS_AS(is_limit_relation(WPoly::u(4, 0) * WPoly::u(4, 1), 2), NotInIdealError);
}

TEST_CASE("three-way limit criterion on random quadrics") {
  Sampler s(41);
  for (int g = 3; g <= 6; ++g)
    for (int k = 0; k < 25; ++k) {
      const QuadForm q = s.quad_form(g, k % 2 == 0);
      const bool det_zero = det(q.matrix()) == 0;
      const RelationVerdict rv = is_limit_relation(q_to_quadric(q), 2);
      CHECK(det_zero == rv.limit);
      CHECK(det_zero == is_limit_quadric(q).degenerate);
      if (rv.witness) CHECK(psi_d(LambdaFunctional(g, *rv.witness), q_to_quadric(q), 2).is_zero());
    }
}

TEST_CASE("ribbon slices") {
  const auto e0 = [](int g) { return LambdaFunctional(g, unit_vector(static_cast<std::size_t>(g - 2), 0)); };
  CHECK(ribbon_slice(e0(3), 2).dimension() == 0);
  CHECK(ribbon_slice(LambdaFunctional(3, {Rational(7)}), 2).dimension() == 0);
  // Quadrics x_q with the first row of q zero: only q_11 survives.
  const IdealSlice g4d2 = ribbon_slice(e0(4), 2);
  CHECK(g4d2.dimension() == 1);
  CHECK(g4d2 == make_slice(4, 2, {q_to_quadric(QuadForm::unit(4, 1, 1))}));
  for (int g = 3; g <= 5; ++g)
    for (int d = 2; d <= 4; ++d)
      CHECK(ribbon_slice(e0(g), d).dimension() == ideal_slice(g, d).dimension() - static_cast<std::size_t>((d - 1) * (g - 1) - 1));
  CHECK(ribbon_slice(e0(4), 3).dimension() == 5);
  CHECK_THROWS_AS(LambdaFunctional(4, RatVector(2)), std::invalid_argument);
}

TEST_CASE("surjectivity for d >= 3") {
  for (int g = 4; g <= 6; ++g)
    for (int d = 3; d <= 4; ++d)
      CHECK(rank(phi_on_slice(ideal_slice(g, d))) == static_cast<std::size_t>(g - 2) * conormal_cols(g, d));
}
