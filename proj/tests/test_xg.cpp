#include "ribbonlab/conormal.hpp"
#include "ribbonlab/ideal_span.hpp"
#include "ribbonlab/json_io.hpp"
#include "ribbonlab/rnc.hpp"
#include "ribbonlab/sampling.hpp"
#include "ribbonlab/xg.hpp"

#include <doctest.h>

using namespace ribbonlab;

namespace {

WPoly u(int g, int i) { return WPoly::u(g, i); }
WPoly v(int g, int j) { return WPoly::v(g, j); }

// Rank of the evaluation map on the split ribbon in weighted degree d,
// computed from exponents: a monomial with no v goes to x0^(sum i a_i) in
// the reduced part, one with a single v_j goes to eps * x0^(sum i a_i + j),
// and anything with two or more v's vanishes.
std::size_t split_ribbon_image_rank(int g, int d) {
  const MonomialBasis mb = make_monomial_basis(g, Grading::weighted, d);
  const std::size_t reduced = static_cast<std::size_t>(d * (g - 1) + 1);
  const std::size_t eps = d >= 2 ? static_cast<std::size_t>((d - 2) * (g - 1) + g - 2) : 0;
  RatMatrix m(reduced + eps, mb.size());
  for (std::size_t c = 0; c < mb.size(); ++c) {
    const Monomial& mono = mb.monomials[c];
    std::size_t x0 = 0;
    int vdeg = 0;
    for (int i = 0; i < g; ++i) x0 += static_cast<std::size_t>(i) * mono[i];
    for (int j = 0; j < g - 2; ++j) {
      x0 += static_cast<std::size_t>(j) * mono[g + j];
      vdeg += mono[g + j];
    }
    if (vdeg == 0) m(x0, c) = 1;
    if (vdeg == 1) m(reduced + x0, c) = 1;
  }
  return rank(m);
}

std::vector<std::size_t> split_hilbert_values(int g, int max_degree) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(d >= 2 ? static_cast<std::size_t>((2 * d - 1) * (g - 1)) : (d == 0 ? 1u : static_cast<std::size_t>(g)));
  return out;
}

}  // namespace

TEST_CASE("split ribbon presentations") {
  const XgIdeal g3 = split_ribbon_ideal(3);
  CHECK(g3.uu == std::vector<WPoly>{u(3, 0) * u(3, 2) - u(3, 1) * u(3, 1)});
  CHECK(g3.uv.empty());
  CHECK(g3.vv == std::vector<WPoly>{v(3, 0) * v(3, 0)});

  const XgIdeal g4 = split_ribbon_ideal(4);
  CHECK(g4.uu.size() == 3);
  CHECK(g4.vv.size() == 3);
  CHECK(make_slice(4, 2, g4.uu) == ideal_slice(4, 2));
  GradedIdealSpan uv_span(4, g4.uv, Grading::weighted, 3);
  GradedIdealSpan expected(4,
                           {u(4, 0) * v(4, 1) - u(4, 1) * v(4, 0), u(4, 1) * v(4, 1) - u(4, 2) * v(4, 0),
                            u(4, 2) * v(4, 1) - u(4, 3) * v(4, 0)},
                           Grading::weighted, 3);
  CHECK(g4.uv.size() == 3);
  CHECK(uv_span.basis(3) == expected.basis(3));

  CHECK(split_ribbon_ideal(5).vv.size() == 6);
  for (int g = 3; g <= 8; ++g) {
    const XgIdeal x = split_ribbon_ideal(g);
    CHECK(x.uu.size() == static_cast<std::size_t>((g - 1) * (g - 2) / 2));
    CHECK(x.vv.size() == static_cast<std::size_t>((g - 1) * (g - 2) / 2));
    for (GroupTag tag : {GroupTag::UU, GroupTag::UV, GroupTag::VV})
      for (const WPoly& p : x.group(tag)) CHECK(p.homogeneous_degree(Grading::weighted) == group_degree(tag));
  }
}

TEST_CASE("hyperelliptic model example") {
  const BinaryForm h = parse_binary_form("x0^8 + x1^8", 8);
  const XgIdeal model = hyperelliptic_model(3, h);
  const WPoly u0 = u(3, 0), u2 = u(3, 2);
  CHECK(model.vv == std::vector<WPoly>{v(3, 0) * v(3, 0) - u2 * u2 * u2 * u2 - u0 * u0 * u0 * u0});
  CHECK(hyperelliptic_model(4, BinaryForm(10)) == split_ribbon_ideal(4));
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j)
      CHECK(veronese_pullback(hyperelliptic_quartic(4, h * BinaryForm::monomial(2, 1), i, j)) ==
            h * BinaryForm::monomial(2, 1) * BinaryForm::monomial(2 * 4 - 6, i + j));
}

TEST_CASE("canonical ribbon examples") {
  CHECK(canonical_ribbon_ideal(5, std::vector<WPoly>(split_ribbon_ideal(5).uu.size(), WPoly(5))) == split_ribbon_ideal(5));
  const Rational c(5, 3);
  const XgIdeal g3 = canonical_ribbon_ideal(3, {v(3, 0) * c});
  CHECK(g3.uu == std::vector<WPoly>{u(3, 0) * u(3, 2) - u(3, 1) * u(3, 1) - v(3, 0) * c});
  CHECK(g3.vv == std::vector<WPoly>{v(3, 0) * v(3, 0)});
}

TEST_CASE("split ribbon Hilbert function") {
  for (int g = 3; g <= 6; ++g) {
    const auto hf = hilbert_function(split_ribbon_ideal(g), Grading::weighted, 6);
    CHECK(hf == split_hilbert_values(g, 6));
    for (int d = 0; d <= 6; ++d) CHECK(expected_ribbon_hilbert(g, d) == hf[static_cast<std::size_t>(d)]);
  }
  // Frozen values for g = 4 in both gradings.
  CHECK(hilbert_function(split_ribbon_ideal(4), Grading::weighted, 6) == std::vector<std::size_t>{1, 4, 9, 15, 21, 27, 33});
  CHECK(hilbert_function(split_ribbon_ideal(4), Grading::koszul, 4) == std::vector<std::size_t>{1, 6, 12, 18, 24});
}

TEST_CASE("split ribbon ideal equals the kernel of the evaluation map") {
  for (int g = 3; g <= 5; ++g) {
    const XgIdeal ideal = split_ribbon_ideal(g);
    const GradedIdealSpan span(g, ideal.generators(), Grading::weighted, 6);
    for (int d = 0; d <= 6; ++d) {
      CHECK(span.quotient_dimension(d) == split_ribbon_image_rank(g, d));
      for (const WPoly& p : span.basis(d)) {
        const auto [base, eps] = split_ribbon_evaluation(p, d);
        CHECK(base.is_zero());
        CHECK(eps.is_zero());
      }
    }
  }
}

TEST_CASE("hyperelliptic and canonical models share the Hilbert function") {
  for (int g = 3; g <= 5; ++g) {
    Sampler s(100 + static_cast<std::uint64_t>(g));
    const auto expected = split_hilbert_values(g, 6);
    CHECK(hilbert_function(hyperelliptic_model(g, s.squarefree_form(2 * g + 2)), Grading::weighted, 6) == expected);
    CHECK(hilbert_function(canonical_ribbon_ideal(g, ribbon_ell(s.lambda(g))), Grading::weighted, 6) == expected);
  }
}

TEST_CASE("ribbon-compatible directions are read off psi_2") {
  for (int g = 3; g <= 6; ++g) {
    Sampler s(200 + static_cast<std::uint64_t>(g));
    const LambdaFunctional lambda = s.lambda(g);
    const auto ell = ribbon_ell(lambda);
    const XgIdeal split = split_ribbon_ideal(g);
    REQUIRE(ell.size() == split.uu.size());
    for (std::size_t e = 0; e < ell.size(); ++e)
      CHECK(v_linear_to_form(ell[e]) == psi_d(lambda, split.uu[e], 2));
  }
}

TEST_CASE("elimination of v") {
  SUBCASE("g = 3 canonical ribbon is cut out by the square of the conic") {
    const WPoly f = u(3, 0) * u(3, 2) - u(3, 1) * u(3, 1);
    for (const Rational& c : {Rational(1), Rational(-2, 7)}) {
      const auto slices = eliminate_v(canonical_ribbon_ideal(3, {v(3, 0) * c}), 5);
      CHECK(slices[2].dimension() == 0);
      CHECK(slices[3].dimension() == 0);
      CHECK(slices[4] == make_slice(3, 4, {f * f}));
      CHECK(slices[5] == ideal_square_slice(3, 5));
    }
  }
  SUBCASE("split ribbon keeps the whole curve ideal") {
    for (int g = 3; g <= 5; ++g) {
      const auto slices = eliminate_v(split_ribbon_ideal(g), 4);
      for (int d = 2; d <= 4; ++d) CHECK(slices[static_cast<std::size_t>(d)] == ideal_slice(g, d));
    }
  }
  SUBCASE("canonical ribbon slices are ribbon slices") {
    for (int g = 4; g <= 5; ++g) {
      Sampler s(300 + static_cast<std::uint64_t>(g));
      const LambdaFunctional lambda = s.lambda(g);
      const auto slices = eliminate_v(canonical_ribbon_ideal(g, ribbon_ell(lambda)), 3);
      CHECK(slices[2] == ribbon_slice(lambda, 2));
      CHECK(slices[3] == ribbon_slice(lambda, 3));
    }
  }
}

TEST_CASE("lambda matching recovers the functional") {
  for (int g = 4; g <= 6; ++g) {
    Sampler s(400 + static_cast<std::uint64_t>(g));
    const LambdaFunctional lambda = s.lambda(g);
    const LambdaMatch m = match_lambda(canonical_ribbon_ideal(g, ribbon_ell(lambda)));
    CHECK(m.solution_dimension == 1);
    REQUIRE(m.lambda.has_value());
    CHECK(m.lambda->coords() == lambda.normalized().coords());
    CHECK(m.slices_equal);
  }
}

TEST_CASE("rescaling v preserves the Hilbert function") {
  Sampler s(500);
  for (int g = 3; g <= 5; ++g) {
    const XgIdeal ideal = canonical_ribbon_ideal(g, ribbon_ell(s.lambda(g)));
    const XgIdeal scaled = scale_v(ideal, Rational(-3, 2));
    CHECK(hilbert_function(scaled, Grading::weighted, 5) == hilbert_function(ideal, Grading::weighted, 5));
    CHECK(scale_v(scaled, Rational(-2, 3)) == ideal);
  }
}
