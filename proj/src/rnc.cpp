#include "ribbonlab/rnc.hpp"

#include <stdexcept>

namespace ribbonlab {

QuadForm::QuadForm(int g, RatMatrix matrix) : g_(g), matrix_(std::move(matrix)) {
  check_genus(g);
  const auto n = static_cast<std::size_t>(g - 2);
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("quadratic form must be a (g-2)x(g-2) matrix");
  }
  if (!matrix_.is_symmetric()) throw std::invalid_argument("quadratic form must be symmetric");
}

QuadForm QuadForm::zero(int g) { return QuadForm(g, RatMatrix(static_cast<std::size_t>(g - 2), static_cast<std::size_t>(g - 2))); }

QuadForm QuadForm::unit(int g, int i, int j) {
  RatMatrix m(static_cast<std::size_t>(g - 2), static_cast<std::size_t>(g - 2));
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = 1;
  return QuadForm(g, std::move(m));
}

// ---------------------------------------------------------------------------

RatMatrix IdealSlice::coordinate_matrix() const {
  const MonomialBasis mb = make_monomial_basis(g, Grading::weighted, degree, VariableSet::u_only);
  RatMatrix m(basis.size(), mb.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const RatVector c = mb.coordinates(basis[r]);
    std::copy(c.begin(), c.end(), m.row(r).begin());
  }
  return m;
}

bool IdealSlice::contains(const WPoly& p) const {
  if (p.is_zero()) return true;
  std::vector<WPoly> spanning = basis;
  spanning.push_back(p);
  return make_slice(g, degree, spanning).dimension() == dimension();
}

bool IdealSlice::is_subspace_of(const IdealSlice& other) const {
  if (g != other.g || degree != other.degree) return false;
  std::vector<WPoly> spanning = other.basis;
  spanning.insert(spanning.end(), basis.begin(), basis.end());
  return make_slice(g, degree, spanning).dimension() == other.dimension();
}

bool IdealSlice::operator==(const IdealSlice& other) const {
  return g == other.g && degree == other.degree && coordinate_matrix() == other.coordinate_matrix();
}

IdealSlice make_slice(int g, int d, const std::vector<WPoly>& spanning) {
  const MonomialBasis mb = make_monomial_basis(g, Grading::weighted, d, VariableSet::u_only);
  RatMatrix m(spanning.size(), mb.size());
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    const RatVector c = mb.coordinates(spanning[r]);
    std::copy(c.begin(), c.end(), m.row(r).begin());
  }
  const RatMatrix rows = row_space_basis(m);
  IdealSlice s{g, d, {}};
  for (std::size_t r = 0; r < rows.rows(); ++r) s.basis.push_back(mb.polynomial(rows.row(r)));
  return s;
}

// ---------------------------------------------------------------------------

namespace {

// B(e_i, e_j) = 1/2 (u_{i+2} u_j + u_{j+2} u_i) - u_{i+1} u_{j+1}
WPoly polarized_q(int g, int i, int j) {
  const Rational half(1, 2);
  return (WPoly::u(g, i + 2) * WPoly::u(g, j) + WPoly::u(g, j + 2) * WPoly::u(g, i)) * half -
         WPoly::u(g, i + 1) * WPoly::u(g, j + 1);
}

}  // namespace

WPoly q_to_quadric(const QuadForm& q) {
  const int g = q.genus();
  WPoly x(g);
  for (int i = 0; i < g - 2; ++i)
    for (int j = 0; j < g - 2; ++j) {
      const Rational& c = q.matrix()(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (c != 0) x += polarized_q(g, i, j) * c;
    }
  return x;
}

std::vector<WPoly> hankel_generators(int g) {
  check_genus(g);
  std::vector<WPoly> gens;
  for (int i = 0; i < g - 2; ++i)
    for (int j = i; j < g - 2; ++j) gens.push_back(q_to_quadric(QuadForm::unit(g, i, j)));
  return gens;
}

std::size_t expected_ideal_dimension(int g, int d) {
  // C(g-1+d, d)
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(g - 1 + d), static_cast<unsigned long>(d));
  return binom.get_ui() - static_cast<std::size_t>(d * (g - 1) + 1);
}

IdealSlice ideal_slice(int g, int d) {
  check_genus(g);
  if (d < 1) throw std::invalid_argument("ideal slice degree must be at least 1");
  const MonomialBasis mb = make_monomial_basis(g, Grading::weighted, d, VariableSet::u_only);
  const int target = d * (g - 1);
  RatMatrix eval(static_cast<std::size_t>(target + 1), mb.size());
  for (std::size_t c = 0; c < mb.size(); ++c) {
    int a = 0;
    for (int i = 0; i < g; ++i) a += i * mb.monomials[c][i];
    eval(static_cast<std::size_t>(a), c) = 1;
  }
  std::vector<WPoly> kernel;
  for (const RatVector& v : kernel_basis(eval)) kernel.push_back(mb.polynomial(v));
  return make_slice(g, d, kernel);
}

IdealSlice ideal_square_slice(int g, int d) {
  check_genus(g);
  if (d < 4) throw std::invalid_argument("the square of the ideal starts in degree 4");
  const std::vector<WPoly> gens = hankel_generators(g);
  const MonomialBasis mult = make_monomial_basis(g, Grading::weighted, d - 4, VariableSet::u_only);
  std::vector<WPoly> spanning;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      const WPoly prod = gens[a] * gens[b];
      for (const Monomial& m : mult.monomials) spanning.push_back(prod.times_monomial(m));
    }
  return make_slice(g, d, spanning);
}

}  // namespace ribbonlab
