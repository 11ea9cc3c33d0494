#include "ribbonlab/conormal.hpp"

#include <stdexcept>

namespace ribbonlab {

std::size_t conormal_cols(int g, int d) { return static_cast<std::size_t>((d - 1) * (g - 1) - 1); }

BinaryForm ConormalMatrix::row_form(std::size_t i) const {
  const RatVector r = matrix.row_vector(i);
  return BinaryForm(static_cast<int>(r.size()) - 1, r);
}

LambdaFunctional::LambdaFunctional(int g, RatVector coords) : g_(g), coords_(std::move(coords)) {
  check_genus(g);
  if (coords_.size() != static_cast<std::size_t>(g - 2)) throw std::invalid_argument("lambda needs g-2 coordinates");
  if (is_zero(coords_)) throw std::invalid_argument("lambda must be nonzero");
}

LambdaFunctional LambdaFunctional::normalized() const { return LambdaFunctional(g_, normalize_leading(coords_)); }

ConormalMatrix phi_d(const WPoly& x) {
  auto d = x.homogeneous_degree(Grading::weighted);
  if (!d) throw std::invalid_argument("phi_d needs a nonzero homogeneous polynomial (or an explicit degree)");
  return phi_d(x, *d);
}

ConormalMatrix phi_d(const WPoly& x, int d) {
  const int g = x.genus();
  if (d < 2) throw std::invalid_argument("phi_d needs degree d >= 2");
  if (x.involves_v()) throw std::invalid_argument("phi_d needs a u-only polynomial");
  if (!x.is_zero() && x.homogeneous_degree(Grading::weighted) != d) {
    throw std::invalid_argument("polynomial is not homogeneous of the declared degree");
  }
  if (!veronese_pullback(x, d).is_zero()) throw NotInIdealError("not a canonical relation: polynomial does not vanish on C_r");

  const int w_deg = (d - 1) * (g - 1);
  const int c_deg = w_deg - 2;
  std::vector<BinaryForm> w;
  w.reserve(static_cast<std::size_t>(g));
  for (int j = 0; j < g; ++j) w.push_back(veronese_pullback(partial(x, u_var(j)), d - 1));

  // w_j = x0^2 c_j - 2 x0 x1 c_{j-1} + x1^2 c_{j-2}, c_j = 0 outside [0, g-3].
  // Triangular in j: solve for c_j from w_j, then w_{g-2}, w_{g-1} must be
  // consistent.
  const BinaryForm x0x1 = BinaryForm::monomial(2, 1);
  const BinaryForm x1sq = BinaryForm::monomial(2, 0);
  std::vector<BinaryForm> c;
  auto rest = [&](int j) {
    BinaryForm r = w[static_cast<std::size_t>(j)];
    if (j - 1 >= 0 && j - 1 <= g - 3) r += x0x1 * c[static_cast<std::size_t>(j - 1)] * Rational(2);
    if (j - 2 >= 0 && j - 2 <= g - 3) r -= x1sq * c[static_cast<std::size_t>(j - 2)];
    return r;
  };
  for (int j = 0; j <= g - 3; ++j) {
    auto q = rest(j).divide_by_monomial(2, 0);
    if (!q || q->degree() != c_deg) throw ContractError("phi_d: conormal system is inconsistent");
    c.push_back(std::move(*q));
  }
  for (int j = g - 2; j < g; ++j) {
    if (!rest(j).is_zero()) throw ContractError("phi_d: conormal system is inconsistent");
  }

  ConormalMatrix out{g, d, RatMatrix(static_cast<std::size_t>(g - 2), static_cast<std::size_t>(c_deg + 1))};
  for (int i = 0; i <= g - 3; ++i)
    for (int a = 0; a <= c_deg; ++a) out.matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(a)) = c[static_cast<std::size_t>(i)][a];
  return out;
}

BinaryForm psi_d(const LambdaFunctional& lambda, const WPoly& x, int d) {
  if (lambda.genus() != x.genus()) throw std::invalid_argument("genus mismatch");
  const ConormalMatrix phi = phi_d(x, d);
  BinaryForm out(static_cast<int>(phi.matrix.cols()) - 1);
  for (std::size_t i = 0; i < phi.matrix.rows(); ++i) {
    if (lambda.coords()[i] != 0) out += phi.row_form(i) * lambda.coords()[i];
  }
  return out;
}

QuadricVerdict is_limit_quadric(const QuadForm& q) {
  QuadricVerdict v;
  v.determinant = det(q.matrix());
  v.degenerate = v.determinant == 0;
  if (v.degenerate) {
    const auto kernel = kernel_basis(q.matrix());
    if (kernel.empty()) throw ContractError("singular matrix with trivial kernel");
    v.witness = normalize_leading(kernel.front());
  }
  return v;
}

RelationVerdict is_limit_relation(const WPoly& x, int d) {
  RelationVerdict v;
  v.phi = phi_d(x, d);
  v.rank = rank(v.phi.matrix);
  v.limit = v.rank < static_cast<std::size_t>(x.genus() - 2);
  if (v.limit) {
    const auto left = kernel_basis(v.phi.matrix.transposed());
    if (left.empty()) throw ContractError("rank-deficient matrix with trivial left kernel");
    v.witness = normalize_leading(left.front());
  }
  return v;
}

RatMatrix phi_on_slice(const IdealSlice& slice) {
  const std::size_t rows = static_cast<std::size_t>(slice.g - 2);
  const std::size_t cols = conormal_cols(slice.g, slice.degree);
  RatMatrix m(rows * cols, slice.dimension());
  for (std::size_t k = 0; k < slice.dimension(); ++k) {
    const ConormalMatrix phi = phi_d(slice.basis[k], slice.degree);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r * cols + c, k) = phi.matrix(r, c);
  }
  return m;
}

IdealSlice ribbon_slice(const LambdaFunctional& lambda, int d) {
  const int g = lambda.genus();
  if (d < 2) throw std::invalid_argument("ribbon slice needs d >= 2");
  const IdealSlice slice = ideal_slice(g, d);
  const std::size_t cols = conormal_cols(g, d);
  RatMatrix m(cols, slice.dimension());
  for (std::size_t k = 0; k < slice.dimension(); ++k) {
    const BinaryForm f = psi_d(lambda, slice.basis[k], d);
    for (std::size_t a = 0; a < cols; ++a) m(a, k) = f[static_cast<int>(a)];
  }
  std::vector<WPoly> members;
  for (const RatVector& coeffs : kernel_basis(m)) {
    WPoly x(g);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) x += slice.basis[k] * coeffs[k];
    members.push_back(std::move(x));
  }
  return make_slice(g, d, members);
}

}  // namespace ribbonlab
