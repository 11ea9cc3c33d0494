#pragma once

// The rational normal curve C_r in P^{g-1}: its ideal degree by degree,
// the quadrics attached to symmetric tensors, and the square of the ideal.

#include "ribbonlab/exact.hpp"
#include "ribbonlab/poly.hpp"

#include <vector>

namespace ribbonlab {

/// Symmetric (g-2)x(g-2) matrix in the basis x0^i x1^(g-3-i) of
/// H^0(P^1, O(g-3)).
class QuadForm {
 public:
  QuadForm(int g, RatMatrix matrix);
  static QuadForm zero(int g);
  /// e_i (x) e_i for i == j, e_i (x) e_j + e_j (x) e_i otherwise.
  static QuadForm unit(int g, int i, int j);

  int genus() const { return g_; }
  const RatMatrix& matrix() const { return matrix_; }
  bool operator==(const QuadForm&) const = default;

 private:
  int g_;
  RatMatrix matrix_;
};

/// A subspace of H^0(P^{g-1}, O(d)) (u-polynomials of degree d) given by a
/// basis kept in canonical reduced row echelon form over the monomial basis
/// of make_monomial_basis(g, weighted, d, u_only).
struct IdealSlice {
  int g = kMinGenus;
  int degree = 0;
  std::vector<WPoly> basis;

  std::size_t dimension() const { return basis.size(); }
  /// Rows are coordinate vectors of the basis, in rref.
  RatMatrix coordinate_matrix() const;
  bool contains(const WPoly& p) const;
  bool is_subspace_of(const IdealSlice& other) const;
  bool operator==(const IdealSlice& other) const;
};

/// Canonical slice spanned by the given degree-d u-polynomials.
IdealSlice make_slice(int g, int d, const std::vector<WPoly>& spanning);

/// Q(f) = (x0^2 f)(x1^2 f) - (x0 x1 f)^2 extended bilinearly: the basis
/// tensor e_i (x) e_i maps to u_i u_{i+2} - u_{i+1}^2.
WPoly q_to_quadric(const QuadForm& q);

/// Images of the symmetric basis e_i . e_j (i <= j) under q_to_quadric.
std::vector<WPoly> hankel_generators(int g);

/// H^0(P^{g-1}, I_{C_r}(d)), the kernel of the Veronese pullback.
IdealSlice ideal_slice(int g, int d);

/// Degree-d part of I_{C_r}^2; needs d >= 4.
IdealSlice ideal_square_slice(int g, int d);

/// C(g-1+d, d) - (d(g-1)+1).
std::size_t expected_ideal_dimension(int g, int d);

}  // namespace ribbonlab
