#pragma once

// The conormal matrix phi_d of a relation on the rational normal curve, its
// dual pairing psi_d, and the rank/determinant limit criteria.

#include "ribbonlab/exact.hpp"
#include "ribbonlab/poly.hpp"
#include "ribbonlab/rnc.hpp"

#include <optional>
#include <stdexcept>

namespace ribbonlab {

/// Raised when a polynomial handed to phi_d does not vanish on C_r.
class NotInIdealError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (g-2) x ((d-1)(g-1)-1) matrix. Row i is the coefficient c_i of the
/// generator beta_i of the conormal module; column a holds the
/// coefficient of x0^a x1^((d-1)(g-1)-2-a) in c_i.
struct ConormalMatrix {
  int g = kMinGenus;
  int d = 2;
  RatMatrix matrix;

  BinaryForm row_form(std::size_t i) const;
};

std::size_t conormal_cols(int g, int d);

/// Nonzero functional on H^0(P^1, O(g-3)), defined up to scale.
class LambdaFunctional {
 public:
  LambdaFunctional(int g, RatVector coords);
  int genus() const { return g_; }
  const RatVector& coords() const { return coords_; }
  /// Scaled so the first nonzero coordinate is 1.
  LambdaFunctional normalized() const;

 private:
  int g_;
  RatVector coords_;
};

/// dx restricted to C_r written in the beta_i basis. x must be a u-only
/// homogeneous polynomial of degree d >= 2 in the ideal of C_r.
ConormalMatrix phi_d(const WPoly& x);
/// Degree given explicitly (needed when x is zero).
ConormalMatrix phi_d(const WPoly& x, int d);

/// lambda . phi_d(x), a binary form of degree (d-1)(g-1)-2.
BinaryForm psi_d(const LambdaFunctional& lambda, const WPoly& x, int d);

struct QuadricVerdict {
  bool degenerate = false;
  Rational determinant;
  std::optional<RatVector> witness;  // kernel vector, first nonzero entry 1
};

/// Degenerate q (det = 0) <=> the quadric x_q is a limit of canonical
/// quadrics. The zero form counts as degenerate with witness e_0.
QuadricVerdict is_limit_quadric(const QuadForm& q);

struct RelationVerdict {
  bool limit = false;
  std::size_t rank = 0;
  ConormalMatrix phi;
  std::optional<RatVector> witness;  // left kernel vector of phi, normalized
};

/// rank phi_d(x) < g-2.
RelationVerdict is_limit_relation(const WPoly& x, int d);

/// { x in IdealSlice(g, d) : psi_d(lambda, x) = 0 }.
IdealSlice ribbon_slice(const LambdaFunctional& lambda, int d);

/// Linear map IdealSlice(g,d) -> vec(phi_d) as a matrix whose column k is
/// the flattened phi_d of the k-th slice basis element.
RatMatrix phi_on_slice(const IdealSlice& slice);

}  // namespace ribbonlab
