#pragma once

// Degree-by-degree span of a homogeneous ideal in the X_g coordinate ring:
// I_delta is built as the span of x * I_{delta - deg x} plus the generators
// of degree delta, kept in sparse echelon form.

#include "ribbonlab/exact.hpp"
#include "ribbonlab/poly.hpp"

#include <unordered_map>
#include <vector>

namespace ribbonlab {

enum class ColumnOrder {
  lex,      // decreasing lex order, largest variable v_{g-3} first
  v_first,  // larger v-degree first, then lex; pivots in u-only columns span I ∩ k[u]
};

class GradedIdealSpan {
 public:
  /// Every generator must be homogeneous in the chosen grading.
  GradedIdealSpan(int g, std::vector<WPoly> generators, Grading grading, int max_degree,
                  ColumnOrder order = ColumnOrder::lex);

  int genus() const { return g_; }
  int max_degree() const { return max_degree_; }
  Grading grading() const { return grading_; }

  /// Monomials of degree delta in column order.
  const std::vector<Monomial>& columns(int delta) const { return pieces_.at(static_cast<std::size_t>(delta)).columns; }
  std::size_t ring_dimension(int delta) const { return columns(delta).size(); }
  std::size_t ideal_dimension(int delta) const { return pieces_.at(static_cast<std::size_t>(delta)).echelon.rank(); }
  std::size_t quotient_dimension(int delta) const { return ring_dimension(delta) - ideal_dimension(delta); }

  /// Basis of I_delta (echelon rows) as polynomials.
  std::vector<WPoly> basis(int delta) const;
  /// Leading monomials of the echelon rows: the degree-delta part of the
  /// initial ideal for the column order.
  std::vector<Monomial> leading_monomials(int delta) const;
  /// Echelon rows whose leading monomial is u-only (only meaningful with
  /// ColumnOrder::v_first): a basis of I_delta ∩ k[u].
  std::vector<WPoly> u_only_part(int delta) const;

  bool contains(const WPoly& p) const;

 private:
  struct Piece {
    std::vector<Monomial> columns;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    SparseEchelon echelon{0};
  };

  SparseRow to_row(const Piece& piece, const WPoly& p) const;

  int g_;
  Grading grading_;
  int max_degree_;
  ColumnOrder order_;
  std::vector<Piece> pieces_;
};

}  // namespace ribbonlab
