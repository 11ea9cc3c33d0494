#pragma once

// Matrices of linear forms in formal variables z_1..z_m, exact symbolic
// maximal minors, and the check that those minors reach every monomial of
// degree r.

#include "ribbonlab/exact.hpp"

#include <map>
#include <string>
#include <vector>

namespace ribbonlab {

/// Exponent vector in z (length m) -> coefficient.
using ZPoly = std::map<std::vector<int>, Rational>;

std::string zpoly_to_string(const ZPoly& p);
std::string zmonomial_to_string(const std::vector<int>& exponents);

struct LinFormMatrix {
  std::size_t m = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RatVector> entries;  // row-major, each entry a length-m vector
  std::vector<std::string> column_labels;

  const RatVector& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  RatVector& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

LinFormMatrix make_linform_matrix(std::size_t m, std::size_t rows, std::size_t cols);

/// m x m(m+1)/2. Column for z_a z_b (a < b) is z_b e_a + z_a e_b; for z_a^2
/// it is z_a e_a. Columns in lex order of (a, b), a <= b.
LinFormMatrix phi2_symbolic(std::size_t m);
/// r x rm, blocks z_a * identity_r.
LinFormMatrix phid_symbolic_blocks(std::size_t m, std::size_t r);

/// Exact determinant of the square submatrix on the given columns (all rows).
ZPoly symbolic_minor(const LinFormMatrix& matrix, const std::vector<std::size_t>& columns);

enum class FittingMode { phi2, blocks };
const char* fitting_mode_name(FittingMode mode);

struct MinorWitness {
  std::vector<int> monomial;
  std::vector<std::size_t> columns;  // ascending
  ZPoly minor;
  int sign = 0;                      // +1 / -1 when minor = sign * monomial, else 0
};

/// Column selection realizing the monomial and its exact minor. Throws
/// ContractError if the determinant is not +- the monomial.
MinorWitness minor_for_monomial(const LinFormMatrix& matrix, FittingMode mode, const std::vector<int>& monomial);

struct PowerIdealReport {
  std::size_t m = 0;
  std::size_t r = 0;
  FittingMode mode = FittingMode::phi2;
  std::size_t monomials_checked = 0;
  bool all_realized = false;
  std::vector<MinorWitness> witnesses;
};

/// All exponent vectors of length m and total degree r, in lex order.
std::vector<std::vector<int>> monomials_of_degree(std::size_t m, std::size_t r);

PowerIdealReport verify_power_ideal(std::size_t m, std::size_t r, FittingMode mode);

}  // namespace ribbonlab
