#pragma once

// Exact rational scalars, the truncated ring Q[pi]/(pi^N), and dense/sparse
// exact linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ribbonlab {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Raised when an internal algebraic contract is violated (a computation
/// that must succeed by construction did not).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

bool is_zero(const RatVector& v);

/// Divides by the first nonzero entry so that entry becomes 1.
RatVector normalize_leading(RatVector v);

// ---------------------------------------------------------------------------

/// Element of Q[pi]/(pi^N), stored as its N pi-adic digits.
class TruncatedScalar {
 public:
  explicit TruncatedScalar(std::size_t order_bound);
  TruncatedScalar(std::size_t order_bound, const Rational& constant);
  TruncatedScalar(RatVector digits);

  /// pi^k truncated to the given order bound.
  static TruncatedScalar pi_power(std::size_t order_bound, std::size_t k);

  std::size_t order_bound() const { return digits_.size(); }
  const RatVector& digits() const { return digits_; }
  const Rational& operator[](std::size_t k) const { return digits_[k]; }
  Rational& operator[](std::size_t k) { return digits_[k]; }

  bool is_zero() const;
  /// Smallest k with nonzero digit; order_bound() when zero.
  std::size_t valuation() const;

  /// Reduction modulo pi^m, m <= order_bound().
  TruncatedScalar truncated(std::size_t m) const;
  /// Multiplication by pi^k (digits shift up, top digits fall off).
  TruncatedScalar shifted_up(std::size_t k) const;
  /// Exact division by pi^k; the result has order bound N - k. Throws
  /// std::domain_error if some digit below k is nonzero.
  TruncatedScalar shifted_down(std::size_t k) const;
  /// Base change pi -> pi^2 (digit k moves to 2k), order bound 2N - 1.
  TruncatedScalar ramified() const;

  TruncatedScalar& operator+=(const TruncatedScalar& o);
  TruncatedScalar& operator-=(const TruncatedScalar& o);
  TruncatedScalar& operator*=(const Rational& c);
  friend TruncatedScalar operator+(TruncatedScalar a, const TruncatedScalar& b) { return a += b; }
  friend TruncatedScalar operator-(TruncatedScalar a, const TruncatedScalar& b) { return a -= b; }
  friend TruncatedScalar operator*(const TruncatedScalar& a, const TruncatedScalar& b);
  friend TruncatedScalar operator*(TruncatedScalar a, const Rational& c) { return a *= c; }
  TruncatedScalar operator-() const;
  bool operator==(const TruncatedScalar& o) const = default;

 private:
  RatVector digits_;
};

// ---------------------------------------------------------------------------

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix diagonal(const RatVector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  RatVector row_vector(std::size_t r) const;
  RatVector column_vector(std::size_t c) const;

  RatMatrix transposed() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;
  RatVector apply(std::span<const Rational> x) const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  bool operator==(const RatMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row, so results are reproducible.
RowEchelon rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of the right null space, one vector per free column (the free
/// column's coordinate is 1).
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument for
/// non-square input.
Rational det(const RatMatrix& m);

struct LinearSolution {
  enum class Status { unique, non_unique, inconsistent };
  Status status = Status::inconsistent;
  RatVector x;  // one solution (free variables set to 0); empty if inconsistent
};

LinearSolution solve(const RatMatrix& m, std::span<const Rational> b);

/// Nonzero rows of rref(m): a canonical basis of the row space.
RatMatrix row_space_basis(const RatMatrix& m);

// ---------------------------------------------------------------------------

/// Sparse vector with strictly increasing column indices and no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental sparse row echelon form. Each stored row is normalized so
/// its first (leading) column has coefficient 1, and leading columns are
/// distinct. Column order is the caller's priority order: lower index means
/// higher priority.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t num_cols) : num_cols_(num_cols), pivot_of_(num_cols, kNone) {}

  std::size_t num_cols() const { return num_cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  bool is_pivot(std::size_t col) const { return pivot_of_[col] != kNone; }

  /// Reduces the leading term repeatedly and stores the remainder if
  /// nonzero. Returns true if the rank increased.
  bool insert(SparseRow row);

  /// Full reduction: no column of the result is a pivot column.
  SparseRow reduce(SparseRow row) const;

  /// Back-substitutes so every pivot column is zero outside its own row,
  /// giving the canonical reduced echelon basis.
  void fully_reduce();

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t num_cols_;
  std::vector<std::size_t> pivot_of_;
  std::vector<SparseRow> rows_;
};

/// row - c * other, both sorted.
SparseRow sparse_axpy(const SparseRow& row, const Rational& c, const SparseRow& other);
RatVector to_dense(const SparseRow& row, std::size_t n);
SparseRow to_sparse(std::span<const Rational> dense);

}  // namespace ribbonlab
