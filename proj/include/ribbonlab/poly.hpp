#pragma once

// Binary forms in (x0, x1) and polynomials in the coordinates of the
// weighted projective space X_g: u_0..u_{g-1} of weight 1 and
// v_0..v_{g-3} of weight 2.

#include "ribbonlab/exact.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ribbonlab {

inline constexpr int kMinGenus = 3;
inline constexpr int kMaxGenus = 10;
inline constexpr int kMaxVars = 2 * kMaxGenus - 2;

void check_genus(int g);

/// Homogeneous polynomial of degree m in x0, x1; coeffs[a] multiplies
/// x0^a x1^(m-a).
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(int degree);
  BinaryForm(int degree, RatVector coeffs);
  /// c * x0^a x1^(degree-a)
  static BinaryForm monomial(int degree, int a, const Rational& c = 1);

  int degree() const { return degree_; }
  const RatVector& coeffs() const { return coeffs_; }
  const Rational& operator[](int a) const { return coeffs_[static_cast<std::size_t>(a)]; }
  Rational& operator[](int a) { return coeffs_[static_cast<std::size_t>(a)]; }
  bool is_zero() const { return ribbonlab::is_zero(coeffs_); }

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm& operator*=(const Rational& c);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const Rational& c) { return a *= c; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  bool operator==(const BinaryForm& o) const = default;

  /// Exact division by x0^a x1^b, or nullopt if not divisible.
  std::optional<BinaryForm> divide_by_monomial(int a, int b) const;
  /// Partial derivatives.
  BinaryForm d_x0() const;
  BinaryForm d_x1() const;

  std::string to_string() const;

 private:
  int degree_ = 0;
  RatVector coeffs_{RatVector(1)};
};

enum class Grading {
  weighted,  // deg u = 1, deg v = 2
  koszul,    // deg u = deg v = 1
};

/// Exponent vector over u_0..u_{g-1}, v_0..v_{g-3} (index g + j is v_j).
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  std::uint8_t& operator[](int i) { return exp[static_cast<std::size_t>(i)]; }
  std::uint8_t operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / this, assuming divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

inline int num_vars(int g) { return 2 * g - 2; }
inline int u_var(int i) { return i; }
inline int v_var(int g, int j) { return g + j; }
int variable_weight(int g, int var, Grading grading);
int degree_of(const Monomial& m, int g, Grading grading);
int u_degree(const Monomial& m, int g);
int v_degree(const Monomial& m, int g);
Monomial variable_monomial(int var);
std::string monomial_to_string(const Monomial& m, int g);

/// Polynomial over Q in the X_g coordinates. Terms with zero coefficient
/// are never stored.
class WPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit WPoly(int g = kMinGenus);
  static WPoly constant(int g, const Rational& c);
  static WPoly u(int g, int i);
  static WPoly v(int g, int j);
  static WPoly term(int g, const Monomial& m, const Rational& c = 1);

  int genus() const { return g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  /// The common degree of all terms, or nullopt if the polynomial is zero
  /// or not homogeneous.
  std::optional<int> homogeneous_degree(Grading grading) const;
  bool involves_v() const;

  WPoly& operator+=(const WPoly& o);
  WPoly& operator-=(const WPoly& o);
  WPoly& operator*=(const Rational& c);
  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator*(WPoly a, const Rational& c) { return a *= c; }
  friend WPoly operator*(const Rational& c, WPoly a) { return a *= c; }
  friend WPoly operator*(const WPoly& a, const WPoly& b);
  WPoly operator-() const;
  WPoly times_monomial(const Monomial& m, const Rational& c = 1) const;
  bool operator==(const WPoly& o) const = default;

  /// Substitutes v_j -> t * v_j.
  WPoly scale_v(const Rational& t) const;

  std::string to_string() const;

 private:
  int g_;
  Terms terms_;
};

/// Formal partial derivative with respect to variable index var.
WPoly partial(const WPoly& p, int var);

/// iota^*: u_i -> x0^i x1^(g-1-i). Requires a u-only weighted-homogeneous
/// polynomial; the zero polynomial needs an explicit degree.
BinaryForm veronese_pullback(const WPoly& p, std::optional<int> degree = std::nullopt);

/// Degree-4 u-polynomial P with veronese_pullback(P) = f, via the greedy
/// split of each exponent k into a_1 >= a_2 >= ... taken as
/// a_t = min(g-1, k - sum of previous).
WPoly quartic_lift(const BinaryForm& f, int g);

/// Substitutes v_j -> x0^j x1^(g-3-j) in a v-linear form (no u terms).
BinaryForm v_linear_to_form(const WPoly& l);
/// Inverse of v_linear_to_form.
WPoly form_to_v_linear(const BinaryForm& f, int g);

enum class VariableSet { all, u_only };

/// All monomials of one degree, ordered by decreasing lexicographic order
/// with the variable order u_0 < ... < u_{g-1} < v_0 < ... < v_{g-3}.
/// Within one graded piece this is the graded-lex order.
struct MonomialBasis {
  int g = kMinGenus;
  Grading grading = Grading::weighted;
  int degree = 0;
  VariableSet variables = VariableSet::all;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  RatVector coordinates(const WPoly& p) const;
  WPoly polynomial(std::span<const Rational> coords) const;
  SparseRow sparse_coordinates(const WPoly& p) const;
  WPoly polynomial(const SparseRow& coords) const;

 private:
  friend MonomialBasis make_monomial_basis(int, Grading, int, VariableSet);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

MonomialBasis make_monomial_basis(int g, Grading grading, int degree, VariableSet vars = VariableSet::all);

/// Lexicographic comparison with the largest variable v_{g-3} compared
/// first: returns <0, 0, >0.
int compare_lex(const Monomial& a, const Monomial& b, int g);

}  // namespace ribbonlab
