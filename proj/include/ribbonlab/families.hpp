#pragma once

// One-parameter families of X_g subschemes over Q[pi]/(pi^N): building
// odd perturbations of hyperelliptic models, rescaling the v variables,
// literal order of a shape, even/odd parts and the discriminant section.

#include "ribbonlab/exact.hpp"
#include "ribbonlab/poly.hpp"
#include "ribbonlab/xg.hpp"

#include <map>
#include <string>
#include <vector>

namespace ribbonlab {

/// Polynomial in the X_g coordinates with coefficients in Q[pi]/(pi^N).
class TruncatedPoly {
 public:
  using Terms = std::map<Monomial, TruncatedScalar>;

  TruncatedPoly(int g, std::size_t order_bound) : g_(g), n_(order_bound) {}
  /// Constant-in-pi lift of a rational polynomial.
  static TruncatedPoly lift(const WPoly& p, std::size_t order_bound);

  int genus() const { return g_; }
  std::size_t order_bound() const { return n_; }
  const Terms& terms() const { return terms_; }

  /// Adds c * pi^k * p.
  void add(const WPoly& p, std::size_t k, const Rational& c = 1);
  void add_term(const Monomial& m, const TruncatedScalar& c);
  /// Coefficient of pi^k as a rational polynomial.
  WPoly digit(std::size_t k) const;
  TruncatedPoly truncated(std::size_t m) const;
  bool is_zero() const { return terms_.empty(); }

  TruncatedPoly operator-(const TruncatedPoly& o) const;
  bool operator==(const TruncatedPoly& o) const = default;

 private:
  int g_;
  std::size_t n_;
  Terms terms_;
};

struct TruncatedFamily {
  int g = kMinGenus;
  std::size_t order_bound = 1;
  std::vector<TruncatedPoly> uu;
  std::vector<TruncatedPoly> uv;
  std::vector<TruncatedPoly> vv;

  const std::vector<TruncatedPoly>& group(GroupTag tag) const;
  std::vector<TruncatedPoly>& group(GroupTag tag);
  /// Digit k of every generator.
  XgIdeal digit(std::size_t k) const;
  XgIdeal special_fiber() const { return digit(0); }
  TruncatedFamily truncated(std::size_t m) const;
  bool operator==(const TruncatedFamily&) const = default;
};

TruncatedFamily constant_family(const XgIdeal& ideal, std::size_t order_bound);

/// UU_e + pi^d ell_e, standard UV, VV of hyperelliptic_model(g, h). Needs N > 2d.
TruncatedFamily perturb_hyperelliptic(int g, const BinaryForm& h, int d, std::size_t order_bound,
                                      const std::vector<WPoly>& odd_direction);

/// v -> pi^(-k) v, then each group rescaled so its binomial part keeps
/// exponent 0. A term of v-degree b in a group of base v-degree B moves
/// from pi^e to pi^(e + k(B - b)). Throws std::domain_error on a negative
/// exponent. The order bound drops by k (k > 0) or 2|k| (k < 0).
TruncatedFamily rescale_v(const TruncatedFamily& family, int k);

/// Largest m <= N with the family mod pi^m literally in canonical ribbon form.
std::size_t ribbon_order(const TruncatedFamily& family);
/// Same for the hyperelliptic form v_i v_j = p_ij(u).
std::size_t hyperell_order(const TruncatedFamily& family);

struct EvenOddParts {
  TruncatedFamily even;
  TruncatedFamily odd;
};

/// Splits F - base under v -> -v with group signs UU +1, UV -1, VV +1.
EvenOddParts even_odd_split(const TruncatedFamily& family, const XgIdeal& base);
/// The involution itself, applied to every group with its sign.
TruncatedFamily involution(const TruncatedFamily& family);

/// The degree 2g+2 form s with -(digit 2d of VV_ij) pulled back equal to
/// x0^(i+j) x1^(2g-6-i-j) s, where 2d is the exact ribbon order.
BinaryForm discriminant_section(const TruncatedFamily& family);

/// Discriminant of a binary form of degree n >= 2: Res(ds/dx0, ds/dx1) / n^(n-2),
/// normalized so x0^2 + x1^2 has discriminant -4.
Rational binary_discriminant(const BinaryForm& s);

/// pi -> pi^2 in every coefficient.
TruncatedFamily ramified(const TruncatedFamily& family);

/// Q-dimension of the degree-delta part of the quotient by the family mod
/// pi^m, for delta = 0..max_degree. Flat in those degrees iff entry delta
/// equals m times the Hilbert function of the special fiber.
std::vector<std::size_t> truncated_quotient_lengths(const TruncatedFamily& family, std::size_t m, int max_degree);
bool is_flat_up_to(const TruncatedFamily& family, std::size_t m, int max_degree);

struct OrderDoublingReport {
  int g = kMinGenus;
  int d = 1;
  std::size_t order_bound = 0;
  std::size_t hyperell_order = 0;
  std::size_t ribbon_order_after_rescale = 0;
  BinaryForm section;
  bool section_matches = false;
  Rational discriminant;
  bool passed = false;
};

/// Builds the perturbation with N = 3d + 1, rescales by d and extracts s.
/// Throws std::invalid_argument for a zero odd direction.
OrderDoublingReport order_doubling_experiment(int g, const BinaryForm& h, int d, const std::vector<WPoly>& odd_direction);

}  // namespace ribbonlab
