#pragma once

// Subschemes of the weighted projective space X_g: the split ribbon,
// ribbons in canonical form, hyperelliptic models y^2 = h, their Hilbert
// functions and the u-only parts of their ideals.

#include "ribbonlab/conormal.hpp"
#include "ribbonlab/exact.hpp"
#include "ribbonlab/poly.hpp"
#include "ribbonlab/rnc.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ribbonlab {

enum class GroupTag { UU, UV, VV };

const char* group_name(GroupTag tag);
/// Weighted degree of the generators in a group: 2, 3, 4.
int group_degree(GroupTag tag);
/// v-degree of the leading (binomial) part: 0, 1, 2.
int group_v_degree(GroupTag tag);

/// Binomial relation x_i y_j - x_k y_l with i + j = k + l. For UU both
/// factors are u; for UV the first factor is u and the second v.
struct PairRelation {
  int i = 0, j = 0, k = 0, l = 0;
  bool operator==(const PairRelation&) const = default;
};

/// For each sum s, every pair i <= j other than the most balanced one,
/// paired with the balanced pair (floor(s/2), ceil(s/2)). Ordered by s, then i.
std::vector<PairRelation> uu_relations(int g);
/// For each sum s, every pair (i, j) paired with the pair of largest u-index.
/// Ordered by s, then i.
std::vector<PairRelation> uv_relations(int g);
/// (i, j) with i <= j over the v-indices.
std::vector<std::pair<int, int>> vv_pairs(int g);

WPoly uu_binomial(int g, const PairRelation& r);
WPoly uv_binomial(int g, const PairRelation& r);

struct XgIdeal {
  int g = kMinGenus;
  std::vector<WPoly> uu;
  std::vector<WPoly> uv;
  std::vector<WPoly> vv;

  const std::vector<WPoly>& group(GroupTag tag) const;
  std::vector<WPoly>& group(GroupTag tag);
  /// UU, then UV, then VV.
  std::vector<WPoly> generators() const;
  std::vector<GroupTag> tags() const;
  std::size_t size() const { return uu.size() + uv.size() + vv.size(); }
  bool operator==(const XgIdeal&) const = default;
};

XgIdeal split_ribbon_ideal(int g);

/// p_ij = quartic_lift(x0^(i+j) x1^(2g-6-i-j) h).
WPoly hyperelliptic_quartic(int g, const BinaryForm& h, int i, int j);
/// Split-ribbon UU and UV with VV_ij = v_i v_j - p_ij(u). h must have degree 2g+2.
XgIdeal hyperelliptic_model(int g, const BinaryForm& h);

/// UU_e = binomial_e - ell[e] with ell[e] a v-linear form, one per entry of
/// uu_relations(g); standard UV and v_i v_j.
XgIdeal canonical_ribbon_ideal(int g, const std::vector<WPoly>& ell);

/// ell_e = psi_2(lambda, UU_e) read as a v-linear form (x0^j x1^(g-3-j) <-> v_j).
std::vector<WPoly> ribbon_ell(const LambdaFunctional& lambda);

/// v_j -> t v_j in every generator.
XgIdeal scale_v(const XgIdeal& ideal, const Rational& t);

/// dim (ring)_delta - dim (ideal)_delta for delta = 0..max_degree.
std::vector<std::size_t> hilbert_function(const XgIdeal& ideal, Grading grading, int max_degree);

/// (2d-1)(g-1) for d >= 2, g for d = 1, 1 for d = 0.
std::size_t expected_ribbon_hilbert(int g, int d);

/// Image of a polynomial under u_i -> x0^i x1^(g-1-i), v_j -> eps x0^j x1^(g-3-j)
/// with eps^2 = 0: the pair (constant part, eps part). p must be
/// weighted-homogeneous (or zero, with the degree given).
std::pair<BinaryForm, BinaryForm> split_ribbon_evaluation(const WPoly& p, std::optional<int> degree = std::nullopt);

/// u-only part of the ideal in degrees 0..max_degree (index = degree).
std::vector<IdealSlice> eliminate_v(const XgIdeal& ideal, int max_degree);

struct LambdaMatch {
  std::size_t solution_dimension = 0;        // dim of { lambda : psi_2(lambda, .) kills the degree-2 slice }
  std::optional<LambdaFunctional> lambda;    // normalized, when the solution space is a line
  bool slices_equal = false;                 // ribbon_slice(lambda, 2) == eliminate_v(., 2)[2]
};

/// Finds lambda with ribbon_slice(lambda, 2) equal to the degree-2 u-only
/// part of a canonical-form ideal.
LambdaMatch match_lambda(const XgIdeal& canonical);

}  // namespace ribbonlab
