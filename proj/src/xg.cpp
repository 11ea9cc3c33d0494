#include "ribbonlab/xg.hpp"

#include "ribbonlab/ideal_span.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbonlab {

const char* group_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::UU: return "UU";
    case GroupTag::UV: return "UV";
    case GroupTag::VV: return "VV";
  }
  return "?";
}

int group_degree(GroupTag tag) { return 2 + static_cast<int>(tag); }
int group_v_degree(GroupTag tag) { return static_cast<int>(tag); }

std::vector<PairRelation> uu_relations(int g) {
  check_genus(g);
  std::vector<PairRelation> out;
  for (int s = 0; s <= 2 * (g - 1); ++s) {
    const int k = s / 2, l = s - s / 2;
    for (int i = std::max(0, s - (g - 1)); i < k; ++i) out.push_back({i, s - i, k, l});
  }
  return out;
}

std::vector<PairRelation> uv_relations(int g) {
  check_genus(g);
  std::vector<PairRelation> out;
  for (int s = 0; s <= (g - 1) + (g - 3); ++s) {
    const int k = std::min(s, g - 1);
    for (int i = std::max(0, s - (g - 3)); i < k; ++i) out.push_back({i, s - i, k, s - k});
  }
  return out;
}

std::vector<std::pair<int, int>> vv_pairs(int g) {
  check_genus(g);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g - 2; ++i)
    for (int j = i; j < g - 2; ++j) out.emplace_back(i, j);
  return out;
}

WPoly uu_binomial(int g, const PairRelation& r) {
  return WPoly::u(g, r.i) * WPoly::u(g, r.j) - WPoly::u(g, r.k) * WPoly::u(g, r.l);
}

WPoly uv_binomial(int g, const PairRelation& r) {
  return WPoly::u(g, r.i) * WPoly::v(g, r.j) - WPoly::u(g, r.k) * WPoly::v(g, r.l);
}

const std::vector<WPoly>& XgIdeal::group(GroupTag tag) const {
  switch (tag) {
    case GroupTag::UU: return uu;
    case GroupTag::UV: return uv;
    case GroupTag::VV: return vv;
  }
  throw std::logic_error("bad group tag");
}

std::vector<WPoly>& XgIdeal::group(GroupTag tag) {
  return const_cast<std::vector<WPoly>&>(static_cast<const XgIdeal&>(*this).group(tag));
}

std::vector<WPoly> XgIdeal::generators() const {
  std::vector<WPoly> out = uu;
  out.insert(out.end(), uv.begin(), uv.end());
  out.insert(out.end(), vv.begin(), vv.end());
  return out;
}

std::vector<GroupTag> XgIdeal::tags() const {
  std::vector<GroupTag> out(uu.size(), GroupTag::UU);
  out.insert(out.end(), uv.size(), GroupTag::UV);
  out.insert(out.end(), vv.size(), GroupTag::VV);
  return out;
}

XgIdeal split_ribbon_ideal(int g) {
  check_genus(g);
  XgIdeal ideal{g, {}, {}, {}};
  for (const PairRelation& r : uu_relations(g)) ideal.uu.push_back(uu_binomial(g, r));
  for (const PairRelation& r : uv_relations(g)) ideal.uv.push_back(uv_binomial(g, r));
  for (const auto& [i, j] : vv_pairs(g)) ideal.vv.push_back(WPoly::v(g, i) * WPoly::v(g, j));
  return ideal;
}

WPoly hyperelliptic_quartic(int g, const BinaryForm& h, int i, int j) {
  if (h.degree() != 2 * g + 2) throw std::invalid_argument("h must have degree 2g+2");
  const BinaryForm shift = BinaryForm::monomial(2 * g - 6, i + j);
  return quartic_lift(shift * h, g);
}

XgIdeal hyperelliptic_model(int g, const BinaryForm& h) {
  check_genus(g);
  if (h.degree() != 2 * g + 2) throw std::invalid_argument("h must have degree 2g+2");
  XgIdeal ideal = split_ribbon_ideal(g);
  const auto pairs = vv_pairs(g);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    ideal.vv[e] -= hyperelliptic_quartic(g, h, pairs[e].first, pairs[e].second);
  }
  return ideal;
}

XgIdeal canonical_ribbon_ideal(int g, const std::vector<WPoly>& ell) {
  check_genus(g);
  XgIdeal ideal = split_ribbon_ideal(g);
  if (ell.size() != ideal.uu.size()) throw std::invalid_argument("need one linear form per UU relation");
  for (std::size_t e = 0; e < ell.size(); ++e) {
    const WPoly& l = ell[e];
    if (l.genus() != g) throw std::invalid_argument("linear form genus mismatch");
    for (const auto& [m, c] : l.terms()) {
      if (u_degree(m, g) != 0 || v_degree(m, g) != 1) throw std::invalid_argument("ell must be linear in v");
    }
    ideal.uu[e] -= l;
  }
  return ideal;
}

std::vector<WPoly> ribbon_ell(const LambdaFunctional& lambda) {
  const int g = lambda.genus();
  std::vector<WPoly> out;
  for (const PairRelation& r : uu_relations(g)) {
    out.push_back(form_to_v_linear(psi_d(lambda, uu_binomial(g, r), 2), g));
  }
  return out;
}

XgIdeal scale_v(const XgIdeal& ideal, const Rational& t) {
  XgIdeal out{ideal.g, {}, {}, {}};
  for (const WPoly& p : ideal.uu) out.uu.push_back(p.scale_v(t));
  for (const WPoly& p : ideal.uv) out.uv.push_back(p.scale_v(t));
  for (const WPoly& p : ideal.vv) out.vv.push_back(p.scale_v(t));
  return out;
}

std::vector<std::size_t> hilbert_function(const XgIdeal& ideal, Grading grading, int max_degree) {
  const GradedIdealSpan span(ideal.g, ideal.generators(), grading, max_degree);
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(span.quotient_dimension(d));
  return out;
}

std::size_t expected_ribbon_hilbert(int g, int d) {
  if (d == 0) return 1;
  if (d == 1) return static_cast<std::size_t>(g);
  return static_cast<std::size_t>((2 * d - 1) * (g - 1));
}

std::pair<BinaryForm, BinaryForm> split_ribbon_evaluation(const WPoly& p, std::optional<int> degree) {
  const int g = p.genus();
  if (!degree) degree = p.homogeneous_degree(Grading::weighted);
  if (!degree) throw std::invalid_argument("evaluation needs a weighted-homogeneous polynomial");
  const int delta = *degree;
  BinaryForm base(delta * (g - 1));
  BinaryForm eps(std::max(0, (delta - 2) * (g - 1) + (g - 3)));
  for (const auto& [m, c] : p.terms()) {
    if (degree_of(m, g, Grading::weighted) != delta) throw std::invalid_argument("polynomial is not homogeneous");
    const int b = v_degree(m, g);
    if (b >= 2) continue;
    int a = 0;
    for (int i = 0; i < g; ++i) a += i * m[i];
    for (int j = 0; j < g - 2; ++j) a += j * m[g + j];
    if (b == 0) {
      base[a] += c;
    } else {
      eps[a] += c;
    }
  }
  return {base, eps};
}

std::vector<IdealSlice> eliminate_v(const XgIdeal& ideal, int max_degree) {
  const GradedIdealSpan span(ideal.g, ideal.generators(), Grading::weighted, max_degree, ColumnOrder::v_first);
  std::vector<IdealSlice> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(make_slice(ideal.g, d, span.u_only_part(d)));
  return out;
}

LambdaMatch match_lambda(const XgIdeal& canonical) {
  const int g = canonical.g;
  const IdealSlice slice = eliminate_v(canonical, 2)[2];
  // psi_2(lambda, x) is linear in lambda: one row per (basis element, coefficient).
  const std::size_t cols = conormal_cols(g, 2);
  RatMatrix system(slice.dimension() * cols, static_cast<std::size_t>(g - 2));
  for (std::size_t k = 0; k < slice.dimension(); ++k) {
    const ConormalMatrix phi = phi_d(slice.basis[k], 2);
    for (std::size_t i = 0; i < phi.matrix.rows(); ++i)
      for (std::size_t a = 0; a < cols; ++a) system(k * cols + a, i) = phi.matrix(i, a);
  }
  const auto kernel = kernel_basis(system);
  LambdaMatch match;
  match.solution_dimension = kernel.size();
  if (kernel.size() == 1) {
    match.lambda = LambdaFunctional(g, kernel.front()).normalized();
    match.slices_equal = ribbon_slice(*match.lambda, 2) == slice;
  }
  return match;
}

}  // namespace ribbonlab
