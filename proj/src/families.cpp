#include "ribbonlab/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbonlab {

TruncatedPoly TruncatedPoly::lift(const WPoly& p, std::size_t order_bound) {
  TruncatedPoly out(p.genus(), order_bound);
  out.add(p, 0);
  return out;
}

void TruncatedPoly::add(const WPoly& p, std::size_t k, const Rational& c) {
  if (p.genus() != g_) throw std::invalid_argument("genus mismatch");
  if (k >= n_) return;
  for (const auto& [m, a] : p.terms()) {
    TruncatedScalar s(n_);
    s[k] = a * c;
    add_term(m, s);
  }
}

void TruncatedPoly::add_term(const Monomial& m, const TruncatedScalar& c) {
  if (c.order_bound() != n_) throw std::invalid_argument("order bound mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WPoly TruncatedPoly::digit(std::size_t k) const {
  WPoly p(g_);
  if (k >= n_) return p;
  for (const auto& [m, c] : terms_)
    if (c[k] != 0) p.add_term(m, c[k]);
  return p;
}

TruncatedPoly TruncatedPoly::truncated(std::size_t m) const {
  if (m > n_) throw std::invalid_argument("cannot raise the order bound");
  TruncatedPoly out(g_, m);
  for (const auto& [mono, c] : terms_) {
    TruncatedScalar t = c.truncated(m);
    if (!t.is_zero()) out.terms_.emplace(mono, std::move(t));
  }
  return out;
}

TruncatedPoly TruncatedPoly::operator-(const TruncatedPoly& o) const {
  if (o.n_ != n_ || o.g_ != g_) throw std::invalid_argument("incompatible truncated polynomials");
  TruncatedPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr GroupTag kGroups[] = {GroupTag::UU, GroupTag::UV, GroupTag::VV};

int group_sign(GroupTag tag) { return tag == GroupTag::UV ? -1 : 1; }

void check_matching(const TruncatedFamily& f, const XgIdeal& base) {
  if (f.g != base.g || f.uu.size() != base.uu.size() || f.uv.size() != base.uv.size() || f.vv.size() != base.vv.size()) {
    throw std::invalid_argument("family and base ideal have different shapes");
  }
}

}  // namespace

const std::vector<TruncatedPoly>& TruncatedFamily::group(GroupTag tag) const {
  switch (tag) {
    case GroupTag::UU: return uu;
    case GroupTag::UV: return uv;
    case GroupTag::VV: return vv;
  }
  throw std::logic_error("bad group tag");
}

std::vector<TruncatedPoly>& TruncatedFamily::group(GroupTag tag) {
  return const_cast<std::vector<TruncatedPoly>&>(static_cast<const TruncatedFamily&>(*this).group(tag));
}

XgIdeal TruncatedFamily::digit(std::size_t k) const {
  XgIdeal out{g, {}, {}, {}};
  for (GroupTag tag : kGroups)
    for (const TruncatedPoly& p : group(tag)) out.group(tag).push_back(p.digit(k));
  return out;
}

TruncatedFamily TruncatedFamily::truncated(std::size_t m) const {
  TruncatedFamily out{g, m, {}, {}, {}};
  for (GroupTag tag : kGroups)
    for (const TruncatedPoly& p : group(tag)) out.group(tag).push_back(p.truncated(m));
  return out;
}

TruncatedFamily constant_family(const XgIdeal& ideal, std::size_t order_bound) {
  if (order_bound < 1) throw std::invalid_argument("order bound must be positive");
  TruncatedFamily f{ideal.g, order_bound, {}, {}, {}};
  for (GroupTag tag : kGroups)
    for (const WPoly& p : ideal.group(tag)) f.group(tag).push_back(TruncatedPoly::lift(p, order_bound));
  return f;
}

TruncatedFamily perturb_hyperelliptic(int g, const BinaryForm& h, int d, std::size_t order_bound,
                                      const std::vector<WPoly>& odd_direction) {
  if (d < 1) throw std::invalid_argument("perturbation order d must be positive");
  if (order_bound <= static_cast<std::size_t>(2 * d)) throw std::invalid_argument("need N > 2d");
  const XgIdeal model = hyperelliptic_model(g, h);
  if (odd_direction.size() != model.uu.size()) throw std::invalid_argument("need one linear form per UU relation");
  TruncatedFamily f = constant_family(model, order_bound);
  for (std::size_t e = 0; e < odd_direction.size(); ++e) {
    for (const auto& [m, c] : odd_direction[e].terms()) {
      if (u_degree(m, g) != 0 || v_degree(m, g) != 1) throw std::invalid_argument("odd direction must be linear in v");
    }
    f.uu[e].add(odd_direction[e], static_cast<std::size_t>(d));
  }
  return f;
}

TruncatedFamily rescale_v(const TruncatedFamily& family, int k) {
  if (k == 0) return family;
  const long n = static_cast<long>(family.order_bound);
  const long drop = k > 0 ? k : -2L * k;
  if (drop >= n) throw std::domain_error("rescaling exhausts the truncation order");
  const std::size_t n_new = static_cast<std::size_t>(n - drop);
  TruncatedFamily out{family.g, n_new, {}, {}, {}};
  for (GroupTag tag : kGroups) {
    const int base = group_v_degree(tag);
    for (const TruncatedPoly& p : family.group(tag)) {
      TruncatedPoly q(family.g, n_new);
      for (const auto& [m, c] : p.terms()) {
        const long shift = static_cast<long>(k) * (base - v_degree(m, family.g));
        TruncatedScalar s(n_new);
        for (long e = 0; e < n; ++e) {
          if (c[static_cast<std::size_t>(e)] == 0) continue;
          const long target = e + shift;
          if (target < 0) throw std::domain_error("inexact division: the family does not admit this rescaling");
          if (target < static_cast<long>(n_new)) s[static_cast<std::size_t>(target)] = c[static_cast<std::size_t>(e)];
        }
        q.add_term(m, s);
      }
      out.group(tag).push_back(std::move(q));
    }
  }
  return out;
}

namespace {

// First pi-exponent at which a digit breaks the shape; N if none.
template <class Violates>
std::size_t first_violation(const TruncatedFamily& f, const XgIdeal& base, Violates violates) {
  check_matching(f, base);
  std::size_t order = f.order_bound;
  for (GroupTag tag : kGroups) {
    const auto& polys = f.group(tag);
    for (std::size_t e = 0; e < polys.size(); ++e) {
      const WPoly& b = base.group(tag)[e];
      std::map<Monomial, TruncatedScalar> terms = polys[e].terms();
      for (const auto& [m, c] : b.terms()) terms.try_emplace(m, TruncatedScalar(f.order_bound));
      for (const auto& [m, c] : terms) {
        const Rational base_coeff = b.coefficient(m);
        for (std::size_t k = 0; k < order; ++k) {
          const Rational expected = k == 0 ? base_coeff : Rational(0);
          if (c[k] != expected && violates(tag, m, k)) {
            order = k;
            break;
          }
        }
      }
    }
  }
  return order;
}

}  // namespace

std::size_t ribbon_order(const TruncatedFamily& family) {
  const int g = family.g;
  const XgIdeal base = split_ribbon_ideal(g);
  // Free: v-linear terms of UU.
  return first_violation(family, base, [g](GroupTag tag, const Monomial& m, std::size_t) {
    return !(tag == GroupTag::UU && v_degree(m, g) == 1);
  });
}

std::size_t hyperell_order(const TruncatedFamily& family) {
  const int g = family.g;
  const XgIdeal base = split_ribbon_ideal(g);
  // Free: u-only terms of VV.
  return first_violation(family, base, [g](GroupTag tag, const Monomial& m, std::size_t) {
    return !(tag == GroupTag::VV && v_degree(m, g) == 0);
  });
}

TruncatedFamily involution(const TruncatedFamily& family) {
  TruncatedFamily out{family.g, family.order_bound, {}, {}, {}};
  for (GroupTag tag : kGroups)
    for (const TruncatedPoly& p : family.group(tag)) {
      TruncatedPoly q(family.g, family.order_bound);
      for (const auto& [m, c] : p.terms()) {
        const int sign = group_sign(tag) * (v_degree(m, family.g) % 2 == 0 ? 1 : -1);
        q.add_term(m, sign == 1 ? c : -c);
      }
      out.group(tag).push_back(std::move(q));
    }
  return out;
}

EvenOddParts even_odd_split(const TruncatedFamily& family, const XgIdeal& base) {
  check_matching(family, base);
  const std::size_t n = family.order_bound;
  EvenOddParts parts{{family.g, n, {}, {}, {}}, {family.g, n, {}, {}, {}}};
  for (GroupTag tag : kGroups) {
    const auto& polys = family.group(tag);
    for (std::size_t e = 0; e < polys.size(); ++e) {
      const TruncatedPoly diff = polys[e] - TruncatedPoly::lift(base.group(tag)[e], n);
      if (!diff.digit(0).is_zero()) throw std::invalid_argument("family does not reduce to the base ideal mod pi");
      TruncatedPoly even(family.g, n), odd(family.g, n);
      for (const auto& [m, c] : diff.terms()) {
        const int sign = group_sign(tag) * (v_degree(m, family.g) % 2 == 0 ? 1 : -1);
        (sign == 1 ? even : odd).add_term(m, c);
      }
      parts.even.group(tag).push_back(std::move(even));
      parts.odd.group(tag).push_back(std::move(odd));
    }
  }
  return parts;
}

BinaryForm discriminant_section(const TruncatedFamily& family) {
  const int g = family.g;
  const std::size_t order = ribbon_order(family);
  if (order >= family.order_bound) throw std::invalid_argument("family is a ribbon to the truncation order; no section");
  if (order % 2 != 0 || order == 0) throw std::invalid_argument("ribbon order is not of the form 2d with d >= 1");
  const auto pairs = vv_pairs(g);
  std::optional<BinaryForm> common;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    const WPoly p = -family.vv[e].digit(order);
    if (p.involves_v()) throw std::invalid_argument("VV correction involves v; family not in normalized form");
    const auto [i, j] = pairs[e];
    const BinaryForm pulled = veronese_pullback(p, 4);
    auto q = pulled.divide_by_monomial(i + j, 2 * g - 6 - i - j);
    if (!q) throw std::invalid_argument("VV correction is not divisible by its monomial factor");
    if (common && *common != *q) throw std::invalid_argument("VV corrections give inconsistent sections");
    common = *q;
  }
  if (!common || common->degree() != 2 * g + 2) throw ContractError("section has the wrong degree");
  return *common;
}

Rational binary_discriminant(const BinaryForm& s) {
  if (s.is_zero()) throw std::invalid_argument("discriminant of the zero form");
  const int n = s.degree();
  if (n < 2) throw std::invalid_argument("discriminant needs degree at least 2");
  const BinaryForm f = s.d_x0(), h = s.d_x1();
  const int p = n - 1, q = n - 1;
  RatMatrix syl(static_cast<std::size_t>(p + q), static_cast<std::size_t>(p + q));
  for (int i = 0; i < q; ++i)
    for (int a = 0; a <= p; ++a) syl(static_cast<std::size_t>(i), static_cast<std::size_t>(i + a)) = f[p - a];
  for (int i = 0; i < p; ++i)
    for (int a = 0; a <= q; ++a) syl(static_cast<std::size_t>(q + i), static_cast<std::size_t>(i + a)) = h[q - a];
  Rational res = det(syl);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
  res /= Rational(scale);
  if ((n * (n - 1) / 2) % 2 != 0) res = -res;
  return res;
}

TruncatedFamily ramified(const TruncatedFamily& family) {
  const std::size_t n = 2 * family.order_bound - 1;
  TruncatedFamily out{family.g, n, {}, {}, {}};
  for (GroupTag tag : kGroups)
    for (const TruncatedPoly& p : family.group(tag)) {
      TruncatedPoly q(family.g, n);
      for (const auto& [m, c] : p.terms()) q.add_term(m, c.ramified());
      out.group(tag).push_back(std::move(q));
    }
  return out;
}

std::vector<std::size_t> truncated_quotient_lengths(const TruncatedFamily& family, std::size_t m, int max_degree) {
  if (m < 1 || m > family.order_bound) throw std::invalid_argument("truncation level out of range");
  const int g = family.g;
  std::vector<std::pair<int, const TruncatedPoly*>> gens;
  for (GroupTag tag : kGroups)
    for (const TruncatedPoly& p : family.group(tag)) gens.emplace_back(group_degree(tag), &p);

  std::vector<std::size_t> out;
  for (int delta = 0; delta <= max_degree; ++delta) {
    const MonomialBasis cols = make_monomial_basis(g, Grading::weighted, delta);
    SparseEchelon echelon(cols.size() * m);
    for (const auto& [deg, p] : gens) {
      if (deg > delta) continue;
      for (const Monomial& mu : make_monomial_basis(g, Grading::weighted, delta - deg).monomials) {
        for (std::size_t j = 0; j < m; ++j) {
          SparseRow row;
          for (const auto& [mono, c] : p->terms()) {
            const std::size_t base = *cols.index_of(mono * mu) * m;
            for (std::size_t k = 0; k + j < m; ++k)
              if (c[k] != 0) row.emplace_back(base + k + j, c[k]);
          }
          if (row.empty()) continue;
          std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          echelon.insert(std::move(row));
        }
      }
    }
    out.push_back(cols.size() * m - echelon.rank());
  }
  return out;
}

bool is_flat_up_to(const TruncatedFamily& family, std::size_t m, int max_degree) {
  const auto fiber = hilbert_function(family.special_fiber(), Grading::weighted, max_degree);
  const auto lengths = truncated_quotient_lengths(family, m, max_degree);
  for (int d = 0; d <= max_degree; ++d)
    if (lengths[static_cast<std::size_t>(d)] != m * fiber[static_cast<std::size_t>(d)]) return false;
  return true;
}

OrderDoublingReport order_doubling_experiment(int g, const BinaryForm& h, int d, const std::vector<WPoly>& odd_direction) {
  bool nonzero = false;
  for (const WPoly& l : odd_direction) nonzero = nonzero || !l.is_zero();
  if (!nonzero) throw std::invalid_argument("odd direction must be nonzero");
  OrderDoublingReport r;
  r.g = g;
  r.d = d;
  r.order_bound = static_cast<std::size_t>(3 * d + 1);
  const TruncatedFamily f = perturb_hyperelliptic(g, h, d, r.order_bound, odd_direction);
  r.hyperell_order = hyperell_order(f);
  const TruncatedFamily rescaled = rescale_v(f, d);
  r.ribbon_order_after_rescale = ribbon_order(rescaled);
  r.section = discriminant_section(rescaled);
  r.section_matches = r.section == h;
  r.discriminant = binary_discriminant(h);
  r.passed = r.hyperell_order == static_cast<std::size_t>(d) &&
             r.ribbon_order_after_rescale == static_cast<std::size_t>(2 * d) && r.section_matches;
  return r;
}

}  // namespace ribbonlab
