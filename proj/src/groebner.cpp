#include "ribbonlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace ribbonlab {

const char* order_name(MonomialOrder order) {
  return order == MonomialOrder::graded_lex ? "graded-lex" : "graded-revlex";
}

int compare(const OrderSpec& spec, const Monomial& a, const Monomial& b) {
  const int da = degree_of(a, spec.g, spec.grading), db = degree_of(b, spec.g, spec.grading);
  if (da != db) return da < db ? -1 : 1;
  const int n = num_vars(spec.g);
  if (spec.order == MonomialOrder::graded_lex) {
    for (int var = n - 1; var >= 0; --var)
      if (a[var] != b[var]) return a[var] < b[var] ? -1 : 1;
  } else {
    for (int var = 0; var < n; ++var)
      if (a[var] != b[var]) return a[var] > b[var] ? -1 : 1;
  }
  return 0;
}

namespace {

struct Descending {
  const OrderSpec* spec;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(*spec, a, b) > 0; }
};

using Sorted = std::map<Monomial, Rational, Descending>;

Sorted sorted(const OrderSpec& spec, const WPoly& p) {
  Sorted s(Descending{&spec});
  for (const auto& [m, c] : p.terms()) s.emplace(m, c);
  return s;
}

void axpy(Sorted& p, const Rational& c, const Monomial& shift, const Sorted& q) {
  for (const auto& [m, a] : q) {
    const Monomial mm = m * shift;
    auto [it, inserted] = p.emplace(mm, c * a);
    if (!inserted) {
      it->second += c * a;
      if (it->second == 0) p.erase(it);
    }
  }
}

WPoly to_poly(int g, const Sorted& s) {
  WPoly p(g);
  for (const auto& [m, c] : s) p.add_term(m, c);
  return p;
}

struct Reducer {
  const OrderSpec& spec;
  std::vector<Sorted> basis;
  std::vector<Monomial> leads;

  void add(const Sorted& p) {
    Sorted monic = p;
    const Rational lc = monic.begin()->second;
    for (auto& [m, c] : monic) c /= lc;
    leads.push_back(monic.begin()->first);
    basis.push_back(std::move(monic));
  }

  Sorted reduce(Sorted p) const {
    Sorted rest(Descending{&spec});
    while (!p.empty()) {
      const auto [m, c] = *p.begin();
      std::size_t k = 0;
      while (k < leads.size() && !leads[k].divides(m)) ++k;
      if (k == leads.size()) {
        rest.emplace(m, c);
        p.erase(p.begin());
      } else {
        axpy(p, -c, leads[k].quotient_of(m), basis[k]);
      }
    }
    return rest;
  }

  Sorted s_poly(std::size_t a, std::size_t b) const {
    const Monomial l = leads[a].lcm(leads[b]);
    Sorted s(Descending{&spec});
    axpy(s, 1, leads[a].quotient_of(l), basis[a]);
    axpy(s, -1, leads[b].quotient_of(l), basis[b]);
    return s;
  }
};

}  // namespace

Monomial leading_monomial(const OrderSpec& spec, const WPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  return sorted(spec, p).begin()->first;
}

WPoly normal_form(const OrderSpec& spec, const WPoly& p, const std::vector<WPoly>& basis) {
  Reducer r{spec, {}, {}};
  for (const WPoly& b : basis)
    if (!b.is_zero()) r.add(sorted(spec, b));
  return to_poly(p.genus(), r.reduce(sorted(spec, p)));
}

GroebnerResult buchberger(const XgIdeal& ideal, MonomialOrder order, int degree_cap, Grading grading) {
  GroebnerResult res;
  res.spec = OrderSpec{ideal.g, order, grading};
  res.degree_cap = degree_cap;
  const OrderSpec& spec = res.spec;
  const int g = ideal.g;

  Reducer r{spec, {}, {}};
  for (const WPoly& p : ideal.generators())
    if (!p.is_zero()) r.add(sorted(spec, p));
  const std::size_t n_input = r.basis.size();

  // Certificate over all input pairs, without the cap.
  for (std::size_t a = 0; a < n_input; ++a)
    for (std::size_t b = a + 1; b < n_input; ++b) {
      ++res.input_pairs;
      if (r.leads[a].coprime(r.leads[b])) continue;
      if (!r.reduce(r.s_poly(a, b)).empty()) ++res.nonzero_input_remainders;
    }
  res.input_is_groebner = res.nonzero_input_remainders == 0;

  // Completion, processing pairs by weighted degree of the lcm.
  using Pair = std::tuple<int, std::size_t, std::size_t>;
  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t b) {
    for (std::size_t a = 0; a < b; ++a) {
      if (r.leads[a].coprime(r.leads[b])) continue;
      queue.emplace_back(degree_of(r.leads[a].lcm(r.leads[b]), g, Grading::weighted), a, b);
    }
  };
  for (std::size_t b = 1; b < n_input; ++b) push_pairs(b);
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end());
    const auto [deg, a, b] = *it;
    queue.erase(it);
    if (deg > degree_cap) {
      ++res.pairs_beyond_cap;
      continue;
    }
    ++res.pairs_reduced;
    Sorted rem = r.reduce(r.s_poly(a, b));
    if (rem.empty()) continue;
    r.add(rem);
    push_pairs(r.basis.size() - 1);
  }

  for (const Sorted& s : r.basis) res.basis.push_back(to_poly(g, s));
  res.leading = r.leads;
  return res;
}

std::vector<Monomial> normal_monomials(const GroebnerResult& gb, Grading grading, int degree) {
  std::vector<Monomial> out;
  for (const Monomial& m : make_monomial_basis(gb.spec.g, grading, degree).monomials) {
    bool divisible = false;
    for (const Monomial& l : gb.leading)
      if (l.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
  }
  return out;
}

std::vector<std::size_t> normal_monomial_counts(const GroebnerResult& gb, int max_degree) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(normal_monomials(gb, Grading::weighted, d).size());
  return out;
}

}  // namespace ribbonlab
