#pragma once

// Buchberger completion with a degree cap, for ideals of X_g.

#include "ribbonlab/poly.hpp"
#include "ribbonlab/xg.hpp"

#include <string>
#include <vector>

namespace ribbonlab {

/// Degree first (in the chosen grading), ties broken by lex (largest
/// variable v_{g-3} compared first) or reverse lex (smallest variable u_0
/// compared first, smaller exponent wins).
enum class MonomialOrder { graded_lex, graded_revlex };

const char* order_name(MonomialOrder order);

struct OrderSpec {
  int g = kMinGenus;
  MonomialOrder order = MonomialOrder::graded_lex;
  Grading grading = Grading::koszul;
};

/// <0, 0, >0.
int compare(const OrderSpec& spec, const Monomial& a, const Monomial& b);
Monomial leading_monomial(const OrderSpec& spec, const WPoly& p);
/// Full reduction of p by the basis.
WPoly normal_form(const OrderSpec& spec, const WPoly& p, const std::vector<WPoly>& basis);

struct GroebnerResult {
  OrderSpec spec;
  int degree_cap = 0;               // on the weighted degree of S-pair lcms
  std::vector<WPoly> basis;         // monic, input first then additions
  std::vector<Monomial> leading;
  bool input_is_groebner = false;   // every S-pair of the input reduces to 0
  std::size_t input_pairs = 0;
  std::size_t nonzero_input_remainders = 0;
  std::size_t pairs_reduced = 0;
  std::size_t pairs_beyond_cap = 0;
};

GroebnerResult buchberger(const XgIdeal& ideal, MonomialOrder order, int degree_cap,
                          Grading grading = Grading::koszul);

/// Monomials of weighted degree delta (0..max_degree) divisible by no
/// leading monomial.
std::vector<std::size_t> normal_monomial_counts(const GroebnerResult& gb, int max_degree);
std::vector<Monomial> normal_monomials(const GroebnerResult& gb, Grading grading, int degree);

}  // namespace ribbonlab
