#include "ribbonlab/ideal_span.hpp"

#include <algorithm>
#include <stdexcept>

namespace ribbonlab {

GradedIdealSpan::GradedIdealSpan(int g, std::vector<WPoly> generators, Grading grading, int max_degree,
                                 ColumnOrder order)
    : g_(g), grading_(grading), max_degree_(max_degree), order_(order) {
  check_genus(g);
  std::vector<std::vector<WPoly>> gens_by_degree(static_cast<std::size_t>(std::max(max_degree, 0) + 1));
  for (const WPoly& p : generators) {
    if (p.genus() != g) throw std::invalid_argument("generator genus mismatch");
    if (p.is_zero()) continue;
    auto d = p.homogeneous_degree(grading);
    if (!d) throw std::invalid_argument("generator is not homogeneous in the chosen grading: " + p.to_string());
    if (*d <= max_degree) gens_by_degree[static_cast<std::size_t>(*d)].push_back(p);
  }

  pieces_.resize(static_cast<std::size_t>(max_degree + 1));
  for (int delta = 0; delta <= max_degree; ++delta) {
    Piece& piece = pieces_[static_cast<std::size_t>(delta)];
    piece.columns = make_monomial_basis(g, grading, delta).monomials;
    if (order_ == ColumnOrder::v_first) {
      std::stable_sort(piece.columns.begin(), piece.columns.end(),
                       [g](const Monomial& a, const Monomial& b) { return v_degree(a, g) > v_degree(b, g); });
    }
    for (std::size_t i = 0; i < piece.columns.size(); ++i) piece.index.emplace(piece.columns[i], i);
    piece.echelon = SparseEchelon(piece.columns.size());

    for (int var = 0; var < num_vars(g); ++var) {
      const int lower = delta - variable_weight(g, var, grading);
      if (lower < 0) continue;
      const Piece& prev = pieces_[static_cast<std::size_t>(lower)];
      const Monomial x = variable_monomial(var);
      for (const SparseRow& row : prev.echelon.rows()) {
        SparseRow shifted;
        shifted.reserve(row.size());
        for (const auto& [col, c] : row) shifted.emplace_back(piece.index.at(prev.columns[col] * x), c);
        std::sort(shifted.begin(), shifted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        piece.echelon.insert(std::move(shifted));
      }
    }
    for (const WPoly& p : gens_by_degree[static_cast<std::size_t>(delta)]) piece.echelon.insert(to_row(piece, p));
  }
}

SparseRow GradedIdealSpan::to_row(const Piece& piece, const WPoly& p) const {
  SparseRow row;
  for (const auto& [m, c] : p.terms()) {
    auto it = piece.index.find(m);
    if (it == piece.index.end()) throw std::invalid_argument("term outside the graded piece");
    row.emplace_back(it->second, c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::vector<WPoly> GradedIdealSpan::basis(int delta) const {
  const Piece& piece = pieces_.at(static_cast<std::size_t>(delta));
  std::vector<WPoly> out;
  for (const SparseRow& row : piece.echelon.rows()) {
    WPoly p(g_);
    for (const auto& [col, c] : row) p.add_term(piece.columns[col], c);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Monomial> GradedIdealSpan::leading_monomials(int delta) const {
  const Piece& piece = pieces_.at(static_cast<std::size_t>(delta));
  std::vector<Monomial> out;
  for (const SparseRow& row : piece.echelon.rows()) out.push_back(piece.columns[row.front().first]);
  return out;
}

std::vector<WPoly> GradedIdealSpan::u_only_part(int delta) const {
  const Piece& piece = pieces_.at(static_cast<std::size_t>(delta));
  std::vector<WPoly> out;
  for (const SparseRow& row : piece.echelon.rows()) {
    if (v_degree(piece.columns[row.front().first], g_) != 0) continue;
    WPoly p(g_);
    for (const auto& [col, c] : row) p.add_term(piece.columns[col], c);
    out.push_back(std::move(p));
  }
  return out;
}

bool GradedIdealSpan::contains(const WPoly& p) const {
  if (p.is_zero()) return true;
  auto d = p.homogeneous_degree(grading_);
  if (!d || *d > max_degree_) throw std::invalid_argument("membership test outside the computed degrees");
  const Piece& piece = pieces_.at(static_cast<std::size_t>(*d));
  return piece.echelon.reduce(to_row(piece, p)).empty();
}

}  // namespace ribbonlab
