#include "ribbonlab/syzygy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ribbonlab {

const char* shape_family_name(ShapeFamily family) {
  switch (family) {
    case ShapeFamily::split_ribbon: return "split-ribbon";
    case ShapeFamily::canonical_ribbon: return "canonical-ribbon";
    case ShapeFamily::hyperelliptic: return "hyperelliptic";
  }
  return "?";
}

namespace {

using Pattern = std::map<GroupTag, std::set<std::string>>;

std::string monomial_type(const Monomial& m, int g) {
  const int a = u_degree(m, g), b = v_degree(m, g);
  if (a + b == 0) return "1";
  return std::string(static_cast<std::size_t>(a), 'u') + std::string(static_cast<std::size_t>(b), 'v');
}

Pattern pattern_of(const XgIdeal& ideal, const std::vector<WPoly>& coefficients) {
  const auto tags = ideal.tags();
  if (coefficients.size() != tags.size()) throw std::invalid_argument("one coefficient per generator expected");
  Pattern p;
  for (std::size_t e = 0; e < tags.size(); ++e)
    for (const auto& [m, c] : coefficients[e].terms()) p[tags[e]].insert(monomial_type(m, ideal.g));
  return p;
}

const std::vector<Pattern>& shape_list(ShapeFamily family) {
  using G = GroupTag;
  static const std::vector<Pattern> split = {
      {{G::UU, {"u"}}},
      {{G::UU, {"v"}}, {G::UV, {"u"}}},
      {{G::UV, {"v"}}, {G::VV, {"u"}}},
      {{G::VV, {"v"}}},
  };
  static const std::vector<Pattern> canonical = {
      {{G::UU, {"u"}}, {G::UV, {"1"}}},
      {{G::UU, {"v"}}, {G::UV, {"u"}}, {G::VV, {"1"}}},
      {{G::UV, {"v"}}, {G::VV, {"u"}}},
      {{G::VV, {"v"}}},
  };
  static const std::vector<Pattern> hyper = {
      {{G::UU, {"u"}}},
      {{G::UU, {"v"}}, {G::UV, {"u"}}},
      {{G::UU, {"uuu"}}, {G::UV, {"v"}}, {G::VV, {"u"}}},
      {{G::UU, {"uuv"}}, {G::UV, {"uuu"}}, {G::VV, {"v"}}},
  };
  switch (family) {
    case ShapeFamily::split_ribbon: return split;
    case ShapeFamily::canonical_ribbon: return canonical;
    case ShapeFamily::hyperelliptic: return hyper;
  }
  return split;
}

bool fits(const Pattern& p, const Pattern& shape) {
  for (const auto& [tag, types] : p) {
    auto it = shape.find(tag);
    if (it == shape.end()) return false;
    if (!std::includes(it->second.begin(), it->second.end(), types.begin(), types.end())) return false;
  }
  return true;
}

std::string lower_group(GroupTag tag) {
  switch (tag) {
    case GroupTag::UU: return "uu";
    case GroupTag::UV: return "uv";
    case GroupTag::VV: return "vv";
  }
  return "?";
}

using Column = std::pair<std::size_t, Monomial>;  // (generator, multiplier)

struct Block {
  std::vector<Column> columns;
  std::map<Column, std::size_t> index;
  std::vector<SparseRow> kernel;
};

}  // namespace

std::string classify_syzygy(const XgIdeal& ideal, const std::vector<WPoly>& coefficients) {
  std::string label;
  for (const auto& [tag, types] : pattern_of(ideal, coefficients)) {
    if (!label.empty()) label += "+";
    std::string joined;
    for (const std::string& t : types) joined += (joined.empty() ? "" : "|") + t;
    label += (joined == "1" ? "" : joined) + "(" + lower_group(tag) + ")";
  }
  return label.empty() ? "0" : label;
}

bool matches_shape_family(const XgIdeal& ideal, const std::vector<WPoly>& coefficients, ShapeFamily shapes) {
  const Pattern p = pattern_of(ideal, coefficients);
  for (const Pattern& shape : shape_list(shapes))
    if (fits(p, shape)) return true;
  return false;
}

bool is_syzygy(const XgIdeal& ideal, const std::vector<WPoly>& coefficients) {
  const auto gens = ideal.generators();
  if (coefficients.size() != gens.size()) return false;
  WPoly sum(ideal.g);
  for (std::size_t e = 0; e < gens.size(); ++e) sum += coefficients[e] * gens[e];
  return sum.is_zero();
}

SyzygyReport syzygies_by_degree(const XgIdeal& ideal, int degree_cap, ShapeFamily shapes) {
  const int g = ideal.g;
  const std::vector<WPoly> gens = ideal.generators();
  SyzygyReport report;
  report.g = g;
  report.degree_cap = degree_cap;
  report.shapes = shapes;

  std::vector<int> gen_degree, gen_vdeg;
  bool single_vdeg = true, single_parity = true;
  for (const WPoly& p : gens) {
    auto d = p.homogeneous_degree(Grading::weighted);
    if (!d) throw std::invalid_argument("generators must be weighted-homogeneous and nonzero");
    gen_degree.push_back(*d);
    std::set<int> vdegs;
    for (const auto& [m, c] : p.terms()) vdegs.insert(v_degree(m, g));
    single_vdeg = single_vdeg && vdegs.size() == 1;
    std::set<int> parities;
    for (int b : vdegs) parities.insert(b % 2);
    single_parity = single_parity && parities.size() == 1;
    gen_vdeg.push_back(*vdegs.begin());
  }
  report.blocks = single_vdeg ? SyzygyBlocks::bigraded : single_parity ? SyzygyBlocks::v_parity : SyzygyBlocks::weighted;

  auto block_of = [&](int vdeg) {
    switch (report.blocks) {
      case SyzygyBlocks::bigraded: return vdeg;
      case SyzygyBlocks::v_parity: return vdeg % 2;
      case SyzygyBlocks::weighted: return 0;
    }
    return 0;
  };

  std::map<std::pair<int, int>, Block> store;
  std::set<int> min_degrees;

  for (int delta = 0; delta <= degree_cap; ++delta) {
    SyzygyDegree summary;
    summary.degree = delta;
    const MonomialBasis rows = make_monomial_basis(g, Grading::weighted, delta);

    std::map<int, Block> blocks;
    for (std::size_t e = 0; e < gens.size(); ++e) {
      const int rest = delta - gen_degree[e];
      if (rest < 0) continue;
      for (const Monomial& m : make_monomial_basis(g, Grading::weighted, rest).monomials) {
        Block& blk = blocks[block_of(v_degree(m, g) + gen_vdeg[e])];
        blk.index.emplace(Column{e, m}, blk.columns.size());
        blk.columns.emplace_back(e, m);
      }
    }

    for (auto& [b, blk] : blocks) {
      RatMatrix map(rows.size(), blk.columns.size());
      for (std::size_t c = 0; c < blk.columns.size(); ++c) {
        const auto& [e, m] = blk.columns[c];
        for (const auto& [mm, coef] : gens[e].terms()) map(*rows.index_of(mm * m), c) += coef;
      }
      for (const RatVector& k : kernel_basis(map)) blk.kernel.push_back(to_sparse(k));
      summary.kernel_dimension += blk.kernel.size();

      SparseEchelon echelon(blk.columns.size());
      for (int var = 0; var < num_vars(g); ++var) {
        const int w = variable_weight(g, var, Grading::weighted);
        if (delta - w < 0) continue;
        const int vx = var >= g ? 1 : 0;
        int lower_block = 0;
        if (report.blocks == SyzygyBlocks::bigraded) {
          lower_block = b - vx;
        } else if (report.blocks == SyzygyBlocks::v_parity) {
          lower_block = (b + vx) % 2;
        }
        auto it = store.find({delta - w, lower_block});
        if (it == store.end()) continue;
        const Monomial x = variable_monomial(var);
        for (const SparseRow& row : it->second.kernel) {
          SparseRow shifted;
          for (const auto& [col, c] : row) {
            const auto& [e, m] = it->second.columns[col];
            shifted.emplace_back(blk.index.at(Column{e, m * x}), c);
          }
          std::sort(shifted.begin(), shifted.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
          echelon.insert(std::move(shifted));
        }
      }
      summary.decomposable_dimension += echelon.rank();

      for (const SparseRow& k : blk.kernel) {
        SparseRow r = echelon.reduce(k);
        if (r.empty()) continue;
        echelon.insert(r);
        SyzygyRecord rec;
        rec.degree = delta;
        rec.block = b;
        rec.coefficients.assign(gens.size(), WPoly(g));
        for (const auto& [col, c] : r) {
          const auto& [e, m] = blk.columns[col];
          rec.coefficients[e].add_term(m, c);
        }
        rec.shape = classify_syzygy(ideal, rec.coefficients);
        rec.matches_schematic = matches_shape_family(ideal, rec.coefficients, shapes);
        report.all_shapes_match = report.all_shapes_match && rec.matches_schematic;
        report.minimal.push_back(std::move(rec));
        ++summary.minimal_count;
        min_degrees.insert(delta);
      }
      store[{delta, b}] = std::move(blk);
    }
    report.degrees.push_back(summary);
  }
  report.minimal_degrees.assign(min_degrees.begin(), min_degrees.end());
  return report;
}

}  // namespace ribbonlab
