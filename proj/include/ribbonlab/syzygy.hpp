#pragma once

// Syzygies between the generators of an X_g ideal, degree by degree, with
// minimal generators and their coefficient-pattern classification.

#include "ribbonlab/poly.hpp"
#include "ribbonlab/xg.hpp"

#include <string>
#include <vector>

namespace ribbonlab {

/// Which list of schematic shapes a syzygy is checked against.
enum class ShapeFamily {
  split_ribbon,      // u(uu), v(uu)+u(uv), v(uv)+u(vv), v(vv)
  canonical_ribbon,  // u(uu)+(uv), v(uu)+u(uv)+(vv), v(uv)+u(vv), v(vv)
  hyperelliptic,     // u(uu), u(uv)+v(uu), u(vv)+v(uv)+uuu(uu), v(vv)+uuu(uv)+uuv(uu)
};

const char* shape_family_name(ShapeFamily family);

/// How the syzygy spaces are split before extracting minimal generators.
enum class SyzygyBlocks {
  bigraded,  // every generator has a single v-degree
  v_parity,  // every generator has a single v-degree mod 2
  weighted,  // weighted degree only
};

struct SyzygyRecord {
  int degree = 0;
  int block = 0;                    // v-degree, v-parity or 0
  std::vector<WPoly> coefficients;  // one per generator, in XgIdeal::generators() order
  std::string shape;                // e.g. "v(uu)+u(uv)"
  bool matches_schematic = false;
};

struct SyzygyDegree {
  int degree = 0;
  std::size_t kernel_dimension = 0;
  std::size_t decomposable_dimension = 0;
  std::size_t minimal_count = 0;
};

struct SyzygyReport {
  int g = kMinGenus;
  int degree_cap = 0;
  ShapeFamily shapes = ShapeFamily::split_ribbon;
  SyzygyBlocks blocks = SyzygyBlocks::weighted;
  std::vector<SyzygyDegree> degrees;  // one per weighted degree 0..cap
  std::vector<SyzygyRecord> minimal;
  std::vector<int> minimal_degrees;   // sorted, distinct
  bool all_shapes_match = true;
};

SyzygyReport syzygies_by_degree(const XgIdeal& ideal, int degree_cap, ShapeFamily shapes);

/// Pattern label of a coefficient vector against the group tags.
std::string classify_syzygy(const XgIdeal& ideal, const std::vector<WPoly>& coefficients);
bool matches_shape_family(const XgIdeal& ideal, const std::vector<WPoly>& coefficients, ShapeFamily shapes);

/// sum coeff_e * gen_e == 0.
bool is_syzygy(const XgIdeal& ideal, const std::vector<WPoly>& coefficients);

}  // namespace ribbonlab
