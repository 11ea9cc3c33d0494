#include "ribbonlab/fitting.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace ribbonlab {

std::string zmonomial_to_string(const std::vector<int>& exponents) {
  std::string s;
  for (std::size_t a = 0; a < exponents.size(); ++a) {
    if (exponents[a] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(a + 1);
    if (exponents[a] > 1) s += "^" + std::to_string(exponents[a]);
  }
  return s.empty() ? "1" : s;
}

std::string zpoly_to_string(const ZPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  // Largest exponent vector first.
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const Rational& c = it->second;
    std::string term;
    const std::string mono = zmonomial_to_string(it->first);
    if (c == 1) {
      term = mono;
    } else if (c == -1) {
      term = "-" + mono;
    } else {
      term = to_string(c) + (mono == "1" ? "" : "*" + mono);
    }
    if (!s.empty() && term.front() != '-') s += "+";
    s += term;
  }
  return s;
}

LinFormMatrix make_linform_matrix(std::size_t m, std::size_t rows, std::size_t cols) {
  LinFormMatrix mat;
  mat.m = m;
  mat.rows = rows;
  mat.cols = cols;
  mat.entries.assign(rows * cols, RatVector(m));
  mat.column_labels.resize(cols);
  return mat;
}

LinFormMatrix phi2_symbolic(std::size_t m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  LinFormMatrix mat = make_linform_matrix(m, m, m * (m + 1) / 2);
  std::size_t c = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b, ++c) {
      if (a == b) {
        mat.at(a, c)[a] = 1;
        mat.column_labels[c] = "z" + std::to_string(a + 1) + "^2";
      } else {
        mat.at(a, c)[b] = 1;
        mat.at(b, c)[a] = 1;
        mat.column_labels[c] = "z" + std::to_string(a + 1) + "*z" + std::to_string(b + 1);
      }
    }
  return mat;
}

LinFormMatrix phid_symbolic_blocks(std::size_t m, std::size_t r) {
  if (m < 1 || r < 1) throw std::invalid_argument("m and r must be at least 1");
  LinFormMatrix mat = make_linform_matrix(m, r, r * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t k = 0; k < r; ++k) {
      mat.at(k, a * r + k)[a] = 1;
      mat.column_labels[a * r + k] = "z" + std::to_string(a + 1) + ".e" + std::to_string(k + 1);
    }
  return mat;
}

namespace {

void add_scaled_product(ZPoly& out, const RatVector& linear, const ZPoly& p, const Rational& sign) {
  for (std::size_t a = 0; a < linear.size(); ++a) {
    if (linear[a] == 0) continue;
    for (const auto& [e, c] : p) {
      std::vector<int> ee = e;
      ++ee[a];
      Rational& slot = out[ee];
      slot += sign * linear[a] * c;
      if (slot == 0) out.erase(ee);
    }
  }
}

}  // namespace

ZPoly symbolic_minor(const LinFormMatrix& matrix, const std::vector<std::size_t>& columns) {
  const std::size_t n = columns.size();
  if (n != matrix.rows) throw std::invalid_argument("minor needs as many columns as rows");
  if (n > 24) throw std::invalid_argument("minor too large");
  // det of rows k..n-1 on the columns outside the mask, k = popcount(mask).
  std::unordered_map<std::uint32_t, ZPoly> memo;
  const std::uint32_t full = n == 0 ? 0u : ((1u << n) - 1u);
  std::function<const ZPoly&(std::uint32_t)> rec = [&](std::uint32_t mask) -> const ZPoly& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    ZPoly result;
    if (mask == full) {
      result[std::vector<int>(matrix.m, 0)] = 1;
    } else {
      const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
      int parity = 0;  // number of free columns to the left
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (1u << j)) continue;
        const RatVector& entry = matrix.at(row, columns[j]);
        if (!is_zero(entry)) {
          const ZPoly& sub = rec(mask | (1u << j));
          if (!sub.empty()) add_scaled_product(result, entry, sub, parity % 2 == 0 ? Rational(1) : Rational(-1));
        }
        ++parity;
      }
    }
    return memo.emplace(mask, std::move(result)).first->second;
  };
  return rec(0);
}

const char* fitting_mode_name(FittingMode mode) { return mode == FittingMode::phi2 ? "phi2" : "blocks"; }

std::vector<std::vector<int>> monomials_of_degree(std::size_t m, std::size_t r) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(m, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t a, int left) {
    if (a + 1 == m) {
      e[a] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[a] = k;
      fill(a + 1, left - k);
    }
  };
  if (m > 0) fill(0, static_cast<int>(r));
  return out;
}

namespace {

std::vector<std::size_t> phi2_columns(std::size_t m, const std::vector<int>& alpha) {
  auto col_index = [m](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    // columns (a, a..m-1) for all earlier rows come first
    return a * m - a * (a - 1) / 2 + (b - a);
  };
  std::vector<std::size_t> support, rest;
  for (std::size_t a = 0; a < m; ++a) (alpha[a] > 0 ? support : rest).push_back(a);
  std::vector<std::size_t> cols;
  std::size_t next = 0;
  for (std::size_t i : support) {
    cols.push_back(col_index(i, i));
    for (int t = 1; t < alpha[i]; ++t) {
      if (next >= rest.size()) throw ContractError("partition of the complement failed");
      cols.push_back(col_index(i, rest[next++]));
    }
  }
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::vector<std::size_t> block_columns(std::size_t r, const std::vector<int>& alpha) {
  std::vector<std::size_t> cols;
  std::size_t row = 0;
  for (std::size_t a = 0; a < alpha.size(); ++a)
    for (int t = 0; t < alpha[a]; ++t, ++row) cols.push_back(a * r + row);
  std::sort(cols.begin(), cols.end());
  return cols;
}

MinorWitness witness_for(const LinFormMatrix& matrix, FittingMode mode, const std::vector<int>& alpha) {
  if (alpha.size() != matrix.m) throw std::invalid_argument("monomial has the wrong number of variables");
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    total += a;
  }
  if (static_cast<std::size_t>(total) != matrix.rows) throw std::invalid_argument("monomial degree must equal the number of rows");
  MinorWitness w;
  w.monomial = alpha;
  w.columns = mode == FittingMode::phi2 ? phi2_columns(matrix.m, alpha) : block_columns(matrix.rows, alpha);
  w.minor = symbolic_minor(matrix, w.columns);
  if (w.minor.size() == 1 && w.minor.begin()->first == alpha) {
    const Rational& c = w.minor.begin()->second;
    if (c == 1) w.sign = 1;
    if (c == -1) w.sign = -1;
  }
  return w;
}

}  // namespace

MinorWitness minor_for_monomial(const LinFormMatrix& matrix, FittingMode mode, const std::vector<int>& monomial) {
  MinorWitness w = witness_for(matrix, mode, monomial);
  if (w.sign == 0) {
    throw ContractError("selected minor is " + zpoly_to_string(w.minor) + ", not +-" + zmonomial_to_string(monomial));
  }
  return w;
}

PowerIdealReport verify_power_ideal(std::size_t m, std::size_t r, FittingMode mode) {
  if (mode == FittingMode::phi2 && r != m) throw std::invalid_argument("phi2 mode needs r = m");
  const LinFormMatrix matrix = mode == FittingMode::phi2 ? phi2_symbolic(m) : phid_symbolic_blocks(m, r);
  PowerIdealReport report;
  report.m = m;
  report.r = r;
  report.mode = mode;
  report.all_realized = true;
  for (const auto& alpha : monomials_of_degree(m, r)) {
    MinorWitness w = witness_for(matrix, mode, alpha);
    report.all_realized = report.all_realized && w.sign != 0;
    report.witnesses.push_back(std::move(w));
    ++report.monomials_checked;
  }
  return report;
}

}  // namespace ribbonlab
