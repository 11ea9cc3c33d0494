#include "ribbonlab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ribbonlab {

void check_genus(int g) {
  if (g < kMinGenus || g > kMaxGenus) {
    throw std::invalid_argument("genus must lie in [" + std::to_string(kMinGenus) + ", " +
                                std::to_string(kMaxGenus) + "], got " + std::to_string(g));
  }
}

// ---------------------------------------------------------------------------
// BinaryForm

BinaryForm::BinaryForm(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(degree + 1)) {
  if (degree < 0) throw std::invalid_argument("binary form degree must be nonnegative");
}

BinaryForm::BinaryForm(int degree, RatVector coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree + 1)) {
    throw std::invalid_argument("binary form needs degree+1 coefficients");
  }
}

BinaryForm BinaryForm::monomial(int degree, int a, const Rational& c) {
  BinaryForm f(degree);
  if (a < 0 || a > degree) throw std::invalid_argument("monomial exponent out of range");
  f[a] = c;
  return f;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("adding binary forms of different degrees");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("subtracting binary forms of different degrees");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm p(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= b.degree_; ++j)
      if (b[j] != 0) p[i + j] += a[i] * b[j];
  }
  return p;
}

std::optional<BinaryForm> BinaryForm::divide_by_monomial(int a, int b) const {
  if (a < 0 || b < 0 || a + b > degree_) return std::nullopt;
  BinaryForm q(degree_ - a - b);
  for (int k = 0; k <= degree_; ++k) {
    const bool inside = k >= a && k - a <= q.degree();
    if (!inside) {
      if ((*this)[k] != 0) return std::nullopt;
      continue;
    }
    q[k - a] = (*this)[k];
  }
  return q;
}

BinaryForm BinaryForm::d_x0() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm d(degree_ - 1);
  for (int a = 1; a <= degree_; ++a) d[a - 1] = (*this)[a] * a;
  return d;
}

BinaryForm BinaryForm::d_x1() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm d(degree_ - 1);
  for (int a = 0; a < degree_; ++a) d[a] = (*this)[a] * (degree_ - a);
  return d;
}

namespace {

// Appends "c*mono" in the text syntax accepted by the parsers, with signs
// written as binary operators and unit coefficients dropped.
void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& mono) {
  const bool negative = sgn(c) < 0;
  const Rational mag = abs(c);
  if (first) os << (negative ? "-" : "");
  else os << (negative ? " - " : " + ");
  first = false;
  if (mono.empty()) {
    os << to_string(mag);
  } else if (mag == 1) {
    os << mono;
  } else {
    os << to_string(mag) << "*" << mono;
  }
}

}  // namespace

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int a = degree_; a >= 0; --a) {
    const Rational& c = (*this)[a];
    if (c == 0) continue;
    std::string mono;
    if (a > 0) mono += "x0" + (a > 1 ? "^" + std::to_string(a) : std::string());
    const int b = degree_ - a;
    if (b > 0) mono += (mono.empty() ? "" : "*") + std::string("x1") + (b > 1 ? "^" + std::to_string(b) : std::string());
    append_term(os, first, c, mono);
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Monomials

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] + o.exp[i]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = static_cast<std::uint8_t>(o.exp[i] - exp[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = std::max(exp[i], o.exp[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] != 0 && o.exp[i] != 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int variable_weight(int g, int var, Grading grading) {
  if (var < g) return 1;
  return grading == Grading::weighted ? 2 : 1;
}

int u_degree(const Monomial& m, int g) {
  int d = 0;
  for (int i = 0; i < g; ++i) d += m[i];
  return d;
}

int v_degree(const Monomial& m, int g) {
  int d = 0;
  for (int j = 0; j < g - 2; ++j) d += m[g + j];
  return d;
}

int degree_of(const Monomial& m, int g, Grading grading) {
  const int vd = v_degree(m, g);
  return u_degree(m, g) + (grading == Grading::weighted ? 2 * vd : vd);
}

Monomial variable_monomial(int var) {
  Monomial m;
  m[var] = 1;
  return m;
}

std::string monomial_to_string(const Monomial& m, int g) {
  std::ostringstream os;
  bool first = true;
  for (int var = 0; var < num_vars(g); ++var) {
    if (m[var] == 0) continue;
    if (!first) os << "*";
    first = false;
    if (var < g) {
      os << "u" << var;
    } else {
      os << "v" << var - g;
    }
    if (m[var] > 1) os << "^" << static_cast<int>(m[var]);
  }
  if (first) os << "1";
  return os.str();
}

int compare_lex(const Monomial& a, const Monomial& b, int g) {
  for (int var = num_vars(g) - 1; var >= 0; --var) {
    if (a[var] != b[var]) return a[var] > b[var] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// WPoly

WPoly::WPoly(int g) : g_(g) { check_genus(g); }

WPoly WPoly::constant(int g, const Rational& c) { return term(g, Monomial{}, c); }

WPoly WPoly::u(int g, int i) {
  if (i < 0 || i >= g) throw std::invalid_argument("u index out of range");
  return term(g, variable_monomial(u_var(i)));
}

WPoly WPoly::v(int g, int j) {
  if (j < 0 || j > g - 3) throw std::invalid_argument("v index out of range");
  return term(g, variable_monomial(v_var(g, j)));
}

WPoly WPoly::term(int g, const Monomial& m, const Rational& c) {
  WPoly p(g);
  p.add_term(m, c);
  return p;
}

Rational WPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> WPoly::homogeneous_degree(Grading grading) const {
  if (terms_.empty()) return std::nullopt;
  const int d = degree_of(terms_.begin()->first, g_, grading);
  for (const auto& [m, c] : terms_)
    if (degree_of(m, g_, grading) != d) return std::nullopt;
  return d;
}

bool WPoly::involves_v() const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return v_degree(t.first, g_) > 0; });
}

WPoly& WPoly::operator+=(const WPoly& o) {
  if (o.g_ != g_) throw std::invalid_argument("genus mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WPoly& WPoly::operator-=(const WPoly& o) {
  if (o.g_ != g_) throw std::invalid_argument("genus mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WPoly& WPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
  if (a.g_ != b.g_) throw std::invalid_argument("genus mismatch");
  WPoly p(a.g_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

WPoly WPoly::operator-() const {
  WPoly p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

WPoly WPoly::times_monomial(const Monomial& mono, const Rational& c) const {
  WPoly p(g_);
  if (c == 0) return p;
  for (const auto& [m, x] : terms_) p.terms_.emplace_hint(p.terms_.end(), m * mono, x * c);
  return p;
}

WPoly WPoly::scale_v(const Rational& t) const {
  WPoly p(g_);
  for (const auto& [m, c] : terms_) {
    Rational f = c;
    for (int k = 0; k < v_degree(m, g_); ++k) f *= t;
    p.add_term(m, f);
  }
  return p;
}

std::string WPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string mono = monomial_to_string(it->first, g_);
    append_term(os, first, it->second, mono == "1" ? std::string() : mono);
  }
  return os.str();
}

WPoly partial(const WPoly& p, int var) {
  if (var < 0 || var >= num_vars(p.genus())) throw std::invalid_argument("variable index out of range");
  WPoly d(p.genus());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial q = m;
    q[var] = static_cast<std::uint8_t>(q[var] - 1);
    d.add_term(q, c * m[var]);
  }
  return d;
}

BinaryForm veronese_pullback(const WPoly& p, std::optional<int> degree) {
  const int g = p.genus();
  if (p.involves_v()) throw std::invalid_argument("veronese pullback needs a u-only polynomial");
  int d = 0;
  if (p.is_zero()) {
    if (!degree) throw std::invalid_argument("degree of the zero polynomial must be given");
    d = *degree;
  } else {
    auto hd = p.homogeneous_degree(Grading::weighted);
    if (!hd) throw std::invalid_argument("veronese pullback needs a homogeneous polynomial");
    if (degree && *degree != *hd) throw std::invalid_argument("declared degree does not match polynomial");
    d = *hd;
  }
  BinaryForm f(d * (g - 1));
  for (const auto& [m, c] : p.terms()) {
    int a = 0;
    for (int i = 0; i < g; ++i) a += i * m[i];
    f[a] += c;
  }
  return f;
}

WPoly quartic_lift(const BinaryForm& f, int g) {
  check_genus(g);
  if (f.degree() != 4 * (g - 1)) throw std::invalid_argument("quartic_lift needs a form of degree 4(g-1)");
  WPoly p(g);
  for (int k = 0; k <= f.degree(); ++k) {
    if (f[k] == 0) continue;
    Monomial m;
    int rest = k;
    for (int t = 0; t < 4; ++t) {
      const int a = std::min(g - 1, rest);
      m[u_var(a)] = static_cast<std::uint8_t>(m[u_var(a)] + 1);
      rest -= a;
    }
    p.add_term(m, f[k]);
  }
  return p;
}

BinaryForm v_linear_to_form(const WPoly& l) {
  const int g = l.genus();
  BinaryForm f(g - 3);
  for (const auto& [m, c] : l.terms()) {
    if (u_degree(m, g) != 0 || v_degree(m, g) != 1) throw std::invalid_argument("expected a linear form in v");
    for (int j = 0; j < g - 2; ++j)
      if (m[v_var(g, j)] == 1) f[j] += c;
  }
  return f;
}

WPoly form_to_v_linear(const BinaryForm& f, int g) {
  if (f.degree() != g - 3) throw std::invalid_argument("expected a form of degree g-3");
  WPoly l(g);
  for (int j = 0; j <= g - 3; ++j) l += WPoly::v(g, j) * f[j];
  return l;
}

// ---------------------------------------------------------------------------
// MonomialBasis

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RatVector MonomialBasis::coordinates(const WPoly& p) const {
  RatVector v(monomials.size());
  for (const auto& [m, c] : p.terms()) {
    auto idx = index_of(m);
    if (!idx) throw std::invalid_argument("polynomial has a term outside the monomial basis: " + monomial_to_string(m, g));
    v[*idx] = c;
  }
  return v;
}

SparseRow MonomialBasis::sparse_coordinates(const WPoly& p) const {
  SparseRow row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    auto idx = index_of(m);
    if (!idx) throw std::invalid_argument("polynomial has a term outside the monomial basis: " + monomial_to_string(m, g));
    row.emplace_back(*idx, c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

WPoly MonomialBasis::polynomial(std::span<const Rational> coords) const {
  if (coords.size() != monomials.size()) throw std::invalid_argument("coordinate vector has wrong length");
  WPoly p(g);
  for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(monomials[i], coords[i]);
  return p;
}

WPoly MonomialBasis::polynomial(const SparseRow& coords) const {
  WPoly p(g);
  for (const auto& [i, c] : coords) p.add_term(monomials.at(i), c);
  return p;
}

namespace {

void enumerate(int g, Grading grading, VariableSet vars, int var, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  const int nvars = vars == VariableSet::u_only ? g : num_vars(g);
  if (var == nvars) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int w = variable_weight(g, var, grading);
  for (int e = 0; e * w <= remaining; ++e) {
    cur[var] = static_cast<std::uint8_t>(e);
    enumerate(g, grading, vars, var + 1, remaining - e * w, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

MonomialBasis make_monomial_basis(int g, Grading grading, int degree, VariableSet vars) {
  check_genus(g);
  MonomialBasis b;
  b.g = g;
  b.grading = grading;
  b.degree = degree;
  b.variables = vars;
  if (degree >= 0) {
    Monomial cur;
    enumerate(g, grading, vars, 0, degree, cur, b.monomials);
  }
  std::sort(b.monomials.begin(), b.monomials.end(),
            [g](const Monomial& x, const Monomial& y) { return compare_lex(x, y, g) > 0; });
  for (std::size_t i = 0; i < b.monomials.size(); ++i) b.index_.emplace(b.monomials[i], i);
  return b;
}

}  // namespace ribbonlab
