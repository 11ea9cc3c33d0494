#include "ribbonlab/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ribbonlab {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RatVector normalize_leading(RatVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (it == v.end()) return v;
  const Rational lead = *it;
  for (auto& x : v) x /= lead;
  return v;
}

// ---------------------------------------------------------------------------

TruncatedScalar::TruncatedScalar(std::size_t order_bound) : digits_(order_bound) {
  if (order_bound == 0) throw std::invalid_argument("truncation order must be positive");
}

TruncatedScalar::TruncatedScalar(std::size_t order_bound, const Rational& constant)
    : TruncatedScalar(order_bound) {
  digits_[0] = constant;
}

TruncatedScalar::TruncatedScalar(RatVector digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw std::invalid_argument("truncation order must be positive");
}

TruncatedScalar TruncatedScalar::pi_power(std::size_t order_bound, std::size_t k) {
  TruncatedScalar s(order_bound);
  if (k < order_bound) s.digits_[k] = 1;
  return s;
}

bool TruncatedScalar::is_zero() const { return ribbonlab::is_zero(digits_); }

std::size_t TruncatedScalar::valuation() const {
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    if (digits_[k] != 0) return k;
  }
  return digits_.size();
}

TruncatedScalar TruncatedScalar::truncated(std::size_t m) const {
  if (m == 0 || m > digits_.size()) throw std::invalid_argument("bad truncation order");
  return TruncatedScalar(RatVector(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(m)));
}

TruncatedScalar TruncatedScalar::shifted_up(std::size_t k) const {
  TruncatedScalar out(digits_.size());
  for (std::size_t i = 0; i + k < digits_.size(); ++i) out.digits_[i + k] = digits_[i];
  return out;
}

TruncatedScalar TruncatedScalar::shifted_down(std::size_t k) const {
  if (k >= digits_.size()) throw std::domain_error("shift exceeds truncation order");
  for (std::size_t i = 0; i < k; ++i) {
    if (digits_[i] != 0) throw std::domain_error("inexact division by a power of pi");
  }
  return TruncatedScalar(RatVector(digits_.begin() + static_cast<std::ptrdiff_t>(k), digits_.end()));
}

TruncatedScalar TruncatedScalar::ramified() const {
  TruncatedScalar out(2 * digits_.size() - 1);
  for (std::size_t i = 0; i < digits_.size(); ++i) out.digits_[2 * i] = digits_[i];
  return out;
}

TruncatedScalar& TruncatedScalar::operator+=(const TruncatedScalar& o) {
  if (o.digits_.size() < digits_.size()) digits_.resize(o.digits_.size());
  for (std::size_t i = 0; i < digits_.size(); ++i) digits_[i] += o.digits_[i];
  return *this;
}

TruncatedScalar& TruncatedScalar::operator-=(const TruncatedScalar& o) {
  if (o.digits_.size() < digits_.size()) digits_.resize(o.digits_.size());
  for (std::size_t i = 0; i < digits_.size(); ++i) digits_[i] -= o.digits_[i];
  return *this;
}

TruncatedScalar& TruncatedScalar::operator*=(const Rational& c) {
  for (auto& x : digits_) x *= c;
  return *this;
}

TruncatedScalar operator*(const TruncatedScalar& a, const TruncatedScalar& b) {
  const std::size_t n = std::min(a.order_bound(), b.order_bound());
  TruncatedScalar out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.digits_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.digits_[i + j] += a.digits_[i] * b.digits_[j];
  }
  return out;
}

TruncatedScalar TruncatedScalar::operator-() const {
  TruncatedScalar out(*this);
  for (auto& x : out.digits_) x = -x;
  return out;
}

// ---------------------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& diag) {
  RatMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RatVector RatMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return RatVector(s.begin(), s.end());
}

RatVector RatMatrix::column_vector(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RatMatrix::is_zero() const { return ribbonlab::is_zero(data_); }

RatVector RatMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && x[c] != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

RowEchelon rref(const RatMatrix& m) {
  RowEchelon out{m, {}, 0};
  RatMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  RatMatrix a = m;
  Rational sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

LinearSolution solve(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = rref(aug);
  LinearSolution out;
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
    out.status = LinearSolution::Status::inconsistent;
    return out;
  }
  out.x.assign(m.cols(), 0);
  for (std::size_t i = 0; i < e.rank; ++i) out.x[e.pivots[i]] = e.reduced(i, m.cols());
  out.status = e.rank == m.cols() ? LinearSolution::Status::unique : LinearSolution::Status::non_unique;
  return out;
}

RatMatrix row_space_basis(const RatMatrix& m) {
  const RowEchelon e = rref(m);
  RatMatrix out(e.rank, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = e.reduced(r, c);
  return out;
}

// ---------------------------------------------------------------------------

SparseRow sparse_axpy(const SparseRow& row, const Rational& c, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -c * b->second);
      ++b;
    } else {
      Rational v = a->second - c * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

RatVector to_dense(const SparseRow& row, std::size_t n) {
  RatVector v(n);
  for (const auto& [c, x] : row) v.at(c) = x;
  return v;
}

SparseRow to_sparse(std::span<const Rational> dense) {
  SparseRow row;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (dense[c] != 0) row.emplace_back(c, dense[c]);
  return row;
}

bool SparseEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const std::size_t p = pivot_of_[lead];
    if (p == kNone) break;
    const Rational c = row.front().second;
    row = sparse_axpy(row, c, rows_[p]);
  }
  if (row.empty()) return false;
  const Rational inv = 1 / row.front().second;
  for (auto& [c, x] : row) x *= inv;
  pivot_of_[row.front().first] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

SparseRow SparseEchelon::reduce(SparseRow row) const {
  std::size_t i = 0;
  while (i < row.size()) {
    const std::size_t p = pivot_of_[row[i].first];
    if (p == kNone) {
      ++i;
      continue;
    }
    const std::size_t col = row[i].first;
    const Rational c = row[i].second;
    row = sparse_axpy(row, c, rows_[p]);
    // entries before col are untouched; continue scanning from col
    i = static_cast<std::size_t>(
        std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t v) { return e.first < v; }) -
        row.begin());
  }
  return row;
}

void SparseEchelon::fully_reduce() {
  // Process rows with larger leading column first so that each row only
  // needs reducing against rows that are already fully reduced.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
  for (std::size_t idx : order) {
    SparseRow& row = rows_[idx];
    SparseRow head{row.front()};
    SparseRow tail(row.begin() + 1, row.end());
    tail = reduce(std::move(tail));
    head.insert(head.end(), tail.begin(), tail.end());
    row = std::move(head);
  }
  std::sort(rows_.begin(), rows_.end(), [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
  for (std::size_t i = 0; i < rows_.size(); ++i) pivot_of_[rows_[i].front().first] = i;
}

}  // namespace ribbonlab
