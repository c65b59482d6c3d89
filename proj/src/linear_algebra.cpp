#include "twlat/linear_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace twlat {

Vector zero_vector(const FieldParams& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const FieldParams& field, std::size_t n, std::size_t k) {
  auto v = zero_vector(field, n);
  v.at(k) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& a) { return a.is_zero(); });
}

Vector frobenius(const Vector& v, int k) {
  Vector out;
  out.reserve(v.size());
  for (const auto& a : v) out.push_back(a.frobenius(k));
  return out;
}

Subspace::Subspace(FieldParams field, std::size_t ambient_dim) : field_(field), n_(ambient_dim) {}

Subspace Subspace::span(FieldParams field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(FieldParams field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) s.insert(unit_vector(field, ambient_dim, k));
  return s;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length does not match subspace ambient dimension");
  Vector r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto c = r[pivots_[k]];
    if (c.is_zero()) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < n_; ++j)
      if (!row[j].is_zero()) r[j] -= c * row[j];
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
}

bool Subspace::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && r[piv].is_zero()) ++piv;
  if (piv == n_) return false;
  const auto inv = r[piv].inverse();
  for (std::size_t j = piv; j < n_; ++j) r[j] *= inv;
  // Clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    const auto c = row[piv];
    if (c.is_zero()) continue;
    for (std::size_t j = piv; j < n_; ++j)
      if (!r[j].is_zero()) row[j] -= c * r[j];
  }
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.rows_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // dim(U ∩ W) via the kernel of [U; -W] acting on coefficient vectors.
  const std::size_t a = rows_.size();
  const std::size_t b = other.rows_.size();
  std::vector<Vector> cols(n_, zero_vector(field_, a + b));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < n_; ++j) cols[j][i] = rows_[i][j];
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < n_; ++j) cols[j][a + i] = -other.rows_[i][j];
  const auto ker = nullspace(field_, cols, a + b);
  Subspace s(field_, n_);
  for (const auto& coeffs : ker) {
    auto v = zero_vector(field_, n_);
    for (std::size_t i = 0; i < a; ++i)
      if (!coeffs[i].is_zero())
        for (std::size_t j = 0; j < n_; ++j) v[j] += coeffs[i] * rows_[i][j];
    s.insert(v);
  }
  return s;
}

Subspace Subspace::frobenius(int k) const {
  // Frobenius is a field automorphism: it maps an RREF basis to an RREF basis.
  Subspace s = *this;
  for (auto& row : s.rows_) row = twlat::frobenius(row, k);
  return s;
}

bool Subspace::operator==(const Subspace& other) const {
  return field_ == other.field_ && n_ == other.n_ && pivots_ == other.pivots_ && rows_ == other.rows_;
}

std::vector<Vector> nullspace(const FieldParams& field, const std::vector<Vector>& rows, std::size_t ncols) {
  const auto s = Subspace::span(field, ncols, rows);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : s.pivots()) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    auto v = zero_vector(field, ncols);
    v[free] = field.one();
    for (std::size_t k = 0; k < s.dim(); ++k) v[s.pivots()[k]] = -s.basis()[k][free];
    out.push_back(std::move(v));
  }
  return Subspace::span(field, ncols, out).basis();
}

std::size_t rank(const FieldParams& field, const std::vector<Vector>& rows, std::size_t ncols) {
  return Subspace::span(field, ncols, rows).dim();
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_subspace(const FieldParams& field, std::size_t n, std::size_t k,
                       const std::function<bool(const std::vector<Vector>&)>& visit) {
  if (k > n) return;
  if (k == 0) {
    visit({});
    return;
  }
  const auto elems = all_elements(field);
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  do {
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    std::vector<Vector> m(k, zero_vector(field, n));
    for (std::size_t r = 0; r < k; ++r) m[r][piv[r]] = field.one();
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free.size(); ++t) m[free[t].first][free[t].second] = elems[digits[t]];
      if (!visit(m)) return;
      // Odometer increment; the last free entry varies fastest.
      bool carry = true;
      for (std::size_t t = free.size(); carry && t > 0;) {
        --t;
        if (++digits[t] < field.q())
          carry = false;
        else
          digits[t] = 0;
      }
      if (carry) break;
    }
  } while (next_combination(piv, n));
}

}  // namespace twlat
