#include "twlat/twisted_series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twlat {

TwistedSeries::TwistedSeries(FieldParams field, std::size_t length)
    : field_(field), coeffs_(length, field.zero()) {
  if (length == 0) throw std::invalid_argument("twisted series length must be positive");
}

TwistedSeries::TwistedSeries(FieldParams field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("twisted series length must be positive");
  for (const auto& c : coeffs_)
    if (c.params() != field_) throw std::invalid_argument("twisted series coefficients over mixed fields");
}

TwistedSeries TwistedSeries::constant(const FieldElement& c, std::size_t length) {
  TwistedSeries s(c.params(), length);
  s[0] = c;
  return s;
}

TwistedSeries TwistedSeries::z(FieldParams field, std::size_t length) {
  TwistedSeries s(field, length);
  if (length > 1) s[1] = field.one();
  return s;
}

bool TwistedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& a) { return a.is_zero(); });
}

bool TwistedSeries::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const FieldElement& a) { return a.is_zero(); });
}

void TwistedSeries::check_shape(const TwistedSeries& b) const {
  if (field_ != b.field_) throw std::invalid_argument("twisted series over different fields");
  if (coeffs_.size() != b.coeffs_.size()) throw std::invalid_argument("twisted series length mismatch");
}

TwistedSeries TwistedSeries::operator+(const TwistedSeries& b) const {
  check_shape(b);
  TwistedSeries r = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
  return r;
}

TwistedSeries TwistedSeries::operator-() const {
  TwistedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TwistedSeries TwistedSeries::operator-(const TwistedSeries& b) const { return *this + (-b); }

TwistedSeries TwistedSeries::operator*(const TwistedSeries& b) const {
  check_shape(b);
  const std::size_t n = coeffs_.size();
  TwistedSeries r(field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += coeffs_[i].frobenius(static_cast<int>(j)) * b.coeffs_[j].frobenius(static_cast<int>(i));
    }
  }
  return r;
}

TwistedSeries TwistedSeries::inverse() const {
  if (!is_unit()) throw std::domain_error("twisted series with zero constant term is not invertible");
  // (a*b)_k = a_0^(p^k) b_k + sum_{j<k} a_{k-j}^(p^j) b_j^(p^(k-j)); solve for b_k.
  const std::size_t n = coeffs_.size();
  TwistedSeries b(field_, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto rhs = k == 0 ? field_.one() : field_.zero();
    for (std::size_t j = 0; j < k; ++j)
      rhs -= coeffs_[k - j].frobenius(static_cast<int>(j)) * b.coeffs_[j].frobenius(static_cast<int>(k - j));
    b.coeffs_[k] = rhs / coeffs_[0].frobenius(static_cast<int>(k));
  }
  return b;
}

TwistedSeries ts_mul(const TwistedSeries& a, const TwistedSeries& b) { return a * b; }
TwistedSeries ts_add(const TwistedSeries& a, const TwistedSeries& b) { return a + b; }
TwistedSeries ts_neg(const TwistedSeries& a) { return -a; }

std::vector<FieldElement> ordinary_series_mul(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("series length mismatch");
  const std::size_t n = a.size();
  std::vector<FieldElement> r(n, a[0].params().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

TwistedSeries f_transport(const std::vector<FieldElement>& ordinary, std::size_t length) {
  if (ordinary.size() != length || length == 0) throw std::invalid_argument("series length mismatch");
  std::vector<FieldElement> c;
  c.reserve(length);
  for (std::size_t j = 0; j < length; ++j) c.push_back(ordinary[j].frobenius(static_cast<int>(j)));
  return TwistedSeries(ordinary[0].params(), std::move(c));
}

std::vector<FieldElement> f_transport_inverse(const TwistedSeries& twisted) {
  std::vector<FieldElement> c;
  c.reserve(twisted.length());
  for (std::size_t j = 0; j < twisted.length(); ++j) c.push_back(twisted[j].pth_root(static_cast<int>(j)));
  return c;
}

TwistedMatrix::TwistedMatrix(FieldParams field, std::size_t n, std::size_t length)
    : field_(field), n_(n), length_(length), entries_(n * n, TwistedSeries(field, length)) {
  if (n == 0) throw std::invalid_argument("matrix size must be positive");
}

TwistedMatrix TwistedMatrix::identity(FieldParams field, std::size_t n, std::size_t length) {
  TwistedMatrix m(field, n, length);
  for (std::size_t i = 0; i < n; ++i) m(i, i)[0] = field.one();
  return m;
}

TwistedMatrix TwistedMatrix::constant(const std::vector<std::vector<FieldElement>>& rows, std::size_t length) {
  const std::size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("matrix size must be positive");
  TwistedMatrix m(rows[0][0].params(), n, length);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c)[0] = rows[r][c];
  }
  return m;
}

TwistedMatrix TwistedMatrix::operator*(const TwistedMatrix& b) const {
  if (n_ != b.n_ || length_ != b.length_ || field_ != b.field_) throw std::invalid_argument("matrix shape mismatch");
  TwistedMatrix r(field_, n_, length_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      TwistedSeries acc(field_, length_);
      for (std::size_t k = 0; k < n_; ++k) acc = acc + (*this)(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

TwistedMatrix mat_mul(const TwistedMatrix& a, const TwistedMatrix& b) { return a * b; }

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

TwistedSeries det_of_rows(const TwistedMatrix& a, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  TwistedSeries det(a.field(), a.length());
  do {
    TwistedSeries term = TwistedSeries::constant(a.field().one(), a.length());
    for (std::size_t r = 0; r < rows.size(); ++r) term = term * a(rows[r], cols[perm[r]]);
    det = permutation_sign(perm) > 0 ? det + term : det - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TwistedSeries mat_det(const TwistedMatrix& a) {
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  return det_of_rows(a, idx, idx);
}

TwistedMatrix mat_inverse(const TwistedMatrix& a) {
  const std::size_t n = a.size();
  const auto det_inv = mat_det(a).inverse();
  TwistedMatrix inv(a.field(), n, a.length());
  if (n == 1) {
    inv(0, 0) = det_inv;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) cols.push_back(c);
      auto minor = det_of_rows(a, rows, cols);
      if ((i + j) % 2 == 1) minor = -minor;
      inv(i, j) = minor * det_inv;
    }
  return inv;
}

bool is_special(const TwistedMatrix& a) { return mat_det(a).is_one(); }

}  // namespace twlat
