// Truncated Frobenius-twisted power series k[[z]]^F_N and square matrices
// over them.
//
// The product of a = sum a_i z^i and b = sum b_j z^j has z^k coefficient
//     sum_{i+j=k} a_i^(p^j) * b_j^(p^i),
// truncated at z^N. The ring is commutative.
#pragma once

#include <cstddef>
#include <vector>

#include "twlat/finite_field.hpp"

namespace twlat {

class TwistedSeries {
 public:
  TwistedSeries(FieldParams field, std::size_t length);
  TwistedSeries(FieldParams field, std::vector<FieldElement> coeffs);

  static TwistedSeries constant(const FieldElement& c, std::size_t length);
  /// The series z (zero when length is 1).
  static TwistedSeries z(FieldParams field, std::size_t length);

  const FieldParams& field() const { return field_; }
  std::size_t length() const { return coeffs_.size(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  const FieldElement& operator[](std::size_t k) const { return coeffs_[k]; }
  FieldElement& operator[](std::size_t k) { return coeffs_[k]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const { return !coeffs_[0].is_zero(); }

  TwistedSeries operator+(const TwistedSeries& b) const;
  TwistedSeries operator-(const TwistedSeries& b) const;
  TwistedSeries operator-() const;
  TwistedSeries operator*(const TwistedSeries& b) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  TwistedSeries inverse() const;

  bool operator==(const TwistedSeries& b) const { return coeffs_ == b.coeffs_; }
  bool operator!=(const TwistedSeries& b) const { return !(*this == b); }

 private:
  void check_shape(const TwistedSeries& b) const;

  FieldParams field_;
  std::vector<FieldElement> coeffs_;
};

TwistedSeries ts_mul(const TwistedSeries& a, const TwistedSeries& b);
TwistedSeries ts_add(const TwistedSeries& a, const TwistedSeries& b);
TwistedSeries ts_neg(const TwistedSeries& a);

/// Ordinary truncated power series multiplication on coefficient lists.
std::vector<FieldElement> ordinary_series_mul(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);

enum class TransportDirection { forward, inverse };

/// The ring isomorphism k[[z]]_N -> k[[z]]^F_N, a_j -> a_j^(p^j), and its
/// inverse a_j -> (p^j)-th root of a_j.
TwistedSeries f_transport(const std::vector<FieldElement>& ordinary, std::size_t length);
std::vector<FieldElement> f_transport_inverse(const TwistedSeries& twisted);

/// n x n matrix with entries in k[[z]]^F_N.
class TwistedMatrix {
 public:
  TwistedMatrix(FieldParams field, std::size_t n, std::size_t length);

  static TwistedMatrix identity(FieldParams field, std::size_t n, std::size_t length);
  /// Embeds a constant matrix over k (row-major).
  static TwistedMatrix constant(const std::vector<std::vector<FieldElement>>& rows, std::size_t length);

  const FieldParams& field() const { return field_; }
  std::size_t size() const { return n_; }
  std::size_t length() const { return length_; }

  const TwistedSeries& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  TwistedSeries& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }

  TwistedMatrix operator*(const TwistedMatrix& b) const;
  bool operator==(const TwistedMatrix& b) const { return entries_ == b.entries_; }

 private:
  FieldParams field_;
  std::size_t n_;
  std::size_t length_;
  std::vector<TwistedSeries> entries_;
};

TwistedMatrix mat_mul(const TwistedMatrix& a, const TwistedMatrix& b);
/// Leibniz expansion with ts_mul/ts_add.
TwistedSeries mat_det(const TwistedMatrix& a);
/// Adjugate divided by the determinant; requires a unit determinant.
TwistedMatrix mat_inverse(const TwistedMatrix& a);
/// True iff the determinant is 1, i.e. the matrix lies in SL_n(k[[z]]^F_N).
bool is_special(const TwistedMatrix& a);

}  // namespace twlat
