// Dense linear algebra over a finite field: reduced row-echelon bases,
// kernels and exhaustive subspace enumeration.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "twlat/finite_field.hpp"

namespace twlat {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const FieldParams& field, std::size_t n);
Vector unit_vector(const FieldParams& field, std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
/// Coordinatewise a -> a^(p^k).
Vector frobenius(const Vector& v, int k);

/// A subspace of F^n stored by its reduced row-echelon basis. Pivots are
/// chosen at the smallest column index, so two subspaces are equal iff their
/// bases are equal entry by entry.
class Subspace {
 public:
  Subspace(FieldParams field, std::size_t ambient_dim);

  static Subspace span(FieldParams field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(FieldParams field, std::size_t ambient_dim);

  const FieldParams& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v after elimination against the basis; zero iff v lies in the span.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Adds v to the spanning set; returns false if it was already contained.
  bool insert(const Vector& v);

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace frobenius(int k) const;

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  FieldParams field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x in F^ncols : A x = 0} where A is given by its rows, in
/// reduced echelon form.
std::vector<Vector> nullspace(const FieldParams& field, const std::vector<Vector>& rows, std::size_t ncols);

/// Rank of a list of vectors of common length.
std::size_t rank(const FieldParams& field, const std::vector<Vector>& rows, std::size_t ncols);

/// Visits every k-dimensional subspace of F_q^n once, as a k x n reduced
/// echelon matrix. Order: pivot column sets lexicographically, then free
/// entries lexicographically (row-major, first entry most significant).
/// Returning false from the visitor stops the enumeration.
void for_each_subspace(const FieldParams& field, std::size_t n, std::size_t k,
                       const std::function<bool(const std::vector<Vector>&)>& visit);

}  // namespace twlat
