// Brute-force reference implementations. Nothing here uses the structure of
// twisted-linear ideals beyond converting generators to dense polynomials:
// graded pieces come from Macaulay rows m*g, zero sets from exhaustive search,
// coaction checks from literal expansion.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "twlat/finite_field.hpp"
#include "twlat/graded_ideals.hpp"
#include "twlat/linear_algebra.hpp"

namespace twlat {

using Monomial = std::vector<std::uint16_t>;

/// Polynomial ring over a finite field with positive integer variable weights.
struct PolyRing {
  FieldParams field;
  std::vector<std::uint64_t> weights;

  std::size_t num_vars() const { return weights.size(); }
  std::uint64_t degree(const Monomial& m) const;
  bool operator==(const PolyRing& o) const { return field == o.field && weights == o.weights; }
};

/// k[x_{i,j}] with deg x_{i,j} = p^j, variable index i*N + j.
PolyRing ambient_ring(const AmbientParams& a);

class DensePolynomial {
 public:
  explicit DensePolynomial(PolyRing ring);

  static DensePolynomial constant(PolyRing ring, const FieldElement& c);
  static DensePolynomial variable(PolyRing ring, std::size_t k);
  static DensePolynomial monomial(PolyRing ring, const Monomial& m, const FieldElement& c);

  const PolyRing& ring() const { return ring_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of the (assumed homogeneous) polynomial; nullopt when zero or inhomogeneous.
  std::optional<std::uint64_t> homogeneous_degree() const;

  void add_term(const Monomial& m, const FieldElement& c);
  DensePolynomial operator+(const DensePolynomial& o) const;
  DensePolynomial operator-(const DensePolynomial& o) const;
  DensePolynomial operator*(const DensePolynomial& o) const;
  DensePolynomial operator*(const FieldElement& s) const;
  DensePolynomial pow(std::uint64_t e) const;
  bool operator==(const DensePolynomial& o) const { return terms_ == o.terms_; }

  /// Replaces variable k by images[k] (all in one target ring).
  DensePolynomial substitute(const std::vector<DensePolynomial>& images) const;
  /// Value at a point whose coordinates live in emb.target().
  FieldElement evaluate(const std::vector<FieldElement>& point, const FieldEmbedding& emb) const;

 private:
  PolyRing ring_;
  std::map<Monomial, FieldElement> terms_;
};

DensePolynomial to_dense(const TwistedLinearForm& f);
std::vector<DensePolynomial> to_dense(const TwistedLinearIdeal& I);

/// Monomials of weighted degree d in lexicographic order of exponent vectors.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, std::uint64_t d);

/// Semi-echelon row space over a finite field with sparse rows. Every row has
/// a distinct leading column with coefficient 1; rows are not back-reduced.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, FieldElement>>;

  explicit SparseEchelon(std::size_t ncols) : pivot_row_(ncols, -1) {}

  std::size_t num_cols() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

  /// Row must be sorted by column with nonzero entries; returns true if the rank grew.
  bool insert(Row row);
  /// Residue supported on non-pivot columns; unique for the row space.
  Row normal_form(Row row) const;

 private:
  std::vector<Row> rows_;
  std::vector<long> pivot_row_;
};

/// Row space of the Macaulay rows m*g in degree d, in sparse semi-echelon form.
/// Columns are the degree-d monomials; when `last` is given, monomials with
/// last(m) true are ordered after all others so that rows led by them span the
/// intersection with their coordinate subspace.
class GradedPiece {
 public:
  GradedPiece(const PolyRing& ring, std::uint64_t d, const std::function<bool(const Monomial&)>& last = nullptr);

  std::uint64_t degree() const { return d_; }
  std::size_t num_monomials() const { return monos_.size(); }
  std::size_t rank() const { return ech_.rank(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  std::size_t column(const Monomial& m) const { return index_.at(m); }

  /// Adds a homogeneous polynomial of degree d; returns true if the rank grew.
  bool insert(const DensePolynomial& f);
  /// Adds m * g for a monomial m; the product must have degree d.
  bool insert_product(const Monomial& m, const DensePolynomial& g);
  /// Residue after eliminating every pivot column; zero iff f lies in the piece.
  SparseEchelon::Row normal_form(const DensePolynomial& f) const;
  bool contains(const DensePolynomial& f) const { return normal_form(f).empty(); }
  /// Rows whose pivot is a `last` monomial, as polynomials.
  std::vector<DensePolynomial> rows_led_by_last() const;
  /// Monomials that are not pivots, i.e. a basis of the quotient.
  std::vector<Monomial> standard_monomials() const;

 private:
  SparseEchelon::Row to_row(const DensePolynomial& f) const;

  PolyRing ring_;
  std::uint64_t d_;
  std::vector<Monomial> monos_;
  std::map<Monomial, std::size_t> index_;
  std::size_t first_last_ = 0;
  SparseEchelon ech_;
};

/// Span of m*g over all generators g and monomials m with deg(m g) = d.
GradedPiece naive_graded_component(const std::vector<DensePolynomial>& gens, std::uint64_t d,
                                   const std::function<bool(const Monomial&)>& last = nullptr);

/// Echelon basis (as level-l coefficient vectors) of I_{p^l} ∩ F^(l).
Subspace naive_intersection(const TwistedLinearIdeal& I, std::size_t l);
/// dim A_d - dim I_d.
std::int64_t naive_hilbert(const TwistedLinearIdeal& I, std::uint64_t d);

struct OracleCaps {
  std::uint64_t max_points = 1u << 20;
  std::uint64_t max_field = 1u << 20;
};

/// All common zeros over F_{q^r}, coordinates ordered i*N + j.
std::vector<std::vector<FieldElement>> point_set(const TwistedLinearIdeal& I, int r, const OracleCaps& caps = {});

/// Level-l forms over the points' field vanishing at every point.
Subspace vanishing_forms(const std::vector<std::vector<FieldElement>>& points, const AmbientParams& ambient_ext,
                         std::size_t l);

struct RadicalReport {
  bool reduced = false;
  /// True when the answer is certain: equality of dimensions proves reducedness;
  /// otherwise the dimensions were stable over two consecutive extension degrees.
  bool stable = false;
  int degree = 0;
  std::vector<std::size_t> ideal_dims;
  std::vector<std::size_t> vanishing_dims;
};

/// Compares vanishing_forms over F_{q^r} with I ∩ F^(l) at every level, for
/// r = 1, 2, ... until equality (reduced) or two consecutive r give the same
/// larger dimensions (not reduced), within the caps.
RadicalReport radical_oracle(const TwistedLinearIdeal& I, const OracleCaps& caps = {});

/// Expands a#(g) = g(x + x') and the scalar coaction g(s . x) of every
/// generator and tests membership in I⊗A + A⊗I resp. I, piece by piece.
bool comult_stability(const TwistedLinearIdeal& I);

enum class DeformationModel { hilbert, T };

struct DeformationReport {
  std::uint64_t candidates = 0;
  std::uint64_t flat = 0;
  std::uint64_t accepted = 0;
  std::uint64_t distinct = 0;
  int dimension = 0;
};

/// Counts ideals over F_q[eps] reducing to I: lifts g + eps h of the
/// generators with h over a basis of A_{deg g}/I_{deg g}, kept when flat up to
/// the degree bound and, for the hilbert model, stable under the coaction, or,
/// for the T model, generated by twisted-linear elements and satisfying the z#
/// chain condition. Distinct ideals are told apart by their graded pieces.
DeformationReport deformation_count(const TwistedLinearIdeal& I, DeformationModel model, std::uint64_t degree_bound = 0);

}  // namespace twlat
