// Twisted-linear forms and ideals in k[x_{i,j}], deg x_{i,j} = p^j.
//
// A form of level l is sum c_{i,j} x_{i,j}^(p^(l-j)) over 0 <= j <= min(l, N-1).
// Coefficients are stored densely at index i*N + j with 0-based i, so the
// lexicographic pivot order on (i, j) is the natural column order.
//
// An ideal generated by twisted-linear forms is stored saturated: for each
// level l the echelon basis B_l of I ∩ F^(l), where
//     B_l = span(B_{l-1}^p, generators of level l).
// Equality of ideals is equality of these bases.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twlat/coweights.hpp"
#include "twlat/finite_field.hpp"
#include "twlat/linear_algebra.hpp"
#include "twlat/twisted_series.hpp"

namespace twlat {

struct AmbientParams {
  FieldParams field;
  std::size_t n;
  std::size_t N;

  AmbientParams(FieldParams f, std::size_t n_, std::size_t N_);

  std::size_t num_vars() const { return n * N; }
  std::size_t var(std::size_t i, std::size_t j) const { return i * N + j; }
  bool operator==(const AmbientParams& o) const { return field == o.field && n == o.n && N == o.N; }
  bool operator!=(const AmbientParams& o) const { return !(*this == o); }
};

enum class RaiseMode { relative, absolute };

class TwistedLinearForm {
 public:
  TwistedLinearForm(AmbientParams ambient, std::size_t level);
  TwistedLinearForm(AmbientParams ambient, std::size_t level, Vector coeffs);

  /// The single term x_{i,j}^(p^(level-j)) (0-based i).
  static TwistedLinearForm variable(AmbientParams ambient, std::size_t i, std::size_t j, std::size_t level);

  const AmbientParams& ambient() const { return amb_; }
  std::size_t level() const { return level_; }
  const Vector& coeffs() const { return c_; }
  const FieldElement& coeff(std::size_t i, std::size_t j) const { return c_[amb_.var(i, j)]; }
  void set(std::size_t i, std::size_t j, const FieldElement& c);

  /// Largest admissible j at this level.
  std::size_t max_j() const { return std::min(level_, amb_.N - 1); }
  /// Degree p^level.
  std::uint64_t degree() const;
  bool is_zero() const { return twlat::is_zero(c_); }

  TwistedLinearForm operator+(const TwistedLinearForm& o) const;
  TwistedLinearForm operator*(const FieldElement& s) const;
  bool operator==(const TwistedLinearForm& o) const {
    return amb_ == o.amb_ && level_ == o.level_ && c_ == o.c_;
  }

 private:
  AmbientParams amb_;
  std::size_t level_;
  Vector c_;
};

TwistedLinearForm frob_raise(const TwistedLinearForm& f, std::size_t k, RaiseMode mode);
/// x_{i,j}^(p^(l-j)) -> x_{i,j-1}^(p^(l-j+1)); terms with j = 0 vanish.
TwistedLinearForm z_sharp(const TwistedLinearForm& f);
/// Pullback along v -> g v on the coordinates x_{i,j}, extended to level l by
/// raising term by term.
TwistedLinearForm group_act(const TwistedMatrix& g, const TwistedLinearForm& f);
/// Image under a field embedding k -> k'.
TwistedLinearForm base_change(const TwistedLinearForm& f, const FieldEmbedding& emb, const AmbientParams& target);

class TwistedLinearIdeal {
 public:
  explicit TwistedLinearIdeal(AmbientParams ambient);
  TwistedLinearIdeal(AmbientParams ambient, std::vector<TwistedLinearForm> generators);

  const AmbientParams& ambient() const { return amb_; }
  const std::vector<TwistedLinearForm>& generators() const { return gens_; }

  /// Largest level at which the saturated basis is stored explicitly; beyond
  /// it I ∩ F^(l) is the absolute raise of the last stored level.
  std::size_t top_level() const { return levels_.size() - 1; }
  /// Echelon basis of I ∩ F^(l) as coefficient vectors.
  Subspace level_space(std::size_t l) const;
  std::size_t level_dim(std::size_t l) const { return level_space(l).dim(); }
  /// The absolute raise of I ∩ F^(l-1) inside F^(l); zero for l = 0.
  Subspace raised_space(std::size_t l) const;

  bool operator==(const TwistedLinearIdeal& o) const;
  bool operator!=(const TwistedLinearIdeal& o) const { return !(*this == o); }

 private:
  AmbientParams amb_;
  std::vector<TwistedLinearForm> gens_;
  std::vector<Subspace> levels_;
};

/// Echelon basis of I ∩ F^(l).
std::vector<TwistedLinearForm> level_intersection(const TwistedLinearIdeal& I, std::size_t l);

/// The ideal generated by the images of all generators.
TwistedLinearIdeal group_act(const TwistedMatrix& g, const TwistedLinearIdeal& I);
TwistedLinearIdeal base_change(const TwistedLinearIdeal& I, const FieldEmbedding& emb);

/// h(0..max_degree) read off prod_l (1 - t^(p^l))^(c_l) / prod_{i,j} (1 - t^(p^j)).
std::vector<std::int64_t> hilbert_function(const TwistedLinearIdeal& I, std::size_t max_degree);

/// z_sharp(B_l) ⊆ B_l for every level.
bool is_lattice_scheme(const TwistedLinearIdeal& I);

struct MembershipResult {
  bool member = false;
  bool hilbert_condition = false;  // condition (a)
  bool chain_condition = false;    // condition (b)
  std::string diagnostic;
};

MembershipResult is_member_T(const TwistedLinearIdeal& I, const Coweight& lambda);

/// Radical test via the projection criterion: for each level l >= 1 the new
/// classes of I ∩ F^(l) over the raise of I ∩ F^(l-1) project injectively onto
/// the j = l coordinates, and no new classes appear at levels >= N.
bool is_reduced(const TwistedLinearIdeal& I);

/// I(lambda) = (x_{i,j} : i = 1..n-1, j < lambda_tilde_i) with x_{i,j} of level j.
TwistedLinearIdeal standard_ideal(const Coweight& lambda, const FieldParams& field);

}  // namespace twlat
