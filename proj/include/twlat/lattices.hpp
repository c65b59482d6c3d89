// Subspaces of the nN-dimensional space V with basis e_{i,j} on which z acts
// by e_{i,j} -> e_{i,j+1} (e_{i,N-1} -> 0).
//
// Coordinates are ordered e_{1,0} < e_{2,0} < ... < e_{n,0} < e_{1,1} < ...,
// i.e. index j*n + i with 0-based i. V is dual to the level N-1 forms under
// <x_{i,j}^(p^(N-1-j)), e_{i',j'}> = delta.
#pragma once

#include <cstdint>
#include <vector>

#include "twlat/coweights.hpp"
#include "twlat/graded_ideals.hpp"
#include "twlat/linear_algebra.hpp"

namespace twlat {

class Lattice {
 public:
  Lattice(AmbientParams ambient, Subspace space);

  static Lattice full(const AmbientParams& ambient);
  static Lattice zero(const AmbientParams& ambient);
  static Lattice echelonize(const AmbientParams& ambient, const std::vector<Vector>& vectors);

  const AmbientParams& ambient() const { return amb_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  /// Coordinate index of e_{i,j}.
  std::size_t index(std::size_t i, std::size_t j) const { return j * amb_.n + i; }

  bool contains(const Lattice& o) const { return space_.contains(o.space_); }
  /// The image z L.
  Lattice shifted() const;
  Lattice frobenius(int k) const { return Lattice(amb_, space_.frobenius(k)); }

  bool operator==(const Lattice& o) const { return amb_ == o.amb_ && space_ == o.space_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }
  bool operator<(const Lattice& o) const;

 private:
  AmbientParams amb_;
  Subspace space_;
};

using LatticeChain = std::vector<Lattice>;

/// z e_{i,j} = e_{i,j+1}.
Vector z_apply(const AmbientParams& ambient, const Vector& v);

/// The subspace of V annihilated by the given level N-1 forms.
Lattice annihilator(const std::vector<TwistedLinearForm>& forms, const AmbientParams& ambient);

bool is_z_stable(const Lattice& L);

/// Elementary divisors of V/L: the partition whose dual is
/// (r_{j-1} - r_j)_{j>=1}, r_j = dim z^j (V/L), padded to n parts.
Partition invariants(const Lattice& L);
/// The jumps dim V/(L + z^j V) - dim V/(L + z^{j-1} V), j = 1..N.
std::vector<int> codimension_jumps(const Lattice& L);

/// (1^a, 0^(n-a)) with a = dim L/L'; requires z L ⊆ L' ⊆ L.
std::vector<int> rel_position(const Lattice& L, const Lattice& Lp);

/// Every consecutive pair has relative position mu_{i+1} and the chain starts at V.
bool validate_chain(const LatticeChain& chain, const MinusculeSequence& mus);

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);
/// prod_m [n choose |mu_m|]_q.
std::uint64_t count_chains(const Coweight& lambda, std::uint64_t q);

/// Every chain V = L_0 ⊇ ... ⊇ L_N with relative positions mu_1..mu_N, found
/// by enumerating all subspaces of each member of the right codimension and
/// filtering with rel_position.
std::vector<LatticeChain> enumerate_chains(const Coweight& lambda, const FieldParams& field);

}  // namespace twlat
