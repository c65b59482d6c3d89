// Points of the iterated Grassmann bundle T_N(lambda) over F_q, the map sigma
// to lattice chains, Schubert images and the explicit P^1-bundle charts for
// lambda = (1, -1).
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twlat/coweights.hpp"
#include "twlat/graded_ideals.hpp"
#include "twlat/lattices.hpp"

namespace twlat {

/// Partial point after choosing the generators of levels 0..m-2, about to
/// choose those of level m-1.
struct FiberState {
  Coweight lambda;
  std::size_t m = 1;
  /// Echelon bases of I ∩ F^(l) for l = 0..m-2.
  std::vector<Subspace> levels;
  AmbientParams ambient;
};

struct DemazurePoint {
  TwistedLinearIdeal ideal;
  /// Chosen fiber subspace at each step, in the coordinates of fiber_kernel.
  std::vector<std::vector<Vector>> provenance;
};

FiberState initial_state(const Coweight& lambda, const FieldParams& field);

/// Representatives in F^(m-1) of a basis of K = {f : z# f ∈ raise(I ∩ F^(m-2))}
/// modulo raise(I ∩ F^(m-2)). They are reduced against the raised space and
/// echelonized, so the choice is deterministic. Throws if dim K != n.
std::vector<Vector> fiber_kernel(const FiberState& s);

struct EnumerationOptions {
  std::uint64_t cap = 1000000;
};

/// Calls visit on every point in the fixed enumeration order; stops when visit
/// returns false. Throws std::length_error if the predicted count exceeds cap.
void enumerate_points(const Coweight& lambda, const FieldParams& field, const EnumerationOptions& opt,
                      const std::function<bool(const DemazurePoint&)>& visit);
std::vector<DemazurePoint> enumerate_points(const Coweight& lambda, const FieldParams& field,
                                            const EnumerationOptions& opt = {});
/// prod_m [n choose |mu_m|]_q without enumeration.
std::uint64_t count_points(const Coweight& lambda, const FieldParams& field);

/// The dimension jumps of the saturated bases read as a coweight with
/// lambda_tilde_i = #{m : |mu_m| >= i}; used when lambda is not given.
Coweight infer_coweight(const TwistedLinearIdeal& I);

/// L_0 = V and for l = 1..N, L_l = Frob^(N-l) Ann(relative raise of I ∩ F^(l-1)
/// to level N-1). Throws if the ideal is not in T_N(lambda).
LatticeChain sigma(const TwistedLinearIdeal& I, const Coweight& lambda);
/// The same chain built from absolute raises, with no Frobenius afterwards.
LatticeChain sigma_absolute(const TwistedLinearIdeal& I, const Coweight& lambda);

Partition schubert_image(const TwistedLinearIdeal& I, const Coweight& lambda);
bool big_cell_test(const TwistedLinearIdeal& I, const Coweight& lambda);

enum class Chart { phi, psi };

/// phi(a,(c:d)) = (a x0 + y0, c x0^p + d a^p x1 + d y1),
/// psi(a,(c:d)) = (x0 + a y0, -c y0^p + d a^p y1 + d x1),
/// where x = x_{1,.} and y = x_{2,.}; n = 2, N = 2.
TwistedLinearIdeal pn_charts(const FieldElement& a, const FieldElement& c, const FieldElement& d, Chart chart);

struct ChartCoordinates {
  FieldElement a;
  FieldElement c;
  FieldElement d;
};

/// Reads (a', (c:d)) off a chain with L_1 = Ann(a' e_{1,0}^* + e_{2,0}^*) and
/// L_2 = L_1 ∩ Ann(c e_{1,0}^* + d a' e_{1,1}^* + d e_{2,1}^*). The pair (c:d) is
/// normalized with its last nonzero entry equal to 1. Returns false if the
/// chain is outside the phi chart.
bool chart_coordinates(const LatticeChain& chain, ChartCoordinates& out);

struct TheoremCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoremReport {
  Coweight lambda;
  std::uint64_t predicted = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t chains = 0;
  std::uint64_t big_cell = 0;
  std::vector<TheoremCheck> checks;

  bool passed() const;
};

/// Runs the five checks: point count, sigma injective with valid images,
/// independent chain count, big cell <=> reduced (against the point-set
/// oracle), Schubert image <= lambda_tilde.
TheoremReport verify_theorems(const Coweight& lambda, const FieldParams& field, const EnumerationOptions& opt = {});

}  // namespace twlat
