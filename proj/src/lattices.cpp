#include "twlat/lattices.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace twlat {

Lattice::Lattice(AmbientParams ambient, Subspace space) : amb_(ambient), space_(std::move(space)) {
  if (space_.ambient_dim() != amb_.num_vars() || space_.field() != amb_.field)
    throw std::invalid_argument("lattice subspace does not live in V");
}

Lattice Lattice::full(const AmbientParams& ambient) {
  return Lattice(ambient, Subspace::full(ambient.field, ambient.num_vars()));
}

Lattice Lattice::zero(const AmbientParams& ambient) { return Lattice(ambient, Subspace(ambient.field, ambient.num_vars())); }

Lattice Lattice::echelonize(const AmbientParams& ambient, const std::vector<Vector>& vectors) {
  return Lattice(ambient, Subspace::span(ambient.field, ambient.num_vars(), vectors));
}

Lattice Lattice::shifted() const {
  std::vector<Vector> img;
  for (const auto& v : space_.basis()) img.push_back(z_apply(amb_, v));
  return echelonize(amb_, img);
}

bool Lattice::operator<(const Lattice& o) const {
  auto key = [](const Lattice& L) {
    std::vector<std::uint32_t> k;
    for (const auto& v : L.space().basis())
      for (const auto& x : v) k.push_back(x.index());
    return k;
  };
  if (dim() != o.dim()) return dim() < o.dim();
  return key(*this) < key(o);
}

Vector z_apply(const AmbientParams& a, const Vector& v) {
  Vector r = zero_vector(a.field, a.num_vars());
  for (std::size_t k = 0; k + a.n < a.num_vars(); ++k) r[k + a.n] = v[k];
  return r;
}

Lattice annihilator(const std::vector<TwistedLinearForm>& forms, const AmbientParams& a) {
  std::vector<Vector> rows;
  for (const auto& f : forms) {
    if (f.ambient() != a) throw std::invalid_argument("annihilator: form ambient mismatch");
    if (f.level() != a.N - 1) throw std::invalid_argument("annihilator needs forms of level N-1");
    Vector row = zero_vector(a.field, a.num_vars());
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t j = 0; j < a.N; ++j) row[j * a.n + i] = f.coeff(i, j);
    rows.push_back(std::move(row));
  }
  return Lattice::echelonize(a, nullspace(a.field, rows, a.num_vars()));
}

bool is_z_stable(const Lattice& L) {
  for (const auto& v : L.space().basis())
    if (!L.space().contains(z_apply(L.ambient(), v))) return false;
  return true;
}

Partition invariants(const Lattice& L) {
  if (!is_z_stable(L)) throw std::invalid_argument("invariants: lattice is not z-stable");
  const auto& a = L.ambient();
  // Representatives of a basis of V/L: unit vectors off the pivot columns.
  std::vector<bool> pivot(a.num_vars(), false);
  for (auto c : L.space().pivots()) pivot[c] = true;
  std::vector<Vector> quotient;
  for (std::size_t k = 0; k < a.num_vars(); ++k)
    if (!pivot[k]) quotient.push_back(unit_vector(a.field, a.num_vars(), k));
  // r_j = rank of z^j on V/L.
  std::vector<int> r;
  std::vector<Vector> images = quotient;
  for (std::size_t j = 0; j <= a.N; ++j) {
    std::vector<Vector> reduced;
    for (const auto& v : images) reduced.push_back(L.space().reduce(v));
    r.push_back(static_cast<int>(rank(a.field, reduced, a.num_vars())));
    for (auto& v : images) v = z_apply(a, v);
  }
  std::vector<int> tau;
  for (std::size_t j = 1; j <= a.N; ++j) tau.push_back(r[j - 1] - r[j]);
  return dual_partition(tau, a.n);
}

std::vector<int> codimension_jumps(const Lattice& L) {
  const auto& a = L.ambient();
  const auto total = static_cast<int>(a.num_vars());
  std::vector<int> codim;  // dim V/(L + z^j V), j = 0..N
  for (std::size_t j = 0; j <= a.N; ++j) {
    Subspace s = L.space();
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t jj = j; jj < a.N; ++jj) s.insert(unit_vector(a.field, a.num_vars(), jj * a.n + i));
    codim.push_back(total - static_cast<int>(s.dim()));
  }
  std::vector<int> jumps;
  for (std::size_t j = 1; j <= a.N; ++j) jumps.push_back(codim[j] - codim[j - 1]);
  return jumps;
}

std::vector<int> rel_position(const Lattice& L, const Lattice& Lp) {
  if (L.ambient() != Lp.ambient()) throw std::invalid_argument("rel_position: ambient mismatch");
  if (!L.contains(Lp)) throw std::invalid_argument("rel_position: L' is not contained in L");
  if (!Lp.contains(L.shifted())) throw std::invalid_argument("rel_position: z L is not contained in L'");
  const std::size_t a = L.dim() - Lp.dim();
  const std::size_t n = L.ambient().n;
  if (a > n) throw std::invalid_argument("rel_position: codimension exceeds n");
  std::vector<int> mu(n, 0);
  std::fill(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(a), 1);
  return mu;
}

bool validate_chain(const LatticeChain& chain, const MinusculeSequence& mus) {
  if (chain.size() != mus.length() + 1) return false;
  if (chain.front() != Lattice::full(chain.front().ambient())) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    try {
      if (rel_position(chain[i], chain[i + 1]) != mus.mus[i]) return false;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return true;
}

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  // Row recursion [n,k] = [n-1,k-1] + q^k [n-1,k], exact in integers.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m)
    for (std::uint64_t j = std::min(m, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (std::uint64_t t = 0; t < j; ++t) qj *= q;
      row[j] = row[j - 1] + qj * row[j];
    }
  return row[k];
}

std::uint64_t count_chains(const Coweight& lambda, std::uint64_t q) {
  const auto ms = standard_decomposition(lambda);
  std::uint64_t c = 1;
  for (int s : ms.sizes) {
    const auto g = gaussian_binomial(ms.n, static_cast<std::uint64_t>(s), q);
    if (g != 0 && c > std::numeric_limits<std::uint64_t>::max() / g) throw std::overflow_error("chain count overflows");
    c *= g;
  }
  return c;
}

std::vector<LatticeChain> enumerate_chains(const Coweight& lambda, const FieldParams& field) {
  const auto ms = standard_decomposition(lambda);
  const auto nz = normalize(lambda);
  if (nz.N == 0) return {};
  AmbientParams a(field, lambda.size(), static_cast<std::size_t>(nz.N));
  std::vector<LatticeChain> out;
  LatticeChain cur{Lattice::full(a)};
  std::function<void()> rec = [&]() {
    const std::size_t step = cur.size() - 1;
    if (step == ms.length()) {
      out.push_back(cur);
      return;
    }
    const Lattice L = cur.back();
    const auto& basis = L.space().basis();
    const std::size_t s = static_cast<std::size_t>(ms.sizes[step]);
    if (s > L.dim()) return;
    for_each_subspace(field, L.dim(), L.dim() - s, [&](const std::vector<Vector>& coords) {
      std::vector<Vector> vecs;
      for (const auto& c : coords) {
        Vector v = zero_vector(field, a.num_vars());
        for (std::size_t t = 0; t < basis.size(); ++t)
          if (!c[t].is_zero())
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += c[t] * basis[t][k];
        vecs.push_back(std::move(v));
      }
      Lattice Lp = Lattice::echelonize(a, vecs);
      bool ok = true;
      try {
        ok = rel_position(L, Lp) == ms.mus[step];
      } catch (const std::invalid_argument&) {
        ok = false;
      }
      if (ok) {
        cur.push_back(Lp);
        rec();
        cur.pop_back();
      }
      return true;
    });
  };
  rec();
  return out;
}

}  // namespace twlat
