#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "twlat/lattices.hpp"

using namespace twlat;

namespace {

Lattice span_of(const AmbientParams& a, std::initializer_list<std::pair<std::size_t, std::size_t>> units) {
  std::vector<Vector> vs;
  for (const auto& [i, j] : units) vs.push_back(unit_vector(a.field, a.num_vars(), j * a.n + i));
  return Lattice::echelonize(a, vs);
}

// Every z-stable subspace of V, by brute force over all subspaces.
std::vector<Lattice> all_lattices(const AmbientParams& a) {
  std::vector<Lattice> out;
  for (std::size_t k = 0; k <= a.num_vars(); ++k)
    for_each_subspace(a.field, a.num_vars(), k, [&](const std::vector<Vector>& b) {
      Lattice L = Lattice::echelonize(a, b);
      if (is_z_stable(L)) out.push_back(L);
      return true;
    });
  return out;
}

}  // namespace

TEST_CASE("annihilators") {
  const auto F = FieldParams::make(2);
  const AmbientParams a(F, 2, 2);
  CHECK(annihilator({TwistedLinearForm::variable(a, 0, 0, 1)}, a) == span_of(a, {{1, 0}, {0, 1}, {1, 1}}));
  CHECK(annihilator({}, a) == Lattice::full(a));
  std::vector<TwistedLinearForm> all;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) all.push_back(TwistedLinearForm::variable(a, i, j, 1));
  CHECK(annihilator(all, a) == Lattice::zero(a));
  CHECK_THROWS_AS(annihilator({TwistedLinearForm::variable(a, 0, 0, 0)}, a), std::invalid_argument);
}

TEST_CASE("z stability") {
  const auto F = FieldParams::make(3);
  const AmbientParams a(F, 2, 2);
  CHECK(is_z_stable(Lattice::full(a)));
  CHECK_FALSE(is_z_stable(span_of(a, {{0, 0}})));
  CHECK(is_z_stable(span_of(a, {{0, 1}})));
}

TEST_CASE("invariants") {
  const auto F = FieldParams::make(2);
  const AmbientParams a(F, 2, 2);
  CHECK(invariants(Lattice::full(a)) == Partition{0, 0});
  CHECK(invariants(Lattice::zero(a)) == Partition{2, 2});
  CHECK(invariants(span_of(a, {{1, 0}, {0, 1}, {1, 1}})) == Partition{1, 0});
  CHECK_THROWS_AS(invariants(span_of(a, {{0, 0}})), std::invalid_argument);
}

TEST_CASE("invariants agree with codimension jumps on every lattice") {
  for (int p : {2, 3})
    for (auto [n, N] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
      if (p == 3 && n * N > 4) continue;
      const AmbientParams a(FieldParams::make(p), n, N);
      for (const auto& L : all_lattices(a)) {
        const auto inv = invariants(L);
        CHECK(std::accumulate(inv.begin(), inv.end(), 0) == static_cast<int>(a.num_vars() - L.dim()));
        CHECK(dual_partition(inv, N) == codimension_jumps(L));
      }
    }
}

TEST_CASE("relative position") {
  const auto F = FieldParams::make(2);
  const AmbientParams a(F, 2, 2);
  const auto V = Lattice::full(a);
  const auto L1 = span_of(a, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(rel_position(V, V) == std::vector<int>{0, 0});
  CHECK(rel_position(V, L1) == std::vector<int>{1, 0});
  CHECK(rel_position(V, V.shifted()) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(rel_position(L1, V), std::invalid_argument);
  CHECK_THROWS_AS(rel_position(V, span_of(a, {{0, 1}, {1, 1}}).shifted()), std::invalid_argument);
}

TEST_CASE("nested lattices differ by a minuscule step") {
  const AmbientParams a(FieldParams::make(2), 2, 2);
  const auto lats = all_lattices(a);
  for (const auto& L : lats)
    for (const auto& Lp : lats) {
      if (!L.contains(Lp) || !Lp.contains(L.shifted())) continue;
      const auto big = invariants(L);
      const auto small = invariants(Lp);
      const auto mu = rel_position(L, Lp);
      // invariants(L') is obtained from invariants(L) by adding a 0/1 vector, up to sorting.
      Partition sum = big;
      int k = std::accumulate(mu.begin(), mu.end(), 0);
      CHECK(std::accumulate(small.begin(), small.end(), 0) == std::accumulate(big.begin(), big.end(), 0) + k);
      bool found = false;
      std::vector<int> pick(a.n, 0);
      std::fill(pick.begin(), pick.begin() + k, 1);
      std::sort(pick.begin(), pick.end());
      do {
        Partition t = big;
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += pick[i];
        std::sort(t.rbegin(), t.rend());
        found = found || t == small;
      } while (std::next_permutation(pick.begin(), pick.end()));
      CHECK(found);
      CHECK(bruhat_leq(small, [&] {
        Partition t = big;
        for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] += 1;
        return t;
      }()));
    }
}

TEST_CASE("chain validation") {
  const auto F = FieldParams::make(2);
  const AmbientParams a(F, 2, 2);
  const auto V = Lattice::full(a);
  MinusculeSequence zero_mus{2, {{0, 0}, {0, 0}}, {0, 0}};
  CHECK(validate_chain({V, V, V}, zero_mus));
  const auto ms = standard_decomposition({1, -1});
  const LatticeChain good{V, span_of(a, {{1, 0}, {0, 1}, {1, 1}}), span_of(a, {{1, 0}, {1, 1}})};
  CHECK(validate_chain(good, ms));
  CHECK_FALSE(validate_chain({V, good[2], good[1]}, ms));
  CHECK_FALSE(validate_chain({good[1], good[1], good[2]}, ms));
}

TEST_CASE("gaussian binomials and chain counts") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(2, 1, 5) == 6);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  CHECK(count_chains({1, -1}, 2) == 9);
  CHECK(count_chains({1, -1}, 3) == 16);
  CHECK(count_chains({1, 0, -1}, 2) == 49);

  // Against a literal subspace count.
  for (int p : {2, 3})
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        if (p == 3 && n == 4) continue;
        std::uint64_t c = 0;
        for_each_subspace(FieldParams::make(p), n, k, [&](const std::vector<Vector>&) {
          ++c;
          return true;
        });
        CHECK(gaussian_binomial(n, k, static_cast<std::uint64_t>(p)) == c);
      }
}

TEST_CASE("exhaustive chain enumeration") {
  const auto F = FieldParams::make(2);
  const auto chains = enumerate_chains({1, -1}, F);
  CHECK(chains.size() == 9);
  const std::set<LatticeChain> distinct(chains.begin(), chains.end());
  CHECK(distinct.size() == 9);
  for (const auto& c : chains) CHECK(validate_chain(c, standard_decomposition({1, -1})));
  CHECK(enumerate_chains({1, 0, -1}, F).size() == 49);
  CHECK(enumerate_chains({1, -1}, FieldParams::make(3)).size() == 16);
}
