// Seeded generators of small twisted-linear ideals shared by the tests and
// the acceptance binary.
#pragma once

#include <random>
#include <vector>

#include "twlat/graded_ideals.hpp"

namespace twlat::testing {

struct CorpusShape {
  int p;
  int e;
  std::size_t n;
  std::size_t N;
};

/// n, N in {2,3} x {1,2,3}, q in {2,3}.
inline std::vector<CorpusShape> corpus_shapes() {
  std::vector<CorpusShape> out;
  for (int p : {2, 3})
    for (std::size_t n : {2, 3})
      for (std::size_t N : {1, 2, 3}) out.push_back({p, 1, n, N});
  return out;
}

/// A random form of the given level with each admissible coefficient nonzero
/// with probability 1/2.
inline TwistedLinearForm random_form(const AmbientParams& a, std::size_t level, std::mt19937& rng) {
  TwistedLinearForm f(a, level);
  std::uniform_int_distribution<std::uint32_t> elem(1, a.field.q() - 1);
  std::bernoulli_distribution coin(0.5);
  bool any = false;
  while (!any)
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t j = 0; j <= f.max_j(); ++j)
        if (coin(rng)) {
          f.set(i, j, a.field.from_index(elem(rng)));
          any = true;
        }
  return f;
}

/// 1..n+1 generators at levels 0..N (one beyond the last z-level is allowed).
inline TwistedLinearIdeal random_ideal(const AmbientParams& a, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> count(1, a.n + 1);
  std::uniform_int_distribution<std::size_t> level(0, a.N);
  std::vector<TwistedLinearForm> gens;
  const auto k = count(rng);
  for (std::size_t t = 0; t < k; ++t) gens.push_back(random_form(a, level(rng), rng));
  return TwistedLinearIdeal(a, std::move(gens));
}

/// `per_shape` random ideals for every corpus shape, in a fixed order.
inline std::vector<TwistedLinearIdeal> random_corpus(std::size_t per_shape, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<TwistedLinearIdeal> out;
  for (const auto& s : corpus_shapes()) {
    const AmbientParams a(FieldParams::make(s.p, s.e), s.n, s.N);
    for (std::size_t k = 0; k < per_shape; ++k) out.push_back(random_ideal(a, rng));
  }
  return out;
}

}  // namespace twlat::testing
