#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "twlat/graded_ideals.hpp"
#include "twlat/lattices.hpp"
#include "twlat/oracles.hpp"

using namespace twlat;
using twlat::testing::random_corpus;

namespace {

TwistedLinearForm form(const AmbientParams& a, std::size_t level,
                       std::initializer_list<std::tuple<std::size_t, std::size_t, FieldElement>> terms) {
  TwistedLinearForm f(a, level);
  for (const auto& [i, j, c] : terms) f.set(i, j, c);
  return f;
}

std::vector<std::size_t> level_dims(const TwistedLinearIdeal& I, std::size_t upto) {
  std::vector<std::size_t> d;
  for (std::size_t l = 0; l <= upto; ++l) d.push_back(I.level_dim(l));
  return d;
}

}  // namespace

TEST_CASE("frobenius raising") {
  const auto F = FieldParams::make(2, 2);
  const AmbientParams a(F, 2, 2);
  const auto g = F.primitive();
  const auto x10 = TwistedLinearForm::variable(a, 0, 0, 0);
  CHECK(frob_raise(x10, 1, RaiseMode::absolute) == TwistedLinearForm::variable(a, 0, 0, 1));

  const auto f = form(a, 0, {{0, 0, g}, {1, 0, F.one()}});
  CHECK(frob_raise(f, 1, RaiseMode::absolute) == form(a, 1, {{0, 0, g * g}, {1, 0, F.one()}}));
  CHECK(frob_raise(f, 1, RaiseMode::relative) == form(a, 1, {{0, 0, g}, {1, 0, F.one()}}));
  CHECK(frob_raise(f, 1, RaiseMode::absolute).degree() == 2);
}

TEST_CASE("z sharp") {
  const auto F = FieldParams::make(3);
  const AmbientParams a(F, 2, 2);
  CHECK(z_sharp(TwistedLinearForm::variable(a, 0, 1, 1)) == TwistedLinearForm::variable(a, 0, 0, 1));
  CHECK(z_sharp(TwistedLinearForm::variable(a, 0, 0, 0)).is_zero());

  // Dual to z on V under the pairing of level N-1 forms with V.
  const Lattice V = Lattice::full(a);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.N; ++j)
      for (std::size_t i2 = 0; i2 < a.n; ++i2)
        for (std::size_t j2 = 0; j2 < a.N; ++j2) {
          const auto m = TwistedLinearForm::variable(a, i, j, a.N - 1);
          const auto v = unit_vector(F, a.num_vars(), V.index(i2, j2));
          auto pair = [&](const TwistedLinearForm& f, const Vector& w) {
            auto s = F.zero();
            for (std::size_t ii = 0; ii < a.n; ++ii)
              for (std::size_t jj = 0; jj < a.N; ++jj) s += f.coeff(ii, jj) * w[V.index(ii, jj)];
            return s;
          };
          CHECK(pair(z_sharp(m), v) == pair(m, z_apply(a, v)));
        }
}

TEST_CASE("group action on forms") {
  const auto F = FieldParams::make(2, 2);
  const AmbientParams a(F, 2, 2);
  const auto w = F.primitive();
  const auto a0 = w, a1 = w * w, b0 = F.one(), b1 = w;
  TwistedMatrix g = TwistedMatrix::identity(F, 2, 2);
  g(0, 0) = TwistedSeries(F, {a0, a1});
  g(0, 1) = TwistedSeries(F, {b0, b1});

  CHECK(group_act(g, TwistedLinearForm::variable(a, 0, 0, 0)) == form(a, 0, {{0, 0, a0}, {1, 0, b0}}));
  CHECK(group_act(g, TwistedLinearForm::variable(a, 0, 1, 1)) ==
        form(a, 1, {{0, 1, a0.frobenius(1)}, {0, 0, a1}, {1, 1, b0.frobenius(1)}, {1, 0, b1}}));

  const auto id = TwistedMatrix::identity(F, 2, 2);
  const auto f = form(a, 1, {{0, 0, w}, {1, 1, F.one()}});
  CHECK(group_act(id, f) == f);
}

TEST_CASE("group action is invertible and preserves level dimensions") {
  std::mt19937 rng(7);
  for (int p : {2, 3}) {
    const auto F = FieldParams::make(p);
    const AmbientParams a(F, 2, 3);
    std::uniform_int_distribution<std::uint32_t> e(0, F.q() - 1);
    int tested = 0;
    while (tested < 20) {
      TwistedMatrix g(F, 2, 3);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
          std::vector<FieldElement> coeffs;
          for (int k = 0; k < 3; ++k) coeffs.push_back(F.from_index(e(rng)));
          g(r, c) = TwistedSeries(F, coeffs);
        }
      if (!mat_det(g).is_unit()) continue;
      ++tested;
      const auto ginv = mat_inverse(g);
      const auto I = twlat::testing::random_ideal(a, rng);
      for (const auto& f : I.generators()) {
        CHECK(group_act(ginv, group_act(g, f)) == f);
        CHECK(group_act(g, group_act(ginv, f)) == f);
        CHECK(group_act(g, f).level() == f.level());
      }
      const auto J = group_act(g, I);
      CHECK(level_dims(J, 4) == level_dims(I, 4));
      CHECK(group_act(ginv, J) == I);
    }
  }
}

TEST_CASE("level intersections") {
  const auto F = FieldParams::make(2, 2);
  const AmbientParams a(F, 2, 2);
  const auto w = F.primitive();
  const TwistedLinearIdeal I(a, {form(a, 0, {{0, 0, w}, {1, 0, F.one()}})});
  const auto B = level_intersection(I, 1);
  REQUIRE(B.size() == 1);
  // Echelon normalization makes the leading coefficient 1.
  CHECK(B[0] == form(a, 1, {{0, 0, F.one()}, {1, 0, (w * w).inverse()}}));
  CHECK(Subspace::span(F, 4, {B[0].coeffs()}).contains(form(a, 1, {{0, 0, w * w}, {1, 0, F.one()}}).coeffs()));

  const auto J = standard_ideal({1, -1}, F);
  const auto C = level_intersection(J, 1);
  REQUIRE(C.size() == 2);
  CHECK(C[0] == TwistedLinearForm::variable(a, 0, 0, 1));
  CHECK(C[1] == TwistedLinearForm::variable(a, 0, 1, 1));
}

TEST_CASE("level intersections agree with the dense oracle") {
  for (const auto& I : random_corpus(3, 11))
    for (std::size_t l = 0; l <= I.top_level(); ++l) CHECK(I.level_space(l) == naive_intersection(I, l));
}

TEST_CASE("level intersections commute with base change") {
  for (const auto& I : random_corpus(2, 12)) {
    const auto& F = I.ambient().field;
    const FieldEmbedding emb(F, FieldParams::make(F.p(), 2));
    const auto J = base_change(I, emb);
    for (std::size_t l = 0; l <= I.top_level(); ++l) {
      std::vector<Vector> ext;
      for (const auto& f : level_intersection(I, l)) ext.push_back(base_change(f, emb, J.ambient()).coeffs());
      CHECK(Subspace::span(emb.target(), J.ambient().num_vars(), ext) == J.level_space(l));
    }
  }
}

TEST_CASE("hilbert function examples") {
  const auto F = FieldParams::make(2);
  CHECK(hilbert_function(standard_ideal({1, -1}, F), 4) == std::vector<std::int64_t>{1, 1, 2, 2, 3});
  const TwistedLinearIdeal zero(AmbientParams(F, 2, 1));
  CHECK(hilbert_function(zero, 5) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6});
  CHECK(hilbert_function(standard_ideal({3, 0, 0}, F), 0) == std::vector<std::int64_t>{1});
}

TEST_CASE("hilbert function agrees with the dense oracle") {
  for (const auto& I : random_corpus(2, 13)) {
    const auto& a = I.ambient();
    std::size_t d = a.n;
    for (std::size_t j = 0; j + 1 < a.N; ++j) d *= static_cast<std::size_t>(a.field.p());
    d = std::min<std::size_t>(d, 12);
    const auto h = hilbert_function(I, d);
    for (std::size_t k = 0; k <= d; ++k) CHECK(h[k] == naive_hilbert(I, k));
  }
}

TEST_CASE("lattice scheme predicate") {
  const auto F = FieldParams::make(2);
  const AmbientParams a(F, 2, 2);
  CHECK(is_lattice_scheme(standard_ideal({1, -1}, F)));
  CHECK_FALSE(is_lattice_scheme(TwistedLinearIdeal(a, {TwistedLinearForm::variable(a, 0, 1, 1)})));
}

TEST_CASE("membership in T_N(lambda)") {
  const auto F = FieldParams::make(2);
  CHECK(is_member_T(standard_ideal({1, -1}, F), {1, -1}).member);

  const AmbientParams a(F, 4, 2);
  const TwistedLinearIdeal I(a, {TwistedLinearForm::variable(a, 0, 0, 0), TwistedLinearForm::variable(a, 1, 0, 0),
                                 TwistedLinearForm::variable(a, 2, 0, 1), TwistedLinearForm::variable(a, 2, 1, 1)});
  const auto r = is_member_T(I, {1, 1, -1, -1});
  CHECK_FALSE(r.member);
  CHECK(r.hilbert_condition);
  CHECK_FALSE(r.chain_condition);
  CHECK(r.diagnostic.find("condition (b)") != std::string::npos);
  CHECK(hilbert_function(I, 8) == hilbert_function(standard_ideal({1, 1, -1, -1}, F), 8));

  CHECK_THROWS_AS(is_member_T(I, {1, -1}), std::invalid_argument);
  const auto bad = is_member_T(TwistedLinearIdeal(AmbientParams(F, 2, 2)), {1, -1});
  CHECK_FALSE(bad.hilbert_condition);
  CHECK(bad.diagnostic.find("condition (a)") != std::string::npos);
}

TEST_CASE("reducedness via the projection criterion") {
  const auto F = FieldParams::make(2, 2);
  const AmbientParams a(F, 2, 2);
  const auto w = F.primitive();
  CHECK(is_reduced(standard_ideal({1, -1}, F)));
  const TwistedLinearIdeal boundary(a, {form(a, 0, {{0, 0, w}, {1, 0, F.one()}}), TwistedLinearForm::variable(a, 0, 0, 1),
                                        TwistedLinearForm::variable(a, 1, 0, 1)});
  CHECK_FALSE(is_reduced(boundary));
  const TwistedLinearIdeal chart(a, {form(a, 0, {{0, 0, w}, {1, 0, F.one()}}),
                                     form(a, 1, {{0, 0, w}, {0, 1, w.frobenius(1)}, {1, 1, F.one()}})});
  CHECK(is_reduced(chart));
}

TEST_CASE("ideal equality is equality of saturated bases") {
  const auto F = FieldParams::make(3);
  const AmbientParams a(F, 2, 2);
  const auto x = TwistedLinearForm::variable(a, 0, 0, 0);
  const TwistedLinearIdeal I(a, {x, frob_raise(x, 1, RaiseMode::absolute)});
  const TwistedLinearIdeal J(a, {x * F.from_int(2)});
  CHECK(I == J);
  CHECK(I != standard_ideal({1, -1}, F));
}
