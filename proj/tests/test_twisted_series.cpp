#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "twlat/twisted_series.hpp"

using namespace twlat;

namespace {

TwistedSeries series(const FieldParams& f, std::initializer_list<int> xs) {
  std::vector<FieldElement> c;
  for (int x : xs) c.push_back(f.from_int(x));
  return TwistedSeries(f, c);
}

// Every series of the given length, in index order.
std::vector<TwistedSeries> all_series(const FieldParams& f, std::size_t n) {
  std::vector<TwistedSeries> out;
  auto el = all_elements(f);
  std::vector<std::size_t> d(n, 0);
  while (true) {
    std::vector<FieldElement> c;
    for (auto x : d) c.push_back(el[x]);
    out.emplace_back(f, c);
    std::size_t t = 0;
    while (t < n && ++d[t] == el.size()) d[t++] = 0;
    if (t == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("product examples") {
  auto f3 = FieldParams::make(3);
  auto a = series(f3, {1, 1, 0});
  CHECK(ts_mul(a, a) == series(f3, {1, 2, 1}));
  CHECK(ts_mul(a, TwistedSeries::constant(f3.one(), 3)) == a);
  auto f2 = FieldParams::make(2);
  auto b = series(f2, {1, 1});
  CHECK(ts_add(b, b).is_zero());
  CHECK(ts_add(a, ts_neg(a)).is_zero());
  CHECK_THROWS(ts_mul(a, series(f3, {1, 1})));
}

TEST_CASE("z^2 coefficient carries the b_2 term") {
  auto f4 = FieldParams::make(2, 2);
  auto g = f4.from_index(2);
  TwistedSeries a(f4, {g, g + f4.one(), g});
  TwistedSeries b(f4, {f4.one() + g, g, f4.one()});
  auto c = a * b;
  auto expected = a[0].frobenius(2) * b[2] + a[1].frobenius(1) * b[1].frobenius(1) + a[2] * b[0].frobenius(2);
  CHECK(c[2] == expected);
}

TEST_CASE("ring axioms exhaustively over F_2 and F_4") {
  for (auto f : {FieldParams::make(2), FieldParams::make(2, 2)}) {
    for (std::size_t n = 1; n <= (f.q() == 2 ? 3u : 2u); ++n) {
      auto all = all_series(f, n);
      bool ok = true;
      for (const auto& a : all)
        for (const auto& b : all) {
          if (a * b != b * a) ok = false;
          for (const auto& c : all) {
            if ((a * b) * c != a * (b * c)) ok = false;
            if (a * (b + c) != a * b + a * c) ok = false;
          }
        }
      CHECK_MESSAGE(ok, f.name() << " N=" << n);
    }
  }
}

TEST_CASE("multiplication by z shifts with frobenius") {
  auto f9 = FieldParams::make(3, 2);
  auto z = TwistedSeries::z(f9, 3);
  for (const auto& a : all_series(f9, 2)) {
    TwistedSeries a3(f9, {a[0], a[1], f9.from_index(5)});
    auto za = z * a3;
    CHECK(za[0].is_zero());
    CHECK(za[1] == a3[0].frobenius());
    CHECK(za[2] == a3[1].frobenius());
  }
}

TEST_CASE("F transport") {
  auto f3 = FieldParams::make(3);
  std::vector<FieldElement> s{f3.from_int(1), f3.from_int(2), f3.from_int(1)};
  CHECK(f_transport(s, 3) == TwistedSeries(f3, s));
  auto f4 = FieldParams::make(2, 2);
  auto g = f4.from_index(2);
  std::vector<FieldElement> gz{f4.zero(), g};
  CHECK(f_transport(gz, 2)[1] == g * g);
  // ring homomorphism from ordinary series, exhaustive over F_4, N=2 and F_2, N=3
  for (auto [f, n] : std::vector<std::pair<FieldParams, std::size_t>>{{f4, 2}, {FieldParams::make(2), 3}}) {
    auto all = all_series(f, n);
    for (const auto& a : all) {
      CHECK(f_transport_inverse(f_transport(a.coeffs(), n)) == a.coeffs());
      for (const auto& b : all)
        CHECK(f_transport(ordinary_series_mul(a.coeffs(), b.coeffs()), n) ==
              f_transport(a.coeffs(), n) * f_transport(b.coeffs(), n));
    }
  }
}

TEST_CASE("inverse") {
  auto f4 = FieldParams::make(2, 2);
  for (const auto& a : all_series(f4, 3)) {
    if (!a.is_unit()) {
      CHECK_THROWS(a.inverse());
      continue;
    }
    CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("matrices") {
  auto f5 = FieldParams::make(5);
  auto id = TwistedMatrix::identity(f5, 2, 2);
  CHECK(mat_det(id).is_one());
  CHECK(is_special(id));
  auto u = id;
  u(0, 1) = TwistedSeries::z(f5, 2);
  CHECK(mat_det(u).is_one());
  auto c = TwistedMatrix::constant({{f5.from_int(2), f5.from_int(3)}, {f5.from_int(4), f5.from_int(1)}}, 2);
  CHECK(mat_det(c) == TwistedSeries::constant(f5.from_int(2 - 12), 2));
  auto g = f5.from_int(2);
  auto d = TwistedMatrix::constant({{g, f5.zero()}, {f5.zero(), g.inverse()}}, 2);
  CHECK(is_special(d));
  auto d2 = TwistedMatrix::constant({{g, f5.zero()}, {f5.zero(), f5.one()}}, 2);
  CHECK(!is_special(d2));

  TwistedMatrix m(f5, 3, 2);
  int k = 1;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s) m(r, s) = series(f5, {(k * k + r) % 5 == 0 ? 1 : k * k % 5, k++});
  auto inv = mat_inverse(m);
  CHECK(mat_mul(m, inv) == TwistedMatrix::identity(f5, 3, 2));
  CHECK(mat_mul(inv, m) == TwistedMatrix::identity(f5, 3, 2));
  // det is multiplicative
  CHECK(mat_det(mat_mul(m, m)) == mat_det(m) * mat_det(m));
}
