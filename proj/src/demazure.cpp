#include "twlat/demazure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "twlat/oracles.hpp"

namespace twlat {

FiberState initial_state(const Coweight& lambda, const FieldParams& field) {
  if (!is_dominant(lambda)) throw std::invalid_argument("coweight is not dominant");
  const auto nz = normalize(lambda);
  if (nz.N == 0) throw std::invalid_argument("coweight has N = 0; T_N(lambda) is a point with no levels");
  return FiberState{lambda, 1, {}, AmbientParams(field, lambda.size(), static_cast<std::size_t>(nz.N))};
}

namespace {

Subspace raised(const FiberState& s) {
  const auto& a = s.ambient;
  if (s.m == 1) return Subspace(a.field, a.num_vars());
  return s.levels.back().frobenius(1);
}

Vector z_sharp_coeffs(const AmbientParams& a, const Vector& v) {
  Vector r = zero_vector(a.field, a.num_vars());
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 1; j < a.N; ++j) r[a.var(i, j - 1)] = v[a.var(i, j)];
  return r;
}

}  // namespace

std::vector<Vector> fiber_kernel(const FiberState& s) {
  const auto& a = s.ambient;
  const std::size_t level = s.m - 1;
  const std::size_t jmax = std::min(level, a.N - 1);
  const Subspace R = raised(s);

  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j <= jmax; ++j) cols.push_back(a.var(i, j));

  // Matrix of f -> z#(f) mod R on the admissible coordinates, one row per output coordinate.
  std::vector<Vector> images;
  for (auto c : cols) images.push_back(R.reduce(z_sharp_coeffs(a, unit_vector(a.field, a.num_vars(), c))));
  std::vector<Vector> rows(a.num_vars(), zero_vector(a.field, cols.size()));
  for (std::size_t t = 0; t < cols.size(); ++t)
    for (std::size_t k = 0; k < a.num_vars(); ++k) rows[k][t] = images[t][k];

  Subspace K(a.field, a.num_vars());
  for (const auto& x : nullspace(a.field, rows, cols.size())) {
    Vector v = zero_vector(a.field, a.num_vars());
    for (std::size_t t = 0; t < cols.size(); ++t) v[cols[t]] = x[t];
    K.insert(R.reduce(v));
  }
  if (K.dim() != a.n)
    throw std::logic_error("fiber kernel has dimension " + std::to_string(K.dim()) + ", expected " +
                           std::to_string(a.n));
  return K.basis();
}

std::uint64_t count_points(const Coweight& lambda, const FieldParams& field) {
  return count_chains(lambda, field.q());
}

void enumerate_points(const Coweight& lambda, const FieldParams& field, const EnumerationOptions& opt,
                      const std::function<bool(const DemazurePoint&)>& visit) {
  if (count_points(lambda, field) > opt.cap) throw std::length_error("point count exceeds the enumeration cap");
  const FiberState start = initial_state(lambda, field);
  const auto ms = standard_decomposition(lambda);
  const auto& a = start.ambient;

  std::vector<TwistedLinearForm> gens;
  std::vector<std::vector<Vector>> prov;
  bool stop = false;
  std::function<void(const FiberState&)> rec = [&](const FiberState& s) {
    if (s.m > a.N) {
      if (!visit(DemazurePoint{TwistedLinearIdeal(a, gens), prov})) stop = true;
      return;
    }
    const auto K = fiber_kernel(s);
    const Subspace R = raised(s);
    const auto size = static_cast<std::size_t>(ms.sizes[s.m - 1]);
    for_each_subspace(a.field, a.n, size, [&](const std::vector<Vector>& coords) {
      FiberState next = s;
      next.m = s.m + 1;
      Subspace B = R;
      const std::size_t mark = gens.size();
      for (const auto& c : coords) {
        Vector v = zero_vector(a.field, a.num_vars());
        for (std::size_t t = 0; t < K.size(); ++t)
          if (!c[t].is_zero())
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += c[t] * K[t][k];
        B.insert(v);
        gens.emplace_back(a, s.m - 1, v);
      }
      next.levels.push_back(B);
      prov.push_back(coords);
      rec(next);
      prov.pop_back();
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(mark), gens.end());
      return !stop;
    });
  };
  rec(start);
}

std::vector<DemazurePoint> enumerate_points(const Coweight& lambda, const FieldParams& field,
                                            const EnumerationOptions& opt) {
  std::vector<DemazurePoint> out;
  enumerate_points(lambda, field, opt, [&](const DemazurePoint& pt) {
    out.push_back(pt);
    return true;
  });
  return out;
}

Coweight infer_coweight(const TwistedLinearIdeal& I) {
  const auto& a = I.ambient();
  std::vector<int> sizes;
  std::size_t prev = 0;
  for (std::size_t l = 0; l < a.N; ++l) {
    const auto d = I.level_dim(l);
    if (d < prev) throw std::logic_error("level dimensions decrease");
    sizes.push_back(static_cast<int>(d - prev));
    prev = d;
  }
  Coweight lt(a.n, 0);
  for (std::size_t i = 0; i < a.n; ++i)
    for (int s : sizes)
      if (s >= static_cast<int>(i + 1)) ++lt[i];
  return lt;
}

namespace {

void require_member(const TwistedLinearIdeal& I, const Coweight& lambda) {
  const auto r = is_member_T(I, lambda);
  if (!r.member) throw std::invalid_argument("ideal is not in T_N(lambda): " + r.diagnostic);
}

LatticeChain build_chain(const TwistedLinearIdeal& I, const Coweight& lambda, RaiseMode mode) {
  require_member(I, lambda);
  const auto& a = I.ambient();
  LatticeChain chain{Lattice::full(a)};
  for (std::size_t l = 1; l <= a.N; ++l) {
    std::vector<TwistedLinearForm> forms;
    for (const auto& f : level_intersection(I, l - 1)) forms.push_back(frob_raise(f, a.N - l, mode));
    const Lattice L = annihilator(forms, a);
    chain.push_back(mode == RaiseMode::relative ? L.frobenius(static_cast<int>(a.N - l)) : L);
  }
  return chain;
}

}  // namespace

LatticeChain sigma(const TwistedLinearIdeal& I, const Coweight& lambda) {
  return build_chain(I, lambda, RaiseMode::relative);
}

LatticeChain sigma_absolute(const TwistedLinearIdeal& I, const Coweight& lambda) {
  return build_chain(I, lambda, RaiseMode::absolute);
}

Partition schubert_image(const TwistedLinearIdeal& I, const Coweight& lambda) {
  return invariants(sigma(I, lambda).back());
}

bool big_cell_test(const TwistedLinearIdeal& I, const Coweight& lambda) {
  return schubert_image(I, lambda) == normalize(lambda).lambda_tilde;
}

TwistedLinearIdeal pn_charts(const FieldElement& a, const FieldElement& c, const FieldElement& d, Chart chart) {
  if (c.is_zero() && d.is_zero()) throw std::invalid_argument("(c:d) must not be (0:0)");
  const auto F = a.params();
  const AmbientParams amb(F, 2, 2);
  const auto ap = a.frobenius(1);
  TwistedLinearForm f0(amb, 0), f1(amb, 1);
  const std::size_t x = chart == Chart::phi ? 0 : 1;  // the variable carrying the "a" coefficient at level 0
  const std::size_t y = 1 - x;
  f0.set(x, 0, a);
  f0.set(y, 0, F.one());
  f1.set(x, 0, chart == Chart::phi ? c : -c);
  f1.set(x, 1, d * ap);
  f1.set(y, 1, d);
  return TwistedLinearIdeal(amb, {f0, f1});
}

bool chart_coordinates(const LatticeChain& chain, ChartCoordinates& out) {
  if (chain.size() != 3) throw std::invalid_argument("chart coordinates need a chain of length 2");
  const auto& amb = chain[1].ambient();
  if (amb.n != 2 || amb.N != 2) throw std::invalid_argument("chart coordinates need n = N = 2");
  const auto F = amb.field;
  auto dual = [&](const Lattice& L) { return nullspace(F, L.space().basis(), amb.num_vars()); };
  const auto ann1 = dual(chain[1]);
  const auto ann2 = dual(chain[2]);
  if (ann1.size() != 1 || ann2.size() != 2) return false;
  // Coordinates: 0 = e_{1,0}, 1 = e_{2,0}, 2 = e_{1,1}, 3 = e_{2,1}.
  Vector alpha = ann1[0];
  if (alpha[1].is_zero() || !alpha[2].is_zero() || !alpha[3].is_zero()) return false;
  const auto s = alpha[1].inverse();
  for (auto& x : alpha) x *= s;
  const Subspace A2 = Subspace::span(F, amb.num_vars(), ann2);
  if (!A2.contains(alpha)) return false;
  Vector beta;
  for (const auto& v : ann2) {
    Vector w = v;
    const auto t = w[1];
    for (std::size_t k = 0; k < w.size(); ++k) w[k] -= t * alpha[k];
    if (!is_zero(w)) {
      beta = w;
      break;
    }
  }
  if (beta.empty()) return false;
  const auto& lead = !beta[3].is_zero() ? beta[3] : beta[0];
  if (lead.is_zero()) return false;
  const auto inv = lead.inverse();
  for (auto& x : beta) x *= inv;
  const auto a = alpha[0];
  if (beta[2] != beta[3] * a) return false;
  out = ChartCoordinates{a, beta[0], beta[3]};
  return true;
}

bool TheoremReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.passed; });
}

TheoremReport verify_theorems(const Coweight& lambda, const FieldParams& field, const EnumerationOptions& opt) {
  TheoremReport rep;
  rep.lambda = lambda;
  rep.predicted = count_points(lambda, field);
  const auto ms = standard_decomposition(lambda);
  const auto lt = normalize(lambda).lambda_tilde;

  std::set<LatticeChain> images;
  std::uint64_t members = 0, valid = 0, agree = 0, below = 0, abs_agree = 0, jumps_agree = 0;
  std::string first_disagreement;
  enumerate_points(lambda, field, opt, [&](const DemazurePoint& pt) {
    ++rep.enumerated;
    if (is_member_T(pt.ideal, lambda).member) ++members;
    const auto chain = sigma(pt.ideal, lambda);
    if (validate_chain(chain, ms)) ++valid;
    if (sigma_absolute(pt.ideal, lambda) == chain) ++abs_agree;
    images.insert(chain);

    const auto image = invariants(chain.back());
    const auto jumps = codimension_jumps(chain.back());
    if (dual_partition(jumps, lambda.size()) == image) ++jumps_agree;
    if (bruhat_leq(image, lt)) ++below;

    const bool big = image == lt;
    if (big) ++rep.big_cell;
    const auto rad = radical_oracle(pt.ideal);
    if (rad.stable && rad.reduced == big && is_reduced(pt.ideal) == big) {
      ++agree;
    } else if (first_disagreement.empty()) {
      first_disagreement = "first disagreement at point " + std::to_string(rep.enumerated);
    }
    return true;
  });

  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back(TheoremCheck{std::move(name), ok, std::move(detail)});
  };
  add("point_count", rep.enumerated == rep.predicted && members == rep.enumerated,
      std::to_string(rep.enumerated) + " points, " + std::to_string(rep.predicted) + " predicted, " +
          std::to_string(members) + " satisfy the membership test");
  add("sigma_bijective_onto_valid_chains",
      images.size() == rep.enumerated && valid == rep.enumerated && abs_agree == rep.enumerated,
      std::to_string(images.size()) + " distinct images, " + std::to_string(valid) + " valid, " +
          std::to_string(abs_agree) + " agree with the absolute-raise construction");
  const auto chains = enumerate_chains(lambda, field);
  rep.chains = chains.size();
  const std::set<LatticeChain> all(chains.begin(), chains.end());
  add("chain_count", rep.chains == rep.predicted && all == images,
      std::to_string(rep.chains) + " chains found by direct enumeration");
  add("big_cell_iff_reduced", agree == rep.enumerated,
      std::to_string(rep.big_cell) + " big-cell points; " +
          (first_disagreement.empty() ? std::string("oracle agrees everywhere") : first_disagreement));
  add("schubert_image_below_lambda", below == rep.enumerated && jumps_agree == rep.enumerated,
      std::to_string(below) + " images below lambda_tilde, " + std::to_string(jumps_agree) +
          " match the codimension jumps");
  return rep;
}

}  // namespace twlat
