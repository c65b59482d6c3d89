#include "twlat/graded_ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace twlat {

AmbientParams::AmbientParams(FieldParams f, std::size_t n_, std::size_t N_) : field(f), n(n_), N(N_) {
  if (n < 2 || N < 1) throw std::invalid_argument("ambient needs n >= 2 and N >= 1");
}

TwistedLinearForm::TwistedLinearForm(AmbientParams ambient, std::size_t level)
    : amb_(ambient), level_(level), c_(zero_vector(ambient.field, ambient.num_vars())) {}

TwistedLinearForm::TwistedLinearForm(AmbientParams ambient, std::size_t level, Vector coeffs)
    : amb_(ambient), level_(level), c_(std::move(coeffs)) {
  if (c_.size() != amb_.num_vars()) throw std::invalid_argument("form coefficient vector has wrong length");
  for (std::size_t i = 0; i < amb_.n; ++i)
    for (std::size_t j = 0; j < amb_.N; ++j) {
      const auto& c = c_[amb_.var(i, j)];
      if (c.params() != amb_.field) throw std::invalid_argument("form coefficient over the wrong field");
      if (j > max_j() && !c.is_zero()) throw std::invalid_argument("form has a term x_{i,j} with j above its level");
    }
}

TwistedLinearForm TwistedLinearForm::variable(AmbientParams ambient, std::size_t i, std::size_t j, std::size_t level) {
  TwistedLinearForm f(ambient, level);
  f.set(i, j, ambient.field.one());
  return f;
}

void TwistedLinearForm::set(std::size_t i, std::size_t j, const FieldElement& c) {
  if (i >= amb_.n || j >= amb_.N) throw std::out_of_range("variable index out of range");
  if (j > max_j() && !c.is_zero()) throw std::invalid_argument("term x_{i,j} with j above the form's level");
  c_[amb_.var(i, j)] = c;
}

std::uint64_t TwistedLinearForm::degree() const {
  std::uint64_t d = 1;
  for (std::size_t k = 0; k < level_; ++k) d *= static_cast<std::uint64_t>(amb_.field.p());
  return d;
}

TwistedLinearForm TwistedLinearForm::operator+(const TwistedLinearForm& o) const {
  if (amb_ != o.amb_ || level_ != o.level_) throw std::invalid_argument("adding forms of different shape");
  TwistedLinearForm r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

TwistedLinearForm TwistedLinearForm::operator*(const FieldElement& s) const {
  TwistedLinearForm r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

TwistedLinearForm frob_raise(const TwistedLinearForm& f, std::size_t k, RaiseMode mode) {
  Vector c = mode == RaiseMode::absolute ? frobenius(f.coeffs(), static_cast<int>(k)) : f.coeffs();
  return TwistedLinearForm(f.ambient(), f.level() + k, std::move(c));
}

TwistedLinearForm z_sharp(const TwistedLinearForm& f) {
  const auto& a = f.ambient();
  TwistedLinearForm r(a, f.level());
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 1; j <= f.max_j(); ++j) r.set(i, j - 1, f.coeff(i, j));
  return r;
}

TwistedLinearForm group_act(const TwistedMatrix& g, const TwistedLinearForm& f) {
  const auto& a = f.ambient();
  if (g.size() != a.n || g.length() != a.N || g.field() != a.field)
    throw std::invalid_argument("matrix does not match the ambient of the form");
  // x_{i,t} -> sum_k sum_{s+b=t} g_{ik,s}^(p^b) x_{k,b}^(p^s); at level l the
  // term x_{i,t}^(p^(l-t)) contributes g_{ik,t-b}^(p^(b+l-t)) to (k, b).
  TwistedLinearForm r(a, f.level());
  Vector c = r.coeffs();
  const std::size_t l = f.level();
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t t = 0; t <= f.max_j(); ++t) {
      const auto& ct = f.coeff(i, t);
      if (ct.is_zero()) continue;
      for (std::size_t k = 0; k < a.n; ++k)
        for (std::size_t b = 0; b <= t; ++b) {
          const auto& gs = g(i, k)[t - b];
          if (gs.is_zero()) continue;
          c[a.var(k, b)] += ct * gs.frobenius(static_cast<int>(b + l - t));
        }
    }
  return TwistedLinearForm(a, l, std::move(c));
}

TwistedLinearForm base_change(const TwistedLinearForm& f, const FieldEmbedding& emb, const AmbientParams& target) {
  if (target.n != f.ambient().n || target.N != f.ambient().N || target.field != emb.target())
    throw std::invalid_argument("base change target ambient mismatch");
  Vector c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(emb(x));
  return TwistedLinearForm(target, f.level(), std::move(c));
}

TwistedLinearIdeal::TwistedLinearIdeal(AmbientParams ambient) : TwistedLinearIdeal(ambient, {}) {}

TwistedLinearIdeal::TwistedLinearIdeal(AmbientParams ambient, std::vector<TwistedLinearForm> generators)
    : amb_(ambient), gens_(std::move(generators)) {
  std::size_t top = amb_.N - 1;
  for (const auto& g : gens_) {
    if (g.ambient() != amb_) throw std::invalid_argument("generator ambient mismatch");
    top = std::max(top, g.level());
  }
  Subspace cur(amb_.field, amb_.num_vars());
  for (std::size_t l = 0; l <= top; ++l) {
    cur = cur.frobenius(1);
    for (const auto& g : gens_)
      if (g.level() == l) cur.insert(g.coeffs());
    levels_.push_back(cur);
  }
}

Subspace TwistedLinearIdeal::level_space(std::size_t l) const {
  if (l < levels_.size()) return levels_[l];
  return levels_.back().frobenius(static_cast<int>(l - top_level()));
}

Subspace TwistedLinearIdeal::raised_space(std::size_t l) const {
  if (l == 0) return Subspace(amb_.field, amb_.num_vars());
  return level_space(l - 1).frobenius(1);
}

bool TwistedLinearIdeal::operator==(const TwistedLinearIdeal& o) const {
  if (amb_ != o.amb_) return false;
  const std::size_t top = std::max(top_level(), o.top_level());
  for (std::size_t l = 0; l <= top; ++l)
    if (level_space(l) != o.level_space(l)) return false;
  return true;
}

std::vector<TwistedLinearForm> level_intersection(const TwistedLinearIdeal& I, std::size_t l) {
  std::vector<TwistedLinearForm> out;
  const auto B = I.level_space(l);
  for (const auto& v : B.basis()) out.emplace_back(I.ambient(), l, v);
  return out;
}

TwistedLinearIdeal group_act(const TwistedMatrix& g, const TwistedLinearIdeal& I) {
  std::vector<TwistedLinearForm> gens;
  for (const auto& f : I.generators()) gens.push_back(group_act(g, f));
  return TwistedLinearIdeal(I.ambient(), std::move(gens));
}

TwistedLinearIdeal base_change(const TwistedLinearIdeal& I, const FieldEmbedding& emb) {
  AmbientParams target(emb.target(), I.ambient().n, I.ambient().N);
  std::vector<TwistedLinearForm> gens;
  for (const auto& f : I.generators()) gens.push_back(base_change(f, emb, target));
  return TwistedLinearIdeal(target, std::move(gens));
}

std::vector<std::int64_t> hilbert_function(const TwistedLinearIdeal& I, std::size_t max_degree) {
  const auto& a = I.ambient();
  const std::size_t p = static_cast<std::size_t>(a.field.p());
  std::vector<std::int64_t> h(max_degree + 1, 0);
  h[0] = 1;
  // Denominator: each variable x_{i,j} contributes 1/(1 - t^(p^j)).
  std::size_t pj = 1;
  for (std::size_t j = 0; j < a.N; ++j, pj *= p)
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t d = pj; d <= max_degree; ++d) h[d] += h[d - pj];
  // Numerator: the new classes at level l form a regular sequence of degree p^l.
  std::size_t pl = 1;
  std::size_t prev = 0;
  for (std::size_t l = 0; l <= I.top_level(); ++l, pl = std::min(pl * p, max_degree + 1)) {
    const std::size_t dim = I.level_dim(l);
    if (dim < prev) throw std::logic_error("level dimensions decrease; ideal is not admissible");
    for (std::size_t c = 0; c < dim - prev; ++c)
      for (std::size_t d = max_degree + 1; d-- > pl;) h[d] -= h[d - pl];
    prev = dim;
  }
  return h;
}

namespace {

Vector z_sharp_vector(const AmbientParams& a, const Vector& v) {
  Vector r = zero_vector(a.field, a.num_vars());
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 1; j < a.N; ++j) r[a.var(i, j - 1)] = v[a.var(i, j)];
  return r;
}

}  // namespace

bool is_lattice_scheme(const TwistedLinearIdeal& I) {
  for (std::size_t l = 0; l <= I.top_level(); ++l) {
    const auto B = I.level_space(l);
    for (const auto& v : B.basis())
      if (!B.contains(z_sharp_vector(I.ambient(), v))) return false;
  }
  return true;
}

MembershipResult is_member_T(const TwistedLinearIdeal& I, const Coweight& lambda) {
  const auto& a = I.ambient();
  const auto nz = normalize(lambda);
  if (lambda.size() != a.n || static_cast<std::size_t>(nz.N) != a.N)
    throw std::invalid_argument("ideal ambient (n, N) does not match the coweight");
  const auto ms = standard_decomposition(lambda);
  MembershipResult res;
  res.hilbert_condition = true;
  std::size_t expected = 0;
  for (std::size_t l = 0; l <= I.top_level(); ++l) {
    if (l < a.N) expected += static_cast<std::size_t>(ms.sizes[l]);
    if (I.level_dim(l) != expected) {
      res.hilbert_condition = false;
      res.diagnostic = "condition (a) fails: dim I∩F^(" + std::to_string(l) + ") = " +
                       std::to_string(I.level_dim(l)) + ", expected " + std::to_string(expected);
      break;
    }
  }
  res.chain_condition = true;
  for (std::size_t l = 1; l <= I.top_level() && res.chain_condition; ++l) {
    const auto raised = I.raised_space(l);
    const auto B = I.level_space(l);
    for (const auto& v : B.basis()) {
      if (raised.contains(z_sharp_vector(a, v))) continue;
      res.chain_condition = false;
      std::string msg = "condition (b) fails at level " + std::to_string(l) +
                        ": z# of an element of I∩F^(" + std::to_string(l) +
                        ") is not in the raise of I∩F^(" + std::to_string(l - 1) + ")";
      res.diagnostic = res.diagnostic.empty() ? msg : res.diagnostic + "; " + msg;
      break;
    }
  }
  res.member = res.hilbert_condition && res.chain_condition;
  return res;
}

bool is_reduced(const TwistedLinearIdeal& I) {
  const auto& a = I.ambient();
  for (std::size_t l = 1; l <= I.top_level(); ++l) {
    const std::size_t jump = I.level_dim(l) - I.level_dim(l - 1);
    if (l >= a.N) {
      if (jump != 0) return false;
      continue;
    }
    std::vector<Vector> proj;
    const auto B = I.level_space(l);
    for (const auto& v : B.basis()) {
      Vector w;
      for (std::size_t i = 0; i < a.n; ++i) w.push_back(v[a.var(i, l)]);
      proj.push_back(std::move(w));
    }
    if (rank(a.field, proj, a.n) != jump) return false;
  }
  return true;
}

TwistedLinearIdeal standard_ideal(const Coweight& lambda, const FieldParams& field) {
  const auto nz = normalize(lambda);
  if (nz.N == 0) throw std::invalid_argument("standard ideal needs N >= 1");
  AmbientParams a(field, lambda.size(), static_cast<std::size_t>(nz.N));
  std::vector<TwistedLinearForm> gens;
  for (std::size_t i = 0; i + 1 < a.n; ++i)
    for (int j = 0; j < nz.lambda_tilde[i]; ++j)
      gens.push_back(TwistedLinearForm::variable(a, i, static_cast<std::size_t>(j), static_cast<std::size_t>(j)));
  return TwistedLinearIdeal(a, std::move(gens));
}

}  // namespace twlat
