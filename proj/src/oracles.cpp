#include "twlat/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace twlat {

std::uint64_t PolyRing::degree(const Monomial& m) const {
  std::uint64_t d = 0;
  for (std::size_t k = 0; k < m.size(); ++k) d += m[k] * weights[k];
  return d;
}

PolyRing ambient_ring(const AmbientParams& a) {
  PolyRing r{a.field, {}};
  for (std::size_t i = 0; i < a.n; ++i) {
    std::uint64_t w = 1;
    for (std::size_t j = 0; j < a.N; ++j, w *= static_cast<std::uint64_t>(a.field.p())) r.weights.push_back(w);
  }
  return r;
}

// ---------------------------------------------------------------------------
// DensePolynomial

DensePolynomial::DensePolynomial(PolyRing ring) : ring_(std::move(ring)) {}

DensePolynomial DensePolynomial::constant(PolyRing ring, const FieldElement& c) {
  DensePolynomial f(ring);
  f.add_term(Monomial(f.ring_.num_vars(), 0), c);
  return f;
}

DensePolynomial DensePolynomial::variable(PolyRing ring, std::size_t k) {
  DensePolynomial f(ring);
  Monomial m(f.ring_.num_vars(), 0);
  m.at(k) = 1;
  f.add_term(m, f.ring_.field.one());
  return f;
}

DensePolynomial DensePolynomial::monomial(PolyRing ring, const Monomial& m, const FieldElement& c) {
  DensePolynomial f(ring);
  f.add_term(m, c);
  return f;
}

std::optional<std::uint64_t> DensePolynomial::homogeneous_degree() const {
  std::optional<std::uint64_t> d;
  for (const auto& [m, c] : terms_) {
    const auto dm = ring_.degree(m);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

void DensePolynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (m.size() != ring_.num_vars()) throw std::invalid_argument("monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DensePolynomial DensePolynomial::operator+(const DensePolynomial& o) const {
  DensePolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

DensePolynomial DensePolynomial::operator-(const DensePolynomial& o) const {
  DensePolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

DensePolynomial DensePolynomial::operator*(const DensePolynomial& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("multiplying polynomials from different rings");
  DensePolynomial r(ring_);
  Monomial m(ring_.num_vars());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = static_cast<std::uint16_t>(ma[k] + mb[k]);
      r.add_term(m, ca * cb);
    }
  return r;
}

DensePolynomial DensePolynomial::operator*(const FieldElement& s) const {
  DensePolynomial r(ring_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

DensePolynomial DensePolynomial::pow(std::uint64_t e) const {
  DensePolynomial result = constant(ring_, ring_.field.one());
  DensePolynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

DensePolynomial DensePolynomial::substitute(const std::vector<DensePolynomial>& images) const {
  if (images.size() != ring_.num_vars()) throw std::invalid_argument("substitution needs one image per variable");
  const PolyRing& target = images.front().ring();
  DensePolynomial r(target);
  for (const auto& [m, c] : terms_) {
    DensePolynomial term = constant(target, c);
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k] > 0) term = term * images[k].pow(m[k]);
    r = r + term;
  }
  return r;
}

FieldElement DensePolynomial::evaluate(const std::vector<FieldElement>& point, const FieldEmbedding& emb) const {
  auto v = emb.target().zero();
  for (const auto& [m, c] : terms_) {
    auto t = emb(c);
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k] > 0) t *= point[k].pow(m[k]);
    v += t;
  }
  return v;
}

DensePolynomial to_dense(const TwistedLinearForm& f) {
  const auto& a = f.ambient();
  const auto ring = ambient_ring(a);
  DensePolynomial g(ring);
  std::uint64_t p = static_cast<std::uint64_t>(a.field.p());
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j <= f.max_j(); ++j) {
      std::uint64_t e = 1;
      for (std::size_t t = j; t < f.level(); ++t) e *= p;
      if (e > 0xffff) throw std::length_error("exponent too large for the dense oracle");
      Monomial m(ring.num_vars(), 0);
      m[a.var(i, j)] = static_cast<std::uint16_t>(e);
      g.add_term(m, f.coeff(i, j));
    }
  return g;
}

std::vector<DensePolynomial> to_dense(const TwistedLinearIdeal& I) {
  std::vector<DensePolynomial> out;
  for (const auto& f : I.generators())
    if (!f.is_zero()) out.push_back(to_dense(f));
  return out;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, std::uint64_t d) {
  std::vector<Monomial> out;
  Monomial m(ring.num_vars(), 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t left) {
    if (k == ring.num_vars()) {
      if (left == 0) out.push_back(m);
      return;
    }
    for (std::uint64_t e = 0; e * ring.weights[k] <= left; ++e) {
      m[k] = static_cast<std::uint16_t>(e);
      rec(k + 1, left - e * ring.weights[k]);
    }
    m[k] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Sparse semi-echelon elimination

namespace {

using Row = SparseEchelon::Row;

// a - s * b, both sorted by column.
Row axpy(const Row& a, const FieldElement& s, const Row& b) {
  Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(s * b[j].second));
      ++j;
    } else {
      auto c = a[i].second - s * b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::insert(Row row) {
  while (!row.empty()) {
    const auto lead = row.front().first;
    const long pr = pivot_row_[lead];
    if (pr < 0) {
      const auto inv = row.front().second.inverse();
      for (auto& e : row) e.second *= inv;
      pivot_row_[lead] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    row = axpy(row, row.front().second, rows_[static_cast<std::size_t>(pr)]);
  }
  return false;
}

Row SparseEchelon::normal_form(Row row) const {
  Row out;
  while (!row.empty()) {
    const auto [col, c] = row.front();
    const long pr = pivot_row_[col];
    if (pr < 0) {
      out.push_back(row.front());
      row.erase(row.begin());
    } else {
      row = axpy(row, c, rows_[static_cast<std::size_t>(pr)]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graded pieces

GradedPiece::GradedPiece(const PolyRing& ring, std::uint64_t d, const std::function<bool(const Monomial&)>& last)
    : ring_(ring), d_(d), ech_(0) {
  auto all = monomials_of_degree(ring, d);
  if (last) std::stable_partition(all.begin(), all.end(), [&](const Monomial& m) { return !last(m); });
  first_last_ = last ? static_cast<std::size_t>(
                           std::count_if(all.begin(), all.end(), [&](const Monomial& m) { return !last(m); }))
                     : all.size();
  monos_ = std::move(all);
  for (std::size_t k = 0; k < monos_.size(); ++k) index_.emplace(monos_[k], k);
  ech_ = SparseEchelon(monos_.size());
}

SparseEchelon::Row GradedPiece::to_row(const DensePolynomial& f) const {
  Row row;
  for (const auto& [m, c] : f.terms()) {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("polynomial is not homogeneous of the piece's degree");
    row.emplace_back(it->second, c);
  }
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

bool GradedPiece::insert(const DensePolynomial& f) { return ech_.insert(to_row(f)); }

bool GradedPiece::insert_product(const Monomial& m, const DensePolynomial& g) {
  Row row;
  Monomial t(m.size());
  for (const auto& [mg, c] : g.terms()) {
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = static_cast<std::uint16_t>(m[k] + mg[k]);
    row.emplace_back(index_.at(t), c);
  }
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return ech_.insert(std::move(row));
}

SparseEchelon::Row GradedPiece::normal_form(const DensePolynomial& f) const { return ech_.normal_form(to_row(f)); }

std::vector<DensePolynomial> GradedPiece::rows_led_by_last() const {
  std::vector<DensePolynomial> out;
  for (const auto& row : ech_.rows()) {
    if (row.front().first < first_last_) continue;
    DensePolynomial f(ring_);
    for (const auto& [col, c] : row) f.add_term(monos_[col], c);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Monomial> GradedPiece::standard_monomials() const {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < monos_.size(); ++k)
    if (!ech_.is_pivot(k)) out.push_back(monos_[k]);
  return out;
}

GradedPiece naive_graded_component(const std::vector<DensePolynomial>& gens, std::uint64_t d,
                                   const std::function<bool(const Monomial&)>& last) {
  if (gens.empty()) throw std::invalid_argument("naive_graded_component needs the ring from at least one generator");
  const PolyRing& ring = gens.front().ring();
  GradedPiece piece(ring, d, last);
  std::map<std::uint64_t, std::vector<Monomial>> cofactors;
  for (const auto& g : gens) {
    const auto dg = g.homogeneous_degree();
    if (!dg) throw std::invalid_argument("generators must be nonzero and homogeneous");
    if (*dg > d) continue;
    auto it = cofactors.find(d - *dg);
    if (it == cofactors.end()) it = cofactors.emplace(d - *dg, monomials_of_degree(ring, d - *dg)).first;
    for (const auto& m : it->second) piece.insert_product(m, g);
  }
  return piece;
}

namespace {

bool is_pure_power(const Monomial& m) {
  return std::count_if(m.begin(), m.end(), [](std::uint16_t e) { return e != 0; }) == 1;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Subspace naive_intersection(const TwistedLinearIdeal& I, std::size_t l) {
  const auto& a = I.ambient();
  Subspace out(a.field, a.num_vars());
  const auto gens = to_dense(I);
  if (gens.empty()) return out;
  const auto piece = naive_graded_component(gens, ipow(static_cast<std::uint64_t>(a.field.p()), l), is_pure_power);
  for (const auto& f : piece.rows_led_by_last()) {
    Vector v = zero_vector(a.field, a.num_vars());
    for (const auto& [m, c] : f.terms())
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] != 0) v[k] = c;
    out.insert(v);
  }
  return out;
}

std::int64_t naive_hilbert(const TwistedLinearIdeal& I, std::uint64_t d) {
  const auto ring = ambient_ring(I.ambient());
  const auto total = static_cast<std::int64_t>(monomials_of_degree(ring, d).size());
  const auto gens = to_dense(I);
  if (gens.empty()) return total;
  return total - static_cast<std::int64_t>(naive_graded_component(gens, d).rank());
}

// ---------------------------------------------------------------------------
// Point sets and vanishing forms

std::vector<std::vector<FieldElement>> point_set(const TwistedLinearIdeal& I, int r, const OracleCaps& caps) {
  const auto& a = I.ambient();
  const auto base = a.field;
  std::uint64_t size = 1;
  for (int t = 0; t < r; ++t) {
    size *= base.q();
    if (size > caps.max_field) throw std::length_error("extension field exceeds the oracle cap");
  }
  const auto ext = r == 1 ? base : base.extension(r);
  const FieldEmbedding emb(base, ext);
  const auto elems = all_elements(ext);
  const auto gens = to_dense(I);

  // Assign coordinates level by level (j-major) so low-level generators prune early.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < a.N; ++j)
    for (std::size_t i = 0; i < a.n; ++i) order.push_back(a.var(i, j));
  std::vector<std::size_t> position(a.num_vars());
  for (std::size_t t = 0; t < order.size(); ++t) position[order[t]] = t;
  std::vector<std::vector<std::size_t>> check_at(order.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::size_t last = 0;
    for (const auto& [m, c] : gens[g].terms())
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] != 0) last = std::max(last, position[k]);
    check_at[last].push_back(g);
  }

  std::vector<std::vector<FieldElement>> out;
  std::vector<FieldElement> point(a.num_vars(), ext.zero());
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == order.size()) {
      if (out.size() >= caps.max_points) throw std::length_error("point set exceeds the oracle cap");
      out.push_back(point);
      return;
    }
    for (const auto& x : elems) {
      point[order[t]] = x;
      bool ok = true;
      for (auto g : check_at[t])
        if (!gens[g].evaluate(point, emb).is_zero()) {
          ok = false;
          break;
        }
      if (ok) rec(t + 1);
    }
    point[order[t]] = ext.zero();
  };
  rec(0);
  return out;
}

Subspace vanishing_forms(const std::vector<std::vector<FieldElement>>& points, const AmbientParams& a, std::size_t l) {
  const std::size_t jmax = std::min(l, a.N - 1);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j <= jmax; ++j) cols.push_back(a.var(i, j));
  Subspace rows(a.field, cols.size());
  for (const auto& pt : points) {
    Vector v;
    for (auto k : cols) v.push_back(pt[k].frobenius(static_cast<int>(l - k % a.N)));
    rows.insert(v);
    if (rows.dim() == cols.size()) break;
  }
  Subspace out(a.field, a.num_vars());
  for (const auto& ker : nullspace(a.field, rows.basis(), cols.size())) {
    Vector v = zero_vector(a.field, a.num_vars());
    for (std::size_t t = 0; t < cols.size(); ++t) v[cols[t]] = ker[t];
    out.insert(v);
  }
  return out;
}

RadicalReport radical_oracle(const TwistedLinearIdeal& I, const OracleCaps& caps) {
  const auto& a = I.ambient();
  RadicalReport rep;
  for (std::size_t l = 0; l <= I.top_level(); ++l) rep.ideal_dims.push_back(I.level_dim(l));
  const std::uint64_t top_degree = ipow(static_cast<std::uint64_t>(a.field.p()), I.top_level());
  std::vector<std::size_t> previous;
  std::uint64_t prev_size = 0;
  for (int r = 1;; ++r) {
    std::vector<std::vector<FieldElement>> pts;
    try {
      pts = point_set(I, r, caps);
    } catch (const std::length_error&) {
      break;
    }
    const auto ext = r == 1 ? a.field : a.field.extension(r);
    const AmbientParams ae(ext, a.n, a.N);
    std::vector<std::size_t> dims;
    for (std::size_t l = 0; l <= I.top_level(); ++l) dims.push_back(vanishing_forms(pts, ae, l).dim());
    rep.degree = r;
    rep.vanishing_dims = dims;
    if (dims == rep.ideal_dims) {
      rep.reduced = true;
      rep.stable = true;
      return rep;
    }
    // A stable excess is only trusted once the fields are larger than every degree involved.
    if (dims == previous && prev_size > top_degree) {
      rep.stable = true;
      return rep;
    }
    previous = dims;
    prev_size = ext.q();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Ideals over F_q or F_q[eps], eps^2 = 0, as F_q-subspaces of graded pieces.

namespace {

struct RPoly {
  DensePolynomial p0;  // constant part
  DensePolynomial p1;  // eps part
};

class RPiece {
 public:
  RPiece(const PolyRing& ring, std::uint64_t d, bool dual, const std::function<bool(const Monomial&)>& last = nullptr)
      : ring_(ring), dual_(dual), ech_(0) {
    monos_ = monomials_of_degree(ring, d);
    if (last) std::stable_partition(monos_.begin(), monos_.end(), [&](const Monomial& m) { return !last(m); });
    free_ = last ? static_cast<std::size_t>(
                       std::count_if(monos_.begin(), monos_.end(), [&](const Monomial& m) { return !last(m); }))
                 : monos_.size();
    for (std::size_t k = 0; k < monos_.size(); ++k) index_.emplace(monos_[k], k);
    ech_ = SparseEchelon(monos_.size() * (dual ? 2 : 1));
  }

  std::size_t num_monomials() const { return monos_.size(); }
  std::size_t dim() const { return ech_.rank(); }
  const SparseEchelon& echelon() const { return ech_; }

  // Columns: [A free][eps A free][A last][eps A last].
  std::size_t col(std::size_t idx, bool eps) const {
    if (!dual_) return idx;
    const std::size_t M = monos_.size();
    if (idx < free_) return eps ? free_ + idx : idx;
    return eps ? M + idx : free_ + idx;
  }
  std::pair<std::size_t, bool> uncol(std::size_t c) const {
    if (!dual_) return {c, false};
    const std::size_t M = monos_.size();
    if (c < free_) return {c, false};
    if (c < 2 * free_) return {c - free_, true};
    if (c < M + free_) return {c - free_, false};
    return {c - M, true};
  }
  bool is_last_col(std::size_t c) const { return uncol(c).first >= free_; }

  Row row_of(const RPoly& f) const {
    Row row;
    for (const auto& [m, c] : f.p0.terms()) row.emplace_back(col(index_.at(m), false), c);
    if (dual_)
      for (const auto& [m, c] : f.p1.terms()) row.emplace_back(col(index_.at(m), true), c);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return row;
  }
  RPoly poly_of(const Row& row) const {
    RPoly f{DensePolynomial(ring_), DensePolynomial(ring_)};
    for (const auto& [c, v] : row) {
      auto [idx, eps] = uncol(c);
      (eps ? f.p1 : f.p0).add_term(monos_[idx], v);
    }
    return f;
  }
  Row unit(std::size_t idx, bool eps) const { return Row{{col(idx, eps), ring_.field.one()}}; }
  std::size_t index(const Monomial& m) const { return index_.at(m); }

  bool insert(const RPoly& f) { return ech_.insert(row_of(f)); }
  Row normal_form(const RPoly& f) const { return ech_.normal_form(row_of(f)); }
  Row normal_form(const Row& r) const { return ech_.normal_form(r); }

  /// Canonical key: the reduced echelon basis of the subspace.
  std::vector<std::uint32_t> key() const {
    Subspace s(ring_.field, ech_.num_cols());
    for (const auto& row : ech_.rows()) {
      Vector v = zero_vector(ring_.field, ech_.num_cols());
      for (const auto& [c, x] : row) v[c] = x;
      s.insert(v);
    }
    std::vector<std::uint32_t> k{static_cast<std::uint32_t>(s.dim())};
    for (const auto& v : s.basis())
      for (const auto& x : v) k.push_back(x.index());
    return k;
  }

 private:
  PolyRing ring_;
  bool dual_;
  std::vector<Monomial> monos_;
  std::map<Monomial, std::size_t> index_;
  std::size_t free_ = 0;
  SparseEchelon ech_;
};

struct RIdeal {
  PolyRing ring;
  bool dual;
  std::vector<RPoly> gens;
};

RPoly times_monomial(const RPoly& f, const Monomial& m) {
  const auto mono = DensePolynomial::monomial(f.p0.ring(), m, f.p0.ring().field.one());
  return RPoly{f.p0 * mono, f.p1 * mono};
}

std::uint64_t rdegree(const RPoly& f) {
  auto d = f.p0.homogeneous_degree();
  if (!d) d = f.p1.homogeneous_degree();
  if (!d) throw std::invalid_argument("generator must be homogeneous and nonzero");
  return *d;
}

RPiece piece_of(const RIdeal& I, std::uint64_t d, const std::function<bool(const Monomial&)>& last = nullptr) {
  RPiece piece(I.ring, d, I.dual, last);
  for (const auto& g : I.gens) {
    const auto dg = rdegree(g);
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(I.ring, d - dg)) {
      const auto mg = times_monomial(g, m);
      piece.insert(mg);
      if (I.dual) piece.insert(RPoly{DensePolynomial(I.ring), mg.p0});
    }
  }
  return piece;
}

// Checks that the bihomogeneous pieces of P lie in I_{d1}⊗A + A⊗I_{d2} over R.
bool additive_member(const RIdeal& I, const RPoly& P, std::size_t nv, std::uint64_t total,
                     std::map<std::uint64_t, RPiece>& cache) {
  auto piece_at = [&](std::uint64_t d) -> const RPiece& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, piece_of(I, d)).first;
    return it->second;
  };
  auto split = [&](const Monomial& m) {
    Monomial a(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(nv));
    Monomial b(m.begin() + static_cast<std::ptrdiff_t>(nv), m.end());
    return std::make_pair(a, b);
  };
  // Group terms by bidegree.
  std::map<std::uint64_t, std::vector<std::tuple<Monomial, Monomial, FieldElement, bool>>> by_degree;
  for (int part = 0; part < 2; ++part) {
    const auto& poly = part == 0 ? P.p0 : P.p1;
    for (const auto& [m, c] : poly.terms()) {
      auto [a, b] = split(m);
      by_degree[I.ring.degree(a)].emplace_back(a, b, c, part == 1);
    }
  }
  for (const auto& [d1, terms] : by_degree) {
    const auto& P1 = piece_at(d1);
    const auto& P2 = piece_at(total - d1);
    // Quotient coordinates are the non-pivot columns.
    std::map<std::size_t, std::size_t> q1, q2;
    for (std::size_t c = 0; c < P1.echelon().num_cols(); ++c)
      if (!P1.echelon().is_pivot(c)) q1.emplace(c, q1.size());
    for (std::size_t c = 0; c < P2.echelon().num_cols(); ++c)
      if (!P2.echelon().is_pivot(c)) q2.emplace(c, q2.size());
    const std::size_t dimT = q1.size() * q2.size();
    if (dimT == 0) continue;
    Vector t = zero_vector(I.ring.field, dimT);
    for (const auto& [a, b, c, eps] : terms) {
      const auto na = P1.normal_form(P1.unit(P1.index(a), eps));
      const auto nb = P2.normal_form(P2.unit(P2.index(b), false));
      for (const auto& [ca, va] : na)
        for (const auto& [cb, vb] : nb) t[q1.at(ca) * q2.size() + q2.at(cb)] += c * va * vb;
    }
    if (is_zero(t)) continue;
    if (!I.dual) return false;
    // Over F_q[eps] the tensor product is taken modulo eps a ⊗ b - a ⊗ eps b.
    Subspace E(I.ring.field, dimT);
    for (const auto& [c1, i1] : q1)
      for (const auto& [c2, i2] : q2) {
        Vector v = zero_vector(I.ring.field, dimT);
        auto [idx1, e1] = P1.uncol(c1);
        auto [idx2, e2] = P2.uncol(c2);
        if (!e1)
          for (const auto& [c, x] : P1.normal_form(P1.unit(idx1, true))) v[q1.at(c) * q2.size() + i2] += x;
        if (!e2)
          for (const auto& [c, x] : P2.normal_form(P2.unit(idx2, true))) v[i1 * q2.size() + q2.at(c)] -= x;
        E.insert(v);
      }
    if (!E.contains(t)) return false;
  }
  return true;
}

bool comult_stable(const RIdeal& I, const AmbientParams& a) {
  const std::size_t nv = a.num_vars();
  // a#: x_k -> x_k + x'_k in the doubled ring.
  PolyRing ring2{a.field, I.ring.weights};
  ring2.weights.insert(ring2.weights.end(), I.ring.weights.begin(), I.ring.weights.end());
  std::vector<DensePolynomial> add_images;
  for (std::size_t k = 0; k < nv; ++k)
    add_images.push_back(DensePolynomial::variable(ring2, k) + DensePolynomial::variable(ring2, nv + k));
  // m#: x_{i,j} -> sum_{s+b=j} s_s^(p^b) x_{i,b}^(p^s), scalars appended after x.
  PolyRing ring3{a.field, I.ring.weights};
  for (std::size_t s = 0; s < a.N; ++s) ring3.weights.push_back(1);
  const auto p = static_cast<std::uint64_t>(a.field.p());
  std::vector<DensePolynomial> mul_images;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.N; ++j) {
      DensePolynomial img(ring3);
      for (std::size_t b = 0; b <= j; ++b) {
        const std::size_t s = j - b;
        img = img + DensePolynomial::variable(ring3, nv + s).pow(ipow(p, b)) *
                        DensePolynomial::variable(ring3, a.var(i, b)).pow(ipow(p, s));
      }
      mul_images.push_back(img);
    }

  std::map<std::uint64_t, RPiece> cache;
  for (const auto& g : I.gens) {
    const auto d = rdegree(g);
    RPoly added{g.p0.substitute(add_images), g.p1.is_zero() ? DensePolynomial(ring2) : g.p1.substitute(add_images)};
    if (!additive_member(I, added, nv, d, cache)) return false;

    const DensePolynomial m0 = g.p0.substitute(mul_images);
    const DensePolynomial m1 = g.p1.is_zero() ? DensePolynomial(ring3) : g.p1.substitute(mul_images);
    std::map<Monomial, RPoly> by_scalar;
    for (int part = 0; part < 2; ++part)
      for (const auto& [m, c] : (part == 0 ? m0 : m1).terms()) {
        Monomial sm(m.begin() + static_cast<std::ptrdiff_t>(nv), m.end());
        Monomial xm(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(nv));
        auto it = by_scalar.find(sm);
        if (it == by_scalar.end()) it = by_scalar.emplace(sm, RPoly{DensePolynomial(I.ring), DensePolynomial(I.ring)}).first;
        (part == 0 ? it->second.p0 : it->second.p1).add_term(xm, c);
      }
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, piece_of(I, d)).first;
    for (const auto& [sm, coeff] : by_scalar)
      if (!it->second.normal_form(coeff).empty()) return false;
  }
  return true;
}

DensePolynomial z_sharp_dense(const DensePolynomial& f, const AmbientParams& a) {
  DensePolynomial r(f.ring());
  const auto p = static_cast<std::uint16_t>(a.field.p());
  for (const auto& [m, c] : f.terms()) {
    std::size_t k = m.size();
    for (std::size_t t = 0; t < m.size(); ++t)
      if (m[t] != 0) k = t;
    if (k == m.size() || !is_pure_power(m)) throw std::invalid_argument("z# applies to twisted-linear forms only");
    if (k % a.N == 0) continue;
    Monomial mm(m.size(), 0);
    mm[k - 1] = static_cast<std::uint16_t>(m[k] * p);
    r.add_term(mm, c);
  }
  return r;
}

}  // namespace

bool comult_stability(const TwistedLinearIdeal& I) {
  RIdeal R{ambient_ring(I.ambient()), false, {}};
  for (const auto& g : to_dense(I)) R.gens.push_back(RPoly{g, DensePolynomial(R.ring)});
  return comult_stable(R, I.ambient());
}

DeformationReport deformation_count(const TwistedLinearIdeal& I, DeformationModel model, std::uint64_t degree_bound) {
  const auto& a = I.ambient();
  const auto ring = ambient_ring(a);
  const auto p = static_cast<std::uint64_t>(a.field.p());
  if (degree_bound == 0) degree_bound = ipow(p, a.N) * a.n;
  const auto gens = to_dense(I);
  if (gens.empty()) throw std::invalid_argument("deformation_count needs a nonzero ideal");

  // Base pieces and quotient bases in each generator degree.
  std::vector<std::vector<Monomial>> complements;
  std::vector<std::size_t> base_dims(degree_bound + 1);
  for (std::uint64_t d = 0; d <= degree_bound; ++d) base_dims[d] = naive_graded_component(gens, d).rank();
  std::uint64_t candidates = 1;
  for (const auto& g : gens) {
    complements.push_back(naive_graded_component(gens, *g.homogeneous_degree()).standard_monomials());
    for (std::size_t t = 0; t < complements.back().size(); ++t) {
      candidates *= a.field.q();
      if (candidates > 1000000) throw std::length_error("too many deformation candidates");
    }
  }

  DeformationReport rep;
  rep.candidates = candidates;
  std::set<std::vector<std::uint32_t>> seen;
  const auto elems = all_elements(a.field);
  std::vector<std::size_t> digits;
  for (const auto& c : complements) digits.insert(digits.end(), c.size(), 0);

  for (std::uint64_t n = 0; n < candidates; ++n) {
    // Decode the candidate index into coefficients of h for each generator.
    std::uint64_t x = n;
    for (auto& dgt : digits) {
      dgt = static_cast<std::size_t>(x % a.field.q());
      x /= a.field.q();
    }
    RIdeal R{ring, true, {}};
    std::size_t pos = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      DensePolynomial h(ring);
      for (const auto& m : complements[g]) h.add_term(m, elems[digits[pos++]]);
      R.gens.push_back(RPoly{gens[g], h});
    }

    bool flat = true;
    std::vector<std::uint32_t> key;
    for (std::uint64_t d = 0; d <= degree_bound && flat; ++d) {
      const auto piece = piece_of(R, d);
      if (piece.dim() != 2 * base_dims[d]) flat = false;
      const auto k = piece.key();
      key.insert(key.end(), k.begin(), k.end());
    }
    if (!flat) continue;
    ++rep.flat;

    bool ok = true;
    if (model == DeformationModel::hilbert) {
      ok = comult_stable(R, a);
    } else {
      // Twisted-linear elements: I~_{p^l} ∩ (F^(l) + eps F^(l)) for each level.
      std::vector<std::vector<RPoly>> levels;
      for (std::uint64_t d = 1; d <= degree_bound; d *= p) {
        const auto piece = piece_of(R, d, is_pure_power);
        std::vector<RPoly> forms;
        for (const auto& row : piece.echelon().rows())
          if (piece.is_last_col(row.front().first)) forms.push_back(piece.poly_of(row));
        levels.push_back(std::move(forms));
      }
      // Generated by them, piece by piece.
      RIdeal T{ring, true, {}};
      for (const auto& lv : levels) T.gens.insert(T.gens.end(), lv.begin(), lv.end());
      for (std::uint64_t d = 1; d <= degree_bound && ok; ++d)
        if (piece_of(T, d).dim() != 2 * base_dims[d]) ok = false;
      // z# of the level-l elements lies in the ideal generated in degrees < p^l.
      for (std::size_t l = 1; l < levels.size() && ok; ++l) {
        RIdeal lower{ring, true, {}};
        for (std::size_t m = 0; m < l; ++m) lower.gens.insert(lower.gens.end(), levels[m].begin(), levels[m].end());
        const auto piece = piece_of(lower, ipow(p, l));
        for (const auto& f : levels[l]) {
          RPoly zf{z_sharp_dense(f.p0, a), z_sharp_dense(f.p1, a)};
          if (!piece.normal_form(zf).empty()) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    ++rep.accepted;
    seen.insert(key);
  }
  rep.distinct = seen.size();
  std::uint64_t v = 1;
  int dim = 0;
  while (v < rep.distinct) {
    v *= a.field.q();
    ++dim;
  }
  if (v != rep.distinct) throw std::logic_error("deformation count is not a power of q");
  rep.dimension = dim;
  return rep;
}

}  // namespace twlat
