#include "twlat/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

namespace twlat {

namespace detail {

struct FieldTables {
  int p = 0;
  int e = 0;
  std::uint32_t q = 0;
  std::uint32_t order = 0;  // q - 1
  std::vector<int> modulus;
  std::vector<std::uint32_t> exp;  // length 2*order, exp[k] = g^k
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::int64_t> zech;  // log(1 + g^k), -1 when 1 + g^k = 0
  std::uint32_t log_minus_one = 0;
  std::uint32_t primitive = 0;
  std::vector<std::uint32_t> place;  // p^i
};

}  // namespace detail

namespace {

using detail::FieldTables;

constexpr std::uint32_t kRelaxedMaxQ = 1u << 20;

bool is_small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p, constant term first, no trailing zeros (zero = {}).
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int r = 1;
  for (int k = 0; k < p - 2; ++k) r = r * a % p;
  return r;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

std::vector<int> digits_of(std::uint32_t index, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = static_cast<int>(index % p);
    index /= p;
  }
  return d;
}

std::uint32_t index_of(const std::vector<int>& d, int p) {
  std::uint32_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + static_cast<std::uint32_t>(*it);
  return v;
}

// Multiply a digit vector by x modulo the monic modulus.
std::vector<int> times_x(const std::vector<int>& a, const std::vector<int>& modulus, int p) {
  const int e = static_cast<int>(a.size());
  std::vector<int> r(e, 0);
  const int top = a[e - 1];
  for (int i = e - 1; i >= 1; --i) r[i] = a[i - 1];
  r[0] = 0;
  for (int i = 0; i < e; ++i) r[i] = ((r[i] - top * modulus[i]) % p + p) % p;
  return r;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p) {
  const int e = static_cast<int>(a.size());
  std::vector<int> acc(e, 0);
  std::vector<int> shifted = a;
  for (int i = 0; i < e; ++i) {
    if (b[i] != 0)
      for (int k = 0; k < e; ++k) acc[k] = (acc[k] + b[i] * shifted[k]) % p;
    if (i + 1 < e) shifted = times_x(shifted, modulus, p);
  }
  return acc;
}

std::unique_ptr<FieldTables> build_tables(int p, int e, std::vector<int> modulus) {
  auto t = std::make_unique<FieldTables>();
  t->p = p;
  t->e = e;
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= static_cast<std::uint64_t>(p);
  t->q = static_cast<std::uint32_t>(q);
  t->order = t->q - 1;
  t->modulus = std::move(modulus);
  t->place.resize(e);
  std::uint32_t pl = 1;
  for (int i = 0; i < e; ++i) {
    t->place[i] = pl;
    pl *= static_cast<std::uint32_t>(p);
  }

  // Search for a primitive element among indices 1, 2, ...
  std::vector<std::uint32_t> powers;
  for (std::uint32_t cand = (t->q == 2 ? 1u : 2u); cand < t->q; ++cand) {
    const auto g = digits_of(cand, p, e);
    powers.assign(1, 1);
    auto cur = g;
    while (true) {
      const auto idx = index_of(cur, p);
      if (idx == 1) break;
      powers.push_back(idx);
      cur = poly_mul_mod(cur, g, t->modulus, p);
    }
    if (powers.size() == t->order) {
      t->primitive = cand;
      break;
    }
  }
  if (powers.size() != t->order) throw std::logic_error("no primitive element found");

  t->exp.resize(2 * static_cast<std::size_t>(t->order));
  t->log.assign(t->q, 0);
  for (std::uint32_t k = 0; k < t->order; ++k) {
    t->exp[k] = powers[k];
    t->exp[k + t->order] = powers[k];
    t->log[powers[k]] = k;
  }
  t->log_minus_one = (p == 2) ? 0 : t->order / 2;

  if (p != 2) {
    t->zech.assign(t->order, -1);
    for (std::uint32_t k = 0; k < t->order; ++k) {
      auto d = digits_of(t->exp[k], p, e);
      d[0] = (d[0] + 1) % p;
      const auto idx = index_of(d, p);
      t->zech[k] = idx == 0 ? -1 : static_cast<std::int64_t>(t->log[idx]);
    }
  }
  return t;
}

struct Registry {
  std::mutex mu;
  std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<FieldTables>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::vector<int> default_modulus(int p, int e) {
  if (e == 1) return {0, 1};
  std::uint64_t count = 1;
  for (int i = 0; i < e; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto m = digits_of(static_cast<std::uint32_t>(idx), p, e);
    m.push_back(1);
    if (is_irreducible_mod_p(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool is_irreducible_mod_p(std::span<const int> poly, int p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = digits_of(static_cast<std::uint32_t>(idx), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldParams FieldParams::intern(int p, int e, std::vector<int> modulus, bool relaxed) {
  if (!is_small_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (e < 1) throw std::invalid_argument("field degree must be positive");
  if (!relaxed) {
    if (p > 13) throw std::invalid_argument("unsupported field: p = " + std::to_string(p) + " exceeds 13");
    if (e > 4) throw std::invalid_argument("unsupported field: e = " + std::to_string(e) + " exceeds 4");
  } else {
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
      q *= static_cast<std::uint64_t>(p);
      if (q > kRelaxedMaxQ) throw std::invalid_argument("extension field too large for oracle use");
    }
  }
  if (static_cast<int>(modulus.size()) != e + 1)
    throw std::invalid_argument("modulus must have e+1 coefficients");
  for (int c : modulus)
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
  if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (!is_irreducible_mod_p(modulus, p)) throw std::invalid_argument("modulus is not irreducible over F_p");

  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto key = std::make_tuple(p, e, modulus);
  auto it = reg.fields.find(key);
  if (it == reg.fields.end()) it = reg.fields.emplace(key, build_tables(p, e, modulus)).first;
  return FieldParams(it->second.get());
}

FieldParams FieldParams::make(int p, int e) {
  if (!is_small_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (e < 1 || e > 4 || p > 13)
    throw std::invalid_argument("unsupported field F_" + std::to_string(p) + "^" + std::to_string(e) +
                                " (supported: p <= 13, e <= 4)");
  return intern(p, e, default_modulus(p, e), false);
}

FieldParams FieldParams::make(int p, int e, std::span<const int> modulus) {
  // Prime fields have a single basis; any supplied linear modulus is ignored.
  if (e == 1) return make(p, 1);
  return intern(p, e, std::vector<int>(modulus.begin(), modulus.end()), false);
}

FieldParams FieldParams::extension(int r) const {
  if (r < 1) throw std::invalid_argument("extension degree must be positive");
  if (r == 1) return *this;
  const int big = t_->e * r;
  std::uint64_t q = 1;
  for (int i = 0; i < big; ++i) {
    q *= static_cast<std::uint64_t>(t_->p);
    if (q > kRelaxedMaxQ) throw std::invalid_argument("extension field too large for oracle use");
  }
  return intern(t_->p, big, default_modulus(t_->p, big), true);
}

int FieldParams::p() const { return t_->p; }
int FieldParams::e() const { return t_->e; }
std::uint32_t FieldParams::q() const { return t_->q; }
const std::vector<int>& FieldParams::modulus() const { return t_->modulus; }

FieldElement FieldParams::zero() const { return FieldElement(t_, 0); }
FieldElement FieldParams::one() const { return FieldElement(t_, 1); }
FieldElement FieldParams::primitive() const { return FieldElement(t_, t_->primitive); }

FieldElement FieldParams::from_index(std::uint32_t index) const {
  if (index >= t_->q) throw std::out_of_range("field element index out of range");
  return FieldElement(t_, index);
}

FieldElement FieldParams::from_int(long long value) const {
  const long long r = ((value % t_->p) + t_->p) % t_->p;
  return FieldElement(t_, static_cast<std::uint32_t>(r));
}

FieldElement FieldParams::from_digits(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != t_->e)
    throw std::invalid_argument("expected " + std::to_string(t_->e) + " digits for a field element");
  for (int d : digits)
    if (d < 0 || d >= t_->p) throw std::invalid_argument("field digit out of range [0, p)");
  return FieldElement(t_, index_of(std::vector<int>(digits.begin(), digits.end()), t_->p));
}

std::string FieldParams::name() const {
  std::ostringstream os;
  os << "F_" << t_->p;
  if (t_->e > 1) os << "^" << t_->e;
  return os.str();
}

FieldElement::FieldElement(FieldParams field, std::uint32_t index) : f_(field.t_), v_(index) {
  if (index >= f_->q) throw std::out_of_range("field element index out of range");
}

std::vector<int> FieldElement::digits() const { return digits_of(v_, f_->p, f_->e); }

void FieldElement::check_same(const FieldElement& b) const {
  if (f_ != b.f_) throw std::invalid_argument("field parameters mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  check_same(b);
  if (f_->p == 2) return {f_, v_ ^ b.v_};
  if (v_ == 0) return b;
  if (b.v_ == 0) return *this;
  const std::uint32_t la = f_->log[v_];
  const std::uint32_t lb = f_->log[b.v_];
  const std::uint32_t k = (lb + f_->order - la) % f_->order;
  const std::int64_t z = f_->zech[k];
  if (z < 0) return {f_, 0};
  return {f_, f_->exp[la + static_cast<std::uint32_t>(z)]};
}

FieldElement FieldElement::operator-() const {
  if (f_->p == 2 || v_ == 0) return *this;
  return {f_, f_->exp[f_->log[v_] + f_->log_minus_one]};
}

FieldElement FieldElement::operator-(const FieldElement& b) const { return *this + (-b); }

FieldElement FieldElement::operator*(const FieldElement& b) const {
  check_same(b);
  if (v_ == 0 || b.v_ == 0) return {f_, 0};
  return {f_, f_->exp[f_->log[v_] + f_->log[b.v_]]};
}

FieldElement FieldElement::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in " + FieldParams(f_).name());
  return {f_, f_->exp[(f_->order - f_->log[v_]) % f_->order]};
}

FieldElement FieldElement::operator/(const FieldElement& b) const {
  check_same(b);
  return *this * b.inverse();
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  if (exponent == 0) return {f_, 1};
  if (v_ == 0) return *this;
  const std::uint64_t k = (static_cast<std::uint64_t>(f_->log[v_]) * (exponent % f_->order)) % f_->order;
  return {f_, f_->exp[k]};
}

FieldElement FieldElement::frobenius(int k) const {
  if (k < 0) return pth_root(-k);
  if (v_ == 0) return *this;
  std::uint64_t l = f_->log[v_];
  for (int i = 0; i < k % f_->e; ++i) l = (l * static_cast<std::uint64_t>(f_->p)) % f_->order;
  return {f_, f_->exp[l]};
}

FieldElement FieldElement::pth_root() const { return pth_root(1); }

FieldElement FieldElement::pth_root(int k) const {
  // (p^k)-th root = (p^(e - k mod e))-th power, since Frobenius has order e.
  const int r = ((-k) % f_->e + f_->e) % f_->e;
  return frobenius(r);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  if (a.params().e() == 1) return os << a.index();
  const auto d = a.digits();
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os << ']';
}

FieldElement frobenius(const FieldElement& a, int k) { return a.frobenius(k); }
FieldElement pth_root(const FieldElement& a) { return a.pth_root(); }

FieldElement ff_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

std::vector<FieldElement> all_elements(const FieldParams& field) {
  std::vector<FieldElement> out;
  out.reserve(field.q());
  for (std::uint32_t i = 0; i < field.q(); ++i) out.push_back(field.from_index(i));
  return out;
}

FieldEmbedding::FieldEmbedding(FieldParams from, FieldParams to) : from_(from), to_(to) {
  if (from.p() != to.p() || to.e() % from.e() != 0)
    throw std::invalid_argument("no embedding " + from.name() + " -> " + to.name());
  // Root of the small modulus in the large field, first in index order.
  const auto& m = from.modulus();
  std::uint32_t root = to.q();
  if (from.e() == 1) {
    root = 0;  // unused
  } else {
    for (std::uint32_t c = 0; c < to.q(); ++c) {
      const auto x = to.from_index(c);
      auto acc = to.zero();
      for (auto it = m.rbegin(); it != m.rend(); ++it) acc = acc * x + to.from_int(*it);
      if (acc.is_zero()) {
        root = c;
        break;
      }
    }
    if (root == to.q()) throw std::logic_error("modulus has no root in extension field");
  }
  image_.resize(from.q());
  for (std::uint32_t i = 0; i < from.q(); ++i) {
    const auto d = from.from_index(i).digits();
    auto acc = to.zero();
    if (from.e() == 1) {
      acc = to.from_int(d[0]);
    } else {
      const auto x = to.from_index(root);
      for (auto it = d.rbegin(); it != d.rend(); ++it) acc = acc * x + to.from_int(*it);
    }
    image_[i] = acc.index();
  }
}

FieldElement FieldEmbedding::operator()(const FieldElement& a) const {
  if (a.params() != from_) throw std::invalid_argument("embedding applied to element of the wrong field");
  return to_.from_index(image_[a.index()]);
}

}  // namespace twlat
