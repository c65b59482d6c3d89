// Exact arithmetic in small finite fields F_{p^e}.
//
// Elements are stored by their index in the polynomial basis:
// index = d_0 + d_1 p + ... + d_{e-1} p^{e-1} where d_i is the coefficient
// of x^i modulo the field's irreducible modulus. Multiplication goes
// through discrete log tables, addition through digits (p = 2: xor) or
// Zech logarithms.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twlat {

namespace detail {
struct FieldTables;
}

class FieldElement;

/// Handle to an interned, immutable field description. Copies are cheap and
/// compare equal iff (p, e, modulus) agree.
class FieldParams {
 public:
  /// Field with the built-in default modulus (the lexicographically first
  /// monic irreducible polynomial of degree e). Bounds: prime p <= 13, e <= 4.
  static FieldParams make(int p, int e = 1);

  /// Field with a caller-supplied modulus, given as e+1 coefficients c_0..c_e
  /// (constant term first, c_e = 1). Irreducibility is checked exhaustively.
  static FieldParams make(int p, int e, std::span<const int> modulus);

  /// The degree-r extension F_{q^r} with its default modulus. Intended for
  /// oracle computations; the support bound here is q^r <= 2^20.
  FieldParams extension(int r) const;

  int p() const;
  /// Degree over the prime field.
  int e() const;
  std::uint32_t q() const;
  const std::vector<int>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_index(std::uint32_t index) const;
  FieldElement from_int(long long value) const;
  FieldElement from_digits(std::span<const int> digits) const;

  /// A fixed primitive element (generator of the multiplicative group).
  FieldElement primitive() const;

  std::string name() const;

  bool operator==(const FieldParams& other) const { return t_ == other.t_; }
  bool operator!=(const FieldParams& other) const { return t_ != other.t_; }

  const detail::FieldTables* tables() const { return t_; }

 private:
  explicit FieldParams(const detail::FieldTables* t) : t_(t) {}
  static FieldParams intern(int p, int e, std::vector<int> modulus, bool relaxed);

  const detail::FieldTables* t_ = nullptr;
  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement(FieldParams field, std::uint32_t index);

  FieldParams params() const { return FieldParams(f_); }
  std::uint32_t index() const { return v_; }
  std::vector<int> digits() const;

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  /// a^(p^k).
  FieldElement frobenius(int k = 1) const;
  /// The unique b with b^p = a.
  FieldElement pth_root() const;
  /// The unique b with b^(p^k) = a.
  FieldElement pth_root(int k) const;

  bool operator==(const FieldElement& b) const { return f_ == b.f_ && v_ == b.v_; }
  bool operator!=(const FieldElement& b) const { return !(*this == b); }
  /// Index order; used only for deterministic sorting.
  bool operator<(const FieldElement& b) const { return v_ < b.v_; }

 private:
  FieldElement(const detail::FieldTables* f, std::uint32_t v) : f_(f), v_(v) {}
  void check_same(const FieldElement& b) const;

  const detail::FieldTables* f_;
  std::uint32_t v_;
  friend class FieldParams;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

FieldElement frobenius(const FieldElement& a, int k);
FieldElement pth_root(const FieldElement& a);

enum class ArithOp { add, sub, mul, div };
FieldElement ff_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// All q elements, lexicographic on digits (equivalently, by index).
std::vector<FieldElement> all_elements(const FieldParams& field);

/// Field homomorphism F_q -> F_{q^r} sending the generator of the small
/// polynomial basis to a fixed root of its modulus in the large field.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldParams from, FieldParams to);
  FieldElement operator()(const FieldElement& a) const;
  const FieldParams& source() const { return from_; }
  const FieldParams& target() const { return to_; }

 private:
  FieldParams from_;
  FieldParams to_;
  std::vector<std::uint32_t> image_;
};

/// Brute-force irreducibility test for a monic polynomial over F_p
/// (coefficients constant term first).
bool is_irreducible_mod_p(std::span<const int> poly, int p);

}  // namespace twlat
