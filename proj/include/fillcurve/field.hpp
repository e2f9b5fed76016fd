#pragma once

// Finite fields as explicit towers.
//
// A FieldCtx is either a prime field F_p or a simple extension base[t]/(m)
// of another FieldCtx by a monic irreducible m. Elements are stored flat:
// an element of a level-L field is the little-endian coefficient sequence
// over its base, and each of those coefficients is itself stored flat, all
// the way down to residues mod p. With this layout an element of an ancestor
// field embeds into a descendant by zero padding, and grouping the digits of
// an element into blocks of a subfield's width yields its coordinates over
// that subfield.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fillcurve/errors.hpp"

namespace fillcurve {

using BigInt = boost::multiprecision::cpp_int;
using Digit = std::uint32_t;

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  /// F_p. Throws NotAPrimePower when p is not prime.
  static Field prime(std::uint32_t p);

  /// base[t]/(m) for a monic m given as flat coefficients (deg m + 1 blocks of
  /// base width). The caller vouches for irreducibility; `extend` in
  /// unipoly.hpp is the checked entry point.
  static Field adjoin_unchecked(Field base, std::vector<Digit> monic_modulus);

  std::uint32_t characteristic() const { return p_; }
  /// Degree over the immediate base (1 for a prime field).
  int degree() const { return degree_; }
  /// Degree over the prime field; the number of digits in an element.
  int width() const { return width_; }
  int level() const { return level_; }
  bool is_prime_field() const { return level_ == 0; }
  const Field& base() const { return base_; }
  const BigInt& order() const { return order_; }
  /// Order as a 64-bit value; throws TooLarge when it does not fit.
  std::uint64_t order_u64() const;
  std::span<const Digit> modulus() const { return modulus_; }

  /// True when `sub` is this field or one of its ancestors.
  bool contains(const FieldCtx& sub) const;
  /// The ancestor (or self) of the given order, or nullptr.
  const FieldCtx* subfield_of_order(const BigInt& order) const;
  Field subfield_ptr_of_order(const BigInt& order) const;

  // Element kernels on flat digit spans of length width(). Outputs may alias inputs.
  void add(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const;
  void sub(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const;
  void neg(std::span<const Digit> a, std::span<Digit> out) const;
  void mul(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const;
  /// Throws DivisionByZero on zero input.
  void inv(std::span<const Digit> a, std::span<Digit> out) const;
  /// out += a*b.
  void mul_add(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const;
  /// out -= a*b.
  void mul_sub(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const;
  static bool is_zero(std::span<const Digit> a);
  static bool is_one(std::span<const Digit> a);

  std::string describe() const;

 private:
  FieldCtx() = default;

  void mul_tower(const Digit* a, const Digit* b, Digit* out) const;

  std::uint32_t p_ = 0;
  int degree_ = 1;
  int width_ = 1;
  int level_ = 0;
  Field base_;
  std::vector<Digit> modulus_;
  BigInt order_;
  std::vector<Digit> prime_inverses_;
};

/// Same object, or structurally identical towers.
bool same_field(const FieldCtx& a, const FieldCtx& b);
inline bool same_field(const Field& a, const Field& b) { return same_field(*a, *b); }

/// An element of a specific field.
class Fel {
 public:
  Fel() = default;
  /// Zero of `field`.
  explicit Fel(Field field);
  /// From flat digits; throws if the length or a digit is out of range.
  Fel(Field field, std::vector<Digit> digits);

  static Fel from_int(Field field, std::int64_t value);
  static Fel one(Field field) { return from_int(std::move(field), 1); }
  /// Class of t in base[t]/(m). Throws for a prime field.
  static Fel generator(Field field);
  /// Builds an element from its coefficients over the immediate base.
  static Fel from_base_coeffs(Field field, std::span<const Fel> coeffs);

  const Field& field() const { return field_; }
  std::span<const Digit> digits() const { return digits_; }
  /// i-th coefficient over the immediate base, i < field()->degree().
  Fel coeff(int i) const;

  bool is_zero() const { return FieldCtx::is_zero(digits_); }
  bool is_one() const { return FieldCtx::is_one(digits_); }

  Fel operator-() const;
  Fel& operator+=(const Fel& o);
  Fel& operator-=(const Fel& o);
  Fel& operator*=(const Fel& o);
  Fel& operator/=(const Fel& o);
  friend Fel operator+(Fel a, const Fel& b) { return a += b; }
  friend Fel operator-(Fel a, const Fel& b) { return a -= b; }
  friend Fel operator*(Fel a, const Fel& b) { return a *= b; }
  friend Fel operator/(Fel a, const Fel& b) { return a /= b; }

  Fel inv() const;
  Fel pow(const BigInt& n) const;
  Fel pow(std::uint64_t n) const { return pow(BigInt(n)); }

  /// Image in a field that contains this one. Throws IncompatibleFields otherwise.
  Fel lift(const Field& target) const;
  /// Image in the ancestor `target`, provided the element lies in it.
  /// Throws IncompatibleFields when a higher digit is nonzero.
  Fel project(const Field& target) const;

  friend bool operator==(const Fel& a, const Fel& b);
  /// Lexicographic order on the flat digits, lowest coefficient first. This is
  /// the enumeration order of enumerate_field.
  friend bool operator<(const Fel& a, const Fel& b) { return a.digits_ < b.digits_; }

  /// "d" for prime fields, "c0,c1,...,c{k-1}" over the immediate base otherwise;
  /// nested coefficients are wrapped in brackets.
  std::string to_string() const;

 private:
  void require_same(const Fel& o) const;

  Field field_;
  std::vector<Digit> digits_;
};

/// Deterministic model of F_q: F_p for q = p, otherwise F_p[z]/(m) with m the
/// lexicographically smallest monic irreducible of degree k (coefficients
/// compared lowest degree first). Calls with equal q return the same object.
Field canonical_field(std::uint64_t q);

/// (p, k) with q = p^k, or throws NotAPrimePower.
std::pair<std::uint32_t, int> prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);

/// a^(base_order^i).
Fel frobenius(const Fel& a, const BigInt& base_order, std::uint64_t i = 1);

/// a^(q^m) == a, where F_q is an ancestor of a's field and m divides the degree
/// over it. Throws BadSubfieldDegree otherwise.
bool in_subfield(const Fel& a, int m, const BigInt& q);

/// All elements in lexicographic digit order, beginning with zero.
std::vector<Fel> enumerate_field(const Field& field);
/// index-th element in that order, and the inverse map.
Fel element_at(const Field& field, std::uint64_t index);
std::uint64_t element_index(const Fel& a);

}  // namespace fillcurve
