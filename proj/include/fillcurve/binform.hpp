#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fillcurve/field.hpp"
#include "fillcurve/rng.hpp"
#include "fillcurve/unipoly.hpp"

namespace fillcurve {

/// Homogeneous form sum_i c_i X0^(d-i) X1^i of degree d over a field.
///
/// Coefficients are always stored in this order (c_0 on X0^d, c_d on X1^d),
/// and every textual or JSON form uses it.
class BinForm {
 public:
  BinForm() = default;
  BinForm(Field field, const std::vector<Fel>& coeffs);
  BinForm(Field field, int degree, std::vector<Digit> flat);
  static BinForm zero(Field field, int degree);
  /// Coefficients given as integers reduced into the prime field (handy for prime q).
  static BinForm from_ints(Field field, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  Fel coeff(int i) const;
  std::vector<Fel> coeffs() const;
  const std::vector<Digit>& flat() const { return flat_; }
  bool is_zero() const { return FieldCtx::is_zero(flat_); }

  /// Value at (x0, x1), both in a field containing this form's field.
  Fel eval(const Fel& x0, const Fel& x1) const;
  /// Formal partial derivative in X0 (var = 0) or X1 (var = 1); degree d-1.
  BinForm partial(int var) const;
  /// f(1, x).
  UPoly dehomogenize() const;

  friend BinForm operator+(const BinForm& a, const BinForm& b);
  friend BinForm operator-(const BinForm& a, const BinForm& b);
  /// Product of forms; degrees add.
  friend BinForm operator*(const BinForm& a, const BinForm& b);
  BinForm scaled(const Fel& c) const;
  friend bool operator==(const BinForm& a, const BinForm& b);
  /// Lexicographic on (c_0, ..., c_d) with elements in enumeration order.
  friend bool operator<(const BinForm& a, const BinForm& b) { return a.flat_ < b.flat_; }

  /// "c0,c1,...,cd" for prime fields; extension-field coefficients are bracketed.
  std::string to_string() const;

 private:
  Field field_;
  int degree_ = 0;
  std::vector<Digit> flat_;
};

/// Point of P^1 with the first nonzero coordinate scaled to 1.
class ProjPoint {
 public:
  /// Throws ZeroForm-style error (precondition) when both coordinates vanish.
  ProjPoint(Fel x0, Fel x1);
  const Fel& x0() const { return x0_; }
  const Fel& x1() const { return x1_; }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x0_ == b.x0_ && a.x1_ == b.x1_; }
  std::string to_string() const;

 private:
  Fel x0_, x1_;
};

/// [[a, b], [c, d]] with ad - bc = 1.
class SL2Mat {
 public:
  /// Throws PreconditionViolated when the determinant is not 1.
  SL2Mat(Fel a, Fel b, Fel c, Fel d);
  static SL2Mat identity(const Field& field);
  const Fel& a() const { return a_; }
  const Fel& b() const { return b_; }
  const Fel& c() const { return c_; }
  const Fel& d() const { return d_; }
  friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y);
  friend bool operator==(const SL2Mat& x, const SL2Mat& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  Fel a_, b_, c_, d_;
};

Fel form_eval(const BinForm& f, const ProjPoint& P);
inline BinForm form_partial(const BinForm& f, int var) { return f.partial(var); }

/// An F_q-rational zero among (1:t), t in F_q, and (0:1), in that order.
std::optional<ProjPoint> rational_point(const BinForm& f);
/// Throws ZeroForm for the zero form.
bool has_rational_point(const BinForm& f);

/// Substitution action (A f)(X0, X1) = f(a X0 + b X1, c X0 + d X1).
/// With this convention A(B f) = (B A) f, so (AB) f = B(A f).
BinForm sl2_act(const SL2Mat& A, const BinForm& f);

/// X0^q f_X0 + X1^q f_X1 with q the order of f's field; degree d - 1 + q.
BinForm internal_form(const BinForm& f);

/// Largest q that enumerate_gq accepts without an override.
inline constexpr std::uint64_t kGqGuard = 5;

/// Calls visit on every member of G_q (nonzero degree-(q+1) forms over F_q
/// without an F_q-rational zero) in lexicographic order until it returns false.
void for_each_gq(std::uint64_t q, const std::function<bool(const BinForm&)>& visit, bool allow_large = false);
/// All of G_q in lexicographic order. Throws TooLarge above kGqGuard unless allow_large.
std::vector<BinForm> enumerate_gq(std::uint64_t q, bool allow_large = false);

/// Uniform draw from G_q by rejection: q+2 uniform coefficients per attempt.
BinForm random_gq(std::uint64_t q, Rng& rng);

}  // namespace fillcurve
