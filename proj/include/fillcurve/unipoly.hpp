#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fillcurve/field.hpp"
#include "fillcurve/rng.hpp"

namespace fillcurve {

/// Dense univariate polynomial over a field, lowest degree first, trimmed.
class UPoly {
 public:
  UPoly() = default;
  /// Zero polynomial over `field`.
  explicit UPoly(Field field) : field_(std::move(field)) {}
  UPoly(Field field, const std::vector<Fel>& coeffs);
  /// From flat digits (coefficient i occupies digits [i*w, (i+1)*w)).
  UPoly(Field field, std::vector<Digit> flat);

  static UPoly constant(const Fel& c);
  static UPoly x(Field field);
  /// c * X^n.
  static UPoly monomial(const Fel& c, int n);

  const Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return flat_.empty(); }
  bool is_one() const;
  bool is_monic() const;
  Fel coeff(int i) const;
  Fel lead() const { return coeff(degree()); }
  std::vector<Fel> coeffs() const;
  const std::vector<Digit>& flat() const { return flat_; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Fel& c) const;
  /// Throws DivisionByZero when b is zero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend bool operator==(const UPoly& a, const UPoly& b);

  UPoly monic() const;
  UPoly derivative() const;
  /// Horner evaluation at x in this field or any field containing it.
  Fel eval(const Fel& x) const;
  /// Same polynomial over a field containing this one.
  UPoly lift(const Field& target) const;
  UPoly pow(unsigned n) const;

  std::string to_string() const;

 private:
  void require_same(const UPoly& o) const;

  Field field_;
  std::vector<Digit> flat_;
};

/// Canonical order: degree, then coefficients lexicographically from the constant term.
bool canonical_less(const UPoly& a, const UPoly& b);

/// Monic gcd. Throws BothZero when both inputs vanish.
UPoly monic_gcd(const UPoly& a, const UPoly& b);

/// a^e mod m.
UPoly powmod(const UPoly& a, const BigInt& e, const UPoly& m);

/// Rabin's test. Throws DegreeZero for constants.
bool is_irreducible(const UPoly& f);

struct Factor {
  UPoly poly;
  int multiplicity;
};

struct Factorization {
  Fel unit;
  std::vector<Factor> factors;  // monic irreducible, canonical_less order
  UPoly expand() const;
};

/// Squarefree decomposition of a monic polynomial: (part, multiplicity) with
/// pairwise coprime squarefree parts.
std::vector<Factor> squarefree_decomposition(const UPoly& monic_f);
/// Distinct-degree split of a monic squarefree polynomial: (product of all
/// irreducible factors of degree d, d).
std::vector<std::pair<UPoly, int>> distinct_degree(const UPoly& f);
/// Equal-degree split of a monic squarefree product of irreducibles of degree d.
std::vector<UPoly> equal_degree(const UPoly& f, int d, Rng& rng);

/// Full factorization into monic irreducibles. Deterministic: factors are
/// returned in canonical order regardless of the random choices made.
Factorization factor(const UPoly& f, Rng& rng);

/// All roots of f lying in K, by scanning K; sorted, without multiplicity.
std::vector<Fel> roots_in_field(const UPoly& f, const Field& K);

/// base[t]/(m) after checking that m is monic and irreducible.
Field extend(const UPoly& modulus);

/// Minimal polynomial over the subfield of order q, from the first linear
/// dependency among 1, a, a^2, ... in coordinates over that subfield.
UPoly minimal_polynomial(const Fel& a, const BigInt& q);

/// A root of the irreducible m inside target: the lexicographically smallest
/// one. Throws NoRootInTarget unless deg m divides [target : field(m)].
Fel embed_root(const UPoly& m, const Field& target, Rng& rng);
Fel embed_root(const UPoly& m, const Field& target);

/// Lexicographically smallest monic irreducible of degree k over F.
UPoly smallest_irreducible(const Field& F, int k);

}  // namespace fillcurve
