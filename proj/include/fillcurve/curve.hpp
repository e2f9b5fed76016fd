#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "fillcurve/binform.hpp"
#include "fillcurve/field.hpp"
#include "fillcurve/rng.hpp"
#include "fillcurve/unipoly.hpp"

namespace fillcurve {

using Rational = boost::multiprecision::cpp_rational;

/// Bihomogeneous form of bidegree (d, e): grid entry (i, j) is the coefficient
/// of X0^(d-i) X1^i Y0^(e-j) Y1^j.
class BiForm {
 public:
  BiForm(Field field, int d, int e);

  const Field& field() const { return field_; }
  int degree_x() const { return d_; }
  int degree_y() const { return e_; }
  Fel coeff(int i, int j) const;
  void set(int i, int j, const Fel& c);
  void add_to(int i, int j, const Fel& c);
  int nonzero_count() const;

  /// Value at (x0:x1) x (y0:y1), all coordinates in one field containing ours.
  Fel eval(const Fel& x0, const Fel& x1, const Fel& y0, const Fel& y1) const;
  /// Partial in X0, X1, Y0, Y1 for var = 0, 1, 2, 3.
  BiForm partial(int var) const;

 private:
  std::size_t offset(int i, int j) const;

  Field field_;
  int d_, e_;
  std::vector<Digit> flat_;
};

/// C_{f,g}: f is a form in Y0, Y1 and g a form in X0, X1, both of degree q+1.
struct Curve {
  std::uint64_t q;
  BinForm f;
  BinForm g;
  BiForm F;
};

/// F = f(Y) (X0^q X1 - X0 X1^q) + g(X) (Y0^q Y1 - Y0 Y1^q).
/// Throws DegreeMismatch or ZeroForm.
Curve build_curve(const BinForm& f, const BinForm& g);

/// F vanishes at all (q+1)^2 points of (P^1 x P^1)(F_q).
bool verify_space_filling(const Curve& c);
bool vanishes_on_rational_points(const BiForm& F, std::uint64_t q);

/// F, F_X0, F_X1, F_Y0, F_Y1 at (1:alpha) x (1:beta), in that order.
std::vector<Fel> jacobian_values(const Curve& c, const Fel& alpha, const Fel& beta);

/// A singular point (1:alpha) x (1:beta) of C_{f,g}, re-verified on construction.
///
/// alpha_minpoly is over F_q. beta_minpoly is over beta_base: K = F_q[t]/(alpha_minpoly)
/// for witnesses produced by the factor/gcd checker, F_q itself for witnesses
/// produced by the scan oracle. alpha and beta live in `compositum`.
class SingularWitness {
 public:
  /// Throws InternalError unless all five Jacobian values vanish, alpha and
  /// beta lie outside F_q, and both are nonzero.
  SingularWitness(const Curve& curve, UPoly alpha_minpoly, UPoly beta_minpoly, Fel alpha, Fel beta);

  const UPoly& alpha_minpoly() const { return alpha_minpoly_; }
  const UPoly& beta_minpoly() const { return beta_minpoly_; }
  const Field& compositum() const { return alpha_.field(); }
  const Fel& alpha() const { return alpha_; }
  const Fel& beta() const { return beta_; }
  /// [compositum : F_q].
  int compositum_degree() const { return compositum_degree_; }

  /// Runs the Jacobian and coordinate checks again.
  bool recheck(const Curve& curve) const;

 private:
  UPoly alpha_minpoly_, beta_minpoly_;
  Fel alpha_, beta_;
  int compositum_degree_;
};

enum class Method { factor_gcd, scan_oracle };
const char* method_name(Method m);

struct SmoothnessStats {
  int factors_examined = 0;
  int gcds_computed = 0;
};

struct SmoothnessReport {
  bool smooth = true;
  std::optional<SingularWitness> witness;
  Method method = Method::factor_gcd;
  SmoothnessStats stats;
};

/// Per-form data for the X side (the form g): the irreducible factors of
/// degree >= 2 of X0^q g_X0 + X1^q g_X1 at X0 = 1, each with its residue field
/// K, the root alpha = t, and c = g_X1(1, alpha).
struct XSide {
  struct Candidate {
    UPoly h;
    Field K;
    Fel alpha;
    Fel c;
  };
  BinForm g;
  std::vector<Candidate> candidates;
};

/// Per-form data for the Y side (the form f): Y0^q f_Y0 + Y1^q f_Y1 and f_Y0,
/// both at Y0 = 1.
struct YSide {
  BinForm f;
  UPoly internal;
  UPoly fy0;
};

/// Both throw PreconditionViolated when the form has an F_q-rational zero.
XSide prepare_x(const BinForm& g, Rng& rng);
YSide prepare_y(const BinForm& f);

/// Singular point of C_{f,g} or nothing when the curve is smooth. Requires
/// that neither V(f) nor V(g) has an F_q-rational point.
///
/// Any singular point has all coordinates nonzero and neither factor rational,
/// so it lies in the chart X0 = Y0 = 1 with alpha a root of degree >= 2 of the
/// X-side internal polynomial and beta a root of the Y-side one. There the
/// rank condition reads g_X1(1,a) = -g_X0(1,a)/a^q = -f_Y1(1,b) = f_Y0(1,b)/b^q;
/// the two internal polynomials encode the first and last equalities, and the
/// cross equality g_X1(1,a) = f_Y0(1,b)/b^q links them, which together force
/// the middle one. So beta is a common root of the internal polynomial and
/// f_Y0(1,Y) - g_X1(1,a) Y^q over K = F_q(a).
std::optional<SingularWitness> singular_witness(const YSide& f, const XSide& g, SmoothnessStats* stats = nullptr);
std::optional<SingularWitness> singular_witness(const BinForm& f, const BinForm& g, Rng& rng,
                                                SmoothnessStats* stats = nullptr);
SmoothnessReport check_smoothness(const BinForm& f, const BinForm& g, Rng& rng);

inline constexpr std::uint64_t kDefaultScanBudget = 10'000'000;

/// Brute-force cross-check of singular_witness that uses no factorization and
/// no gcd. Fields are built from scanned moduli certified irreducible by a
/// Frobenius/Berlekamp-rank test; roots are found by scanning whole fields.
///
/// Work is counted in scanned field elements: every element of F_{q^d},
/// d = 2..2q, once per side, plus, inside the compositum of degree N, every
/// element of each subfield that holds a root, weighted by N. Throws
/// BudgetExceeded (with the total needed) before doing work beyond `budget`.
std::optional<SingularWitness> scan_oracle(const BinForm& f, const BinForm& g,
                                           std::uint64_t budget = kDefaultScanBudget);
SmoothnessReport check_smoothness_by_scan(const BinForm& f, const BinForm& g,
                                          std::uint64_t budget = kDefaultScanBudget);

/// Point-count bound (q-1)(q^4-1) / (q(q^3-1) - 3(q-1)) * k for a nondegenerate
/// irreducible degree-k space curve.
Rational homma_bound(std::int64_t q, std::int64_t k);

}  // namespace fillcurve
