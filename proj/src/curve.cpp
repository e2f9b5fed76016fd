#include "fillcurve/curve.hpp"

#include <algorithm>

#include "checks.hpp"

namespace fillcurve {

// ---------------------------------------------------------------- BiForm

BiForm::BiForm(Field field, int d, int e)
    : field_(std::move(field)), d_(d), e_(e),
      flat_(static_cast<std::size_t>(d + 1) * (e + 1) * field_->width(), 0) {
  if (d < 0 || e < 0) throw Error(Errc::degree_mismatch, "negative bidegree");
}

std::size_t BiForm::offset(int i, int j) const {
  return (static_cast<std::size_t>(i) * (e_ + 1) + j) * field_->width();
}

Fel BiForm::coeff(int i, int j) const {
  const std::size_t o = offset(i, j);
  return Fel(field_, std::vector<Digit>(flat_.begin() + o, flat_.begin() + o + field_->width()));
}

void BiForm::set(int i, int j, const Fel& c) {
  std::copy(c.digits().begin(), c.digits().end(), flat_.begin() + offset(i, j));
}

void BiForm::add_to(int i, int j, const Fel& c) { set(i, j, coeff(i, j) + c); }

int BiForm::nonzero_count() const {
  int n = 0;
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; j <= e_; ++j) n += coeff(i, j).is_zero() ? 0 : 1;
  return n;
}

Fel BiForm::eval(const Fel& x0, const Fel& x1, const Fel& y0, const Fel& y1) const {
  const Field& L = x0.field();
  if (!L->contains(*field_)) throw Error(Errc::incompatible_fields, "point field does not contain the form's field");
  auto powers = [&](const Fel& v, int n) {
    std::vector<Fel> out{Fel::one(L)};
    for (int k = 1; k <= n; ++k) out.push_back(out.back() * v);
    return out;
  };
  const auto px0 = powers(x0, d_), px1 = powers(x1, d_), py0 = powers(y0, e_), py1 = powers(y1, e_);
  Fel acc(L);
  for (int i = 0; i <= d_; ++i) {
    for (int j = 0; j <= e_; ++j) {
      const Fel c = coeff(i, j);
      if (c.is_zero()) continue;
      acc += c.lift(L) * px0[d_ - i] * px1[i] * py0[e_ - j] * py1[j];
    }
  }
  return acc;
}

BiForm BiForm::partial(int var) const {
  if (var < 0 || var > 3) throw Error(Errc::index_out_of_range, "variable index must be 0..3");
  const bool in_x = var < 2;
  BiForm out(field_, in_x ? std::max(d_ - 1, 0) : d_, in_x ? e_ : std::max(e_ - 1, 0));
  if ((in_x && d_ == 0) || (!in_x && e_ == 0)) return out;
  for (int i = 0; i <= d_; ++i) {
    for (int j = 0; j <= e_; ++j) {
      const Fel c = coeff(i, j);
      if (c.is_zero()) continue;
      // exponent of the differentiated variable, and the target cell
      int k = 0, ti = i, tj = j;
      switch (var) {
        case 0: k = d_ - i; break;
        case 1: k = i; ti = i - 1; break;
        case 2: k = e_ - j; break;
        case 3: k = j; tj = j - 1; break;
      }
      if (k == 0) continue;
      if ((var == 0 && i == d_) || (var == 2 && j == e_)) continue;
      out.add_to(ti, tj, c * Fel::from_int(field_, k));
    }
  }
  return out;
}

// ---------------------------------------------------------------- Curve

Curve build_curve(const BinForm& f, const BinForm& g) {
  if (!same_field(*f.field(), *g.field())) throw Error(Errc::mixed_fields, "f and g over different fields");
  const std::uint64_t q = f.field()->order_u64();
  const int d = static_cast<int>(q) + 1;
  if (f.degree() != d || g.degree() != d)
    throw Error(Errc::degree_mismatch, "f and g must both have degree q+1 = " + std::to_string(d));
  if (f.is_zero() || g.is_zero()) throw Error(Errc::zero_form, "f and g must be nonzero");
  BiForm F(f.field(), d, d);
  const int qi = static_cast<int>(q);
  for (int j = 0; j <= d; ++j) {
    const Fel c = f.coeff(j);
    F.add_to(1, j, c);    // X0^q X1
    F.add_to(qi, j, -c);  // X0 X1^q
  }
  for (int i = 0; i <= d; ++i) {
    const Fel c = g.coeff(i);
    F.add_to(i, 1, c);
    F.add_to(i, qi, -c);
  }
  return Curve{q, f, g, std::move(F)};
}

bool vanishes_on_rational_points(const BiForm& F, std::uint64_t q) {
  const Field& K = F.field();
  std::vector<std::pair<Fel, Fel>> pts;
  for (std::uint64_t i = 0; i < q; ++i) pts.emplace_back(Fel::one(K), element_at(K, i));
  pts.emplace_back(Fel(K), Fel::one(K));
  for (const auto& [x0, x1] : pts)
    for (const auto& [y0, y1] : pts)
      if (!F.eval(x0, x1, y0, y1).is_zero()) return false;
  return true;
}

bool verify_space_filling(const Curve& c) { return vanishes_on_rational_points(c.F, c.q); }

std::vector<Fel> jacobian_values(const Curve& c, const Fel& alpha, const Fel& beta) {
  const Field& L = alpha.field();
  const Fel one = Fel::one(L);
  std::vector<Fel> out{c.F.eval(one, alpha, one, beta)};
  for (int v = 0; v < 4; ++v) out.push_back(c.F.partial(v).eval(one, alpha, one, beta));
  return out;
}

// ---------------------------------------------------------------- SingularWitness

namespace {

bool witness_checks(const Curve& curve, const Fel& alpha, const Fel& beta) {
  if (!same_field(*alpha.field(), *beta.field())) return false;
  if (alpha.is_zero() || beta.is_zero()) return false;
  const BigInt q(curve.q);
  if (in_subfield(alpha, 1, q) || in_subfield(beta, 1, q)) return false;
  const auto vals = jacobian_values(curve, alpha, beta);
  return std::all_of(vals.begin(), vals.end(), [](const Fel& v) { return v.is_zero(); });
}

}  // namespace

SingularWitness::SingularWitness(const Curve& curve, UPoly alpha_minpoly, UPoly beta_minpoly, Fel alpha, Fel beta)
    : alpha_minpoly_(std::move(alpha_minpoly)),
      beta_minpoly_(std::move(beta_minpoly)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
  if (!witness_checks(curve, alpha_, beta_))
    throw Error(Errc::internal, "singular witness failed re-verification");
  compositum_degree_ = alpha_.field()->width() / curve.f.field()->width();
}

bool SingularWitness::recheck(const Curve& curve) const { return witness_checks(curve, alpha_, beta_); }

const char* method_name(Method m) { return m == Method::factor_gcd ? "factor_gcd" : "scan_oracle"; }

// ---------------------------------------------------------------- checker

namespace detail {

void require_no_rational_point(const BinForm& form, const char* name) {
  const std::uint64_t q = form.field()->order_u64();
  if (form.degree() != static_cast<int>(q) + 1)
    throw Error(Errc::degree_mismatch,
                std::string(name) + " must have degree q+1 = " + std::to_string(q + 1));
  if (auto pt = rational_point(form))
    throw Error(Errc::precondition_violated,
                std::string("V(") + name + ") has the F_q-rational point " + pt->to_string());
}

}  // namespace detail

using detail::require_no_rational_point;

XSide prepare_x(const BinForm& g, Rng& rng) {
  require_no_rational_point(g, "g");
  const Field& Fq = g.field();
  XSide side{g, {}};
  const UPoly p = internal_form(g).dehomogenize();
  if (p.degree() < 1) return side;
  const BinForm gx1 = g.partial(1);
  for (const auto& fac : factor(p, rng).factors) {
    if (fac.poly.degree() < 2) continue;  // F_q-rational roots are never singular coordinates
    // factor() only returns irreducibles
    Field K = FieldCtx::adjoin_unchecked(Fq, fac.poly.flat());
    Fel alpha = Fel::generator(K);
    Fel c = gx1.eval(Fel::one(K), alpha);
    side.candidates.push_back({fac.poly, K, std::move(alpha), std::move(c)});
  }
  return side;
}

YSide prepare_y(const BinForm& f) {
  require_no_rational_point(f, "f");
  return YSide{f, internal_form(f).dehomogenize(), f.partial(0).dehomogenize()};
}

std::optional<SingularWitness> singular_witness(const YSide& f, const XSide& g, SmoothnessStats* stats) {
  if (!same_field(*f.f.field(), *g.g.field())) throw Error(Errc::mixed_fields, "f and g over different fields");
  const int q = static_cast<int>(f.f.field()->order_u64());
  std::optional<Curve> curve;
  for (std::size_t idx = 0; idx < g.candidates.size(); ++idx) {
    const auto& cand = g.candidates[idx];
    if (stats) ++stats->factors_examined;
    const Field& K = cand.K;
    const UPoly r = f.fy0.lift(K) - UPoly::monomial(cand.c, q);
    const UPoly G = r.is_zero() ? f.internal.lift(K).monic() : monic_gcd(f.internal.lift(K), r);
    if (stats) ++stats->gcds_computed;
    if (G.degree() < 1) continue;
    if (!curve) curve = build_curve(f.f, g.g);
    Rng rng(mix_seed(0, idx));  // factor() output is canonical; the seed only affects speed
    for (const auto& fac : factor(G, rng).factors) {
      const UPoly& m = fac.poly;
      Field L;
      Fel beta;
      if (m.degree() == 1) {
        L = K;
        beta = -m.coeff(0);
      } else {
        L = FieldCtx::adjoin_unchecked(K, m.flat());
        beta = Fel::generator(L);
      }
      Fel alpha = cand.alpha.lift(L);
      if (witness_checks(*curve, alpha, beta)) return SingularWitness(*curve, cand.h, m, alpha, beta);
    }
  }
  return std::nullopt;
}

std::optional<SingularWitness> singular_witness(const BinForm& f, const BinForm& g, Rng& rng,
                                                SmoothnessStats* stats) {
  const YSide ys = prepare_y(f);
  const XSide xs = prepare_x(g, rng);
  return singular_witness(ys, xs, stats);
}

SmoothnessReport check_smoothness(const BinForm& f, const BinForm& g, Rng& rng) {
  SmoothnessReport rep;
  rep.method = Method::factor_gcd;
  rep.witness = singular_witness(f, g, rng, &rep.stats);
  rep.smooth = !rep.witness.has_value();
  return rep;
}

SmoothnessReport check_smoothness_by_scan(const BinForm& f, const BinForm& g, std::uint64_t budget) {
  SmoothnessReport rep;
  rep.method = Method::scan_oracle;
  rep.witness = scan_oracle(f, g, budget);
  rep.smooth = !rep.witness.has_value();
  return rep;
}

Rational homma_bound(std::int64_t q, std::int64_t k) {
  if (q < 2) throw Error(Errc::precondition_violated, "q must be at least 2");
  const BigInt Q(q);
  const BigInt num = (Q - 1) * (Q * Q * Q * Q - 1);
  const BigInt den = Q * (Q * Q * Q - 1) - 3 * (Q - 1);
  return Rational(num, den) * Rational(k);
}

}  // namespace fillcurve
