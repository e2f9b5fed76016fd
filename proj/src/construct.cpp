#include "fillcurve/construct.hpp"

#include <algorithm>

#include "checks.hpp"
#include "fillcurve/curve.hpp"

namespace fillcurve {

namespace {

void require_odd(std::uint64_t q) {
  if (q % 2 == 0) throw Error(Errc::even_characteristic, "the construction needs odd q, got q = " + std::to_string(q));
}

void add_excluded(std::vector<UPoly>& out, const Fel& v, const BigInt& q) {
  if (!in_subfield(v, 2, q) || in_subfield(v, 1, q)) return;
  UPoly m = minimal_polynomial(v, q);
  if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
}

// Minimal polynomials of the values -f_Y1 at the projective zeros of the
// internal form of f that land in F_{q^2} \ F_q.
std::vector<UPoly> excluded_quadratics(const BinForm& f, Rng& rng) {
  const Field& Fq = f.field();
  const BigInt& q = Fq->order();
  const BinForm fy1 = f.partial(1);
  const BinForm internal = internal_form(f);
  const UPoly qt = internal.dehomogenize();
  std::vector<UPoly> out;
  // conjugate roots give conjugate values, so one root per factor suffices
  for (const auto& fac : factor(qt, rng).factors) {
    if (fac.poly.degree() % 2 != 0) continue;
    const Field K = FieldCtx::adjoin_unchecked(Fq, fac.poly.flat());
    const Fel gamma = Fel::generator(K);
    add_excluded(out, -fy1.eval(Fel::one(K), gamma), q);
  }
  if (qt.degree() < internal.degree()) add_excluded(out, -fy1.eval(Fel(Fq), Fel::one(Fq)), q);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Partner lex_search(const BinForm& f, Rng& rng) {
  const YSide ys = prepare_y(f);
  std::optional<BinForm> found;
  for_each_gq(f.field()->order_u64(), [&](const BinForm& g) {
    const XSide xs = prepare_x(g, rng);
    if (singular_witness(ys, xs)) return true;
    found = g;
    return false;
  });
  if (!found) throw Error(Errc::internal, "no partner found for " + f.to_string());
  PartnerTrace t;
  t.method = "lex_search";
  t.g_out = *found;
  return Partner{*found, std::move(t)};
}

}  // namespace

Partner construct_partner(const BinForm& f, Rng& rng) {
  const std::uint64_t q = f.field()->order_u64();
  require_odd(q);
  detail::require_no_rational_point(f, "f");
  if (q <= 5) return lex_search(f, rng);

  const Field& Fq = f.field();
  PartnerTrace t;
  t.method = "galois_avoidance";
  t.excluded_quadratics = excluded_quadratics(f, rng);

  const auto els = enumerate_field(Fq);
  for (const Fel& b : els) {
    if (b.is_zero()) continue;
    for (const Fel& a : els) {
      UPoly m(Fq, std::vector<Fel>{b, a, Fel::one(Fq)});
      if (!is_irreducible(m)) continue;
      if (std::find(t.excluded_quadratics.begin(), t.excluded_quadratics.end(), m) != t.excluded_quadratics.end())
        continue;
      const int d = static_cast<int>(q) + 1;
      std::vector<Fel> cs(d + 1, Fel(Fq));
      cs[0] = b;
      cs[q] = a;
      cs[d] = Fel::one(Fq);
      BinForm g(Fq, cs);
      t.lambda2 = b.inv();
      t.lambda1 = a * *t.lambda2;
      t.k = b;
      t.chosen_quadratic = m;
      t.g_out = g;
      if (singular_witness(f, g, rng))
        throw Error(Errc::internal, "constructed partner " + g.to_string() + " gives a singular curve");
      return Partner{std::move(g), std::move(t)};
    }
  }
  throw Error(Errc::internal, "every irreducible quadratic is excluded");
}

std::vector<Fel> symmetric_lambda_candidates(std::uint64_t q) {
  require_odd(q);
  const Field F = canonical_field(q);
  const auto els = enumerate_field(F);
  std::vector<Fel> image;
  for (const Fel& u : els) image.push_back(-(u * u + u));
  std::vector<Fel> out;
  for (const Fel& l : els)
    if (std::find(image.begin(), image.end(), l) == image.end()) out.push_back(l);
  return out;
}

BinForm symmetric_form(std::uint64_t q, int variant, std::size_t index) {
  const auto lambdas = symmetric_lambda_candidates(q);
  if (variant < 0 || variant > 3) throw Error(Errc::index_out_of_range, "variant must be 0..3");
  if (index >= lambdas.size())
    throw Error(Errc::index_out_of_range,
                "index " + std::to_string(index) + " out of range; q = " + std::to_string(q) + " has " +
                    std::to_string(lambdas.size()) + " candidates");
  const Field F = canonical_field(q);
  const int d = static_cast<int>(q) + 1;
  std::vector<Fel> cs(d + 1, Fel(F));
  cs[0] = Fel::one(F);
  cs[d] = lambdas[index];
  const Fel sign = (variant % 2 == 0) ? Fel::one(F) : -Fel::one(F);
  cs[variant < 2 ? q : 1] = sign;
  return BinForm(F, cs);
}

}  // namespace fillcurve
