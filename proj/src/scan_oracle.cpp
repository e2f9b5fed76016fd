#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "checks.hpp"
#include "fillcurve/curve.hpp"
#include "linalg.hpp"

namespace fillcurve {

namespace {

// x^(Q^n) = x mod m, and the Berlekamp map h -> h^Q - h has a one-dimensional
// kernel. Together: m is squarefree with exactly one irreducible factor.
bool certified_irreducible(const UPoly& m, const BigInt& Q) {
  const int n = m.degree();
  const Field& F = m.field();
  const UPoly X = UPoly::x(F);
  if (!(powmod(X, boost::multiprecision::pow(Q, n), m) == X % m)) return false;
  const UPoly xq = powmod(X, Q, m);
  detail::Matrix M(n, std::vector<Fel>(n, Fel(F)));
  UPoly col = UPoly::constant(Fel::one(F));
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) M[r][c] = col.coeff(r);
    M[c][c] -= Fel::one(F);
    col = (col * xq) % m;
  }
  return detail::nullspace(M, F, n).size() == 1;
}

// Lexicographically smallest certified modulus of degree d, c_0 most significant.
Field scanned_extension(const Field& Fq, int d) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, Field> cache;
  const auto key = std::make_pair(Fq->describe(), d);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const std::uint64_t q = Fq->order_u64();
  std::vector<std::uint64_t> idx(d, 0);
  for (;;) {
    std::vector<Fel> cs;
    for (int i = 0; i < d; ++i) cs.push_back(element_at(Fq, idx[i]));
    cs.push_back(Fel::one(Fq));
    const UPoly m(Fq, cs);
    if (certified_irreducible(m, Fq->order())) {
      Field E = FieldCtx::adjoin_unchecked(Fq, m.flat());
      std::lock_guard lock(mu);
      return cache.emplace(key, E).first->second;
    }
    int i = d - 1;
    while (i >= 0 && ++idx[i] == q) idx[i--] = 0;
    if (i < 0) throw Error(Errc::internal, "no irreducible modulus found");
  }
}

std::vector<int> proper_divisors(int d) {
  std::vector<int> out;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) out.push_back(e);
  return out;
}

bool exact_degree(const Fel& a, int d, const BigInt& Q) {
  for (int e : proper_divisors(d))
    if (frobenius(a, Q, e) == a) return false;
  return true;
}

std::uint64_t clamp(const BigInt& v) {
  const BigInt cap = std::numeric_limits<std::uint64_t>::max();
  return v > cap ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(v);
}

// Exact degrees >= 2 of the roots of p, by scanning F_{Q^d} for d = 2..2q.
std::set<int> root_degrees(const UPoly& p, const Field& Fq, int max_d) {
  std::set<int> out;
  if (p.degree() < 1) return out;
  const BigInt& Q = Fq->order();
  for (int d = 2; d <= max_d; ++d) {
    const Field E = scanned_extension(Fq, d);
    const std::uint64_t n = E->order_u64();
    for (std::uint64_t i = 0; i < n; ++i) {
      const Fel a = element_at(E, i);
      if (p.eval(a).is_zero() && exact_degree(a, d, Q)) {
        out.insert(d);
        break;
      }
    }
  }
  return out;
}

// Elements of L fixed by x -> x^(Q^d), with exact degree d, that are roots of p.
std::vector<Fel> roots_in_subfield(const UPoly& p, const Field& L, int d, const BigInt& Q) {
  const Field& Fq = L->base();
  const int N = L->degree();
  const Fel u = Fel::generator(L);
  detail::Matrix M(N, std::vector<Fel>(N, Fel(Fq)));
  Fel ui = Fel::one(L);
  for (int c = 0; c < N; ++c) {
    const Fel img = frobenius(ui, Q, d) - ui;
    for (int r = 0; r < N; ++r) M[r][c] = img.coeff(r);
    ui *= u;
  }
  std::vector<Fel> basis;
  for (const auto& v : detail::nullspace(M, Fq, N)) basis.push_back(Fel::from_base_coeffs(L, v));
  const std::uint64_t q = Fq->order_u64();
  const auto scalars = enumerate_field(Fq);
  std::vector<std::uint64_t> idx(basis.size(), 0);
  std::vector<Fel> out;
  for (;;) {
    Fel a(L);
    for (std::size_t k = 0; k < basis.size(); ++k) a += scalars[idx[k]].lift(L) * basis[k];
    if (p.eval(a).is_zero() && exact_degree(a, d, Q)) out.push_back(a);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == q) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

}  // namespace

std::optional<SingularWitness> scan_oracle(const BinForm& f, const BinForm& g, std::uint64_t budget) {
  if (!same_field(*f.field(), *g.field())) throw Error(Errc::mixed_fields, "f and g over different fields");
  detail::require_no_rational_point(f, "f");
  detail::require_no_rational_point(g, "g");
  const Field& Fq = f.field();
  const BigInt& Q = Fq->order();
  const int max_d = 2 * static_cast<int>(Fq->order_u64());

  BigInt step_a = 0;
  for (int d = 2; d <= max_d; ++d) step_a += 2 * boost::multiprecision::pow(Q, d);
  if (step_a > budget) throw BudgetExceeded(clamp(step_a), budget);

  const UPoly p = internal_form(g).dehomogenize();
  const UPoly qt = internal_form(f).dehomogenize();
  const std::set<int> D1 = root_degrees(p, Fq, max_d);
  const std::set<int> D2 = root_degrees(qt, Fq, max_d);
  if (D1.empty() || D2.empty()) return std::nullopt;

  std::set<int> D(D1);
  D.insert(D2.begin(), D2.end());
  int N = 1;
  for (int d : D) N = std::lcm(N, d);
  BigInt step_b = 0;
  for (int d : D) step_b += N * boost::multiprecision::pow(Q, d);
  if (step_a + step_b > budget) throw BudgetExceeded(clamp(step_a + step_b), budget);

  const Field L = scanned_extension(Fq, N);
  std::vector<Fel> alphas, betas;
  for (int d : D1) {
    auto r = roots_in_subfield(p, L, d, Q);
    alphas.insert(alphas.end(), r.begin(), r.end());
  }
  for (int d : D2) {
    auto r = roots_in_subfield(qt, L, d, Q);
    betas.insert(betas.end(), r.begin(), r.end());
  }
  const Curve curve = build_curve(f, g);
  for (const Fel& a : alphas) {
    for (const Fel& b : betas) {
      const auto vals = jacobian_values(curve, a, b);
      if (std::all_of(vals.begin(), vals.end(), [](const Fel& v) { return v.is_zero(); }))
        return SingularWitness(curve, minimal_polynomial(a, Q), minimal_polynomial(b, Q), a, b);
    }
  }
  return std::nullopt;
}

}  // namespace fillcurve
