#include "fillcurve/unipoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "flatpoly.hpp"
#include "linalg.hpp"

namespace fillcurve {

using namespace detail;

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Field field, const std::vector<Fel>& coeffs) : field_(std::move(field)) {
  flat_.reserve(coeffs.size() * field_->width());
  for (const Fel& c : coeffs) {
    if (!same_field(*c.field(), *field_)) throw Error(Errc::mixed_fields, "coefficient from another field");
    flat_.insert(flat_.end(), c.digits().begin(), c.digits().end());
  }
  ftrim(*field_, flat_);
}

UPoly::UPoly(Field field, std::vector<Digit> flat) : field_(std::move(field)), flat_(std::move(flat)) {
  if (flat_.size() % field_->width() != 0) throw Error(Errc::incompatible_fields, "ragged flat polynomial");
  ftrim(*field_, flat_);
}

UPoly UPoly::constant(const Fel& c) { return UPoly(c.field(), std::vector<Fel>{c}); }

UPoly UPoly::x(Field field) { return UPoly(field, fmonomial(*field, 1)); }

UPoly UPoly::monomial(const Fel& c, int n) {
  if (c.is_zero()) return UPoly(c.field());
  Flat f(static_cast<std::size_t>(n + 1) * c.field()->width(), 0);
  std::copy(c.digits().begin(), c.digits().end(), f.begin() + static_cast<std::ptrdiff_t>(n) * c.field()->width());
  return UPoly(c.field(), std::move(f));
}

int UPoly::degree() const { return fdeg(*field_, flat_); }

bool UPoly::is_one() const { return degree() == 0 && FieldCtx::is_one(flat_); }

bool UPoly::is_monic() const { return !is_zero() && FieldCtx::is_one(flead(*field_, flat_)); }

Fel UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Fel(field_);
  auto c = fcoef(*field_, flat_, i);
  return Fel(field_, std::vector<Digit>(c.begin(), c.end()));
}

std::vector<Fel> UPoly::coeffs() const {
  std::vector<Fel> out;
  for (int i = 0; i <= degree(); ++i) out.push_back(coeff(i));
  return out;
}

void UPoly::require_same(const UPoly& o) const {
  if (!same_field(*field_, *o.field_)) throw Error(Errc::mixed_fields, "polynomials over different fields");
}

UPoly UPoly::operator-() const { return UPoly(field_) - *this; }

UPoly operator+(const UPoly& a, const UPoly& b) {
  a.require_same(b);
  return UPoly(a.field_, fadd(*a.field_, a.flat_, b.flat_));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  a.require_same(b);
  return UPoly(a.field_, fsub(*a.field_, a.flat_, b.flat_));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  a.require_same(b);
  return UPoly(a.field_, fmul(*a.field_, a.flat_, b.flat_));
}

UPoly UPoly::scaled(const Fel& c) const {
  if (!same_field(*c.field(), *field_)) throw Error(Errc::mixed_fields, "scalar from another field");
  return UPoly(field_, fscale(*field_, flat_, c.digits()));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  a.require_same(b);
  Flat q, r;
  fdivmod(*a.field_, a.flat_, b.flat_, &q, r);
  return {UPoly(a.field_, std::move(q)), UPoly(a.field_, std::move(r))};
}

bool operator==(const UPoly& a, const UPoly& b) {
  return same_field(*a.field_, *b.field_) && a.flat_ == b.flat_;
}

UPoly UPoly::monic() const { return UPoly(field_, fmonic(*field_, flat_)); }

UPoly UPoly::derivative() const { return UPoly(field_, fderiv(*field_, flat_)); }

Fel UPoly::eval(const Fel& x) const {
  const Field& K = x.field();
  if (!K->contains(*field_))
    throw Error(Errc::incompatible_fields, "cannot evaluate a polynomial over " + field_->describe() + " at a point of " +
                                               K->describe());
  // Horner; coefficients embed into K by zero padding.
  const std::size_t w = field_->width();
  std::vector<Digit> tmp(K->width());
  std::vector<Digit> out(K->width(), 0);
  for (int i = degree(); i >= 0; --i) {
    K->mul(out, x.digits(), tmp);
    for (std::size_t t = 0; t < w; ++t) {
      const Digit s = tmp[t] + flat_[i * w + t];
      tmp[t] = s >= K->characteristic() ? s - K->characteristic() : s;
    }
    out.swap(tmp);
  }
  return Fel(K, std::move(out));
}

UPoly UPoly::lift(const Field& target) const {
  if (!target->contains(*field_))
    throw Error(Errc::incompatible_fields, field_->describe() + " is not a subfield of " + target->describe());
  if (same_field(*target, *field_)) return UPoly(target, flat_);
  const std::size_t w = field_->width(), W = target->width();
  Flat out(static_cast<std::size_t>(degree() + 1) * W, 0);
  for (int i = 0; i <= degree(); ++i) std::copy_n(flat_.begin() + i * w, w, out.begin() + i * W);
  return UPoly(target, std::move(out));
}

UPoly UPoly::pow(unsigned n) const {
  UPoly result = constant(Fel::one(field_));
  UPoly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (i) out += ';';
    out += coeff(i).to_string();
  }
  return out;
}

bool canonical_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.flat() < b.flat();
}

// ---------------------------------------------------------------- gcd, powmod, irreducibility

UPoly monic_gcd(const UPoly& a, const UPoly& b) {
  if (!same_field(*a.field(), *b.field())) throw Error(Errc::mixed_fields, "polynomials over different fields");
  if (a.is_zero() && b.is_zero()) throw Error(Errc::both_zero, "gcd(0, 0) is undefined");
  return UPoly(a.field(), fgcd(*a.field(), a.flat(), b.flat()));
}

UPoly powmod(const UPoly& a, const BigInt& e, const UPoly& m) {
  if (!same_field(*a.field(), *m.field())) throw Error(Errc::mixed_fields, "polynomials over different fields");
  return UPoly(a.field(), fpowmod(*a.field(), a.flat(), e, m.flat()));
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// p-th root of an element: a^(p^(n-1)) with n the absolute degree.
Fel element_pth_root(const Fel& a) {
  const auto& F = *a.field();
  return a.pow(boost::multiprecision::pow(BigInt(F.characteristic()), static_cast<unsigned>(F.width() - 1)));
}

}  // namespace

bool is_irreducible(const UPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(Errc::degree_zero, "irreducibility of a constant");
  if (n == 1) return true;
  const FieldCtx& F = *f.field();
  const Flat m = fmonic(F, f.flat());
  const BigInt& Q = F.order();
  const Flat X = fmonomial(F, 1);
  // frob[k] = X^(Q^k) mod m
  std::vector<Flat> frob{fmod(F, X, m)};
  for (int k = 1; k <= n; ++k) frob.push_back(fpowmod(F, frob.back(), Q, m));
  if (fsub(F, frob[n], fmod(F, X, m)).size() != 0) return false;
  for (int r : prime_divisors(n)) {
    Flat g = fgcd(F, m, fsub(F, frob[n / r], X));
    if (fdeg(F, g) > 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- factorization

std::vector<Factor> squarefree_decomposition(const UPoly& monic_f) {
  const Field& Fp = monic_f.field();
  const FieldCtx& F = *Fp;
  std::vector<Factor> out;
  if (monic_f.degree() < 1) return out;
  const std::uint32_t p = F.characteristic();
  Flat f = monic_f.flat();
  Flat c = fgcd(F, f, fderiv(F, f));
  Flat w = fdivexact(F, f, c);
  int i = 1;
  while (fdeg(F, w) > 0) {
    Flat y = fgcd(F, w, c);
    Flat z = fdivexact(F, w, y);
    if (fdeg(F, z) > 0) out.push_back({UPoly(Fp, z), i});
    ++i;
    w = std::move(y);
    c = fdivexact(F, c, w);
  }
  if (fdeg(F, c) > 0) {
    // c is a polynomial in X^p.
    const int dc = fdeg(F, c);
    std::vector<Fel> root;
    for (int k = 0; k <= dc; k += static_cast<int>(p)) {
      auto ck = fcoef(F, c, k);
      root.push_back(element_pth_root(Fel(Fp, std::vector<Digit>(ck.begin(), ck.end()))));
    }
    for (auto& part : squarefree_decomposition(UPoly(Fp, root)))
      out.push_back({part.poly, part.multiplicity * static_cast<int>(p)});
  }
  return out;
}

std::vector<std::pair<UPoly, int>> distinct_degree(const UPoly& f) {
  const Field& Fp = f.field();
  const FieldCtx& F = *Fp;
  std::vector<std::pair<UPoly, int>> out;
  Flat rest = fmonic(F, f.flat());
  const Flat X = fmonomial(F, 1);
  Flat h = fmod(F, X, rest);
  for (int i = 1; fdeg(F, rest) >= 2 * i; ++i) {
    h = fpowmod(F, h, F.order(), rest);
    Flat g = fgcd(F, rest, fsub(F, h, X));
    if (fdeg(F, g) > 0) {
      out.emplace_back(UPoly(Fp, g), i);
      rest = fdivexact(F, rest, g);
      h = fmod(F, h, rest);
    }
  }
  if (fdeg(F, rest) > 0) out.emplace_back(UPoly(Fp, rest), fdeg(F, rest));
  return out;
}

namespace {

Flat random_poly(const FieldCtx& F, int below_degree, Rng& rng) {
  Flat a(static_cast<std::size_t>(below_degree) * F.width());
  for (auto& d : a) d = static_cast<Digit>(rng.below(F.characteristic()));
  ftrim(F, a);
  return a;
}

void equal_degree_rec(const Field& Fp, const Flat& f, int d, Rng& rng, std::vector<UPoly>& out) {
  const FieldCtx& F = *Fp;
  const int n = fdeg(F, f);
  if (n <= d) {
    out.emplace_back(Fp, f);
    return;
  }
  const bool even = F.characteristic() == 2;
  const BigInt Qd = boost::multiprecision::pow(F.order(), static_cast<unsigned>(d));
  const BigInt half = (Qd - 1) / 2;
  const int trace_steps = F.width() * d;  // Q^d = 2^trace_steps in characteristic 2
  const Flat one = fconst_one(F);
  for (;;) {
    Flat a = random_poly(F, n, rng);
    if (fdeg(F, a) < 1) continue;
    Flat g = fgcd(F, f, a);
    if (fdeg(F, g) == 0) {
      Flat b;
      if (even) {
        Flat t = a;
        b = a;
        for (int k = 1; k < trace_steps; ++k) {
          t = fmulmod(F, t, t, f);
          b = fadd(F, b, t);
        }
      } else {
        b = fsub(F, fpowmod(F, a, half, f), one);
      }
      g = fgcd(F, f, b);
    }
    const int dg = fdeg(F, g);
    if (dg > 0 && dg < n) {
      equal_degree_rec(Fp, g, d, rng, out);
      equal_degree_rec(Fp, fdivexact(F, f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<UPoly> equal_degree(const UPoly& f, int d, Rng& rng) {
  std::vector<UPoly> out;
  if (f.degree() < 1) return out;
  if (f.degree() % d != 0) throw Error(Errc::internal, "equal-degree input has degree not divisible by d");
  equal_degree_rec(f.field(), fmonic(*f.field(), f.flat()), d, rng, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Factorization factor(const UPoly& f, Rng& rng) {
  if (f.degree() < 1) throw Error(Errc::degree_zero, "cannot factor a constant");
  Factorization result{f.lead(), {}};
  for (const auto& part : squarefree_decomposition(f.monic()))
    for (const auto& [block, d] : distinct_degree(part.poly))
      for (auto& irr : equal_degree(block, d, rng)) result.factors.push_back({std::move(irr), part.multiplicity});
  std::sort(result.factors.begin(), result.factors.end(), [](const Factor& a, const Factor& b) {
    if (canonical_less(a.poly, b.poly)) return true;
    if (canonical_less(b.poly, a.poly)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return result;
}

UPoly Factorization::expand() const {
  UPoly r = UPoly::constant(unit);
  for (const auto& fac : factors) r = r * fac.poly.pow(static_cast<unsigned>(fac.multiplicity));
  return r;
}

std::vector<Fel> roots_in_field(const UPoly& f, const Field& K) {
  if (!K->contains(*f.field()))
    throw Error(Errc::incompatible_fields, f.field()->describe() + " is not a subfield of " + K->describe());
  std::vector<Fel> out;
  const std::uint64_t n = K->order_u64();
  for (std::uint64_t i = 0; i < n; ++i) {
    Fel x = element_at(K, i);
    if (f.eval(x).is_zero()) out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------- towers

Field extend(const UPoly& modulus) {
  if (modulus.degree() < 1) throw Error(Errc::degree_zero, "extension modulus must have positive degree");
  if (!modulus.is_monic()) throw Error(Errc::not_irreducible, "extension modulus must be monic");
  if (!is_irreducible(modulus))
    throw Error(Errc::not_irreducible, "modulus " + modulus.to_string() + " is reducible");
  return FieldCtx::adjoin_unchecked(modulus.field(), modulus.flat());
}

UPoly smallest_irreducible(const Field& F, int k) {
  if (k < 1) throw Error(Errc::degree_zero, "degree must be positive");
  const std::uint64_t n = F->order_u64();
  // Odometer over (c0, ..., c_{k-1}); c0 is the most significant digit.
  std::vector<std::uint64_t> idx(k, 0);
  if (k > 1) idx[0] = 1;  // c0 = 0 means X divides
  for (;;) {
    std::vector<Fel> coeffs;
    for (int i = 0; i < k; ++i) coeffs.push_back(element_at(F, idx[i]));
    coeffs.push_back(Fel::one(F));
    UPoly cand(F, coeffs);
    if (is_irreducible(cand)) return cand;
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) throw Error(Errc::internal, "no irreducible polynomial found");
  }
}

Field canonical_field(std::uint64_t q) {
  static std::mutex mu;
  static std::map<std::uint64_t, Field> cache;
  const auto [p, k] = prime_power(q);
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  Field prime_field;
  if (auto it = cache.find(p); it != cache.end())
    prime_field = it->second;
  else
    prime_field = cache[p] = FieldCtx::prime(p);
  if (k == 1) return prime_field;
  Field F = FieldCtx::adjoin_unchecked(prime_field, smallest_irreducible(prime_field, k).flat());
  cache[q] = F;
  return F;
}

UPoly minimal_polynomial(const Fel& a, const BigInt& q) {
  const Field& L = a.field();
  Field S = L->order() == q ? L : L->subfield_ptr_of_order(q);
  if (!S) throw Error(Errc::incompatible_fields, "GF(" + q.str() + ") is not a subfield of " + L->describe());
  const int n = L->width() / S->width();
  // Columns 1, a, a^2, ...; stop at the first dependency.
  std::vector<std::vector<Fel>> cols;
  Fel power = Fel::one(L);
  for (int k = 0; k <= n; ++k) {
    cols.push_back(detail::coordinates(power, S));
    Matrix M(n, std::vector<Fel>());
    for (int r = 0; r < n; ++r)
      for (const auto& col : cols) M[r].push_back(col[r]);
    auto ns = detail::nullspace(M, S, k + 1);
    if (!ns.empty()) {
      std::vector<Fel> rel = ns.front();
      const Fel lead_inv = rel[k].inv();
      for (auto& c : rel) c *= lead_inv;
      return UPoly(S, rel);
    }
    power *= a;
  }
  throw Error(Errc::internal, "no linear dependency found");
}

Fel embed_root(const UPoly& m, const Field& target, Rng& rng) {
  const Field& F = m.field();
  if (m.degree() < 1) throw Error(Errc::degree_zero, "constant has no roots");
  if (!target->contains(*F)) throw Error(Errc::incompatible_fields, "target does not contain the coefficient field");
  const int D = target->width() / F->width();
  if (D % m.degree() != 0)
    throw Error(Errc::no_root_in_target, "degree " + std::to_string(m.degree()) + " does not divide " +
                                             std::to_string(D));
  const auto linear = equal_degree(m.lift(target).monic(), 1, rng);
  std::vector<Fel> roots;
  for (const auto& l : linear) roots.push_back(-l.coeff(0));
  return *std::min_element(roots.begin(), roots.end());
}

Fel embed_root(const UPoly& m, const Field& target) {
  Rng rng(0);
  return embed_root(m, target, rng);
}

}  // namespace fillcurve
