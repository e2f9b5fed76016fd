#include "flatpoly.hpp"

#include <algorithm>

namespace fillcurve::detail {

void ftrim(const FieldCtx& F, Flat& a) {
  const std::size_t w = F.width();
  while (!a.empty() && FieldCtx::is_zero({a.data() + a.size() - w, w})) a.resize(a.size() - w);
}

Flat fconst_one(const FieldCtx& F) {
  Flat r(F.width(), 0);
  r[0] = 1;
  return r;
}

Flat fmonomial(const FieldCtx& F, int n) {
  Flat r(static_cast<std::size_t>(n + 1) * F.width(), 0);
  r[static_cast<std::size_t>(n) * F.width()] = 1;
  return r;
}

Flat fadd(const FieldCtx& F, const Flat& a, const Flat& b) {
  const Flat& longer = a.size() >= b.size() ? a : b;
  const Flat& shorter = a.size() >= b.size() ? b : a;
  Flat r = longer;
  F.add({r.data(), shorter.size()}, shorter, {r.data(), shorter.size()});
  ftrim(F, r);
  return r;
}

Flat fsub(const FieldCtx& F, const Flat& a, const Flat& b) {
  Flat r(std::max(a.size(), b.size()), 0);
  std::copy(a.begin(), a.end(), r.begin());
  F.sub({r.data(), b.size()}, b, {r.data(), b.size()});
  ftrim(F, r);
  return r;
}

Flat fmul(const FieldCtx& F, const Flat& a, const Flat& b) {
  if (a.empty() || b.empty()) return {};
  const int da = fdeg(F, a), db = fdeg(F, b);
  const std::size_t w = F.width();
  Flat r(static_cast<std::size_t>(da + db + 1) * w, 0);
  if (F.is_prime_field()) {
    const std::uint64_t p = F.characteristic();
    std::vector<std::uint64_t> acc(r.size(), 0);
    for (int i = 0; i <= da; ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      for (int j = 0; j <= db; ++j) acc[i + j] = (acc[i + j] + ai * b[j]) % p;
    }
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<Digit>(acc[k]);
  } else {
    for (int i = 0; i <= da; ++i) {
      auto ai = fcoef(F, a, i);
      if (FieldCtx::is_zero(ai)) continue;
      for (int j = 0; j <= db; ++j) F.mul_add(ai, fcoef(F, b, j), fcoef(F, r, i + j));
    }
  }
  ftrim(F, r);
  return r;
}

Flat fscale(const FieldCtx& F, const Flat& a, std::span<const Digit> c) {
  Flat r(a.size());
  for (int i = 0; i <= fdeg(F, a); ++i) F.mul(fcoef(F, a, i), c, fcoef(F, r, i));
  ftrim(F, r);
  return r;
}

void fdivmod(const FieldCtx& F, const Flat& a, const Flat& b, Flat* q, Flat& r) {
  if (b.empty()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  const std::size_t w = F.width();
  const int db = fdeg(F, b);
  r = a;
  ftrim(F, r);
  const int da = fdeg(F, r);
  if (da < db) {
    if (q) q->clear();
    return;
  }
  Flat lead_inv(w);
  F.inv(flead(F, b), lead_inv);
  const bool monic = FieldCtx::is_one(flead(F, b));
  if (q) q->assign(static_cast<std::size_t>(da - db + 1) * w, 0);
  Flat c(w);
  if (F.is_prime_field()) {
    const std::uint64_t p = F.characteristic();
    const std::uint64_t li = lead_inv[0];
    for (int k = da; k >= db; --k) {
      const std::uint64_t ck = monic ? r[k] : (r[k] * li) % p;
      if (q) (*q)[k - db] = static_cast<Digit>(ck);
      if (ck == 0) continue;
      const std::uint64_t neg = p - ck;
      for (int j = 0; j <= db; ++j) r[k - db + j] = static_cast<Digit>((r[k - db + j] + neg * b[j]) % p);
    }
  } else {
    for (int k = da; k >= db; --k) {
      auto rk = fcoef(F, r, k);
      if (FieldCtx::is_zero(rk)) continue;
      if (monic)
        std::copy(rk.begin(), rk.end(), c.begin());
      else
        F.mul(rk, lead_inv, c);
      if (q) std::copy(c.begin(), c.end(), fcoef(F, *q, k - db).begin());
      for (int j = 0; j <= db; ++j) F.mul_sub(c, fcoef(F, b, j), fcoef(F, r, k - db + j));
    }
  }
  r.resize(static_cast<std::size_t>(db) * w);
  ftrim(F, r);
  if (q) ftrim(F, *q);
}

Flat fmod(const FieldCtx& F, const Flat& a, const Flat& b) {
  Flat r;
  fdivmod(F, a, b, nullptr, r);
  return r;
}

Flat fdivexact(const FieldCtx& F, const Flat& a, const Flat& b) {
  Flat q, r;
  fdivmod(F, a, b, &q, r);
  if (!r.empty()) throw Error(Errc::internal, "inexact polynomial division");
  return q;
}

Flat fmonic(const FieldCtx& F, const Flat& a) {
  if (a.empty() || FieldCtx::is_one(flead(F, a))) return a;
  Flat li(F.width());
  F.inv(flead(F, a), li);
  return fscale(F, a, li);
}

Flat fgcd(const FieldCtx& F, Flat a, Flat b) {
  ftrim(F, a);
  ftrim(F, b);
  while (!b.empty()) {
    Flat r;
    fdivmod(F, a, fmonic(F, b), nullptr, r);
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(F, a);
}

Flat fmulmod(const FieldCtx& F, const Flat& a, const Flat& b, const Flat& m) { return fmod(F, fmul(F, a, b), m); }

Flat fpowmod(const FieldCtx& F, const Flat& a, const BigInt& e, const Flat& m) {
  Flat base = fmod(F, a, m);
  if (e == 0) return fmod(F, fconst_one(F), m);
  Flat result;
  bool started = false;
  for (int bit = static_cast<int>(boost::multiprecision::msb(e)); bit >= 0; --bit) {
    if (started) result = fmulmod(F, result, result, m);
    if (boost::multiprecision::bit_test(e, bit)) {
      result = started ? fmulmod(F, result, base, m) : base;
      started = true;
    }
  }
  return result;
}

Flat fderiv(const FieldCtx& F, const Flat& a) {
  const int d = fdeg(F, a);
  if (d <= 0) return {};
  const std::size_t w = F.width();
  Flat r(static_cast<std::size_t>(d) * w, 0);
  const std::uint32_t p = F.characteristic();
  for (int i = 1; i <= d; ++i) {
    const std::uint64_t k = static_cast<std::uint64_t>(i) % p;
    auto src = fcoef(F, a, i);
    auto dst = fcoef(F, r, i - 1);
    for (std::size_t t = 0; t < w; ++t) dst[t] = static_cast<Digit>((k * src[t]) % p);
  }
  ftrim(F, r);
  return r;
}

void feval(const FieldCtx& F, const Flat& a, std::span<const Digit> x, std::span<Digit> out) {
  std::fill(out.begin(), out.end(), 0);
  Flat tmp(F.width());
  for (int i = fdeg(F, a); i >= 0; --i) {
    F.mul(out, x, tmp);
    F.add(tmp, fcoef(F, a, i), out);
  }
}

}  // namespace fillcurve::detail
