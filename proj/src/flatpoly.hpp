#pragma once

// Dense polynomials over a FieldCtx stored as one flat digit vector:
// coefficient i occupies digits [i*w, (i+1)*w) with w = F.width(). A
// polynomial is trimmed when its last block is nonzero; zero is empty.

#include <span>
#include <vector>

#include "fillcurve/field.hpp"

namespace fillcurve::detail {

using Flat = std::vector<Digit>;

inline int fdeg(const FieldCtx& F, const Flat& a) { return static_cast<int>(a.size() / F.width()) - 1; }

inline std::span<const Digit> fcoef(const FieldCtx& F, const Flat& a, int i) {
  return {a.data() + static_cast<std::size_t>(i) * F.width(), static_cast<std::size_t>(F.width())};
}
inline std::span<Digit> fcoef(const FieldCtx& F, Flat& a, int i) {
  return {a.data() + static_cast<std::size_t>(i) * F.width(), static_cast<std::size_t>(F.width())};
}
inline std::span<const Digit> flead(const FieldCtx& F, const Flat& a) { return fcoef(F, a, fdeg(F, a)); }

void ftrim(const FieldCtx& F, Flat& a);
Flat fconst_one(const FieldCtx& F);
/// X^n.
Flat fmonomial(const FieldCtx& F, int n);

Flat fadd(const FieldCtx& F, const Flat& a, const Flat& b);
Flat fsub(const FieldCtx& F, const Flat& a, const Flat& b);
Flat fmul(const FieldCtx& F, const Flat& a, const Flat& b);
Flat fscale(const FieldCtx& F, const Flat& a, std::span<const Digit> c);

/// a = q*b + r; b must be nonzero. q may be null.
void fdivmod(const FieldCtx& F, const Flat& a, const Flat& b, Flat* q, Flat& r);
Flat fmod(const FieldCtx& F, const Flat& a, const Flat& b);
/// Exact division; b must divide a.
Flat fdivexact(const FieldCtx& F, const Flat& a, const Flat& b);

Flat fmonic(const FieldCtx& F, const Flat& a);
/// Monic gcd; gcd(0, 0) is 0.
Flat fgcd(const FieldCtx& F, Flat a, Flat b);

Flat fmulmod(const FieldCtx& F, const Flat& a, const Flat& b, const Flat& m);
Flat fpowmod(const FieldCtx& F, const Flat& a, const BigInt& e, const Flat& m);

Flat fderiv(const FieldCtx& F, const Flat& a);

/// Evaluate at x in the same field.
void feval(const FieldCtx& F, const Flat& a, std::span<const Digit> x, std::span<Digit> out);

}  // namespace fillcurve::detail
