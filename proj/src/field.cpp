#include "fillcurve/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "flatpoly.hpp"

namespace fillcurve {

using detail::Flat;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, int> prime_power(std::uint64_t q) {
  if (q < 2) throw Error(Errc::not_a_prime_power, std::to_string(q) + " is not a prime power");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  if (p > UINT32_MAX) throw Error(Errc::not_a_prime_power, "characteristic exceeds 32 bits");
  int k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw Error(Errc::not_a_prime_power, std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), k};
}

// ---------------------------------------------------------------- FieldCtx

Field FieldCtx::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::not_a_prime_power, std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw Error(Errc::too_large, "prime fields are limited to p < 2^31");
  auto f = std::shared_ptr<FieldCtx>(new FieldCtx());
  f->p_ = p;
  f->order_ = p;
  if (p <= (1u << 16)) {
    f->prime_inverses_.assign(p, 0);
    for (std::uint64_t a = 1; a < p; ++a) {
      if (f->prime_inverses_[a] != 0) continue;
      // a^(p-2) by square and multiply
      std::uint64_t r = 1, b = a, e = p - 2;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      f->prime_inverses_[a] = static_cast<Digit>(r);
      f->prime_inverses_[r] = static_cast<Digit>(a);
    }
  }
  return f;
}

Field FieldCtx::adjoin_unchecked(Field base, std::vector<Digit> monic_modulus) {
  const std::size_t w = base->width();
  if (monic_modulus.size() % w != 0 || monic_modulus.size() < 2 * w)
    throw Error(Errc::degree_zero, "modulus must have degree at least 1");
  if (!is_one({monic_modulus.data() + monic_modulus.size() - w, w}))
    throw Error(Errc::not_irreducible, "modulus must be monic");
  auto f = std::shared_ptr<FieldCtx>(new FieldCtx());
  f->p_ = base->p_;
  f->degree_ = static_cast<int>(monic_modulus.size() / w) - 1;
  f->width_ = f->degree_ * base->width_;
  f->level_ = base->level_ + 1;
  f->order_ = boost::multiprecision::pow(base->order_, static_cast<unsigned>(f->degree_));
  f->modulus_ = std::move(monic_modulus);
  f->base_ = std::move(base);
  return f;
}

std::uint64_t FieldCtx::order_u64() const {
  if (order_ > BigInt(UINT64_MAX)) throw Error(Errc::too_large, "field order exceeds 64 bits");
  return static_cast<std::uint64_t>(order_);
}

bool FieldCtx::contains(const FieldCtx& sub) const {
  for (const FieldCtx* f = this; f; f = f->base_.get())
    if (same_field(*f, sub)) return true;
  return false;
}

const FieldCtx* FieldCtx::subfield_of_order(const BigInt& order) const {
  for (const FieldCtx* f = this; f; f = f->base_.get())
    if (f->order_ == order) return f;
  return nullptr;
}

Field FieldCtx::subfield_ptr_of_order(const BigInt& order) const {
  if (order_ == order) return nullptr;  // caller holds the owning pointer
  for (const Field* f = &base_; *f; f = &(*f)->base_)
    if ((*f)->order_ == order) return *f;
  return nullptr;
}

bool same_field(const FieldCtx& a, const FieldCtx& b) {
  if (&a == &b) return true;
  if (a.characteristic() != b.characteristic() || a.level() != b.level() || a.width() != b.width()) return false;
  if (a.is_prime_field()) return true;
  if (!std::equal(a.modulus().begin(), a.modulus().end(), b.modulus().begin(), b.modulus().end())) return false;
  return same_field(*a.base(), *b.base());
}

void FieldCtx::add(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Digit s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void FieldCtx::sub(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
}

void FieldCtx::neg(std::span<const Digit> a, std::span<Digit> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] == 0 ? 0 : p_ - a[i];
}

bool FieldCtx::is_zero(std::span<const Digit> a) {
  return std::all_of(a.begin(), a.end(), [](Digit d) { return d == 0; });
}

bool FieldCtx::is_one(std::span<const Digit> a) {
  return !a.empty() && a[0] == 1 && std::all_of(a.begin() + 1, a.end(), [](Digit d) { return d == 0; });
}

void FieldCtx::mul(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const {
  if (level_ == 0) {
    out[0] = static_cast<Digit>(static_cast<std::uint64_t>(a[0]) * b[0] % p_);
    return;
  }
  mul_tower(a.data(), b.data(), out.data());
}

void FieldCtx::mul_tower(const Digit* a, const Digit* b, Digit* out) const {
  const int d = degree_;
  const std::size_t n = 2 * static_cast<std::size_t>(d) - 1;
  if (base_->level_ == 0) {
    const std::uint64_t p = p_;
    std::array<std::uint64_t, 128> small;
    std::vector<std::uint64_t> big;
    std::uint64_t* acc = small.data();
    if (n > small.size()) {
      big.resize(n);
      acc = big.data();
    }
    std::fill_n(acc, n, 0);
    for (int i = 0; i < d; ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      for (int j = 0; j < d; ++j) acc[i + j] = (acc[i + j] + ai * b[j]) % p;
    }
    for (int k = static_cast<int>(n) - 1; k >= d; --k) {
      const std::uint64_t c = acc[k];
      if (c == 0) continue;
      for (int j = 0; j < d; ++j) acc[k - d + j] = (acc[k - d + j] + c * (p - modulus_[j])) % p;
    }
    for (int i = 0; i < d; ++i) out[i] = static_cast<Digit>(acc[i]);
    return;
  }
  const std::size_t wb = base_->width_;
  std::vector<Digit> prod(n * wb, 0);
  for (int i = 0; i < d; ++i) {
    std::span<const Digit> ai{a + i * wb, wb};
    if (is_zero(ai)) continue;
    for (int j = 0; j < d; ++j) base_->mul_add(ai, {b + j * wb, wb}, {prod.data() + (i + j) * wb, wb});
  }
  std::vector<Digit> c(wb);
  for (int k = static_cast<int>(n) - 1; k >= d; --k) {
    std::span<const Digit> ck{prod.data() + k * wb, wb};
    if (is_zero(ck)) continue;
    std::copy(ck.begin(), ck.end(), c.begin());
    for (int j = 0; j < d; ++j)
      base_->mul_sub(c, {modulus_.data() + j * wb, wb}, {prod.data() + (k - d + j) * wb, wb});
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d * wb), out);
}

void FieldCtx::mul_add(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const {
  if (level_ == 0) {
    out[0] = static_cast<Digit>((out[0] + static_cast<std::uint64_t>(a[0]) * b[0]) % p_);
    return;
  }
  std::vector<Digit> t(width_);
  mul_tower(a.data(), b.data(), t.data());
  add(out, t, out);
}

void FieldCtx::mul_sub(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const {
  if (level_ == 0) {
    const std::uint64_t prod = static_cast<std::uint64_t>(a[0]) * b[0] % p_;
    out[0] = static_cast<Digit>((out[0] + p_ - prod) % p_);
    return;
  }
  std::vector<Digit> t(width_);
  mul_tower(a.data(), b.data(), t.data());
  sub(out, t, out);
}

void FieldCtx::inv(std::span<const Digit> a, std::span<Digit> out) const {
  if (is_zero(a)) throw Error(Errc::division_by_zero, "inverse of zero");
  if (level_ == 0) {
    if (!prime_inverses_.empty()) {
      out[0] = prime_inverses_[a[0]];
      return;
    }
    std::int64_t r0 = p_, r1 = a[0], t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (t0 < 0) t0 += p_;
    out[0] = static_cast<Digit>(t0);
    return;
  }
  // Extended Euclid over the base: find u with u*a = 1 mod modulus.
  const FieldCtx& B = *base_;
  Flat r0(modulus_.begin(), modulus_.end());
  Flat r1(a.begin(), a.end());
  detail::ftrim(B, r1);
  Flat t0, t1 = detail::fconst_one(B);
  while (!r1.empty()) {
    Flat q, r;
    detail::fdivmod(B, r0, r1, &q, r);
    Flat t2 = detail::fsub(B, t0, detail::fmul(B, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant.
  Flat cinv(B.width());
  B.inv(detail::fcoef(B, r0, 0), cinv);
  Flat u = detail::fscale(B, t0, cinv);
  std::fill(out.begin(), out.end(), 0);
  std::copy(u.begin(), u.end(), out.begin());
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "GF(" << order_ << ")";
  if (level_ > 0) {
    os << " = " << (base_->level_ == 0 ? base_->describe() : "GF(" + base_->order_.str() + ")") << "[t" << level_
       << "]/(";
    const std::size_t w = base_->width_;
    bool first = true;
    for (int i = degree_; i >= 0; --i) {
      std::vector<Digit> c(modulus_.begin() + i * w, modulus_.begin() + (i + 1) * w);
      if (is_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      Fel e(base_, c);
      if (i == 0 || !e.is_one()) os << (w > 1 ? "(" + e.to_string() + ")" : e.to_string());
      if (i > 0) os << "t" << level_ << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------- Fel

Fel::Fel(Field field) : field_(std::move(field)), digits_(field_->width(), 0) {}

Fel::Fel(Field field, std::vector<Digit> digits) : field_(std::move(field)), digits_(std::move(digits)) {
  if (digits_.size() != static_cast<std::size_t>(field_->width()))
    throw Error(Errc::incompatible_fields, "element has wrong number of digits for " + field_->describe());
  for (Digit d : digits_)
    if (d >= field_->characteristic()) throw Error(Errc::parse, "digit out of range");
}

Fel Fel::from_int(Field field, std::int64_t value) {
  Fel r(std::move(field));
  const std::int64_t p = r.field_->characteristic();
  std::int64_t v = value % p;
  if (v < 0) v += p;
  r.digits_[0] = static_cast<Digit>(v);
  return r;
}

Fel Fel::generator(Field field) {
  if (field->is_prime_field()) throw Error(Errc::incompatible_fields, "prime field has no adjoined generator");
  Fel r(field);
  if (field->degree() == 1) {
    // t is the root of t - c, i.e. t = c in the base.
    const std::size_t w = field->base()->width();
    Fel c(field->base(), std::vector<Digit>(field->modulus().begin(), field->modulus().begin() + w));
    return (-c).lift(field);
  }
  r.digits_[field->base()->width()] = 1;
  return r;
}

Fel Fel::from_base_coeffs(Field field, std::span<const Fel> coeffs) {
  if (field->is_prime_field() || coeffs.size() != static_cast<std::size_t>(field->degree()))
    throw Error(Errc::incompatible_fields, "wrong number of base coefficients");
  Fel r(field);
  const std::size_t w = field->base()->width();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!same_field(*coeffs[i].field(), *field->base()))
      throw Error(Errc::mixed_fields, "coefficient not in the base field");
    std::copy(coeffs[i].digits_.begin(), coeffs[i].digits_.end(), r.digits_.begin() + i * w);
  }
  return r;
}

Fel Fel::coeff(int i) const {
  if (field_->is_prime_field()) return *this;
  const std::size_t w = field_->base()->width();
  return Fel(field_->base(), std::vector<Digit>(digits_.begin() + i * w, digits_.begin() + (i + 1) * w));
}

void Fel::require_same(const Fel& o) const {
  if (!field_ || !o.field_ || !same_field(*field_, *o.field_))
    throw Error(Errc::mixed_fields, "operands live in different fields");
}

Fel Fel::operator-() const {
  Fel r(field_);
  field_->neg(digits_, r.digits_);
  return r;
}

Fel& Fel::operator+=(const Fel& o) {
  require_same(o);
  field_->add(digits_, o.digits_, digits_);
  return *this;
}

Fel& Fel::operator-=(const Fel& o) {
  require_same(o);
  field_->sub(digits_, o.digits_, digits_);
  return *this;
}

Fel& Fel::operator*=(const Fel& o) {
  require_same(o);
  field_->mul(digits_, o.digits_, digits_);
  return *this;
}

Fel& Fel::operator/=(const Fel& o) {
  require_same(o);
  return *this *= o.inv();
}

Fel Fel::inv() const {
  Fel r(field_);
  field_->inv(digits_, r.digits_);
  return r;
}

Fel Fel::pow(const BigInt& n) const {
  if (n < 0) throw Error(Errc::internal, "negative exponent");
  Fel result = one(field_);
  if (n == 0) return result;
  Fel base = *this;
  for (int bit = static_cast<int>(boost::multiprecision::msb(n)); bit >= 0; --bit) {
    result *= result;
    if (boost::multiprecision::bit_test(n, bit)) result *= base;
  }
  return result;
}

Fel Fel::lift(const Field& target) const {
  if (!target->contains(*field_))
    throw Error(Errc::incompatible_fields, field_->describe() + " is not a subfield of " + target->describe());
  Fel r(target);
  std::copy(digits_.begin(), digits_.end(), r.digits_.begin());
  return r;
}

Fel Fel::project(const Field& target) const {
  if (!field_->contains(*target))
    throw Error(Errc::incompatible_fields, target->describe() + " is not a subfield of " + field_->describe());
  const std::size_t w = target->width();
  if (!FieldCtx::is_zero(std::span<const Digit>(digits_).subspan(w)))
    throw Error(Errc::incompatible_fields, "element does not lie in " + target->describe());
  return Fel(target, std::vector<Digit>(digits_.begin(), digits_.begin() + w));
}

bool operator==(const Fel& a, const Fel& b) {
  if (a.field_ == nullptr || b.field_ == nullptr) return a.field_ == b.field_;
  return same_field(*a.field_, *b.field_) && a.digits_ == b.digits_;
}

std::string Fel::to_string() const {
  if (field_->is_prime_field()) return std::to_string(digits_[0]);
  std::string out;
  const bool nested = !field_->base()->is_prime_field();
  for (int i = 0; i < field_->degree(); ++i) {
    if (i) out += ',';
    const std::string c = coeff(i).to_string();
    out += nested ? "[" + c + "]" : c;
  }
  return out;
}

// ---------------------------------------------------------------- free functions

Fel frobenius(const Fel& a, const BigInt& base_order, std::uint64_t i) {
  Fel r = a;
  for (std::uint64_t k = 0; k < i; ++k) r = r.pow(base_order);
  return r;
}

bool in_subfield(const Fel& a, int m, const BigInt& q) {
  const FieldCtx& F = *a.field();
  const FieldCtx* sub = F.subfield_of_order(q);
  if (!sub) throw Error(Errc::bad_subfield_degree, "GF(" + q.str() + ") is not a subfield of " + F.describe());
  const int total = F.width() / sub->width();
  if (m < 1 || total % m != 0)
    throw Error(Errc::bad_subfield_degree,
                "degree " + std::to_string(m) + " does not divide " + std::to_string(total));
  return frobenius(a, q, static_cast<std::uint64_t>(m)) == a;
}

Fel element_at(const Field& field, std::uint64_t index) {
  Fel r(field);
  std::vector<Digit> d(field->width(), 0);
  const std::uint32_t p = field->characteristic();
  for (int i = field->width() - 1; i >= 0; --i) {
    d[i] = static_cast<Digit>(index % p);
    index /= p;
  }
  if (index != 0) throw Error(Errc::index_out_of_range, "element index out of range");
  return Fel(field, std::move(d));
}

std::uint64_t element_index(const Fel& a) {
  std::uint64_t idx = 0;
  for (Digit d : a.digits()) idx = idx * a.field()->characteristic() + d;
  return idx;
}

std::vector<Fel> enumerate_field(const Field& field) {
  const std::uint64_t n = field->order_u64();
  std::vector<Fel> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(field, i));
  return out;
}

}  // namespace fillcurve
