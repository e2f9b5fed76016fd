#include "fillcurve/binform.hpp"

#include <map>
#include <mutex>

#include "flatpoly.hpp"

namespace fillcurve {

// ---------------------------------------------------------------- BinForm

BinForm::BinForm(Field field, const std::vector<Fel>& coeffs)
    : field_(std::move(field)), degree_(static_cast<int>(coeffs.size()) - 1) {
  if (coeffs.empty()) throw Error(Errc::degree_mismatch, "a form needs at least one coefficient");
  for (const Fel& c : coeffs) {
    if (!same_field(*c.field(), *field_)) throw Error(Errc::mixed_fields, "coefficient from another field");
    flat_.insert(flat_.end(), c.digits().begin(), c.digits().end());
  }
}

BinForm::BinForm(Field field, int degree, std::vector<Digit> flat)
    : field_(std::move(field)), degree_(degree), flat_(std::move(flat)) {
  if (degree_ < 0 || flat_.size() != static_cast<std::size_t>(degree_ + 1) * field_->width())
    throw Error(Errc::degree_mismatch, "flat coefficient length does not match the degree");
}

BinForm BinForm::zero(Field field, int degree) {
  const std::size_t n = static_cast<std::size_t>(degree + 1) * field->width();
  return BinForm(std::move(field), degree, std::vector<Digit>(n, 0));
}

BinForm BinForm::from_ints(Field field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Fel> c;
  for (auto v : coeffs) c.push_back(Fel::from_int(field, v));
  return BinForm(field, c);
}

Fel BinForm::coeff(int i) const {
  const std::size_t w = field_->width();
  return Fel(field_, std::vector<Digit>(flat_.begin() + i * w, flat_.begin() + (i + 1) * w));
}

std::vector<Fel> BinForm::coeffs() const {
  std::vector<Fel> out;
  for (int i = 0; i <= degree_; ++i) out.push_back(coeff(i));
  return out;
}

Fel BinForm::eval(const Fel& x0, const Fel& x1) const {
  const Field& K = x0.field();
  if (!same_field(*K, *x1.field())) throw Error(Errc::mixed_fields, "point coordinates in different fields");
  if (!K->contains(*field_)) throw Error(Errc::incompatible_fields, "point field does not contain the form's field");
  // powers of x0 and x1 up to d
  std::vector<Fel> p0{Fel::one(K)}, p1{Fel::one(K)};
  for (int i = 1; i <= degree_; ++i) {
    p0.push_back(p0.back() * x0);
    p1.push_back(p1.back() * x1);
  }
  Fel acc(K);
  for (int i = 0; i <= degree_; ++i) {
    const Fel c = coeff(i);
    if (c.is_zero()) continue;
    acc += c.lift(K) * p0[degree_ - i] * p1[i];
  }
  return acc;
}

BinForm BinForm::partial(int var) const {
  if (var != 0 && var != 1) throw Error(Errc::index_out_of_range, "variable index must be 0 or 1");
  if (degree_ == 0) return zero(field_, 0);
  std::vector<Fel> out;
  for (int i = 0; i < degree_; ++i) {
    // d/dX0 of c_i X0^(d-i) X1^i contributes (d-i) c_i to index i;
    // d/dX1 of c_{i+1} X0^(d-i-1) X1^(i+1) contributes (i+1) c_{i+1} to index i.
    const int k = var == 0 ? degree_ - i : i + 1;
    out.push_back(coeff(var == 0 ? i : i + 1) * Fel::from_int(field_, k));
  }
  return BinForm(field_, out);
}

UPoly BinForm::dehomogenize() const { return UPoly(field_, flat_); }

BinForm operator+(const BinForm& a, const BinForm& b) {
  if (a.degree_ != b.degree_) throw Error(Errc::degree_mismatch, "adding forms of different degree");
  if (!same_field(*a.field_, *b.field_)) throw Error(Errc::mixed_fields, "forms over different fields");
  std::vector<Digit> r(a.flat_.size());
  a.field_->add(a.flat_, b.flat_, r);
  return BinForm(a.field_, a.degree_, std::move(r));
}

BinForm operator-(const BinForm& a, const BinForm& b) {
  if (a.degree_ != b.degree_) throw Error(Errc::degree_mismatch, "subtracting forms of different degree");
  if (!same_field(*a.field_, *b.field_)) throw Error(Errc::mixed_fields, "forms over different fields");
  std::vector<Digit> r(a.flat_.size());
  a.field_->sub(a.flat_, b.flat_, r);
  return BinForm(a.field_, a.degree_, std::move(r));
}

BinForm operator*(const BinForm& a, const BinForm& b) {
  if (!same_field(*a.field_, *b.field_)) throw Error(Errc::mixed_fields, "forms over different fields");
  const FieldCtx& F = *a.field_;
  const int d = a.degree_ + b.degree_;
  std::vector<Digit> r(static_cast<std::size_t>(d + 1) * F.width(), 0);
  detail::Flat prod = detail::fmul(F, a.flat_, b.flat_);
  std::copy(prod.begin(), prod.end(), r.begin());
  return BinForm(a.field_, d, std::move(r));
}

BinForm BinForm::scaled(const Fel& c) const {
  std::vector<Fel> out;
  for (int i = 0; i <= degree_; ++i) out.push_back(coeff(i) * c);
  return BinForm(field_, out);
}

bool operator==(const BinForm& a, const BinForm& b) {
  return a.degree_ == b.degree_ && same_field(*a.field_, *b.field_) && a.flat_ == b.flat_;
}

std::string BinForm::to_string() const {
  std::string out;
  const bool bracket = !field_->is_prime_field();
  for (int i = 0; i <= degree_; ++i) {
    if (i) out += ',';
    const std::string c = coeff(i).to_string();
    out += bracket ? "[" + c + "]" : c;
  }
  return out;
}

// ---------------------------------------------------------------- ProjPoint, SL2Mat

ProjPoint::ProjPoint(Fel x0, Fel x1) {
  if (!same_field(*x0.field(), *x1.field())) throw Error(Errc::mixed_fields, "coordinates in different fields");
  if (x0.is_zero() && x1.is_zero()) throw Error(Errc::precondition_violated, "(0:0) is not a projective point");
  if (!x0.is_zero()) {
    x1_ = x1 / x0;
    x0_ = Fel::one(x0.field());
  } else {
    x0_ = x0;
    x1_ = Fel::one(x1.field());
  }
}

std::string ProjPoint::to_string() const {
  auto el = [](const Fel& x) { return x.field()->is_prime_field() ? x.to_string() : "[" + x.to_string() + "]"; };
  return "(" + el(x0_) + ":" + el(x1_) + ")";
}

SL2Mat::SL2Mat(Fel a, Fel b, Fel c, Fel d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (!(a_ * d_ - b_ * c_).is_one()) throw Error(Errc::precondition_violated, "matrix does not have determinant 1");
}

SL2Mat SL2Mat::identity(const Field& field) {
  return SL2Mat(Fel::one(field), Fel(field), Fel(field), Fel::one(field));
}

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
  return SL2Mat(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                x.c_ * y.b_ + x.d_ * y.d_);
}

// ---------------------------------------------------------------- evaluation and action

Fel form_eval(const BinForm& f, const ProjPoint& P) { return f.eval(P.x0(), P.x1()); }

std::optional<ProjPoint> rational_point(const BinForm& f) {
  if (f.is_zero()) throw Error(Errc::zero_form, "the zero form vanishes everywhere");
  const Field& F = f.field();
  const Fel one = Fel::one(F);
  const std::uint64_t n = F->order_u64();
  for (std::uint64_t i = 0; i < n; ++i) {
    Fel t = element_at(F, i);
    if (f.eval(one, t).is_zero()) return ProjPoint(one, t);
  }
  if (f.coeff(f.degree()).is_zero()) return ProjPoint(Fel(F), one);
  return std::nullopt;
}

bool has_rational_point(const BinForm& f) { return rational_point(f).has_value(); }

BinForm sl2_act(const SL2Mat& A, const BinForm& f) {
  const Field& F = f.field();
  if (!same_field(*A.a().field(), *F)) throw Error(Errc::mixed_fields, "matrix and form over different fields");
  const int d = f.degree();
  const BinForm u(F, {A.a(), A.b()});  // a X0 + b X1
  const BinForm v(F, {A.c(), A.d()});  // c X0 + d X1
  std::vector<BinForm> up{BinForm(F, {Fel::one(F)})}, vp{BinForm(F, {Fel::one(F)})};
  for (int k = 1; k <= d; ++k) {
    up.push_back(up.back() * u);
    vp.push_back(vp.back() * v);
  }
  BinForm acc = BinForm::zero(F, d);
  for (int i = 0; i <= d; ++i) {
    const Fel c = f.coeff(i);
    if (c.is_zero()) continue;
    acc = acc + (up[d - i] * vp[i]).scaled(c);
  }
  return acc;
}

BinForm internal_form(const BinForm& f) {
  const Field& F = f.field();
  const std::uint64_t q = F->order_u64();
  const BinForm f0 = f.partial(0), f1 = f.partial(1);
  const int e = f.degree() - 1;  // degree of the partials
  const int D = e + static_cast<int>(q);
  std::vector<Fel> out(D + 1, Fel(F));
  // X0^q * sum a_i X0^(e-i) X1^i keeps index i; X1^q * sum b_i X0^(e-i) X1^i shifts to i+q.
  for (int i = 0; i <= e; ++i) {
    out[i] += f0.coeff(i);
    out[i + q] += f1.coeff(i);
  }
  return BinForm(F, out);
}

// ---------------------------------------------------------------- G_q

namespace {

/// Addition and multiplication tables of a small canonical field, by element index.
struct SmallField {
  Field F;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> add, mul;
  std::vector<std::vector<Digit>> digits;
};

const SmallField& small_field(std::uint64_t q) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<SmallField>> cache;
  if (q > 4096) throw Error(Errc::too_large, "field too large for table arithmetic");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) {
    auto sf = std::make_unique<SmallField>();
    sf->F = canonical_field(q);
    sf->q = static_cast<std::uint32_t>(q);
    const auto elems = enumerate_field(sf->F);
    sf->add.resize(q * q);
    sf->mul.resize(q * q);
    for (std::uint64_t i = 0; i < q; ++i) {
      sf->digits.emplace_back(elems[i].digits().begin(), elems[i].digits().end());
      for (std::uint64_t j = 0; j < q; ++j) {
        sf->add[i * q + j] = static_cast<std::uint32_t>(element_index(elems[i] + elems[j]));
        sf->mul[i * q + j] = static_cast<std::uint32_t>(element_index(elems[i] * elems[j]));
      }
    }
    slot = std::move(sf);
  }
  return *slot;
}

/// Coefficient indices (c_0..c_d) of a form with no F_q-rational zero?
bool no_rational_zero(const SmallField& sf, const std::vector<std::uint32_t>& c) {
  const std::uint32_t q = sf.q;
  if (c.back() == 0) return false;  // (0:1)
  for (std::uint32_t t = 0; t < q; ++t) {
    // Horner on f(1, t) = sum c_i t^i
    std::uint32_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = sf.add[sf.mul[acc * q + t] * q + *it];
    if (acc == 0) return false;
  }
  return true;
}

BinForm form_from_indices(const SmallField& sf, const std::vector<std::uint32_t>& c) {
  std::vector<Digit> flat;
  for (auto i : c) flat.insert(flat.end(), sf.digits[i].begin(), sf.digits[i].end());
  return BinForm(sf.F, static_cast<int>(c.size()) - 1, std::move(flat));
}

}  // namespace

void for_each_gq(std::uint64_t q, const std::function<bool(const BinForm&)>& visit, bool allow_large) {
  if (q > kGqGuard && !allow_large)
    throw Error(Errc::too_large, "enumerating G_" + std::to_string(q) + " needs q^(q+2) steps; pass allow_large");
  const SmallField& sf = small_field(q);
  const int n = static_cast<int>(q) + 2;
  std::vector<std::uint32_t> c(n, 0);
  for (;;) {
    int pos = n - 1;
    while (pos >= 0 && ++c[pos] == q) c[pos--] = 0;
    if (pos < 0) break;  // wrapped back to zero
    if (no_rational_zero(sf, c) && !visit(form_from_indices(sf, c))) return;
  }
}

std::vector<BinForm> enumerate_gq(std::uint64_t q, bool allow_large) {
  std::vector<BinForm> out;
  for_each_gq(
      q,
      [&](const BinForm& f) {
        out.push_back(f);
        return true;
      },
      allow_large);
  return out;
}

BinForm random_gq(std::uint64_t q, Rng& rng) {
  const SmallField& sf = small_field(q);
  const int n = static_cast<int>(q) + 2;
  std::vector<std::uint32_t> c(n);
  for (;;) {
    bool nonzero = false;
    for (auto& x : c) {
      x = static_cast<std::uint32_t>(rng.below(q));
      nonzero |= x != 0;
    }
    if (nonzero && no_rational_zero(sf, c)) return form_from_indices(sf, c);
  }
}

}  // namespace fillcurve
