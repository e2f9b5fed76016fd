#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace testing;

namespace {

bool throws_code(Errc code, const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

std::vector<Field> factor_fields() {
  return {canonical_field(2), canonical_field(3), canonical_field(4), canonical_field(5), canonical_field(9)};
}

std::map<std::vector<Digit>, int> as_multiset(const Factorization& fz) {
  std::map<std::vector<Digit>, int> out;
  for (const auto& f : fz.factors) out[f.poly.flat()] += f.multiplicity;
  return out;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  const Field F3 = canonical_field(3);
  const UPoly X = UPoly::x(F3);
  const UPoly one = UPoly::constant(el(F3, 1));
  // (X+1)(X+2) = X^2 + 3X + 2 and 3 = 0
  CHECK((X + one) * (X + one.scaled(el(F3, 2))) == poly(F3, {2, 0, 1}));
  CHECK(X + UPoly(F3) == X);
  const auto [quo, rem] = divmod(X * X, X);
  CHECK(quo == X);
  CHECK(rem.is_zero());
  CHECK(throws_code(Errc::division_by_zero, [&] { divmod(X, UPoly(F3)); }));
  CHECK(throws_code(Errc::mixed_fields, [&] { (void)(X + UPoly::x(canonical_field(5))); }));
  CHECK(UPoly(F3).degree() == -1);

  Rng rng(4);
  for (const Field& F : factor_fields()) {
    for (int i = 0; i < 100; ++i) {
      const UPoly a = random_poly(F, 10, rng), b = random_poly(F, 6, rng);
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("derivative and evaluation") {
  const Field F3 = canonical_field(3);
  CHECK(poly(F3, {0, 0, 0, 1}).derivative().is_zero());
  CHECK(poly(F3, {0, 0, 0, 1, 1}).derivative() == poly(F3, {0, 0, 0, 1}));
  const Field F9 = canonical_field(9);
  CHECK(poly(F3, {1, 0, 1}).eval(Fel::generator(F9)).is_zero());
  CHECK(throws_code(Errc::incompatible_fields, [&] { poly(F9, {1, 1}).eval(el(F3, 1)); }));

  Rng rng(8);
  for (const Field& F : factor_fields()) {
    for (int i = 0; i < 100; ++i) {
      const UPoly a = random_poly(F, 8, rng), b = random_poly(F, 8, rng);
      const Fel c = random_element(F, rng);
      CHECK((a + b.scaled(c)).derivative() == a.derivative() + b.derivative().scaled(c));
      CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
      // Horner against the sum of monomials
      const Fel x = random_element(F, rng);
      Fel direct(F);
      for (int k = 0; k <= a.degree(); ++k) direct += a.coeff(k) * x.pow(static_cast<std::uint64_t>(k));
      CHECK(a.eval(x) == direct);
    }
  }
}

TEST_CASE("monic gcd") {
  const Field F3 = canonical_field(3);
  CHECK(monic_gcd(poly(F3, {-1, 0, 1}), poly(F3, {-1, 1})) == poly(F3, {2, 1}));
  const UPoly a = poly(F3, {2, 0, 2});
  CHECK(monic_gcd(a, UPoly(F3)) == a.monic());
  CHECK(monic_gcd(poly(F3, {1, 0, 1}), poly(F3, {2, 1, 1})).is_one());
  CHECK(throws_code(Errc::both_zero, [&] { monic_gcd(UPoly(F3), UPoly(F3)); }));

  Rng rng(6);
  for (const Field& F : factor_fields()) {
    for (int i = 0; i < 100; ++i) {
      const UPoly c = random_poly(F, 4, rng);
      const UPoly a = random_poly(F, 6, rng) * c, b = random_poly(F, 6, rng) * c;
      const UPoly g = monic_gcd(a, b);
      CHECK(g.is_monic());
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
      CHECK(((g % c.monic()).is_zero()));
    }
  }
}

TEST_CASE("irreducibility agrees with a sieve of products") {
  const Field F3 = canonical_field(3), F5 = canonical_field(5);
  CHECK(is_irreducible(poly(F3, {1, 0, 1})));
  CHECK_FALSE(is_irreducible(poly(F5, {1, 0, 1})));
  CHECK(is_irreducible(poly(F3, {1, 1})));
  CHECK(throws_code(Errc::degree_zero, [&] { is_irreducible(poly(F3, {2})); }));

  struct Case {
    std::uint64_t q;
    int max_n;
  };
  for (const auto& [q, max_n] : std::vector<Case>{{2, 6}, {3, 4}, {4, 3}, {5, 3}}) {
    const Field F = canonical_field(q);
    for (int n = 1; n <= max_n; ++n) {
      const auto irr = sieve_irreducibles(F, n);
      std::set<std::vector<Digit>> irr_set;
      for (const auto& m : irr) irr_set.insert(m.flat());
      for (const auto& m : monic_polys(F, n)) CHECK(is_irreducible(m) == (irr_set.count(m.flat()) == 1));
      CHECK(smallest_irreducible(F, n) == irr.front());
    }
  }
}

TEST_CASE("factor examples") {
  const Field F3 = canonical_field(3);
  Rng rng(1);
  const UPoly p = poly(F3, {1, 0, 1, 0, 1, 0, 1});
  const Factorization fz = factor(p, rng);
  CHECK(fz.unit == el(F3, 1));
  REQUIRE(fz.factors.size() == 3);
  CHECK(fz.factors[0].poly == poly(F3, {1, 0, 1}));
  CHECK(fz.factors[1].poly == poly(F3, {2, 1, 1}));
  CHECK(fz.factors[2].poly == poly(F3, {2, 2, 1}));
  // oracle: explicit expansion and root scans
  CHECK(poly(F3, {1, 0, 1}) * poly(F3, {2, 1, 1}) * poly(F3, {2, 2, 1}) == p);
  const Field F9 = canonical_field(9);
  for (const auto& f : fz.factors) {
    CHECK(f.multiplicity == 1);
    CHECK(scan_roots(f.poly, F3).empty());
    CHECK(scan_roots(f.poly, F9).size() == 2);
  }

  const Factorization sq = factor(poly(F3, {-1, 0, 1}), rng);
  REQUIRE(sq.factors.size() == 2);
  CHECK(sq.factors[0].poly == poly(F3, {1, 1}));
  CHECK(sq.factors[1].poly == poly(F3, {2, 1}));

  const Field F2 = canonical_field(2);
  const Factorization x4 = factor(poly(F2, {0, 0, 0, 0, 1}), rng);
  REQUIRE(x4.factors.size() == 1);
  CHECK(x4.factors[0].poly == poly(F2, {0, 1}));
  CHECK(x4.factors[0].multiplicity == 4);
  CHECK(throws_code(Errc::degree_zero, [&] { factor(poly(F3, {2}), rng); }));
}

TEST_CASE("factorization round trip on random polynomials") {
  for (const Field& F : factor_fields()) {
    CAPTURE(F->describe());
    Rng rng(mix_seed(17, F->order_u64()));
    for (int i = 0; i < 1000; ++i) {
      UPoly f = random_poly(F, 12, rng);
      if (f.degree() < 1) f = f + UPoly::x(F);
      // inject repeated factors now and then
      if (i % 5 == 0) f = f * f;
      if (i % 7 == 0 && f.degree() <= 4) f = f.pow(F->characteristic());
      const Factorization fz = factor(f, rng);
      CHECK(fz.expand() == f);
      int total = 0;
      for (const auto& fac : fz.factors) {
        CHECK(fac.poly.is_monic());
        CHECK(is_irreducible(fac.poly));
        total += fac.poly.degree() * fac.multiplicity;
      }
      CHECK(total == f.degree());
      CHECK(std::is_sorted(fz.factors.begin(), fz.factors.end(),
                           [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); }));
    }
  }
}

TEST_CASE("factor(f g) is the union of factor(f) and factor(g)") {
  for (const Field& F : factor_fields()) {
    Rng rng(mix_seed(23, F->order_u64()));
    for (int i = 0; i < 100; ++i) {
      const UPoly f = random_poly(F, 7, rng) * UPoly::x(F) + UPoly::constant(Fel::one(F));
      const UPoly g = random_poly(F, 7, rng) * UPoly::x(F) + UPoly::constant(Fel::one(F));
      auto mf = as_multiset(factor(f, rng));
      for (const auto& [k, v] : as_multiset(factor(g, rng))) mf[k] += v;
      CHECK(mf == as_multiset(factor(f * g, rng)));
    }
  }
}

TEST_CASE("factorization does not depend on the seed") {
  const Field F = canonical_field(9);
  Rng gen(31);
  for (int i = 0; i < 50; ++i) {
    const UPoly f = random_poly(F, 10, gen);
    if (f.degree() < 1) continue;
    Rng a(1), b(2);
    const auto fa = factor(f, a), fb = factor(f, b);
    REQUIRE(fa.factors.size() == fb.factors.size());
    for (std::size_t k = 0; k < fa.factors.size(); ++k) CHECK(fa.factors[k].poly == fb.factors[k].poly);
  }
}

TEST_CASE("factorization over relative extensions") {
  const Field F3 = canonical_field(3);
  Rng rng(12);
  for (int n : {2, 3, 4}) {
    const Field K = extend(smallest_irreducible(F3, n));
    for (int i = 0; i < 20; ++i) {
      const UPoly f = random_poly(K, 6, rng);
      if (f.degree() < 1) continue;
      const Factorization fz = factor(f, rng);
      CHECK(fz.expand() == f);
      for (const auto& fac : fz.factors) CHECK(is_irreducible(fac.poly));
    }
  }
}

TEST_CASE("roots_in_field") {
  const Field F3 = canonical_field(3), F9 = canonical_field(9);
  CHECK(roots_in_field(poly(F3, {1, 0, 1}), F3).empty());
  const Fel t = Fel::generator(F9);
  CHECK(roots_in_field(poly(F3, {1, 0, 1}), F9) == std::vector<Fel>{t, el(F9, 2) * t});
  CHECK(roots_in_field(poly(F3, {-2, 1}), F9) == std::vector<Fel>{el(F9, 2)});
  CHECK(throws_code(Errc::incompatible_fields, [&] { roots_in_field(poly(F9, {1, 1}), F3); }));
}

TEST_CASE("extend checks its modulus") {
  const Field F3 = canonical_field(3);
  CHECK(throws_code(Errc::not_irreducible, [&] { extend(poly(F3, {-1, 0, 1})); }));
  CHECK(extend(poly(F3, {1, 0, 1}))->order() == 9);
}
