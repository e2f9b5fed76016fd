// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "fillcurve/construct.hpp"
#include "fillcurve/curve.hpp"
#include "fillcurve/io.hpp"
#include "fillcurve/orbits.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

bool all_zero(const std::vector<Fel>& v) {
  return std::all_of(v.begin(), v.end(), [](const Fel& x) { return x.is_zero(); });
}

std::size_t count_true(const std::vector<std::vector<bool>>& m) {
  std::size_t n = 0;
  for (const auto& row : m) n += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return n;
}

Outcome q3_census() {
  const CensusResult c = census(3, 1);
  std::multiset<std::size_t> sizes;
  for (const auto& o : c.table.orbits) sizes.insert(o.size());
  const std::multiset<std::size_t> want_sizes{3, 3, 6, 6, 6, 12, 12};

  // orbit names aligned by representative
  const Json ref = Json::parse(fixture("q3_orbit_names.json"));
  const Field F = canonical_field(3);
  std::map<std::string, int> by_name;
  for (const auto& o : ref["orbits"]) {
    const int idx = c.table.orbit_of(parse_form(F, o["rep"].get<std::string>()));
    if (c.table.orbits[idx].size() != o["size"].get<std::size_t>()) return {false, "orbit size mismatch"};
    by_name[o["name"].get<std::string>()] = idx;
  }
  if (by_name.size() != 7) return {false, "orbit names do not cover the table"};
  int matched = 0;
  for (const auto& [name, list] : ref["partners"].items()) {
    std::set<int> want;
    for (const auto& p : list) want.insert(by_name.at(p.get<std::string>()));
    const auto got = c.partners(by_name.at(name));
    if (std::set<int>(got.begin(), got.end()) != want) return {false, "F(" + name + ") differs"};
    ++matched;
  }
  const bool ok = c.table.total == 48 && c.table.orbits.size() == 7 && sizes == want_sizes &&
                  c.total_smooth_pairs == 1584 && matched == 7;
  std::ostringstream s;
  s << c.total_smooth_pairs << "/2304 smooth, |G_3| = " << c.table.total << ", " << c.table.orbits.size()
    << " orbits, " << matched << " partner sets match";
  return {ok, s.str()};
}

Outcome q3_unreduced() {
  const auto m = unreduced_census(3, jobs());
  const auto gq = enumerate_gq(3);
  const bool same = m == expand(census(3, jobs()), gq);
  const std::size_t n = count_true(m);
  return {n == 1584 && same, std::to_string(n) + "/2304 smooth by brute force, matches reduced matrix: " +
                                 (same ? "yes" : "no")};
}

Outcome q5_census() {
  const CensusResult c = census(5, jobs());
  std::ostringstream s;
  s << "|G_5| = " << c.table.total << ", " << c.table.orbits.size() << " orbits, " << c.total_smooth_pairs
    << " smooth pairs";
  return {c.table.total == 20480 && c.total_smooth_pairs == BigInt(412004800), s.str()};
}

Outcome q2_census() {
  const CensusResult c = census(2, 1);
  const std::size_t brute = count_true(unreduced_census(2, 1));
  std::ostringstream s;
  s << "|G_2| = " << c.table.total << ", " << c.total_smooth_pairs << " smooth (brute force " << brute << ")";
  return {c.table.total == 2 && c.total_smooth_pairs == 0 && brute == 0, s.str()};
}

Outcome homma() {
  const Rational b = homma_bound(2, 6);
  std::ostringstream s;
  s << "homma_bound(2, 6) = " << b;
  return {b == Rational(90, 11) && b < Rational(9), s.str()};
}

Outcome table1() {
  struct Band {
    std::uint64_t q, lo, hi;
  };
  const std::vector<Band> bands{{3, 644, 731}, {4, 895, 965}, {5, 965, 995}, {7, 975, 1000}, {9, 975, 1000}};
  const std::vector<std::uint64_t> seeds{1, 2, 3, 42, 2024};
  bool ok = true;
  std::ostringstream s;
  for (const Band& b : bands) {
    s << "q=" << b.q << ":";
    for (std::uint64_t seed : seeds) {
      const auto r = sample_stats(b.q, 1000, seed, jobs());
      ok = ok && r.smooth >= b.lo && r.smooth <= b.hi;
      s << ' ' << r.smooth;
    }
    s << (b.q == 9 ? "" : "; ");
  }
  return {ok, s.str()};
}

Outcome constructor() {
  int ok = 0, total = 0;
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    Rng rng(mix_seed(7, q));
    for (int i = 0; i < 25; ++i) {
      const BinForm f = random_gq(q, rng);
      ++total;
      const Partner p = construct_partner(f, rng);
      Rng check_rng(mix_seed(8, total));
      if (has_rational_point(p.g)) continue;
      if (!singular_witness(f, p.g, check_rng)) ++ok;
    }
  }
  return {ok == 150 && total == 150, std::to_string(ok) + "/" + std::to_string(total) + " partners smooth"};
}

Outcome symmetric() {
  int ok = 0, total = 0;
  Rng rng(5);
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 19u}) {
    const std::size_t n = symmetric_lambda_candidates(q).size();
    for (int v = 0; v < 4; ++v)
      for (std::size_t i = 0; i < n; ++i) {
        const BinForm f = symmetric_form(q, v, i);
        ++total;
        if (!singular_witness(f, f, rng)) ++ok;
      }
  }
  return {ok == total && total > 0, std::to_string(ok) + "/" + std::to_string(total) + " symmetric curves smooth"};
}

Outcome q4_symmetric() {
  Rng rng(6);
  const auto g4 = enumerate_gq(4);
  std::size_t smooth = 0;
  for (const BinForm& f : g4)
    if (!singular_witness(f, f, rng)) ++smooth;
  return {smooth == 0 && !g4.empty(),
          std::to_string(smooth) + " smooth among " + std::to_string(g4.size()) + " symmetric curves over G_4"};
}

Outcome oracle() {
  const CensusResult c = census(3, 1);
  std::vector<std::pair<BinForm, BinForm>> pairs;
  for (const auto& a : c.table.orbits)
    for (const auto& b : c.table.orbits) pairs.emplace_back(a.rep, b.rep);
  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    BinForm f = random_gq(3, rng);
    pairs.emplace_back(std::move(f), random_gq(3, rng));
  }
  int agree = 0, singular = 0, verified = 0;
  for (const auto& [f, g] : pairs) {
    const auto a = singular_witness(f, g, rng);
    const auto b = scan_oracle(f, g);
    if (a.has_value() != b.has_value()) continue;
    ++agree;
    if (!a) continue;
    ++singular;
    const Curve cv = build_curve(f, g);
    if (all_zero(jacobian_values(cv, a->alpha(), a->beta())) && all_zero(jacobian_values(cv, b->alpha(), b->beta())))
      ++verified;
  }
  std::ostringstream s;
  s << agree << "/" << pairs.size() << " verdicts agree, " << verified << "/" << singular << " witnesses verified";
  return {agree == static_cast<int>(pairs.size()) && pairs.size() == 249 && verified == singular, s.str()};
}

Outcome properties() {
  std::size_t checks = 0, failures = 0;
  auto expect = [&](bool b) {
    ++checks;
    failures += b ? 0 : 1;
  };
  const std::vector<Field> fields{canonical_field(2), canonical_field(3), canonical_field(4), canonical_field(5),
                                  canonical_field(9)};
  Rng rng(11);
  for (const Field& F : fields) {
    const Fel zero(F), one = Fel::one(F);
    for (int i = 0; i < 200; ++i) {
      const Fel a = random_element(F, rng), b = random_element(F, rng), c = random_element(F, rng);
      expect((a + b) + c == a + (b + c));
      expect((a * b) * c == a * (b * c));
      expect(a + b == b + a && a * b == b * a);
      expect(a * (b + c) == a * b + a * c);
      expect(a + zero == a && a * one == a && a - a == zero);
      if (!a.is_zero()) expect(a * a.inv() == one);
      const BigInt p(F->characteristic());
      expect(frobenius(a + b, p) == frobenius(a, p) + frobenius(b, p));
      expect(frobenius(a * b, p) == frobenius(a, p) * frobenius(b, p));
    }
    for (int i = 0; i < 1000; ++i) {
      UPoly f = random_poly(F, 12, rng);
      if (f.degree() < 1) f = f + UPoly::x(F);
      if (i % 5 == 0) f = f * f;
      const Factorization fz = factor(f, rng);
      expect(fz.expand() == f);
      for (const auto& fac : fz.factors) expect(fac.poly.is_monic() && is_irreducible(fac.poly));
    }
  }
  for (std::uint64_t q : {3u, 4u, 5u, 9u}) {
    const Field F = canonical_field(q);
    const Field L = extend(smallest_irreducible(F, 2));
    for (int i = 0; i < 50; ++i) {
      const int d = 1 + static_cast<int>(rng.below(10));
      const BinForm f = random_form(F, d, rng);
      const Fel x0 = random_element(L, rng), x1 = random_element(L, rng);
      expect(x0 * f.partial(0).eval(x0, x1) + x1 * f.partial(1).eval(x0, x1) == Fel::from_int(L, d) * f.eval(x0, x1));
    }
  }
  for (std::uint64_t q : {3u, 5u}) {
    const Field F = canonical_field(q);
    for (int i = 0; i < 100; ++i) {
      const BinForm f = random_gq(q, rng), g = random_gq(q, rng);
      const SL2Mat A = random_sl2(F, rng), B = random_sl2(F, rng);
      expect(singular_witness(f, g, rng).has_value() == singular_witness(sl2_act(A, f), sl2_act(B, g), rng).has_value());
    }
  }
  return {failures == 0, std::to_string(checks - failures) + "/" + std::to_string(checks) + " property checks hold"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"q=3 census and partner sets", q3_census},
      {"q=3 unreduced cross-check", q3_unreduced},
      {"q=5 census total", q5_census},
      {"q=2 has no smooth pair", q2_census},
      {"point-count bound for q=2", homma},
      {"random-pair sample bands", table1},
      {"partner construction", constructor},
      {"symmetric family", symmetric},
      {"no smooth symmetric curve over G_4", q4_symmetric},
      {"scan oracle equivalence", oracle},
      {"property suites", properties},
  };
  int failed = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s: %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", n, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
