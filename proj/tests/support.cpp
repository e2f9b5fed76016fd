#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace testing {

Fel el(const Field& F, std::int64_t v) { return Fel::from_int(F, v); }

BinForm form(std::uint64_t q, const std::vector<std::int64_t>& cs) {
  return BinForm::from_ints(canonical_field(q), cs);
}

UPoly poly(const Field& F, const std::vector<std::int64_t>& cs) {
  std::vector<Fel> v;
  for (auto c : cs) v.push_back(el(F, c));
  return UPoly(F, v);
}

Fel random_element(const Field& F, Rng& rng) {
  std::vector<Digit> d(F->width());
  for (auto& x : d) x = static_cast<Digit>(rng.below(F->characteristic()));
  return Fel(F, d);
}

Fel random_nonzero(const Field& F, Rng& rng) {
  for (;;) {
    Fel a = random_element(F, rng);
    if (!a.is_zero()) return a;
  }
}

UPoly random_poly(const Field& F, int max_degree, Rng& rng) {
  const int n = static_cast<int>(rng.below(max_degree + 1));
  std::vector<Fel> cs;
  for (int i = 0; i < n; ++i) cs.push_back(random_element(F, rng));
  cs.push_back(random_nonzero(F, rng));
  return UPoly(F, cs);
}

BinForm random_form(const Field& F, int degree, Rng& rng) {
  std::vector<Fel> cs;
  for (int i = 0; i <= degree; ++i) cs.push_back(random_element(F, rng));
  return BinForm(F, cs);
}

SL2Mat random_sl2(const Field& F, Rng& rng) {
  for (;;) {
    Fel a = random_element(F, rng), b = random_element(F, rng), c = random_element(F, rng);
    if (a.is_zero()) continue;
    return SL2Mat(a, b, c, (Fel::one(F) + b * c) / a);
  }
}

std::vector<UPoly> monic_polys(const Field& F, int n) {
  const auto els = enumerate_field(F);
  std::vector<UPoly> out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<Fel> cs;
    for (int i = 0; i < n; ++i) cs.push_back(els[idx[i]]);
    cs.push_back(Fel::one(F));
    out.emplace_back(F, cs);
    int i = n - 1;
    while (i >= 0 && ++idx[i] == els.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<UPoly> sieve_irreducibles(const Field& F, int n) {
  std::set<std::vector<Digit>> reducible;
  for (int a = 1; a <= n / 2; ++a)
    for (const auto& u : monic_polys(F, a))
      for (const auto& v : monic_polys(F, n - a)) reducible.insert((u * v).flat());
  std::vector<UPoly> out;
  for (const auto& m : monic_polys(F, n))
    if (!reducible.count(m.flat())) out.push_back(m);
  return out;
}

std::vector<Fel> scan_roots(const UPoly& f, const Field& K) {
  std::vector<Fel> out;
  for (const auto& x : enumerate_field(K))
    if (f.eval(x).is_zero()) out.push_back(x);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fixture(const std::string& name) { return read_file(std::string(FILLCURVE_FIXTURES) + "/" + name); }

}  // namespace testing
