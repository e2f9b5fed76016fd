#pragma once

#include <string>
#include <vector>

#include "fillcurve/binform.hpp"
#include "fillcurve/unipoly.hpp"

namespace testing {

using namespace fillcurve;

Fel el(const Field& F, std::int64_t v);
BinForm form(std::uint64_t q, const std::vector<std::int64_t>& cs);
UPoly poly(const Field& F, const std::vector<std::int64_t>& cs);

Fel random_element(const Field& F, Rng& rng);
Fel random_nonzero(const Field& F, Rng& rng);
UPoly random_poly(const Field& F, int max_degree, Rng& rng);
BinForm random_form(const Field& F, int degree, Rng& rng);
SL2Mat random_sl2(const Field& F, Rng& rng);

/// All monic polynomials of degree n over F, c_0 most significant.
std::vector<UPoly> monic_polys(const Field& F, int n);
/// Irreducible monic polynomials of degree n, found by sieving out every
/// product of two monic factors of positive degree.
std::vector<UPoly> sieve_irreducibles(const Field& F, int n);
/// Roots in K by evaluation at every element.
std::vector<Fel> scan_roots(const UPoly& f, const Field& K);

std::string read_file(const std::string& path);
std::string fixture(const std::string& name);

}  // namespace testing
