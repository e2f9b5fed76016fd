#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fillcurve/binform.hpp"
#include "fillcurve/rng.hpp"
#include "fillcurve/unipoly.hpp"

namespace fillcurve {

/// Record of how construct_partner chose g.
///
/// For q > 5 the method is "galois_avoidance": the chosen quadratic
/// X^2 + aX + b avoids every excluded minimal polynomial, and
/// lambda2 = 1/b, lambda1 = a/b, k = b. For q = 3, 5 the method is
/// "lex_search" and only g_out is set.
struct PartnerTrace {
  std::string method;
  std::optional<Fel> lambda1, lambda2, k;
  std::vector<UPoly> excluded_quadratics;  // canonical order, no repeats
  std::optional<UPoly> chosen_quadratic;
  BinForm g_out;
};

struct Partner {
  BinForm g;
  PartnerTrace trace;
};

/// A g with C_{f,g} smooth, for odd q and f without F_q-rational zeros.
/// The result is re-checked; a failed check raises InternalError.
/// Throws EvenCharacteristic for even q and PreconditionViolated for bad f.
Partner construct_partner(const BinForm& f, Rng& rng);

/// Values of F_q outside {-(u^2 + u)}, in enumeration order. Odd q only.
std::vector<Fel> symmetric_lambda_candidates(std::uint64_t q);

/// Y0^(q+1) + s Y0^i Y1^(q+1-i) + lambda Y1^(q+1) with the middle term
/// +Y0 Y1^q, -Y0 Y1^q, +Y0^q Y1, -Y0^q Y1 for variant 0, 1, 2, 3 and lambda the
/// index-th candidate. Throws EvenCharacteristic or IndexOutOfRange.
BinForm symmetric_form(std::uint64_t q, int variant, std::size_t index);

}  // namespace fillcurve
