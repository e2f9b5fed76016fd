#pragma once

#include "fillcurve/binform.hpp"

namespace fillcurve::detail {

/// Throws DegreeMismatch unless deg = q+1, PreconditionViolated when the form
/// has an F_q-rational zero. `name` is "f" or "g".
void require_no_rational_point(const BinForm& form, const char* name);

}  // namespace fillcurve::detail
