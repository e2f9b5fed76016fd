#pragma once

// Small dense linear algebra over a finite field, used for minimal
// polynomials and by the scan oracle.

#include <vector>

#include "fillcurve/field.hpp"

namespace fillcurve::detail {

using Matrix = std::vector<std::vector<Fel>>;

/// Basis of {x : M x = 0} for an rows x cols matrix over F.
std::vector<std::vector<Fel>> nullspace(const Matrix& M, const Field& F, int cols);

/// Coordinates of a over the ancestor S (blocks of S's width).
std::vector<Fel> coordinates(const Fel& a, const Field& S);

}  // namespace fillcurve::detail
