#include "linalg.hpp"

namespace fillcurve::detail {

std::vector<std::vector<Fel>> nullspace(const Matrix& M, const Field& F, int cols) {
  Matrix A = M;
  const int rows = static_cast<int>(A.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!A[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[r], A[piv]);
    const Fel inv = A[r][c].inv();
    for (int j = c; j < cols; ++j) A[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      const Fel factor = A[i][c];
      for (int j = c; j < cols; ++j) A[i][j] -= factor * A[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Fel>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fel> v(cols, Fel(F));
    v[free] = Fel::one(F);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -A[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Fel> coordinates(const Fel& a, const Field& S) {
  if (!a.field()->contains(*S)) throw Error(Errc::incompatible_fields, "not a subfield");
  const std::size_t w = S->width();
  const std::size_t n = a.digits().size() / w;
  std::vector<Fel> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(S, std::vector<Digit>(a.digits().begin() + i * w, a.digits().begin() + (i + 1) * w));
  return out;
}

}  // namespace fillcurve::detail
