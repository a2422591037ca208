#include "arr/subspace.hpp"

#include <stdexcept>

#include "arr/errors.hpp"

namespace arr {

Subspace Subspace::full(int ambient) {
  std::vector<int> piv(ambient);
  for (int i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(ambient, Mat::identity(ambient), std::move(piv));
}

Subspace Subspace::span_rows(const Mat& rows) {
  RrefResult r = rref(rows);
  Mat basis(r.rank, rows.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int c = 0; c < rows.cols(); ++c) basis.at(i, c) = r.m.at(i, c);
  return Subspace(rows.cols(), std::move(basis), std::move(r.pivots));
}

void Subspace::recompute_pivots() {
  pivots_.clear();
  for (int r = 0; r < basis_.rows(); ++r) {
    int c = 0;
    while (c < basis_.cols() && basis_.at(r, c).is_zero()) ++c;
    internal_check(c < basis_.cols(), "subspace basis has a zero row");
    pivots_.push_back(c);
  }
}

bool Subspace::contains(const Vec& v) const {
  return coords_of(v).has_value();
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("subspace membership: dimension mismatch");
  return coords_in_rref(basis_, pivots_, v);
}

bool Subspace::contains(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("subspace comparison: ambient mismatch");
  for (int r = 0; r < o.basis_.rows(); ++r)
    if (!contains(o.basis_.row(r))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
  return Subspace::span_rows(a.basis_.vstack(b.basis_));
}

// Zassenhaus: reduce [A|A; B|0]; rows with zero left half have right halves
// spanning the intersection.
Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace intersection: ambient mismatch");
  int n = a.ambient_;
  Mat top = a.basis_.hstack(a.basis_);
  Mat bot = b.basis_.hstack(Mat(b.basis_.rows(), n));
  RrefResult r = rref(top.vstack(bot));
  std::vector<Vec> rows;
  for (int i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (int c = 0; c < n && left_zero; ++c)
      if (!r.m.at(i, c).is_zero()) left_zero = false;
    if (!left_zero) continue;
    Vec v(n);
    for (int c = 0; c < n; ++c) v[c] = r.m.at(i, n + c);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Subspace::zero(n);
  Subspace result = Subspace::span_rows(Mat::from_rows(rows));
  internal_check(a.contains(result) && b.contains(result),
                 "intersection must lie in both subspaces");
  return result;
}

}  // namespace arr
