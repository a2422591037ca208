#pragma once

#include <optional>

#include "arr/matrix.hpp"

namespace arr {

// Linear subspace of K^ambient with a canonical basis: the RREF of any
// spanning set, zero rows dropped. Two subspaces are equal iff their
// canonical bases are equal as matrices.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int ambient) { return Subspace(ambient, Mat(0, ambient), {}); }
  static Subspace full(int ambient);
  // Row space of `rows`.
  static Subspace span_rows(const Mat& rows);
  // {x : m x = 0}.
  static Subspace kernel_of(const Mat& m) { return Subspace(m.cols(), kernel_basis(m), {}); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  // RREF basis, one vector per row; dim() == 0 gives a 0 x ambient matrix.
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  std::optional<Vec> coords_of(const Vec& v) const;

  friend Subspace sum(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(int ambient, Mat basis, std::vector<int> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {
    if (pivots_.empty() && basis_.rows() > 0) recompute_pivots();
  }
  void recompute_pivots();

  int ambient_ = 0;
  Mat basis_{0, 0};
  std::vector<int> pivots_;
};

}  // namespace arr
