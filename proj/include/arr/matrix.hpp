#pragma once

#include <vector>

#include "arr/rational.hpp"

namespace arr {

using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

// Dense rational matrix, row-major. All operations are exact.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  void set_row(int r, const Vec& v);

  Mat transpose() const;
  // Rows of `this` stacked on top of rows of `below`.
  Mat vstack(const Mat& below) const;
  // Columns of `this` followed by columns of `right`.
  Mat hstack(const Mat& right) const;
  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& v) const;  // this * v

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::string str() const;  // for diagnostics

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

struct RrefResult {
  Mat m;                    // reduced row echelon form
  int rank = 0;
  std::vector<int> pivots;  // pivot column per pivot row, increasing
};

// Unique reduced row echelon form: leading 1s, zeros above and below pivots,
// pivot columns strictly increasing, zero rows at the bottom.
RrefResult rref(const Mat& m);

int rank_of(const Mat& m);

// Canonical (RREF) basis of {x : m x = 0}, one row per basis vector.
// Zero kernel gives a 0 x cols matrix.
Mat kernel_basis(const Mat& m);

// Coordinates of v in the row space of an RREF basis (no zero rows), read off
// the pivot columns. Returns nullopt if v is not in the row space.
std::optional<Vec> coords_in_rref(const RrefResult& basis, const Vec& v);
std::optional<Vec> coords_in_rref(const Mat& rref_basis, const std::vector<int>& pivots, const Vec& v);

}  // namespace arr
