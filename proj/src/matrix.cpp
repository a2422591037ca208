#include "arr/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "arr/errors.hpp"

namespace arr {

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols())
      throw std::invalid_argument("from_rows: ragged rows");
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Mat::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Mat::set_row(int r, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("set_row: dimension mismatch");
  for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat Mat::vstack(const Mat& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  if (cols_ != below.cols_) throw std::invalid_argument("vstack: column count mismatch");
  Mat m(rows_ + below.rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (int r = 0; r < below.rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(rows_ + r, c) = below.at(r, c);
  return m;
}

Mat Mat::hstack(const Mat& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("hstack: row count mismatch");
  Mat m(rows_, cols_ + right.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int c = 0; c < right.cols_; ++c) m.at(r, cols_ + c) = right.at(r, c);
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Mat m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) m.at(r, c) += at(r, k) * o.at(k, c);
    }
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    os << "\n";
  }
  return os.str();
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, 0, {}};
  Mat& a = res.m;
  int lead = 0;
  for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
    int piv = -1;
    for (int r = lead; r < a.rows(); ++r) {
      if (!a.at(r, c).is_zero()) { piv = r; break; }
    }
    if (piv < 0) continue;
    if (piv != lead)
      for (int k = c; k < a.cols(); ++k) std::swap(a.at(piv, k), a.at(lead, k));
    Rat inv = a.at(lead, c).inv();
    for (int k = c; k < a.cols(); ++k) a.at(lead, k) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, c).is_zero()) continue;
      Rat f = a.at(r, c);
      for (int k = c; k < a.cols(); ++k) a.at(r, k) -= f * a.at(lead, k);
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = lead;
  return res;
}

int rank_of(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (int pr = 0; pr < r.rank; ++pr) v[r.pivots[pr]] = -r.m.at(pr, f);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Mat(0, m.cols());
  // Re-reduce so the result is the canonical RREF basis of the kernel.
  RrefResult canon = rref(Mat::from_rows(rows));
  internal_check(canon.rank == static_cast<int>(rows.size()), "kernel basis must be independent");
  return canon.m;
}

std::optional<Vec> coords_in_rref(const Mat& rref_basis, const std::vector<int>& pivots, const Vec& v) {
  if (static_cast<int>(v.size()) != rref_basis.cols())
    throw std::invalid_argument("coords_in_rref: dimension mismatch");
  if (static_cast<int>(pivots.size()) != rref_basis.rows())
    throw std::invalid_argument("coords_in_rref: pivot/row count mismatch");
  Vec coords(rref_basis.rows());
  for (int i = 0; i < rref_basis.rows(); ++i) coords[i] = v[pivots[i]];
  // Verify the pivot coordinates actually reconstruct v.
  Vec rec(v.size());
  for (int i = 0; i < rref_basis.rows(); ++i)
    for (int c = 0; c < rref_basis.cols(); ++c)
      if (!rref_basis.at(i, c).is_zero()) rec[c] += coords[i] * rref_basis.at(i, c);
  if (rec != v) return std::nullopt;
  return coords;
}

std::optional<Vec> coords_in_rref(const RrefResult& basis, const Vec& v) {
  return coords_in_rref(basis.m, basis.pivots, v);
}

}  // namespace arr
