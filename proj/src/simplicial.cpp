#include "arr/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "arr/errors.hpp"
#include "arr/line_closure.hpp"

namespace arr {

namespace {

// Strict homogeneous feasibility: a point x with row . x > 0 for every row,
// or nullopt. Scaling reduces the system to row . x >= 1, decided by a
// phase-one simplex over the rationals with Bland's rule (first negative
// reduced cost enters, ties on the ratio broken by smallest basic variable),
// which cannot cycle. x is split into u - v with u, v >= 0.
std::optional<Vec> strict_feasible(const std::vector<Vec>& rows, int dim) {
  int m = static_cast<int>(rows.size());
  if (m == 0) return Vec(dim, Rat(0));
  int cols = 2 * dim + 2 * m;  // u, v, surplus, artificial
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < dim; ++k) {
      t[i][k] = rows[i][k];
      t[i][dim + k] = -rows[i][k];
    }
    t[i][2 * dim + i] = Rat(-1);
    t[i][2 * dim + m + i] = Rat(1);
    t[i][cols] = Rat(1);
    basis[i] = 2 * dim + m + i;
  }
  // reduced costs for minimizing the artificial sum, with the basic
  // artificials already priced out
  std::vector<Rat> red(cols + 1);
  for (int j = 0; j <= cols; ++j)
    for (int i = 0; i < m; ++i) red[j] -= t[i][j];
  for (int i = 0; i < m; ++i) red[2 * dim + m + i] += Rat(1);

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (red[j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rat ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    internal_check(leave >= 0, "phase-one objective is bounded below by zero");
    Rat piv = t[leave][enter];
    for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rat f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (!red[enter].is_zero()) {
      Rat f = red[enter];
      for (int j = 0; j <= cols; ++j) red[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (!red[cols].is_zero()) return std::nullopt;  // leftover artificial value
  Vec x(dim, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < dim) x[basis[i]] += t[i][cols];
    else if (basis[i] < 2 * dim) x[basis[i] - dim] -= t[i][cols];
  }
  return x;
}

std::vector<Vec> signed_rows(const Arrangement& a, const std::vector<int>& signs, int upto) {
  std::vector<Vec> rows;
  rows.reserve(upto);
  for (int i = 1; i <= upto; ++i) {
    Vec row = a.normal(i);
    if (signs[i - 1] < 0)
      for (Rat& x : row) x = -x;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string Chamber::str() const {
  std::string s;
  s.reserve(signs.size());
  for (int x : signs) s.push_back(x > 0 ? '+' : '-');
  return s;
}

ChamberComplex::ChamberComplex(const Arrangement& a) : a_(a) {
  if (a_.rank() != a_.dim())
    throw std::invalid_argument("chamber enumeration needs an essential arrangement");
  int n = a_.size(), d = a_.dim();

  std::vector<Chamber> regions{Chamber{{}, Vec(d, Rat(0))}};
  for (int h = 1; h <= n; ++h) {
    std::vector<Chamber> next;
    for (Chamber& c : regions) {
      int s = dot(a_.normal(h), c.witness).sign();
      for (int side : {-1, 1}) {
        c.signs.push_back(side);
        if (side == s) {
          next.push_back(c);  // witness already strictly on this side
        } else {
          auto w = strict_feasible(signed_rows(a_, c.signs, h), d);
          if (s == 0)
            internal_check(w.has_value(), "hyperplane through an interior point splits");
          if (w) next.push_back(Chamber{c.signs, std::move(*w)});
        }
        c.signs.pop_back();
      }
    }
    regions = std::move(next);
  }
  std::sort(regions.begin(), regions.end(),
            [](const Chamber& x, const Chamber& y) { return x.signs < y.signs; });
  for (std::size_t i = 0; i + 1 < regions.size(); ++i)
    internal_check(regions[i].signs != regions[i + 1].signs, "chamber signs are distinct");
  chambers_ = std::move(regions);

  // normals of the other hyperplanes written in a kernel basis of each h
  facet_rows_.resize(n);
  for (int h = 1; h <= n; ++h) {
    Mat ker = kernel_basis(Mat::from_rows({a_.normal(h)}));
    facet_rows_[h - 1].resize(n);
    for (int i = 1; i <= n; ++i) {
      if (i == h) continue;
      Vec row(ker.rows());
      for (int k = 0; k < ker.rows(); ++k) row[k] = dot(a_.normal(i), ker.row(k));
      facet_rows_[h - 1][i - 1] = std::move(row);
    }
  }
  walls_.reserve(chambers_.size());
  for (const Chamber& c : chambers_) walls_.push_back(compute_walls(c));

  adjacency_.resize(chambers_.size());
  for (std::size_t i = 0; i < chambers_.size(); ++i)
    for (std::size_t j = i + 1; j < chambers_.size(); ++j) {
      int diff = 0;
      for (int k = 0; k < n && diff < 2; ++k)
        if (chambers_[i].signs[k] != chambers_[j].signs[k]) ++diff;
      if (diff == 1) {
        adjacency_[i].push_back(static_cast<int>(j));
        adjacency_[j].push_back(static_cast<int>(i));
      }
    }
}

IndexSet ChamberComplex::compute_walls(const Chamber& c) const {
  int n = a_.size();
  IndexSet w(n);
  int sub = a_.dim() - 1;  // kernel dimension of one nonzero normal
  for (int h = 1; h <= n; ++h) {
    std::vector<Vec> rows;
    rows.reserve(n - 1);
    for (int i = 1; i <= n; ++i) {
      if (i == h) continue;
      Vec row = facet_rows_[h - 1][i - 1];
      if (c.signs[i - 1] < 0)
        for (Rat& x : row) x = -x;
      rows.push_back(std::move(row));
    }
    if (strict_feasible(rows, sub)) w.add(h);
  }
  return w;
}

int ChamberComplex::find_index(const std::vector<int>& signs) const {
  auto it = std::lower_bound(chambers_.begin(), chambers_.end(), signs,
                             [](const Chamber& c, const std::vector<int>& s) { return c.signs < s; });
  if (it == chambers_.end() || it->signs != signs) return -1;
  return static_cast<int>(it - chambers_.begin());
}

int ChamberComplex::index_of(const Chamber& c) const {
  int n = a_.size(), d = a_.dim();
  if (static_cast<int>(c.signs.size()) != n || static_cast<int>(c.witness.size()) != d)
    throw std::invalid_argument("chamber does not match the arrangement");
  for (int i = 1; i <= n; ++i) {
    if (c.signs[i - 1] != 1 && c.signs[i - 1] != -1)
      throw std::invalid_argument("chamber sign outside {+1,-1}");
    if (dot(a_.normal(i), c.witness).sign() != c.signs[i - 1])
      throw std::invalid_argument("chamber witness does not realize its signs");
  }
  int idx = find_index(c.signs);
  internal_check(idx >= 0, "a realized sign vector was enumerated");
  return idx;
}

const IndexSet& ChamberComplex::walls(const Chamber& c) const { return walls_.at(index_of(c)); }

bool ChamberComplex::adjacent(const Chamber& c, const Chamber& d) const {
  return gallery_distance(c, d) == 1;
}

std::pair<bool, std::optional<Chamber>> ChamberComplex::simplicial() const {
  int r = a_.rank();
  for (std::size_t i = 0; i < chambers_.size(); ++i) {
    bool ok = walls_[i].count() == r;
    if (ok) {
      std::vector<Vec> normals;
      for (int h : walls_[i].to_vector()) normals.push_back(a_.normal(h));
      ok = rank_of(Mat::from_rows(normals)) == r;
    }
    if (!ok) return {false, chambers_[i]};
  }
  return {true, std::nullopt};
}

int ChamberComplex::gallery_distance(const Chamber& c, const Chamber& d) const {
  int ic = index_of(c), id = index_of(d);
  int diff = 0;
  for (int k = 0; k < a_.size(); ++k)
    if (chambers_[ic].signs[k] != chambers_[id].signs[k]) ++diff;
  return diff;
}

int ChamberComplex::hyperplane_distance(int h, const Chamber& c) const {
  if (h < 1 || h > a_.size()) throw std::invalid_argument("hyperplane index out of range");
  int start = index_of(c);
  std::vector<int> dist(chambers_.size(), -1);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (walls_[v].test(h)) return dist[v];
    for (int u : adjacency_[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  internal_check(false, "every hyperplane bounds some chamber");
  return -1;
}

bool ChamberComplex::walls_lc_basis() const {
  auto [simp, offender] = simplicial();
  (void)offender;
  if (!simp) throw std::invalid_argument("wall criterion needs a simplicial arrangement");
  LineClosure ctx(a_);
  for (const IndexSet& w : walls_) {
    if (ctx.lc(w) != a_.full_set()) return false;
    if (!ctx.verify(w).first) return false;
  }
  // separating wall h, then walls of one side vs. size-two pair flats
  int n = a_.size();
  for (std::size_t i = 0; i < chambers_.size(); ++i)
    for (int j : adjacency_[i]) {
      int h = 0;
      for (int k = 0; k < n; ++k)
        if (chambers_[i].signs[k] != chambers_[j].signs[k]) h = k + 1;
      for (int hp = 1; hp <= n; ++hp) {
        if (hp == h || !walls_[j].test(hp)) continue;
        bool shared = walls_[i].test(hp);
        bool pair_only = ctx.pair_members(h, hp).size() == 2;
        if (shared != pair_only) return false;
      }
    }
  return true;
}

const Chamber& ChamberComplex::chamber_of(const Vec& point) const {
  if (static_cast<int>(point.size()) != a_.dim())
    throw std::invalid_argument("point dimension does not match the arrangement");
  std::vector<int> signs(a_.size());
  for (int i = 1; i <= a_.size(); ++i) {
    int s = dot(a_.normal(i), point).sign();
    if (s == 0) throw std::invalid_argument("point lies on hyperplane " + std::to_string(i));
    signs[i - 1] = s;
  }
  int idx = find_index(signs);
  internal_check(idx >= 0, "a realized sign vector was enumerated");
  return chambers_[idx];
}

std::vector<Chamber> chambers(const Arrangement& a) { return ChamberComplex(a).chambers(); }

IndexSet walls(const Arrangement& a, const Chamber& c) { return ChamberComplex(a).walls(c); }

std::pair<bool, std::optional<Chamber>> is_simplicial(const Arrangement& a) {
  return ChamberComplex(a).simplicial();
}

int gallery_distance(const Arrangement& a, const Chamber& c, const Chamber& d) {
  return ChamberComplex(a).gallery_distance(c, d);
}

int hyperplane_distance(const Arrangement& a, int h, const Chamber& c) {
  return ChamberComplex(a).hyperplane_distance(h, c);
}

bool verify_walls_lc_basis(const Arrangement& a) { return ChamberComplex(a).walls_lc_basis(); }

}  // namespace arr
