#include "arr/kformality.hpp"

#include <algorithm>

#include "arr/errors.hpp"

namespace arr {

namespace {

std::vector<int> pivots_of_rref(const Mat& m) {
  std::vector<int> out;
  for (int r = 0; r < m.rows(); ++r) {
    int c = 0;
    while (c < m.cols() && m.at(r, c).is_zero()) ++c;
    internal_check(c < m.cols(), "kernel basis row is nonzero");
    out.push_back(c);
  }
  return out;
}

}  // namespace

const KFormalityAnalysis::Space& KFormalityAnalysis::rk(int flat_id, int k) {
  if (k < 0) throw std::invalid_argument("negative level");
  auto key = std::make_pair(flat_id, k);
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return it->second;

  Space s;
  s.k = k;
  if (k == 0) {
    // Dual of the center of the localization, coordinates on its RREF basis.
    int d = l_.flat(flat_id).space.dim();
    s.basis = Mat::identity(d);
    s.dim = d;
  } else {
    // Kernel of the realized pi_{k-1} on the direct-sum layout.
    int offset = 0;
    for (int z : l_.interval_below(flat_id, k - 1)) {
      int d = rk(z, k - 1).dim;
      s.layout.push_back(Summand{z, offset, d});
      offset += d;
    }
    const Mat& p = pi_matrix(flat_id, k - 1);
    internal_check(p.cols() == offset, "pi domain matches the layout");
    s.basis = kernel_basis(p);
    s.dim = s.basis.rows();
  }
  return spaces_[key] = std::move(s);
}

const Mat& KFormalityAnalysis::pi_matrix(int flat_id, int k) {
  auto key = std::make_pair(flat_id, k);
  auto it = pis_.find(key);
  if (it != pis_.end()) return it->second;

  const Space& target = rk(flat_id, k);
  std::vector<int> summands = l_.interval_below(flat_id, k);
  int cols = 0;
  std::vector<Mat> blocks;
  for (int z : summands) {
    Mat b = imap(k, flat_id, z);
    cols += b.cols();
    blocks.push_back(std::move(b));
  }
  Mat p(target.dim, cols);
  int at = 0;
  for (const Mat& b : blocks) {
    internal_check(b.rows() == target.dim, "summand block has target height");
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) p.at(r, at + c) = b.at(r, c);
    at += b.cols();
  }
  return pis_[key] = std::move(p);
}

Mat KFormalityAnalysis::embed_rows(const Space& from, const Space& into, const Mat& rows) const {
  int total = 0;
  for (const Summand& s : into.layout) total += s.dim;
  Mat out(rows.rows(), total);
  for (const Summand& f : from.layout) {
    const Summand* match = nullptr;
    for (const Summand& g : into.layout)
      if (g.flat_id == f.flat_id) { match = &g; break; }
    internal_check(match != nullptr && match->dim == f.dim,
                   "layout of the smaller interval embeds into the larger one");
    for (int r = 0; r < rows.rows(); ++r)
      for (int c = 0; c < f.dim; ++c) out.at(r, match->offset + c) = rows.at(r, f.offset + c);
  }
  return out;
}

Mat KFormalityAnalysis::imap(int k, int w_flat, int y_flat) {
  internal_check(l_.leq(y_flat, w_flat), "connector goes from a smaller flat");
  auto key = std::make_tuple(k, w_flat, y_flat);
  auto it = imaps_.find(key);
  if (it != imaps_.end()) return it->second;

  Mat m;
  if (w_flat == y_flat) {
    m = Mat::identity(rk(y_flat, k).dim);
  } else if (k == 0) {
    // Restriction of functionals: express the smaller center's basis in the
    // larger one's coordinates.
    const Subspace& wsp = l_.flat(w_flat).space;
    const Subspace& ysp = l_.flat(y_flat).space;
    m = Mat(wsp.dim(), ysp.dim());
    for (int r = 0; r < wsp.dim(); ++r) {
      auto coords = ysp.coords_of(wsp.basis().row(r));
      internal_check(coords.has_value(), "smaller center lies inside the larger one");
      for (int c = 0; c < ysp.dim(); ++c) m.at(r, c) = (*coords)[c];
    }
  } else {
    // Embed the kernel basis along the layout, then resolve in the target
    // kernel. Solvability is the well-definedness of i_k.
    const Space& from = rk(y_flat, k);
    const Space& into = rk(w_flat, k);
    Mat embedded = embed_rows(from, into, from.basis);
    std::vector<int> piv = pivots_of_rref(into.basis);
    m = Mat(into.dim, from.dim);
    for (int j = 0; j < from.dim; ++j) {
      auto coords = coords_in_rref(into.basis, piv, embedded.row(j));
      internal_check(coords.has_value(), "embedded kernel vector lies in the target kernel");
      for (int r = 0; r < into.dim; ++r) m.at(r, j) = (*coords)[r];
    }
  }
  return imaps_[key] = std::move(m);
}

bool KFormalityAnalysis::pi_surjective(int flat_id, int k) {
  const Space& target = rk(flat_id, k);
  if (target.dim == 0) return true;
  return rank_of(pi_matrix(flat_id, k)) == target.dim;
}

bool KFormalityAnalysis::is_k_formal_at(int flat_id, int k) {
  if (k < 2) throw std::invalid_argument("k-formality starts at level 2");
  int r = l_.flat(flat_id).rank;
  if (r <= 2) return true;
  int top_level = std::min(k, r - 1);
  for (int j = 2; j <= top_level; ++j)
    if (!pi_surjective(flat_id, j)) return false;
  return true;
}

std::map<int, bool> KFormalityAnalysis::profile_at(int flat_id) {
  int r = l_.flat(flat_id).rank;
  std::map<int, bool> out;
  for (int k = 2; k <= std::max(2, r - 1); ++k) out[k] = is_k_formal_at(flat_id, k);
  return out;
}

bool KFormalityAnalysis::is_totally_formal() {
  for (int id = 0; id < l_.size(); ++id) {
    int r = l_.flat(id).rank;
    if (r <= 2) continue;
    if (!is_k_formal_at(id, r - 1)) return false;
  }
  return true;
}

bool KFormalityAnalysis::check_diagram(int y_flat_id, int k) {
  if (k < 1) throw std::invalid_argument("diagram check needs k >= 1");
  int top = l_.top();
  const Space& dy = rk(y_flat_id, k);  // its layout is D_k(A_Y)
  const Space& dw = rk(top, k);
  int y_total = 0, w_total = 0;
  for (const Summand& s : dy.layout) y_total += s.dim;
  for (const Summand& s : dw.layout) w_total += s.dim;

  // Block embedding J: D_k(A_Y) -> D_k(A).
  Mat jmat(w_total, y_total);
  for (const Summand& f : dy.layout)
    for (const Summand& g : dw.layout)
      if (g.flat_id == f.flat_id)
        for (int c = 0; c < f.dim; ++c) jmat.at(g.offset + c, f.offset + c) = 1;

  Mat lhs = pi_matrix(top, k - 1) * jmat;
  Mat rhs = imap(k - 1, top, y_flat_id) * pi_matrix(y_flat_id, k - 1);
  return lhs == rhs;
}

KFormalityAnalysis::Space rk_space(const Arrangement& a, int k) {
  KFormalityAnalysis an(a);
  return an.rk(k);
}

std::pair<Mat, bool> pi_k(const Arrangement& a, int k) {
  KFormalityAnalysis an(a);
  return {an.pi_matrix(an.lattice().top(), k), an.pi_surjective(an.lattice().top(), k)};
}

bool is_k_formal(const Arrangement& a, int k) {
  KFormalityAnalysis an(a);
  return an.is_k_formal(k);
}

std::map<int, bool> formality_profile(const Arrangement& a) {
  KFormalityAnalysis an(a);
  return an.profile();
}

bool is_totally_formal(const Arrangement& a) {
  KFormalityAnalysis an(a);
  return an.is_totally_formal();
}

}  // namespace arr
