#pragma once

#include <map>
#include <tuple>

#include "arr/lattice.hpp"

namespace arr {

// Recursive relation spaces R_k and the k-formality chain.
//
// Every space is attached to a localization A_X, identified by its flat in
// L(A); the whole arrangement is the localization at the top flat. The
// recursion is:
//   R_0(A_X) = dual of the center X, coordinates on the RREF basis of X;
//   D_k(A_X) = direct sum of R_{k-1}(A_Z) over rank-(k-1) flats Z <= X,
//              summands in canonical flat order (the layout);
//   R_k(A_X) = kernel of the realized map pi_{k-1}(A_X): D_k(A_X) -> R_{k-1}(A_X).
// The connector i_k(X -> W) embeds kernel coordinates along the layout and
// re-solves in the target kernel basis; pi_k(A_W) is the block row of all
// i_k(Z -> W) over rank-k flats Z <= W.
//
// One analysis owns a memo table of spaces and maps; treat an instance as
// single-threaded. Distinct instances are independent.
class KFormalityAnalysis {
 public:
  explicit KFormalityAnalysis(const Arrangement& a) : l_(build_lattice(a)) {}
  explicit KFormalityAnalysis(IntersectionLattice l) : l_(std::move(l)) {}

  const IntersectionLattice& lattice() const { return l_; }

  struct Summand {
    int flat_id;
    int offset;
    int dim;
  };
  struct Space {
    int k = 0;
    std::vector<Summand> layout;  // empty for k = 0
    Mat basis;                    // RREF rows in layout coordinates
    int dim = 0;
  };

  // R_k of the localization at a flat (top flat = whole arrangement).
  const Space& rk(int flat_id, int k);
  const Space& rk(int k) { return rk(l_.top(), k); }

  // Realized pi_k(A_W): rows dim R_k(A_W), columns = D_{k+1}(A_W) layout.
  const Mat& pi_matrix(int flat_id, int k);
  bool pi_surjective(int flat_id, int k);

  // k-formality: surjectivity of pi_2 .. pi_min(k, r-1); rank <= 2 is
  // always k-formal. k >= r(A_W) falls back to the value at r-1.
  bool is_k_formal_at(int flat_id, int k);
  bool is_k_formal(int k) { return is_k_formal_at(l_.top(), k); }
  std::map<int, bool> profile_at(int flat_id);
  std::map<int, bool> profile() { return profile_at(l_.top()); }

  // Every localization k-formal at every level.
  bool is_totally_formal();

  // Commutativity of the defining square at level k over the flat y:
  // pi_{k-1}(A) after the layout embedding of D_k(A_Y) equals
  // i_{k-1}(Y) after pi_{k-1}(A_Y), as matrices. A theorem; exposed so the
  // tests can assert the realization is consistent.
  bool check_diagram(int y_flat_id, int k);

 private:
  Mat imap(int k, int w_flat, int y_flat);  // i_k(Y -> W), basis coordinates
  Mat embed_rows(const Space& from, const Space& into, const Mat& rows) const;

  IntersectionLattice l_;
  std::map<std::pair<int, int>, Space> spaces_;
  std::map<std::pair<int, int>, Mat> pis_;
  std::map<std::tuple<int, int, int>, Mat> imaps_;
};

// One-shot conveniences over a fresh analysis.
KFormalityAnalysis::Space rk_space(const Arrangement& a, int k);
std::pair<Mat, bool> pi_k(const Arrangement& a, int k);
bool is_k_formal(const Arrangement& a, int k);
std::map<int, bool> formality_profile(const Arrangement& a);
bool is_totally_formal(const Arrangement& a);

}  // namespace arr
