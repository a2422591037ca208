#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

// Flat X of an arrangement: a subspace obtained as an intersection of
// hyperplanes, carried with its closed index set {i : X lies in H_i} and its
// rank (codimension in the ambient space).
struct Flat {
  IndexSet hyps;
  Subspace space;
  int rank = 0;
};

// Closed set generated by `s`: all hyperplanes containing the intersection
// of the ones listed. closure(empty) is the whole space with no hyperplanes.
Flat closure(const Arrangement& a, const IndexSet& s);

// Intersection lattice L(A), ordered by reverse inclusion of subspaces:
// x <= y iff the subspace of y lies inside the subspace of x, equivalently
// hyps(x) is a subset of hyps(y). Flat ids are 0-based positions in the
// canonical enumeration: by rank, then lexicographic on the index set.
// Immutable once built; concurrent reads are safe.
class IntersectionLattice {
 public:
  const Arrangement& arrangement() const { return a_; }
  int size() const { return static_cast<int>(flats_.size()); }
  const Flat& flat(int id) const { return flats_.at(id); }
  int rank() const { return a_.rank(); }
  const std::vector<int>& at_rank(int k) const { return by_rank_.at(k); }
  int bottom() const { return 0; }
  int top() const { return by_rank_.back().front(); }

  // Id of the flat with exactly this closed index set, or -1.
  int id_of(const IndexSet& closed_hyps) const;
  int id_of_closure(const IndexSet& hyps) const;
  // Id of the flat whose subspace equals s, or nullopt if s is not a flat.
  std::optional<int> id_of_subspace(const Subspace& s) const;

  bool leq(int x, int y) const { return flats_[x].hyps.subset_of(flats_[y].hyps); }
  int meet(int x, int y) const;  // largest flat below both
  int join(int x, int y) const;  // smallest flat above both
  // Flats z with z <= x and rank(z) == k, ascending ids.
  std::vector<int> interval_below(int x, int k) const;

  const mpz_class& mobius(int id) const { return mobius_.at(id); }
  // Coefficients of sum over flats of |mu| t^rank, degree = rank(A).
  std::vector<mpz_class> poincare() const;

  // |A_X| > r(X): the flat carries more hyperplanes than its rank.
  bool is_nontrivial(int id) const {
    return flats_[id].hyps.count() > flats_[id].rank;
  }

  // X is modular iff X + Y (subspace sum) is a flat for every flat Y.
  bool is_modular(int id) const;

  // Complement y of a modular flat x: join(x, y) = top, built by greedily
  // intersecting hyperplanes (ascending index) that cut x further down to
  // the center. correspondence maps each hyperplane index of the restricted
  // arrangement A^Y to the index in A of the hyperplane X + K containing it;
  // it is a bijection onto A_X, and mapping closed sets through it is an
  // isomorphism of L(A^Y) with L(A_X) (both verified).
  // Degenerate case x = top: y = bottom with an empty correspondence.
  // Throws std::invalid_argument when x is not modular.
  struct ModularComplement {
    int y_id;
    std::map<int, int> correspondence;
  };
  ModularComplement modular_complement(int x_id) const;

 private:
  friend IntersectionLattice build_lattice(const Arrangement& a);
  Arrangement a_ = Arrangement::empty(0);
  std::vector<Flat> flats_;
  std::vector<std::vector<int>> by_rank_;
  std::map<IndexSet, int> id_by_hyps_;
  std::vector<mpz_class> mobius_;
};

// Enumerate all flats breadth-first by rank, then fill in Möbius values.
IntersectionLattice build_lattice(const Arrangement& a);

std::vector<mpz_class> poincare_polynomial(const Arrangement& a);

}  // namespace arr
