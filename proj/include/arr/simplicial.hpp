#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

// Open region of the real complement: one sign per hyperplane plus an exact
// interior point. Equality compares the sign vectors.
struct Chamber {
  std::vector<int> signs;  // +1 or -1, hyperplane i at signs[i-1]
  Vec witness;

  friend bool operator==(const Chamber& a, const Chamber& b) { return a.signs == b.signs; }
  friend bool operator!=(const Chamber& a, const Chamber& b) { return !(a == b); }
  std::string str() const;  // e.g. "++-"
};

// All chambers of an essential arrangement. Hyperplanes are inserted one at
// a time; a region splits when the new hyperplane meets its interior, with
// strict feasibility of a sign system decided by an exact phase-one simplex.
// The chamber list is sorted by sign vector and immutable afterwards.
class ChamberComplex {
 public:
  explicit ChamberComplex(const Arrangement& a);  // throws when a is not essential

  const Arrangement& arrangement() const { return a_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  int count() const { return static_cast<int>(chambers_.size()); }

  // Position of c in chambers(). Throws std::invalid_argument when c is not
  // a chamber here: wrong length, sign outside {+1,-1}, witness mismatch.
  int index_of(const Chamber& c) const;

  // Hyperplanes spanned by a facet of c: h is a wall when some point on h
  // strictly satisfies every other sign constraint of c.
  const IndexSet& walls(const Chamber& c) const;
  const IndexSet& walls_at(int index) const { return walls_.at(index); }

  // Chambers are adjacent exactly when their sign vectors differ in one
  // position; the separating hyperplane is then a common wall.
  bool adjacent(const Chamber& c, const Chamber& d) const;

  // true when every chamber has rank-many walls with independent normals;
  // otherwise also an offending chamber.
  std::pair<bool, std::optional<Chamber>> simplicial() const;

  // Fewest facet crossings between two chambers; equals the number of sign
  // positions where they differ.
  int gallery_distance(const Chamber& c, const Chamber& d) const;

  // Fewest facet crossings from c to any chamber with h among its walls;
  // zero exactly when h is a wall of c. Breadth-first over the chamber graph.
  int hyperplane_distance(int h, const Chamber& c) const;

  // For a simplicial complex: every wall set is an lc-basis, and across each
  // adjacent pair with separating wall H, a wall H' != H of one side is a
  // wall of the other exactly when no third hyperplane contains H cap H'.
  // Throws std::invalid_argument when the complex is not simplicial.
  bool walls_lc_basis() const;

  // Chamber whose closure contains the point; throws std::invalid_argument
  // when the point lies on some hyperplane.
  const Chamber& chamber_of(const Vec& point) const;

 private:
  IndexSet compute_walls(const Chamber& c) const;
  int find_index(const std::vector<int>& signs) const;

  Arrangement a_;
  std::vector<Chamber> chambers_;
  std::vector<IndexSet> walls_;
  std::vector<std::vector<int>> adjacency_;          // chamber graph by index
  std::vector<std::vector<Vec>> facet_rows_;         // normals in the basis of each hyperplane
};

// One-shot wrappers; build a ChamberComplex for repeated queries.
std::vector<Chamber> chambers(const Arrangement& a);
IndexSet walls(const Arrangement& a, const Chamber& c);
std::pair<bool, std::optional<Chamber>> is_simplicial(const Arrangement& a);
int gallery_distance(const Arrangement& a, const Chamber& c, const Chamber& d);
int hyperplane_distance(const Arrangement& a, int h, const Chamber& c);
bool verify_walls_lc_basis(const Arrangement& a);

}  // namespace arr
