#pragma once

#include <optional>

#include "arr/lattice.hpp"

namespace arr {

// Relation space F(A): kernel of the map sending the unit vector of a
// hyperplane to its defining form. Vectors live in K^|A|; the canonical
// basis is the RREF kernel basis.
Subspace relation_space(const Arrangement& a);

// Realization of the rank-2 relation map. One block of rows per nontrivial
// rank-2 flat X (|A_X| >= 3): the canonical basis of the local relation
// space F(A_X), embedded into K^|A| on the coordinates of A_X. The row span
// is F_2(A), the image of the map; its rank decides formality.
struct Pi2Data {
  Mat rows;
  std::vector<IndexSet> row_flats;
  int rank = 0;
  Subspace f2;
};
Pi2Data pi2(const Arrangement& a);
Pi2Data pi2(const IntersectionLattice& l);

// Formality test: F_2(A) = F(A). Rank at most 2 is always formal.
// On failure, witness is the first canonical basis vector of F(A) outside
// F_2(A).
struct FormalityResult {
  bool formal = false;
  int dim_f = 0;
  int dim_f2 = 0;
  int pi2_rank = 0;
  Subspace f;
  std::optional<Vec> witness;
};
FormalityResult is_formal(const Arrangement& a);

// The restriction maps to a flat Z. psi1 sends the coordinate of H not in
// A_Z to c times the coordinate of its trace K = H cap Z, where the form of
// H restricted to Z is c times the normalized form of K; coordinates of
// members of A_Z map to zero. psi1_tilde is the induced map between the
// relation spaces, written in their canonical bases. All three reported
// checks are theorems, so callers may treat a false as an invariant
// violation.
struct RestrictionMaps {
  Restriction rest;
  Mat psi1;        // |A^Z| x |A|
  bool psi1_surjective = false;
  Mat psi1_tilde;  // dim F(A^Z) x dim F(A)
  bool psi1_tilde_surjective = false;
  bool image_pi2_contained = false;  // psi1(F_2(A)) inside F_2(A^Z)
};
RestrictionMaps restriction_relation_maps(const Arrangement& a, const IndexSet& z_hyps);

}  // namespace arr
