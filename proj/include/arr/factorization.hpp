#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arr/lattice.hpp"

namespace arr {

// Ordered partition of the hyperplane indices into disjoint nonempty blocks.
struct Partition {
  std::vector<IndexSet> blocks;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks == b.blocks; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  std::string str() const;
};

// One hyperplane per block: hyps[i] lies in blocks[i].
struct Section {
  std::vector<int> hyps;

  friend bool operator==(const Section& a, const Section& b) { return a.hyps == b.hyps; }
  friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }
};

// Evidence that a partition is not a factorization: a dependent section, or
// a flat whose induced partition has no singleton block.
struct FactorizationFailure {
  std::optional<Section> dependent_section;
  std::optional<IndexSet> flat_without_singleton;
};

// A partition factors the arrangement when every section is linearly
// independent and, for every flat X above the bottom, the induced partition
// of A_X (the nonempty traces of the blocks) has a singleton block.
// Throws std::invalid_argument when p does not partition the hyperplanes.
std::pair<bool, std::optional<FactorizationFailure>> is_factorization(const Arrangement& a,
                                                                      const Partition& p);
std::pair<bool, std::optional<FactorizationFailure>> is_factorization(
    const IntersectionLattice& l, const Partition& p);

// Backtracking search over block assignments, blocks ordered by their
// minimum element (restricted growth), smaller block index tried first; the
// result is the first factorization in that order, or nullopt. A found
// partition is cross-checked: rank(A) blocks, the Poincare polynomial is the
// product of (1 + |block| t), and every flat meets exactly rank(X) blocks.
std::optional<Partition> find_factorization(const Arrangement& a);
std::optional<Partition> find_factorization(const IntersectionLattice& l);

// One swap of the section-improvement run: hyperplane `in` replaces `out`
// inside their common block, and `next` is the singleton hyperplane of the
// induced partition on `in` cap `out`, handled in the following step.
struct SectionSwap {
  int in = 0;
  int out = 0;
  int block = 0;
  int next = 0;

  friend bool operator==(const SectionSwap& a, const SectionSwap& b) {
    return a.in == b.in && a.out == b.out && a.block == b.block && a.next == b.next;
  }
};

struct SectionResult {
  Section section;
  std::vector<SectionSwap> swaps;
};

// Section of the factorization p whose line closure is all of A. Starts from
// the first hyperplane of every block and repeatedly improves: while some
// hyperplane h is outside lc(S), a run of swaps produces a section whose
// line closure also covers h, so the closure strictly grows each round.
// Throws std::invalid_argument when p is not a factorization.
SectionResult section_lc_basis(const Arrangement& a, const Partition& p);

// The three statements of the addition-deletion criterion for the triple
// (A, A minus H0, A restricted to H0), evaluated directly. H0 must lie in
// the first block. rho maps the hyperplanes outside the first block to their
// traces on H0. When H0 was alone in its block the deletion loses a block;
// statement_ii is then false by convention and degenerate_deletion is set
// (and the two-imply-third cross-check does not apply). Otherwise any two
// true statements force the third; a violation is an internal error.
struct AdditionDeletionReport {
  bool statement_i = false;    // p factors A
  bool statement_ii = false;   // p minus H0 factors the deletion
  bool statement_iii = false;  // rho bijective and the traced partition factors the restriction
  bool rho_bijective = false;
  bool degenerate_deletion = false;
};
AdditionDeletionReport addition_deletion_check(const Arrangement& a, const Partition& p, int h0);

// Stronger deletion criterion: requires p to factor A and rho to be
// bijective (violations throw std::invalid_argument), then reports whether
// the induced partitions factor the deletion and the restriction. Both are
// true by the underlying theorem; they are returned for cross-validation.
// Empty blocks are dropped from the deletion partition.
std::pair<bool, bool> deletion_criterion(const Arrangement& a, const Partition& p, int h0);

}  // namespace arr
