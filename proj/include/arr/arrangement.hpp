#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "arr/index_set.hpp"
#include "arr/subspace.hpp"

namespace arr {

// Central hyperplane arrangement in K^dim, K = rationals. Hyperplanes are
// stored as normal vectors, normalized to primitive integer form with
// positive leading entry; the arrangement is simple (no repeats). Indices
// are 1-based everywhere. Immutable after construction, so shared reads are
// safe.
class Arrangement {
 public:
  // Normalizes every normal; throws std::invalid_argument on a zero normal,
  // a length mismatch, or duplicate hyperplanes.
  Arrangement(int dim, std::vector<Vec> normals);

  static Arrangement empty(int dim) { return Arrangement(dim, {}); }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(normals_.size()); }
  int rank() const { return rank_; }

  const Vec& normal(int i) const { return normals_.at(i - 1); }        // 1-based
  const Subspace& hyperplane(int i) const { return spaces_.at(i - 1); }  // ker of normal
  // Intersection of all hyperplanes (the center).
  const Subspace& center() const { return center_; }

  // n x dim matrix, row i-1 = normal of hyperplane i.
  Mat normals_matrix() const;
  // dim x n matrix, column i-1 = normal of hyperplane i (forms as columns).
  Mat forms_matrix() const;

  IndexSet full_set() const { return IndexSet::all(size()); }

  std::string serialize() const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.dim_ == b.dim_ && a.normals_ == b.normals_;
  }
  friend bool operator!=(const Arrangement& a, const Arrangement& b) { return !(a == b); }

 private:
  int dim_;
  std::vector<Vec> normals_;
  std::vector<Subspace> spaces_;
  Subspace center_;
  int rank_ = 0;
};

// Scale to primitive integer entries, first nonzero entry positive.
// Throws std::invalid_argument on the zero vector.
Vec normalize_normal(const Vec& v);

// Reads the textual format:
//   # comment (anywhere)
//   dim <n>
//   <n rationals per line, one hyperplane each>
// Throws ParseError with a line reference on malformed input.
Arrangement parse_arrangement(std::istream& in);
Arrangement parse_arrangement(const std::string& text);

// Sub-arrangement keeping exactly the hyperplanes in `keep` (same ambient
// space, original relative order). parent[j-1] = original index of the j-th
// kept hyperplane.
struct Subarrangement {
  Arrangement arrangement;
  std::vector<int> parent;
};
Subarrangement subarrangement(const Arrangement& a, const IndexSet& keep);
Subarrangement deleted(const Arrangement& a, int h);

// Localization A_X at X = intersection of the hyperplanes in `hyps`: all
// hyperplanes containing X, original order, ambient space unchanged.
Subarrangement localization(const Arrangement& a, const IndexSet& hyps);

// Restriction A^X to X = intersection of the hyperplanes in `hyps`:
// the traces H cap X for H not containing X, as an arrangement in X written
// in the coordinates of flat_basis (RREF basis of X, one row per vector).
// trace maps a parent index to its restricted index; preimages inverts it.
struct Restriction {
  Arrangement arrangement;
  Subspace flat;
  Mat flat_basis;
  std::map<int, int> trace;
  std::vector<std::vector<int>> preimages;
};
Restriction restriction(const Arrangement& a, const IndexSet& hyps);

// Essential version: rewrite the defining forms in a basis of their span.
// The same matrix maps points: a point x of the original space corresponds
// to point_map * x, and form values are preserved under that pairing.
struct Essentialization {
  Arrangement arrangement;
  Mat point_map;  // rank x dim, rows = RREF basis of the span of the normals
};
Essentialization essentialize(const Arrangement& a);

}  // namespace arr
