#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/catalog.hpp"
#include "arr/errors.hpp"
#include "arr/formality.hpp"
#include "generators.hpp"

using namespace arr;

namespace {

// Independent oracle for F_2(A): span of every local relation supported on
// at most three hyperplanes, found by scanning all 2- and 3-subsets.
Subspace f2_by_brute_force(const Arrangement& a) {
  int n = a.size();
  std::vector<Vec> rows;
  std::vector<int> idx;
  auto scan = [&](const std::vector<int>& members) {
    Mat local(a.dim(), static_cast<int>(members.size()));
    for (std::size_t j = 0; j < members.size(); ++j)
      for (int r = 0; r < a.dim(); ++r) local.at(r, static_cast<int>(j)) = a.normal(members[j])[r];
    Mat k = kernel_basis(local);
    for (int r = 0; r < k.rows(); ++r) {
      Vec v(n);
      for (std::size_t j = 0; j < members.size(); ++j) v[members[j] - 1] = k.at(r, static_cast<int>(j));
      rows.push_back(v);
    }
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      scan({i, j});
      for (int k = j + 1; k <= n; ++k) scan({i, j, k});
    }
  if (rows.empty()) return Subspace::zero(n);
  return Subspace::span_rows(Mat::from_rows(rows));
}

}  // namespace

TEST_CASE("relation space dimensions") {
  CHECK(relation_space(builtin("boolean", 4)).dim() == 0);
  CHECK(relation_space(builtin("ex51")).dim() == 6);
  CHECK(relation_space(builtin("ex51_restriction")).dim() == 5);
  CHECK(relation_space(builtin("kn", 3)).dim() == 3);
  CHECK(relation_space(Arrangement::empty(3)).dim() == 0);

  std::mt19937 rng(555);
  for (int t = 0; t < 20; ++t) {
    Arrangement a = testgen::random_arrangement(rng, 3, 1, 7);
    CHECK(relation_space(a).dim() == a.size() - a.rank());
  }
}

TEST_CASE("pi2 of ex51 reproduces the published 6x11 matrix of rank 6") {
  Pi2Data p = pi2(builtin("ex51"));
  Mat expected = Mat::from_rows({
      {1, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 1, 0, 0, -1, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, -1},
      {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, -1},
      {0, 0, 0, 0, 1, 1, -1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 1, -1, 0, 0},
  });
  CHECK(p.rows == expected);
  CHECK(p.rank == 6);
  std::vector<IndexSet> flats = {
      IndexSet::of(11, {1, 3, 6}),  IndexSet::of(11, {2, 7, 10}),
      IndexSet::of(11, {3, 9, 11}), IndexSet::of(11, {4, 10, 11}),
      IndexSet::of(11, {5, 6, 7}),  IndexSet::of(11, {5, 8, 9})};
  CHECK(p.row_flats == flats);
}

TEST_CASE("pi2 of the ex51 restriction reproduces the published 6x9 matrix of rank 5") {
  Pi2Data p = pi2(builtin("ex51_restriction"));
  Mat expected = Mat::from_rows({
      {1, 1, 0, 0, 0, 0, -1, 0, 0},
      {1, 0, 1, 0, -1, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 1, 0, 0, -1},
      {0, 0, 1, 0, 0, 0, 0, 1, -1},
      {0, 0, 0, 1, 1, -1, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 1, -1, 0},
  });
  CHECK(p.rows == expected);
  CHECK(p.rank == 5);
}

TEST_CASE("pi2 of Boolean arrangements is empty") {
  Pi2Data p = pi2(builtin("boolean", 4));
  CHECK(p.rows.rows() == 0);
  CHECK(p.rank == 0);
  CHECK(p.f2.dim() == 0);
}

TEST_CASE("formality decisions on the fixed examples") {
  FormalityResult full = is_formal(builtin("ex51"));
  CHECK(full.formal);
  CHECK(full.dim_f == 6);
  CHECK(full.pi2_rank == 6);
  CHECK_FALSE(full.witness.has_value());

  FormalityResult rest = is_formal(builtin("ex51_restriction"));
  CHECK(rest.formal);
  CHECK(rest.dim_f == 5);
  CHECK(rest.pi2_rank == 5);

  FormalityResult loc = is_formal(builtin("ex51_localization"));
  CHECK_FALSE(loc.formal);
  CHECK(loc.dim_f == 1);
  CHECK(loc.dim_f2 == 0);
  REQUIRE(loc.witness.has_value());
  CHECK(*loc.witness == Vec{1, 1, 1, -1});  // the unique relation, length 4

  CHECK(is_formal(builtin("braid", 4)).formal);
  CHECK(is_formal(builtin("kn", 3)).formal);
  CHECK(is_formal(builtin("boolean", 5)).formal);
}

TEST_CASE("rank-2 arrangements are always formal") {
  Arrangement pencil(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  FormalityResult r = is_formal(pencil);
  CHECK(r.formal);
  CHECK(r.dim_f == 2);
}

TEST_CASE("F2 via rank-2 flats equals the brute-force length-3 span") {
  std::vector<Arrangement> cases = {builtin("ex51"), builtin("ex51_restriction"),
                                    builtin("kn", 3), builtin("braid", 4),
                                    builtin("bn", 3), builtin("ex51_localization")};
  std::mt19937 rng(808);
  for (int t = 0; t < 10; ++t) cases.push_back(testgen::random_arrangement(rng, 3, 2, 8));
  for (const Arrangement& a : cases) {
    REQUIRE(a.size() <= 12);
    CHECK(pi2(a).f2 == f2_by_brute_force(a));
  }
}

TEST_CASE("restriction maps for ex51 at the second hyperplane") {
  Arrangement a = builtin("ex51");
  RestrictionMaps m = restriction_relation_maps(a, IndexSet::of(11, {2}));
  CHECK(m.rest.arrangement.size() == 9);
  CHECK(m.psi1.rows() == 9);
  CHECK(m.psi1.cols() == 11);
  CHECK(m.psi1_surjective);
  CHECK(m.psi1_tilde.rows() == 5);
  CHECK(m.psi1_tilde.cols() == 6);
  CHECK(m.psi1_tilde_surjective);
  CHECK(m.image_pi2_contained);
  // The member of A_Z contributes a zero column.
  for (int r = 0; r < 9; ++r) CHECK(m.psi1.at(r, 1).is_zero());
  // x1+x2+x3+x5 restricts to the same trace as x1+x3+x5 with scalar 1.
  CHECK(m.rest.trace.at(10) == m.rest.trace.at(7));
  CHECK(m.psi1.at(m.rest.trace.at(10) - 1, 9) == Rat(1));
}

TEST_CASE("restriction maps: trivial and degenerate flats") {
  RestrictionMaps b = restriction_relation_maps(builtin("boolean", 3), IndexSet::of(3, {1}));
  CHECK(b.psi1.rows() == 2);
  CHECK(b.psi1_surjective);
  CHECK(b.psi1_tilde.rows() == 0);
  CHECK(b.psi1_tilde_surjective);
  CHECK(b.image_pi2_contained);

  // Z = center: the restriction is empty, everything degenerates to zero.
  Arrangement e = builtin("ex51");
  RestrictionMaps d = restriction_relation_maps(e, e.full_set());
  CHECK(d.rest.arrangement.size() == 0);
  CHECK(d.psi1.rows() == 0);
  CHECK(d.psi1_surjective);
  CHECK(d.psi1_tilde_surjective);
  CHECK(d.image_pi2_contained);
}

TEST_CASE("restriction map theorems hold on random (arrangement, flat) pairs") {
  std::mt19937 rng(20240823);
  for (int t = 0; t < 20; ++t) {
    Arrangement a = testgen::random_arrangement(rng, 3 + static_cast<int>(rng() % 2), 2, 8);
    IndexSet z = testgen::random_subset(rng, a.size());
    RestrictionMaps m = restriction_relation_maps(a, z);
    CHECK(m.psi1_surjective);
    CHECK(m.psi1_tilde_surjective);
    CHECK(m.image_pi2_contained);
  }
}
