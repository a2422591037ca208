#include "arr/formality.hpp"

#include "arr/errors.hpp"

namespace arr {

Subspace relation_space(const Arrangement& a) {
  // Kernel of the dim x n matrix whose columns are the defining forms.
  return Subspace::kernel_of(a.forms_matrix());
}

namespace {

// Canonical basis of the local relation space of the hyperplanes in `hyps`,
// embedded into K^n at their positions.
std::vector<Vec> embedded_local_relations(const Arrangement& a, const IndexSet& hyps) {
  std::vector<int> members = hyps.to_vector();
  Mat local(a.dim(), static_cast<int>(members.size()));
  for (std::size_t j = 0; j < members.size(); ++j)
    for (int rr = 0; rr < a.dim(); ++rr) local.at(rr, static_cast<int>(j)) = a.normal(members[j])[rr];
  Mat k = kernel_basis(local);
  std::vector<Vec> out;
  for (int rr = 0; rr < k.rows(); ++rr) {
    Vec v(a.size());
    for (std::size_t j = 0; j < members.size(); ++j) v[members[j] - 1] = k.at(rr, static_cast<int>(j));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Pi2Data pi2(const IntersectionLattice& l) {
  const Arrangement& a = l.arrangement();
  Pi2Data out;
  std::vector<Vec> rows;
  if (l.rank() >= 2) {
    for (int id : l.at_rank(2)) {
      if (!l.is_nontrivial(id)) continue;  // two hyperplanes, no relations
      for (Vec& v : embedded_local_relations(a, l.flat(id).hyps)) {
        rows.push_back(std::move(v));
        out.row_flats.push_back(l.flat(id).hyps);
      }
    }
  }
  out.rows = rows.empty() ? Mat(0, a.size()) : Mat::from_rows(rows);
  out.rank = rank_of(out.rows);
  out.f2 = Subspace::span_rows(out.rows);
  return out;
}

Pi2Data pi2(const Arrangement& a) { return pi2(build_lattice(a)); }

FormalityResult is_formal(const Arrangement& a) {
  FormalityResult res;
  res.f = relation_space(a);
  res.dim_f = res.f.dim();
  internal_check(res.dim_f == a.size() - a.rank(),
                 "relation space dimension is |A| - r(A)");
  Pi2Data p = pi2(a);
  res.dim_f2 = p.f2.dim();
  res.pi2_rank = p.rank;
  internal_check(res.f.contains(p.f2), "local relations are relations");
  res.formal = (res.dim_f2 == res.dim_f);
  if (!res.formal) {
    for (int r = 0; r < res.f.basis().rows(); ++r) {
      Vec v = res.f.basis().row(r);
      if (!p.f2.contains(v)) { res.witness = v; break; }
    }
    internal_check(res.witness.has_value(), "strictly smaller F_2 leaves a witness");
  }
  internal_check(a.rank() > 2 || res.formal, "rank at most 2 is always formal");
  return res;
}

RestrictionMaps restriction_relation_maps(const Arrangement& a, const IndexSet& z_hyps) {
  RestrictionMaps out{restriction(a, z_hyps), Mat(), false, Mat(), false, false};
  const Restriction& rest = out.rest;
  int m = rest.arrangement.size();

  // psi1 column by column: members of A_Z die, others map onto their trace
  // with the scalar relating the restricted form to the normalized trace.
  out.psi1 = Mat(m, a.size());
  for (int i = 1; i <= a.size(); ++i) {
    auto it = rest.trace.find(i);
    if (it == rest.trace.end()) continue;  // i lies in A_Z
    Vec v(rest.flat.dim());
    for (int j = 0; j < rest.flat.dim(); ++j) v[j] = dot(a.normal(i), rest.flat_basis.row(j));
    const Vec& beta = rest.arrangement.normal(it->second);
    int lead = 0;
    while (beta[lead].is_zero()) ++lead;
    Rat c = v[lead] / beta[lead];
    internal_check(!c.is_zero(), "restricted form is a nonzero multiple of its trace");
    out.psi1.at(it->second - 1, i - 1) = c;
  }
  out.psi1_surjective = (rank_of(out.psi1) == m);

  // Induced map on relation spaces, in canonical basis coordinates.
  Subspace f = relation_space(a);
  Subspace fz = relation_space(rest.arrangement);
  out.psi1_tilde = Mat(fz.dim(), f.dim());
  for (int j = 0; j < f.dim(); ++j) {
    Vec image = out.psi1.apply(f.basis().row(j));
    auto coords = fz.coords_of(image);
    internal_check(coords.has_value(), "psi1 carries relations to relations");
    for (int rr = 0; rr < fz.dim(); ++rr) out.psi1_tilde.at(rr, j) = (*coords)[rr];
  }
  out.psi1_tilde_surjective = (rank_of(out.psi1_tilde) == fz.dim());

  // psi1 image of F_2(A) must land in F_2(A^Z).
  Pi2Data p = pi2(a);
  Pi2Data pz = pi2(rest.arrangement);
  out.image_pi2_contained = true;
  for (int rr = 0; rr < p.rows.rows(); ++rr) {
    if (!pz.f2.contains(out.psi1.apply(p.rows.row(rr)))) {
      out.image_pi2_contained = false;
      break;
    }
  }
  return out;
}

}  // namespace arr
