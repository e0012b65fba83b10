#pragma once

#include <vector>

#include "gcat/complex.hpp"
#include "gcat/covers.hpp"

namespace gcat {

/// Full subcomplex of X' on the barycenters b_sigma with f(sigma) = tau.
/// Throws MalformedInput if tau is not a simplex of the target.
InducedSubcomplex point_fibre(const SubdividedMap& f, const Simplex& tau);
InducedSubcomplex point_fibre(const SimplicialMap& f, const Simplex& tau);

struct FibreReport {
  Simplex target_simplex;
  InducedSubcomplex fibre;
  Verdict overall;
};

struct FcaResult {
  Verdict verdict;
  /// One per simplex of the target, in storage order; empty when the dimension gate fails.
  std::vector<FibreReport> reports;
};

/// Yes iff dim target <= k and every point fibre is a C-subset of X'.
FcaResult check_fca(const SimplicialMap& f, const GroupClass& c, int k, const Budget& budget = {});

struct FcaWitness {
  SimplicialMap index_map;
  int k = 0;
  CoverValidation cover;
  FcaResult fca;
};

/// Nerve index map of a partition and the FCA check on it with k = multiplicity - 1.
/// Throws UnsupportedInput for non-partitions.
FcaWitness cover_to_fca_witness(const VertexCover& partition, const GroupClass& c,
                                const Budget& budget = {});

/// Pulls the stars partition of P' back along f': piece d holds the
/// barycenters b_sigma with dim f(sigma) = d. At most dim P + 1 pieces, each a
/// disjoint union of point fibres.
VertexCover fca_to_cover(const SimplicialMap& f);

}  // namespace gcat
