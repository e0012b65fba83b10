#pragma once

#include <optional>

#include "gcat/complex.hpp"
#include "gcat/covers.hpp"

namespace gcat {

enum class BundleKind { Product, MappingTorus, Abstract };

struct BundleData {
  SimplicialComplex total;
  SimplicialComplex fibre;
  SimplicialComplex base;
  SimplicialMap projection;
  BundleKind kind;
  /// projection^{-1}(0).
  VertexSet fibre_vertices;
  /// Mapping tori only: the gluing automorphism and the number of layers.
  std::optional<SimplicialMap> automorphism;
  int layers = 0;
};

/// F x B with the projection onto B.
BundleData product_bundle(const SimplicialComplex& fibre, const SimplicialComplex& base);
BundleData mapping_torus_bundle(const MappingTorus& m);

/// Two arcs of the n-gon: {0..n-2} and {n-1}.
VertexCover circle_ls_cover(const SimplicialComplex& circle);

/// Pieces (i, j), i-major: vertices over base piece j whose fibre coordinate
/// under the trivialization over piece j lies in fibre piece i. Base pieces
/// must induce subcomplexes with verified trivial fundamental group
/// (UnsupportedInput otherwise); a mapping-torus base piece meeting every
/// level throws NoTrivialization.
VertexCover combine_covers(const BundleData& b, const VertexCover& fibre_cover,
                           const VertexCover& base_ls_cover, const Budget& budget = {});

struct MappingTorusBound {
  int bound = 0;
  /// dim M = fibre_dim + 1, only when 2n <= fibre_dim + 1.
  std::optional<int> dimension_bound;
};

/// cat(M) <= 2n, and cat(M) <= dim M when 2n <= fibre_dim + 1.
MappingTorusBound mapping_torus_bound(int n, int fibre_dim);

/// Numeric bound n * b for a general fibration; no witness.
int fibration_bound(int fibre_bound, int base_ls_bound);

}  // namespace gcat
