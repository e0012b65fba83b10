#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gcat {

using Vertex = int;
/// Strictly increasing list of vertex indices.
using Simplex = std::vector<Vertex>;
/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Total order used for simplex storage: by dimension, then lexicographic.
bool simplex_less(const Simplex& a, const Simplex& b);

/// Finite abstract simplicial complex on the vertices 0..vertex_count-1.
///
/// Immutable after construction. Copies share the underlying storage, so
/// passing complexes by value is cheap. Simplices are kept face-closed and
/// sorted by (dimension, lexicographic); the index of a simplex in
/// simplices() is stable and is what the barycentric subdivision uses as the
/// vertex index of its barycenter.
class SimplicialComplex {
 public:
  /// The empty complex.
  SimplicialComplex();

  /// Face closure of the given generating simplices. Each list is sorted;
  /// a repeated vertex inside one list, a negative index, or a vertex index
  /// that never occurs (a gap below the maximum) is rejected.
  static SimplicialComplex from_maximal(std::vector<Simplex> generators,
                                        std::string name = "complex");

  /// Strict loader: the caller claims a vertex count and a complete simplex
  /// list. Every invariant is checked and the first violation is reported.
  static SimplicialComplex from_simplices(int vertex_count,
                                          std::vector<Simplex> simplices,
                                          std::string name = "complex");

  const std::string& name() const;
  SimplicialComplex renamed(std::string name) const;

  int vertex_count() const;
  /// -1 for the empty complex.
  int dim() const;
  bool empty() const { return vertex_count() == 0; }

  const std::vector<Simplex>& simplices() const;
  std::span<const Simplex> simplices_of_dim(int k) const;
  /// Number of k-simplices for k = 0..dim.
  std::vector<std::size_t> f_vector() const;

  bool contains(const Simplex& s) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  std::vector<Simplex> maximal_simplices() const;
  /// All maximal simplices have dimension dim().
  bool is_pure() const;

  /// Sorted adjacency lists of the 1-skeleton.
  const std::vector<std::vector<Vertex>>& neighbours() const;
  /// Component label per vertex; labels are numbered by smallest vertex.
  const std::vector<int>& component_labels() const;
  int component_count() const;
  bool connected() const { return component_count() == 1; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count() == b.vertex_count() && a.simplices() == b.simplices();
  }

 private:
  struct Data;
  explicit SimplicialComplex(std::shared_ptr<const Data> data);
  static SimplicialComplex finish(int vertex_count, std::vector<Simplex> simplices,
                                  std::string name);
  std::shared_ptr<const Data> data_;
};

long long euler_characteristic(const SimplicialComplex& x);

/// Vertex map carrying every simplex of source onto a simplex of target.
class SimplicialMap {
 public:
  /// Throws MalformedInput if the vertex map has the wrong length, leaves the
  /// target's vertex range, or sends a simplex to a non-simplex.
  SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                std::vector<Vertex> vertex_map);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const std::vector<Vertex>& vertex_map() const { return vertex_map_; }

  Vertex operator()(Vertex v) const { return vertex_map_[static_cast<std::size_t>(v)]; }
  /// Image vertex set, duplicates collapsed.
  Simplex image(const Simplex& s) const;
  bool is_bijective() const;

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<Vertex> vertex_map_;
};

SimplicialMap identity_map(const SimplicialComplex& x);

/// Barycentric subdivision together with its carrier.
///
/// Vertex i of `subdivided` is the barycenter of original.simplices()[i], so
/// the first original.vertex_count() vertices are the original vertices.
struct SubdivisionCarrier {
  SimplicialComplex original;
  SimplicialComplex subdivided;
  std::vector<Simplex> carrier;

  Vertex barycenter(const Simplex& s) const;
};

SubdivisionCarrier barycentric_subdivision(const SimplicialComplex& x);
/// n-fold iterated subdivision; returns x itself for n = 0.
SimplicialComplex iterated_subdivision(const SimplicialComplex& x, int n);

struct SubdividedMap {
  SubdivisionCarrier source;
  SubdivisionCarrier target;
  SimplicialMap map;
};

/// f'(b_sigma) = b_{f(sigma)}.
SubdividedMap subdivide_map(const SimplicialMap& f);

/// Full subcomplex on a vertex set, re-indexed by rank in the (sorted) set.
struct InducedSubcomplex {
  SimplicialComplex complex;
  /// New vertex index -> vertex of the parent complex.
  std::vector<Vertex> to_parent;
};

InducedSubcomplex full_subcomplex(const SimplicialComplex& x, VertexSet s);

/// Staircase triangulation of |X| x |Y| with both projections.
/// Vertex (x, y) has index x * Y.vertex_count() + y.
struct ProductComplex {
  SimplicialComplex complex;
  SimplicialMap first;
  SimplicialMap second;
};

ProductComplex product(const SimplicialComplex& x, const SimplicialComplex& y);
inline Vertex product_vertex(const SimplicialComplex& y, Vertex a, Vertex b) {
  return a * y.vertex_count() + b;
}

struct WedgeComplex {
  SimplicialComplex complex;
  /// embeddings[i][v] = wedge vertex of vertex v of summand i.
  std::vector<std::vector<Vertex>> embeddings;
};

/// Disjoint union with the basepoints identified (to the first summand's basepoint).
WedgeComplex wedge(const std::vector<SimplicialComplex>& complexes,
                   const std::vector<Vertex>& basepoints);

/// Triangulated mapping torus of a simplicial automorphism.
///
/// Level l (0 <= l < layers) holds a copy of X; vertex (x, l) has index
/// l * X.vertex_count() + x. Layer l is the staircase prism from level l to
/// level l + 1, and the last layer ends on level 0 through the automorphism.
struct MappingTorus {
  SimplicialComplex complex;
  SimplicialComplex fibre;
  SimplicialMap automorphism;
  /// Onto the `layers`-gon; level l goes to vertex l.
  SimplicialMap projection;
  /// Level-0 copy of the fibre, equal to projection^{-1}(0).
  VertexSet fibre_vertices;
  int layers;
};

/// Throws UnsupportedInput unless g is a bijective, inverse-simplicial self-map.
MappingTorus mapping_torus(const SimplicialMap& g, int layers = 3);

// Standard small complexes.
SimplicialComplex cycle_complex(int n, std::string name = "circle");
SimplicialComplex simplex_complex(int d, std::string name = "simplex");
SimplicialComplex simplex_boundary(int d, std::string name = "sphere");
SimplicialComplex point_complex(std::string name = "point");

}  // namespace gcat
