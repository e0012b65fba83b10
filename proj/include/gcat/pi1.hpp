#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gcat/complex.hpp"

namespace gcat {

/// Word in a free group: letters are nonzero, +i is generator i (1-based),
/// -i its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
/// Free reduction followed by cancelling an inverse pair across the ends.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
std::string to_string(const Word& w);

/// Finite presentation; relators are kept freely reduced.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;

  /// Validates letter ranges and freely reduces every relator.
  static GroupPresentation make(int generator_count, std::vector<Word> relators);
  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Edge-path presentation of the fundamental group of the basepoint's
/// component: breadth-first spanning tree by vertex index, one generator per
/// non-tree edge (edges in lexicographic order), one relator per triangle whose
/// boundary word is not already trivial.
struct EdgePathPresentation {
  GroupPresentation group;
  Vertex basepoint = 0;
  /// Vertices of the basepoint's component, sorted.
  VertexSet component;
  /// Edge (u < v) -> generator index (1-based), or 0 for tree edges.
  std::map<std::pair<Vertex, Vertex>, int> edge_generator;
  /// Spanning-tree parent per vertex of the complex; -1 at the basepoint and
  /// outside the component.
  std::vector<Vertex> tree_parent;

  /// Word of the edge traversed from u to v. Throws if uv is not an edge of the component.
  Word edge_word(Vertex u, Vertex v) const;
  /// Product of edge words along a vertex path.
  Word path_word(const std::vector<Vertex>& path) const;
  /// Vertex path along the tree from the basepoint to v.
  std::vector<Vertex> tree_path(Vertex v) const;
};

EdgePathPresentation edge_path_presentation(const SimplicialComplex& x, Vertex basepoint);

/// One path component of the full subcomplex on a vertex set.
struct ComponentImage {
  /// Vertices of the component, as vertices of the ambient complex.
  VertexSet vertices;
  /// Edge-path presentation of the component itself.
  GroupPresentation presentation;
  /// Image in the ambient group of each generator of `presentation`.
  std::vector<Word> generators;
};

/// Image of pi_1 of a subspace under the inclusion, component by component.
struct Pi1Image {
  GroupPresentation ambient;
  std::vector<ComponentImage> components;
};

/// The loops generating each component's group are based at the component's
/// smallest vertex; their ambient words are already conjugated back to the
/// ambient basepoint by the ambient spanning tree.
Pi1Image inclusion_image(const SimplicialComplex& x, const VertexSet& s,
                         const EdgePathPresentation& ambient);

struct AbelianInvariants {
  int rank = 0;
  /// Invariant factors >= 2, each dividing the next.
  std::vector<std::int64_t> torsion;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Smith normal form of the relator exponent-sum matrix.
AbelianInvariants abelianization(const GroupPresentation& p);

/// Nonzero invariant factors of an integer matrix given as sparse rows
/// (column -> entry); the count of factors is the rank.
std::vector<std::int64_t> smith_invariants(int columns,
                                           const std::vector<std::map<int, std::int64_t>>& rows);
/// Exponent sums of a word as a sparse row.
std::map<int, std::int64_t> exponent_row(const Word& w);

struct CosetIndex {
  std::int64_t index;
};
struct CosetsExceeded {
  std::int64_t limit;
};
using CosetResult = std::variant<CosetIndex, CosetsExceeded>;

/// HLT coset enumeration of the subgroup generated by `subgroup_words`.
/// CosetIndex is only returned for a completed, closed coset table.
CosetResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup_words,
                         std::int64_t max_cosets = 10000);

struct SimplifiedPresentation {
  GroupPresentation presentation;
  /// Original generator i+1 -> word in the simplified generators.
  std::vector<Word> substitution;
  int moves_used = 0;
};

/// Budgeted Tietze simplification. Relators are cyclically reduced and
/// deduplicated up to rotation and inversion; then, while budget remains, a
/// generator occurring exactly once in some relator is eliminated via the
/// shortest such relator.
SimplifiedPresentation simplify_with_substitution(const GroupPresentation& p, int move_budget);
GroupPresentation simplify_presentation(const GroupPresentation& p, int move_budget);

/// Substitute words for generators (generator i+1 -> images[i]) and freely reduce.
Word apply_substitution(const Word& w, const std::vector<Word>& images);

}  // namespace gcat
