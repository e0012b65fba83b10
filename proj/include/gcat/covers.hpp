#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcat/complex.hpp"
#include "gcat/group_classes.hpp"

namespace gcat {

/// Family of vertex sets; piece S stands for the union of the open stars of
/// its vertices, which retracts onto the full subcomplex on S.
struct VertexCover {
  SimplicialComplex complex;
  std::vector<VertexSet> pieces;
  bool partition = false;

  /// Sorts each piece and checks range, nonempty pieces, covering, and
  /// disjointness when `partition` is set. Throws MalformedInput.
  static VertexCover make(SimplicialComplex complex, std::vector<VertexSet> pieces,
                          bool partition);
  std::size_t size() const { return pieces.size(); }
};

/// Pieces pairwise disjoint.
bool is_partition(const std::vector<VertexSet>& pieces);

struct CoverValidation {
  std::vector<Verdict> pieces;
  Verdict overall;
};

/// Classifies a vertex set against one ambient group per component of X.
class PieceValidator {
 public:
  PieceValidator(SimplicialComplex x, GroupClass c, Budget budget);
  Verdict validate(const VertexSet& piece) const;
  const SimplicialComplex& complex() const { return x_; }

 private:
  SimplicialComplex x_;
  GroupClass class_;
  Budget budget_;
  std::vector<EdgePathPresentation> presentations_;
  std::vector<AmbientGroup> ambients_;
};

/// Greedy elementary collapses reach a single vertex. Sufficient for
/// contractibility, not necessary.
bool is_collapsible(const SimplicialComplex& x);

/// Every component of every piece collapses, so each piece is contractible
/// in X when X is connected: the witness notion for LS covers.
bool collapsible_pieces(const VertexCover& c);

CoverValidation validate_cover(const VertexCover& c, const GroupClass& cls, const Budget& budget = {});

struct NerveResult {
  SimplicialComplex nerve;
  int multiplicity = 0;
  /// Vertex -> piece index; only for partitions.
  std::optional<SimplicialMap> index_map;
};

NerveResult multiplicity_and_nerve(const VertexCover& c);

struct StarsCover {
  SubdivisionCarrier subdivision;
  /// Partition of the subdivision's vertices by carrier dimension.
  VertexCover cover;
};

StarsCover stars_cover(const SimplicialComplex& x);

struct CatOptions {
  /// "exact" refuses complexes with more vertices than this.
  int exact_vertex_cap = 12;
  /// Subdivisions applied before "greedy" starts from the stars partition.
  int greedy_subdivisions = 1;
};

struct CatUpperResult {
  int bound = 0;
  VertexCover witness;
  CoverValidation validation;
  std::vector<std::string> trace;
  /// Only under "exact": minimal among vertex partitions of X, no Unknown seen.
  bool minimal = false;
};

/// Strategies: "stars", "greedy", "exact". Throws UnsupportedInput for
/// disconnected input or an oversize "exact" request; MalformedInput for an
/// unknown strategy.
CatUpperResult cat_upper(const SimplicialComplex& x, const GroupClass& c, const std::string& strategy,
                         const Budget& budget = {}, const CatOptions& options = {});

struct CatLowerResult {
  int bound = 1;
  Verdict verdict;
};

CatLowerResult cat_lower(const SimplicialComplex& x, const GroupClass& c, const Budget& budget = {});

}  // namespace gcat
