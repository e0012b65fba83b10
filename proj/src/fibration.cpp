#include "gcat/fibration.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gcat/error.hpp"

namespace gcat {

BundleData product_bundle(const SimplicialComplex& fibre, const SimplicialComplex& base) {
  auto p = product(fibre, base);
  VertexSet fv;
  for (Vertex x = 0; x < fibre.vertex_count(); ++x) fv.push_back(product_vertex(base, x, 0));
  return BundleData{p.complex, fibre, base, p.second, BundleKind::Product, fv, std::nullopt, 0};
}

BundleData mapping_torus_bundle(const MappingTorus& m) {
  return BundleData{m.complex,    m.fibre,         m.projection.target(), m.projection,
                    BundleKind::MappingTorus, m.fibre_vertices, m.automorphism, m.layers};
}

VertexCover circle_ls_cover(const SimplicialComplex& circle) {
  const int n = circle.vertex_count();
  if (n < 3 || circle != cycle_complex(n)) throw MalformedInput("expected an n-gon with n >= 3");
  VertexSet arc;
  for (int v = 0; v + 1 < n; ++v) arc.push_back(v);
  return VertexCover::make(circle, {arc, {n - 1}}, true);
}

namespace {

void check_simply_connected(const SimplicialComplex& base, const VertexSet& piece, const Budget& budget,
                            std::size_t j) {
  auto sub = full_subcomplex(base, piece);
  std::set<int> seen;
  for (Vertex v = 0; v < sub.complex.vertex_count(); ++v) {
    if (!seen.insert(sub.complex.component_labels()[static_cast<std::size_t>(v)]).second) continue;
    auto g = edge_path_presentation(sub.complex, v).group;
    if (classify_group(g, GroupClass::of(ClassKind::Trivial), budget).answer != Answer::Yes)
      throw UnsupportedInput("base piece " + std::to_string(j) +
                             " is not verified simply connected; an LS cover of the base is required");
  }
}

}  // namespace

VertexCover combine_covers(const BundleData& b, const VertexCover& fibre_cover,
                           const VertexCover& base_ls_cover, const Budget& budget) {
  if (b.kind == BundleKind::Abstract)
    throw UnsupportedInput("abstract fibrations give only the numeric bound, no witness cover");
  if (fibre_cover.complex != b.fibre) throw MalformedInput("fibre cover is not on the bundle's fibre");
  if (base_ls_cover.complex != b.base) throw MalformedInput("base cover is not on the bundle's base");
  const int nf = b.fibre.vertex_count();

  std::vector<std::vector<int>> fibre_pieces_of(static_cast<std::size_t>(nf));
  for (std::size_t i = 0; i < fibre_cover.pieces.size(); ++i)
    for (Vertex v : fibre_cover.pieces[i]) fibre_pieces_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));

  std::vector<VertexSet> pieces(fibre_cover.size() * base_ls_cover.size());
  const std::size_t nb = base_ls_cover.size();
  for (std::size_t j = 0; j < nb; ++j) {
    const auto& w = base_ls_cover.pieces[j];
    if (b.kind == BundleKind::MappingTorus && static_cast<int>(w.size()) == b.layers)
      throw NoTrivialization("base piece " + std::to_string(j) +
                             " meets every level of the mapping torus; no trivialization over it");
    check_simply_connected(b.base, w, budget, j);
    std::vector<bool> in_piece(static_cast<std::size_t>(b.base.vertex_count()), false);
    for (Vertex v : w) in_piece[static_cast<std::size_t>(v)] = true;

    // fibre coordinate of a total-space vertex under the trivialization over w
    std::function<Vertex(Vertex)> coordinate;
    if (b.kind == BundleKind::Product) {
      coordinate = [&](Vertex t) { return t / b.base.vertex_count(); };
    } else {
      const bool wraps = in_piece[0] && in_piece[static_cast<std::size_t>(b.layers - 1)];
      const auto& g = *b.automorphism;
      coordinate = [&, wraps](Vertex t) {
        const Vertex x = t % nf;
        const int level = t / nf;
        return (wraps && level == b.layers - 1) ? g(x) : x;
      };
    }
    for (Vertex t = 0; t < b.total.vertex_count(); ++t) {
      if (!in_piece[static_cast<std::size_t>(b.projection(t))]) continue;
      for (int i : fibre_pieces_of[static_cast<std::size_t>(coordinate(t))])
        pieces[static_cast<std::size_t>(i) * nb + j].push_back(t);
    }
  }
  std::erase_if(pieces, [](const VertexSet& p) { return p.empty(); });
  return VertexCover::make(b.total, std::move(pieces), fibre_cover.partition && base_ls_cover.partition);
}

MappingTorusBound mapping_torus_bound(int n, int fibre_dim) {
  if (n < 1) throw MalformedInput("fibre bound must be at least 1");
  MappingTorusBound r;
  r.bound = 2 * n;
  if (2 * n <= fibre_dim + 1) r.dimension_bound = fibre_dim + 1;
  return r;
}

int fibration_bound(int fibre_bound, int base_ls_bound) {
  if (fibre_bound < 1 || base_ls_bound < 1) throw MalformedInput("bounds must be at least 1");
  return fibre_bound * base_ls_bound;
}

}  // namespace gcat
