#include "doctest.h"
#include "gcat/corpus.hpp"
#include "gcat/error.hpp"
#include "gcat/fibration.hpp"

using namespace gcat;

namespace {
const GroupClass kAmenable = GroupClass::of(ClassKind::Amenable);

VertexSet all_vertices(const SimplicialComplex& x) {
  VertexSet s;
  for (int v = 0; v < x.vertex_count(); ++v) s.push_back(v);
  return s;
}
}  // namespace

TEST_CASE("product bundle over the circle") {
  auto c = corpus::circle();
  auto b = product_bundle(c, c);
  CHECK(b.total.f_vector() == corpus::torus().f_vector());
  CHECK(b.fibre_vertices == VertexSet{0, 3, 6});
  auto fibre_cover = VertexCover::make(c, {all_vertices(c)}, true);
  auto base = circle_ls_cover(c);
  CHECK(base.pieces == std::vector<VertexSet>{{0, 1}, {2}});
  auto e = combine_covers(b, fibre_cover, base);
  CHECK(e.size() == 2);
  CHECK(validate_cover(e, kAmenable).overall.answer == Answer::Yes);
  // piece (i, j) = V_i x W_j
  CHECK(e.pieces[0] == VertexSet{0, 1, 3, 4, 6, 7});
  CHECK(e.pieces[1] == VertexSet{2, 5, 8});
}

TEST_CASE("product pieces are products of pieces") {
  auto f = corpus::figure_eight();
  auto base = corpus::circle();
  auto b = product_bundle(f, base);
  auto fc = VertexCover::make(f, {{0, 1}, {2}, {3, 4}}, true);
  const auto arcs = circle_ls_cover(base);
  auto e = combine_covers(b, fc, arcs);
  REQUIRE(e.size() == 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      VertexSet want;
      for (Vertex x : fc.pieces[i])
        for (Vertex y : arcs.pieces[j]) want.push_back(product_vertex(base, x, y));
      std::sort(want.begin(), want.end());
      CHECK(e.pieces[i * 2 + j] == want);
    }
  CHECK(validate_cover(e, GroupClass::of(ClassKind::Abelian)).overall.answer == Answer::Yes);
}

TEST_CASE("trivial base") {
  auto x = corpus::torus();
  auto b = product_bundle(x, point_complex());
  auto fc = VertexCover::make(x, {{0, 1, 2, 3}, {4, 5, 6, 7, 8}}, true);
  auto e = combine_covers(b, fc, VertexCover::make(point_complex(), {{0}}, true));
  CHECK(e.pieces == fc.pieces);
  CHECK(e.complex.simplices() == x.simplices());
}

TEST_CASE("klein bottle") {
  auto k = corpus::klein_bottle();
  auto b = mapping_torus_bundle(k);
  auto h = corpus::hexagon();
  auto fc = VertexCover::make(h, {all_vertices(h)}, true);
  auto e = combine_covers(b, fc, circle_ls_cover(b.base));
  CHECK(e.size() == 2);
  CHECK(validate_cover(e, kAmenable).overall.answer == Answer::Yes);

  // a piece meeting every level has no trivialization
  CHECK_THROWS_AS(combine_covers(b, fc, VertexCover::make(b.base, {{0, 1, 2}}, true)), NoTrivialization);
  // wrapping arc {2, 0} uses the gluing
  auto wrap = combine_covers(b, fc, VertexCover::make(b.base, {{0, 2}, {1}}, true));
  CHECK(validate_cover(wrap, kAmenable).overall.answer == Answer::Yes);

  // a fibre cover with two pieces: the gluing moves vertices between pieces
  auto fc2 = VertexCover::make(h, {{0, 1, 2}, {3, 4, 5}}, true);
  auto w2 = combine_covers(b, fc2, VertexCover::make(b.base, {{0, 2}, {1}}, true));
  CHECK(w2.size() == 4);
  CHECK(validate_cover(w2, GroupClass::of(ClassKind::Trivial)).overall.answer == Answer::Yes);
}

TEST_CASE("base cover must be simply connected") {
  auto c = corpus::circle();
  auto b = product_bundle(c, c);
  auto fc = VertexCover::make(c, {all_vertices(c)}, true);
  CHECK_THROWS_AS(combine_covers(b, fc, VertexCover::make(c, {all_vertices(c)}, true)), UnsupportedInput);
}

TEST_CASE("mapping torus bound") {
  auto a = mapping_torus_bound(1, 1);
  CHECK(a.bound == 2);
  CHECK(a.dimension_bound == 2);
  auto b = mapping_torus_bound(3, 2);
  CHECK(b.bound == 6);
  CHECK(!b.dimension_bound.has_value());
  auto c = mapping_torus_bound(2, 3);
  CHECK(c.bound == 4);
  CHECK(c.dimension_bound == 4);
  CHECK_THROWS_AS(mapping_torus_bound(0, 3), MalformedInput);
  CHECK(fibration_bound(3, 2) == 6);
}
