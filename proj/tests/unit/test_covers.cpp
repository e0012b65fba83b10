#include <random>
#include <set>

#include "doctest.h"
#include "gcat/corpus.hpp"
#include "gcat/covers.hpp"
#include "gcat/error.hpp"
#include "random_complex.hpp"

using namespace gcat;

namespace {

const GroupClass kTrivial = GroupClass::of(ClassKind::Trivial);
const GroupClass kAmenable = GroupClass::of(ClassKind::Amenable);

VertexSet all_vertices(const SimplicialComplex& x) {
  VertexSet s;
  for (int v = 0; v < x.vertex_count(); ++v) s.push_back(v);
  return s;
}

}  // namespace

TEST_CASE("cover construction") {
  auto c = corpus::circle();
  CHECK_NOTHROW(VertexCover::make(c, {{0, 1}, {1, 2}}, false));
  CHECK_THROWS_AS(VertexCover::make(c, {{0, 1}}, false), MalformedInput);
  CHECK_THROWS_AS(VertexCover::make(c, {{0, 1}, {1, 2}}, true), MalformedInput);
  CHECK_THROWS_AS(VertexCover::make(c, {{0, 1, 2}, {}}, false), MalformedInput);
  CHECK_THROWS_AS(VertexCover::make(c, {{0, 1, 7}}, false), MalformedInput);
  auto v = VertexCover::make(c, {{2, 0}, {1}}, true);
  CHECK(v.pieces[0] == VertexSet{0, 2});
}

TEST_CASE("validate_cover examples") {
  auto s = stars_cover(corpus::circle());
  auto v = validate_cover(s.cover, kTrivial);
  CHECK(v.overall.answer == Answer::Yes);
  for (const auto& p : v.pieces) CHECK(p.answer == Answer::Yes);

  auto c = corpus::circle();
  CHECK(validate_cover(VertexCover::make(c, {all_vertices(c)}, true), kAmenable).overall.answer == Answer::Yes);
  auto f8 = corpus::figure_eight();
  auto bad = validate_cover(VertexCover::make(f8, {all_vertices(f8)}, true), kAmenable);
  CHECK(bad.overall.answer == Answer::No);
  CHECK(bad.pieces[0].answer == Answer::No);
}

TEST_CASE("nerve and multiplicity") {
  auto s = stars_cover(corpus::circle());
  auto n = multiplicity_and_nerve(s.cover);
  CHECK(n.multiplicity == 2);
  CHECK(n.nerve == simplex_complex(1));
  REQUIRE(n.index_map.has_value());

  auto c = corpus::torus();
  auto one = multiplicity_and_nerve(VertexCover::make(c, {all_vertices(c)}, true));
  CHECK(one.multiplicity == 1);
  CHECK(one.nerve == point_complex());

  for (const auto& x : corpus::complexes()) {
    auto st = stars_cover(x);
    CHECK(static_cast<int>(st.cover.size()) == x.dim() + 1);
    auto nr = multiplicity_and_nerve(st.cover);
    CHECK(nr.multiplicity == x.dim() + 1);
    CHECK(nr.nerve.dim() == nr.multiplicity - 1);
  }

  // non-partition cover: overlaps raise the multiplicity
  auto circ = corpus::circle();
  auto ov = multiplicity_and_nerve(VertexCover::make(circ, {{0, 1}, {1, 2}, {0, 2}}, false));
  CHECK(ov.multiplicity == 3);
  CHECK(!ov.index_map.has_value());
}

TEST_CASE("partition properties on random complexes") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = testing::random_complex(rng, 7, 3, 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<VertexSet> parts(static_cast<std::size_t>(k));
    for (int v = 0; v < x.vertex_count(); ++v) parts[rng() % parts.size()].push_back(v);
    std::erase_if(parts, [](const VertexSet& p) { return p.empty(); });
    auto cover = VertexCover::make(x, parts, true);
    auto nr = multiplicity_and_nerve(cover);
    CHECK(nr.multiplicity == nr.nerve.dim() + 1);
    REQUIRE(nr.index_map.has_value());
    for (const auto& s : x.simplices()) CHECK(nr.nerve.contains(nr.index_map->image(s)));
    // vertex fibres of the index map are the pieces
    for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
      VertexSet fib;
      for (int v = 0; v < x.vertex_count(); ++v)
        if ((*nr.index_map)(v) == static_cast<Vertex>(i)) fib.push_back(v);
      CHECK(fib == cover.pieces[i]);
    }
    // shrinking: dropping a vertex that is in another piece keeps a cover
    if (cover.pieces.size() >= 2 && cover.pieces[0].size() >= 1) {
      auto pieces = cover.pieces;
      pieces[1].push_back(pieces[0].front());
      auto grown = VertexCover::make(x, pieces, false);
      pieces = grown.pieces;
      pieces[0].erase(pieces[0].begin());
      if (!pieces[0].empty()) CHECK_NOTHROW(VertexCover::make(x, pieces, false));
    }
    // stars pieces are discrete
    auto st = stars_cover(x);
    for (const auto& p : st.cover.pieces) CHECK(full_subcomplex(st.cover.complex, p).complex.dim() <= 0);
  }
}

TEST_CASE("cat_upper strategies") {
  auto c = corpus::circle();
  auto g = cat_upper(c, kAmenable, "greedy");
  CHECK(g.bound == 1);
  CHECK(g.validation.overall.answer == Answer::Yes);

  auto e = cat_upper(c, kTrivial, "exact");
  CHECK(e.bound == 2);
  CHECK(e.minimal);
  CHECK(e.validation.overall.answer == Answer::Yes);

  auto t = cat_upper(corpus::torus(), kAmenable, "greedy");
  CHECK(t.bound <= 2);
  CHECK(t.validation.overall.answer == Answer::Yes);

  for (const auto& x : corpus::complexes()) {
    auto s = cat_upper(x, kTrivial, "stars");
    CHECK(s.bound == x.dim() + 1);
    CHECK(s.validation.overall.answer == Answer::Yes);
  }
  CHECK_THROWS_AS(cat_upper(corpus::torus(), kTrivial, "exact", {}, CatOptions{5, 1}), UnsupportedInput);
  CHECK_THROWS_AS(cat_upper(c, kTrivial, "random"), MalformedInput);
  auto two = SimplicialComplex::from_maximal({{0, 1}, {2, 3}});
  CHECK_THROWS_AS(cat_upper(two, kTrivial, "stars"), UnsupportedInput);
  CHECK_THROWS_AS(cat_lower(two, kTrivial), UnsupportedInput);
}

TEST_CASE("cat_lower") {
  CHECK(cat_lower(corpus::figure_eight(), kAmenable).bound == 2);
  CHECK(cat_lower(corpus::circle(), kAmenable).bound == 1);
  CHECK(cat_lower(corpus::circle(), kTrivial).bound == 2);
  CHECK(cat_lower(corpus::sphere(), kTrivial).bound == 1);
}

TEST_CASE("exact is never below lower, greedy never below exact") {
  std::vector<SimplicialComplex> xs = {corpus::circle(), corpus::figure_eight(), corpus::sphere(),
                                       corpus::solid_triangle(), corpus::hexagon()};
  for (const auto& x : xs)
    for (const auto& cls : {kTrivial, kAmenable, GroupClass::of(ClassKind::Abelian)}) {
      auto e = cat_upper(x, cls, "exact");
      CHECK(e.bound >= cat_lower(x, cls).bound);
      CHECK(cat_upper(x, cls, "greedy").bound >= (e.minimal ? e.bound : 1));
    }
}

TEST_CASE("collapsible pieces") {
  CHECK(is_collapsible(corpus::solid_tetrahedron()));
  CHECK(is_collapsible(point_complex()));
  CHECK_FALSE(is_collapsible(corpus::circle()));
  CHECK_FALSE(is_collapsible(corpus::sphere()));
  auto hex = corpus::hexagon();
  CHECK(collapsible_pieces(VertexCover::make(hex, {{0, 1, 2, 3, 4}, {5}}, true)));
  CHECK(collapsible_pieces(VertexCover::make(hex, {{0, 1, 3, 4}, {2, 5}}, true)));
  CHECK_FALSE(collapsible_pieces(VertexCover::make(hex, {{0, 1, 2, 3, 4, 5}}, true)));
}
