#include <random>

#include "doctest.h"
#include "gcat/corpus.hpp"
#include "gcat/error.hpp"
#include "gcat/group_classes.hpp"

using namespace gcat;

namespace {

const std::vector<GroupClass>& all_classes() {
  static const std::vector<GroupClass> cs = {
      GroupClass::of(ClassKind::Trivial),   GroupClass::of(ClassKind::Finite),
      GroupClass::of(ClassKind::Abelian),   GroupClass::of(ClassKind::Amenable),
      GroupClass::of(ClassKind::Poly),      GroupClass::of(ClassKind::Subexp),
      GroupClass::subexp_below(Rational(1, 2)), GroupClass::subexp_below(Rational(2)),
      GroupClass::exp_below(Rational(1, 2)),    GroupClass::exp_below(Rational(2)),
      GroupClass::exp_below(Rational(549, 500)), GroupClass::exp_below(Rational(11, 10))};
  return cs;
}

Answer ans(const GroupPresentation& p, const std::string& c) {
  return classify_group(p, GroupClass::parse(c)).answer;
}

}  // namespace

TEST_CASE("class descriptors round trip") {
  for (const auto& c : all_classes()) CHECK(GroupClass::parse(c.descriptor()) == c);
  CHECK(GroupClass::parse("subexp<1/2").rate == Rational(1, 2));
  CHECK(GroupClass::parse("exp<6/4").descriptor() == "exp<3/2");
  CHECK_THROWS_AS(GroupClass::parse("subexp<0"), MalformedInput);
  CHECK_THROWS_AS(GroupClass::parse("subexp<-1/2"), MalformedInput);
  CHECK_THROWS_AS(GroupClass::parse("nilpotent"), MalformedInput);
  CHECK_THROWS_AS(GroupClass::parse("exp<1/0"), MalformedInput);
  CHECK_THROWS_AS(GroupClass::parse("exp<1/2x"), MalformedInput);
}

TEST_CASE("implication lattice") {
  auto k = [](ClassKind x) { return GroupClass::of(x); };
  CHECK(implies(k(ClassKind::Trivial), k(ClassKind::Finite)));
  CHECK(implies(k(ClassKind::Finite), k(ClassKind::Poly)));
  CHECK(!implies(k(ClassKind::Finite), k(ClassKind::Abelian)));
  CHECK(implies(k(ClassKind::Abelian), k(ClassKind::Poly)));
  CHECK(implies(k(ClassKind::Poly), GroupClass::subexp_below(Rational(1, 100))));
  CHECK(implies(GroupClass::subexp_below(Rational(1, 2)), k(ClassKind::Subexp)));
  CHECK(implies(k(ClassKind::Subexp), k(ClassKind::Amenable)));
  CHECK(implies(GroupClass::subexp_below(Rational(1, 2)), GroupClass::exp_below(Rational(1, 2))));
  CHECK(!implies(GroupClass::subexp_below(Rational(1, 2)), GroupClass::exp_below(Rational(1, 3))));
  CHECK(!implies(k(ClassKind::Amenable), k(ClassKind::Subexp)));
  CHECK(!implies(GroupClass::exp_below(Rational(1)), k(ClassKind::Amenable)));
  // reflexive and transitive
  for (const auto& a : all_classes()) {
    CHECK(implies(a, a));
    for (const auto& b : all_classes())
      for (const auto& c : all_classes())
        if (implies(a, b) && implies(b, c)) CHECK(implies(a, c));
  }
}

TEST_CASE("finite cover rate") {
  LogRate q{Rational(7, 3), Rounding::UpperBound};
  CHECK(finite_cover_rate(q, 1) == q);
  CHECK(finite_cover_rate(q, 2).value == Rational(7, 9));
  CHECK(finite_cover_rate(LogRate{Rational(6, 5)}, 3).value == Rational(6, 25));
  CHECK(finite_cover_rate(q, 2).rounding == Rounding::UpperBound);
  CHECK_THROWS_AS(finite_cover_rate(q, 0), MalformedInput);
  CHECK(log3_lower_bound().value == Rational(549, 500));
}

TEST_CASE("classify_group examples") {
  auto s3 = GroupPresentation::make(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  CHECK(ans(s3, "amenable") == Answer::Yes);
  CHECK(ans(s3, "finite") == Answer::Yes);
  CHECK(ans(s3, "abelian") == Answer::No);
  CHECK(ans(s3, "trivial") == Answer::No);
  CHECK(ans(s3, "exp<1/100") == Answer::Yes);

  auto f2 = GroupPresentation::make(2, {});
  CHECK(ans(f2, "amenable") == Answer::No);
  CHECK(ans(f2, "poly") == Answer::No);
  CHECK(ans(f2, "subexp<1/2") == Answer::No);
  CHECK(ans(f2, "exp<549/500") == Answer::No);
  CHECK(ans(f2, "exp<1") == Answer::No);
  CHECK(ans(f2, "exp<11/10") == Answer::Unknown);  // 1.1 > 549/500, not certified

  auto odd = GroupPresentation::make(2, {{1, 2, 1, -2, 1, 1, 2}});
  CHECK(ans(odd, "poly") == Answer::Unknown);

  auto z = GroupPresentation::make(1, {});
  CHECK(ans(z, "abelian") == Answer::Yes);
  CHECK(ans(z, "finite") == Answer::No);
  CHECK(ans(z, "trivial") == Answer::No);

  auto z2 = GroupPresentation::make(2, {{1, 2, -1, -2}});
  CHECK(ans(z2, "abelian") == Answer::Yes);
  CHECK(ans(z2, "finite") == Answer::No);

  auto g2 = GroupPresentation::make(4, {{1, 2, -1, -2, 3, 4, -3, -4}});
  CHECK(surface_genus(g2) == 2);
  CHECK(ans(g2, "amenable") == Answer::No);
  CHECK(ans(g2, "subexp<1/2") == Answer::No);
  CHECK(ans(g2, "exp<1/2") == Answer::Unknown);
  // renamed and rotated
  CHECK(surface_genus(GroupPresentation::make(4, {{-3, 2, 3, -2, 4, 1, -4, -1}})) == 2);
  // torus relator is genus 1
  CHECK(surface_genus(z2) == 1);
  // aba^-1b^-1 ... with two vertex classes is rejected
  CHECK(surface_genus(GroupPresentation::make(2, {{1, -1, 2, -2}})) == 0);

  CHECK(ans(GroupPresentation{}, "trivial") == Answer::Yes);
  CHECK(ans(GroupPresentation::make(3, {{1}, {2}, {3, 1, 1}}), "trivial") == Answer::Yes);
  auto budget_tiny = Budget{10, 0};
  CHECK(classify_group(GroupPresentation::make(2, {{1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2, 2, 2}, {1, 2, -1, -2}}),
                       GroupClass::of(ClassKind::Finite), budget_tiny).answer == Answer::Unknown);
}

TEST_CASE("classify_group: lattice soundness and consistency on random presentations") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 250; ++trial) {
    const int gens = static_cast<int>(rng() % 4);
    std::vector<Word> rels;
    const int nrel = gens ? static_cast<int>(rng() % 4) : 0;
    for (int i = 0; i < nrel; ++i) {
      Word w;
      const int len = 1 + static_cast<int>(rng() % 7);
      for (int j = 0; j < len; ++j) {
        int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(gens));
        w.push_back(rng() % 2 ? g : -g);
      }
      rels.push_back(w);
    }
    auto p = GroupPresentation::make(gens, rels);
    Budget b{2000, 50};
    GroupEvidence e;
    REQUIRE_NOTHROW(e = group_evidence(p, b));
    for (const auto& c : all_classes()) {
      auto v = decide(e, c);
      auto closure = c;
      closure.fg_closure_applied = true;
      CHECK(decide(e, closure).answer == v.answer);
      CHECK(!v.trace.empty());
      for (const auto& c2 : all_classes()) {
        auto v2 = decide(e, c2);
        if (v.answer == Answer::Yes && implies(c, c2)) CHECK(v2.answer == Answer::Yes);
        if (v2.answer == Answer::No && implies(c, c2)) CHECK(v.answer == Answer::No);
      }
    }
    // presentation order does not matter
    auto q = p;
    std::reverse(q.relators.begin(), q.relators.end());
    for (const auto& c : all_classes())
      CHECK(int(classify_group(q, c, b).answer) == int(decide(e, c).answer));
  }
}

TEST_CASE("stallings rank") {
  CHECK(free_subgroup_rank({}) == 0);
  CHECK(free_subgroup_rank({{1, -1}}) == 0);
  CHECK(free_subgroup_rank({{1}}) == 1);
  CHECK(free_subgroup_rank({{1}, {1, 1}}) == 1);
  CHECK(free_subgroup_rank({{1}, {2}}) == 2);
  CHECK(free_subgroup_rank({{1, 2, -1}, {2}}) == 2);
  CHECK(free_subgroup_rank({{1, 2}, {2, 1}}) == 2);
  CHECK(free_subgroup_rank({{1, 1}, {1, 2, -1}, {2}}) == 3);
  CHECK(free_subgroup_rank({{1, 2, 1, -2}, {1}, {2}}) == 2);
}

TEST_CASE("classify_image") {
  auto h = barycentric_subdivision(corpus::circle());
  auto amb = edge_path_presentation(h.subdivided, 0);
  VertexSet edges;
  for (std::size_t i = 0; i < h.carrier.size(); ++i)
    if (h.carrier[i].size() == 2) edges.push_back(static_cast<Vertex>(i));
  auto im = inclusion_image(h.subdivided, edges, amb);
  for (const auto& c : all_classes()) CHECK(classify_image(im, c).answer == Answer::Yes);

  auto t = corpus::torus();
  auto tp = edge_path_presentation(t, 0);
  VertexSet all;
  for (int v = 0; v < t.vertex_count(); ++v) all.push_back(v);
  auto v = classify_image(inclusion_image(t, all, tp), GroupClass::of(ClassKind::Amenable));
  CHECK(v.answer == Answer::Yes);

  // one circle of the figure eight maps onto a rank-1 subgroup of F2
  auto f8 = corpus::figure_eight();
  auto fp = edge_path_presentation(f8, 0);
  auto loop = inclusion_image(f8, {0, 1, 2}, fp);
  CHECK(classify_image(loop, GroupClass::of(ClassKind::Abelian)).answer == Answer::Yes);
  CHECK(classify_image(loop, GroupClass::of(ClassKind::Finite)).answer == Answer::No);
  auto whole = inclusion_image(f8, {0, 1, 2, 3, 4}, fp);
  CHECK(classify_image(whole, GroupClass::of(ClassKind::Amenable)).answer == Answer::No);

  // an annulus-like piece of the genus-2 surface: image rank 1 in homology, Unknown for amenable
  auto g = corpus::genus2();
  auto gp = edge_path_presentation(g, 0);
  VertexSet g_all;
  for (int x = 0; x < g.vertex_count(); ++x) g_all.push_back(x);
  CHECK(classify_image(inclusion_image(g, g_all, gp), GroupClass::of(ClassKind::Amenable)).answer ==
        Answer::No);
}
