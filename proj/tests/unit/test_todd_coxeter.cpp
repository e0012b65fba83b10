#include <algorithm>
#include <random>

#include "doctest.h"
#include "gcat/pi1.hpp"
#include "oracles/ball_quotient.hpp"

using gcat::CosetIndex;
using gcat::CosetsExceeded;
using gcat::GroupPresentation;
using gcat::Word;

namespace {

std::int64_t index_of(const gcat::CosetResult& r) {
  REQUIRE(std::holds_alternative<CosetIndex>(r));
  return std::get<CosetIndex>(r).index;
}

std::size_t oracle_order(int gens, const std::vector<Word>& rels, int radius) {
  auto t = oracle::ball_quotient(gens, rels, radius);
  REQUIRE(t.has_value());
  CHECK(oracle::check_group_axioms(*t));
  return t->order;
}

}  // namespace

TEST_CASE("oracle orders") {
  CHECK(oracle_order(1, {{1, 1, 1, 1, 1}}, 4) == 5);
  CHECK(oracle_order(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}, 4) == 6);
  CHECK(oracle_order(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}, 5) == 8);
  CHECK(oracle_order(2, {{1}, {2}}, 1) == 1);
  // S4 = <a,b | a^2, b^3, (ab)^4>
  CHECK(oracle_order(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}}, 7) == 24);
  // free group: the ball never closes up
  CHECK(!oracle::ball_quotient(2, {}, 4).has_value());
}

TEST_CASE("coset enumeration against oracle") {
  struct Case {
    int gens;
    std::vector<Word> rels;
    int radius;
  };
  std::vector<Case> cases = {
      {1, {{1, 1, 1, 1, 1}}, 4},
      {2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}, 4},
      {2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}, 5},
      {2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}}, 7},
      {2, {{1, 1, 1}, {2, 2}, {1, 2, -1, -2}}, 5},
      {1, {{1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}}, 6},
  };
  for (const auto& c : cases) {
    auto p = GroupPresentation::make(c.gens, c.rels);
    CHECK(static_cast<std::size_t>(index_of(gcat::todd_coxeter(p, {}))) ==
          oracle_order(c.gens, c.rels, c.radius));
  }
}

TEST_CASE("frozen coset indices") {
  CHECK(index_of(gcat::todd_coxeter(GroupPresentation::make(1, {{1, 1, 1, 1, 1}}), {})) == 5);
  CHECK(index_of(gcat::todd_coxeter(
            GroupPresentation::make(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}), {})) == 6);
  CHECK(index_of(gcat::todd_coxeter(
            GroupPresentation::make(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}), {})) == 8);
  auto free2 = gcat::todd_coxeter(GroupPresentation::make(2, {}), {}, 1000);
  REQUIRE(std::holds_alternative<CosetsExceeded>(free2));
  CHECK(std::get<CosetsExceeded>(free2).limit == 1000);
}

TEST_CASE("subgroup index") {
  // S3 over <a>: index 3
  auto s3 = GroupPresentation::make(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  CHECK(index_of(gcat::todd_coxeter(s3, {{1}})) == 3);
  CHECK(index_of(gcat::todd_coxeter(s3, {{1}, {2}})) == 1);
  // Z over <a^4>
  CHECK(index_of(gcat::todd_coxeter(GroupPresentation::make(1, {}), {{1, 1, 1, 1}})) == 4);
  // trivial group with no generators
  CHECK(index_of(gcat::todd_coxeter(GroupPresentation::make(0, {}), {})) == 1);
}

TEST_CASE("index stable under relator permutation and inversion") {
  std::mt19937 rng(7);
  std::vector<Word> rels = {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}};
  for (int trial = 0; trial < 20; ++trial) {
    auto r = rels;
    std::shuffle(r.begin(), r.end(), rng);
    for (auto& w : r)
      if (rng() % 2) w = gcat::inverse(w);
    CHECK(index_of(gcat::todd_coxeter(GroupPresentation::make(2, r), {})) == 8);
  }
}
