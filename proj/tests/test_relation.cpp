#include <catch_amalgamated.hpp>

#include <algorithm>

#include "support.hpp"

using namespace relcat;
using namespace relcat::testing;

TEST_CASE("constants and basic set operations") {
  auto d = Relation::delta(3);
  auto t = Relation::nabla(3);
  CHECK(d.count() == 3);
  CHECK(t.count() == 9);
  CHECK(leq(d, t));
  CHECK_FALSE(leq(t, d));
  CHECK(const_relation(ConstKind::delta, 5) == Relation::delta(5));
  CHECK(const_relation(ConstKind::nabla, 5) == Relation::nabla(5));
  CHECK(Relation::delta(0).count() == 0);
  CHECK(Relation::nabla(0) == Relation::delta(0));

  auto a = rel(3, {{0, 1}, {1, 2}});
  auto b = rel(3, {{1, 2}, {2, 0}});
  CHECK(unite(a, b) == rel(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(intersect(a, b) == rel(3, {{1, 2}}));
  CHECK(dual(a) == rel(3, {{1, 0}, {2, 1}}));
  CHECK(dual(dual(b)) == b);
}

TEST_CASE("rows past one machine word") {
  Relation r(130);
  r.insert(0, 129);
  r.insert(129, 64);
  r.insert(64, 0);
  CHECK(r.contains(0, 129));
  CHECK_FALSE(r.contains(129, 0));
  CHECK(r.count() == 3);
  CHECK(compose(r, r).contains(0, 64));
  CHECK(Relation::nabla(130).count() == 130 * 130);
  r.erase(0, 129);
  CHECK(r.count() == 2);
}

TEST_CASE("composition applies the right operand first") {
  auto r1 = refl(3, {{0, 1}});
  auto s1 = refl(3, {{1, 2}});
  CHECK(compose(s1, r1) == refl(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(compose(r1, s1) == refl(3, {{0, 1}, {1, 2}}));

  auto step = rel(3, {{0, 1}});
  auto next = rel(3, {{1, 2}});
  CHECK(compose(next, step) == rel(3, {{0, 2}}));
  CHECK(compose(step, next).empty());
}

TEST_CASE("composition agrees with the triple loop on every pair over 2 points "
          "and random pairs over 9") {
  std::vector<Relation> all;
  for_each_relation(2, [&](Relation const& r) { all.push_back(r); });
  for (auto const& s : all) {
    for (auto const& r : all) CHECK(compose(s, r) == naive_compose(s, r));
  }
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    auto r = random_relation(rng, RandomKind::relation, 9, 0.3);
    auto s = random_relation(rng, RandomKind::relation, 9, 0.3);
    REQUIRE(compose(s, r) == naive_compose(s, r));
  }
}

TEST_CASE("composition is associative and Δ is its unit") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    std::size_t const n = rng.between(1, 7);
    auto a = random_relation(rng, RandomKind::relation, n, 0.3);
    auto b = random_relation(rng, RandomKind::relation, n, 0.3);
    auto c = random_relation(rng, RandomKind::relation, n, 0.3);
    REQUIRE(compose(a, compose(b, c)) == compose(compose(a, b), c));
    REQUIRE(compose(a, Relation::delta(n)) == a);
    REQUIRE(compose(Relation::delta(n), a) == a);
    REQUIRE(dual(compose(a, b)) == compose(dual(b), dual(a)));
  }
}

TEST_CASE("power") {
  auto path = rel(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(power(path, 0) == Relation::delta(4));
  CHECK(power(path, 1) == path);
  CHECK(power(path, 3) == rel(4, {{0, 3}}));
  CHECK(power(path, 4).empty());
}

TEST_CASE("classification matches the definitions on every relation over 3 points") {
  for_each_relation(3, [](Relation const& r) {
    auto f = classify(r);
    REQUIRE(f.reflexive == naive_reflexive(r));
    REQUIRE(f.symmetric == naive_symmetric(r));
    REQUIRE(f.transitive == naive_transitive(r));
    REQUIRE(f.preorder == (f.reflexive && f.transitive));
    REQUIRE(f.equivalence == (f.preorder && f.symmetric));
  });
}

TEST_CASE("enumeration counts") {
  std::vector<std::size_t> const reflexive{1, 1, 4, 64, 4096};
  std::vector<std::size_t> const preorders{1, 1, 4, 29, 355, 6942};
  std::vector<std::size_t> const bell{1, 1, 2, 5, 15, 52};
  for (std::size_t n = 0; n < reflexive.size(); ++n) {
    CHECK(enumerate(RelationKind::reflexive, n).size() == reflexive[n]);
  }
  for (std::size_t n = 0; n < preorders.size(); ++n) {
    CHECK(enumerate(RelationKind::preorder, n).size() == preorders[n]);
    CHECK(enumerate(RelationKind::equivalence, n).size() == bell[n]);
  }
}

TEST_CASE("enumeration matches a filter over all relations") {
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<Relation> pre, eq, re;
    for_each_relation(n, [&](Relation const& r) {
      if (!naive_reflexive(r)) return;
      re.push_back(r);
      if (!naive_transitive(r)) return;
      pre.push_back(r);
      if (naive_symmetric(r)) eq.push_back(r);
    });
    for (auto* v : {&pre, &eq, &re}) std::sort(v->begin(), v->end(), row_major_less);
    CHECK(enumerate(RelationKind::preorder, n) == pre);
    CHECK(enumerate(RelationKind::equivalence, n) == eq);
    CHECK(enumerate(RelationKind::reflexive, n) == re);
  }
}

TEST_CASE("enumeration order is row-major lexicographic with no repeats") {
  for (auto kind : {RelationKind::reflexive, RelationKind::preorder, RelationKind::equivalence}) {
    auto v = enumerate(kind, 4);
    CHECK(std::is_sorted(v.begin(), v.end(), row_major_less));
    CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
    CHECK(v.front() == Relation::delta(4));
    CHECK(v.back() == Relation::nabla(4));
  }
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate(RelationKind::preorder, 6), CapacityError);
  CHECK(enumerate(RelationKind::equivalence, 6, 6).size() == 203);
}

TEST_CASE("mismatched carriers are rejected") {
  CHECK_THROWS_AS(compose(Relation(2), Relation(3)), InputError);
  CHECK_THROWS_AS(unite(Relation(2), Relation(3)), InputError);
  CHECK_THROWS_AS(leq(Relation(2), Relation(3)), InputError);
  CHECK_THROWS_AS(make_relation(2, {{0, 2}}), InputError);
}

TEST_CASE("carrier bound") {
  auto const saved = max_carrier();
  set_max_carrier(8);
  CHECK_THROWS_AS(Relation(9), CapacityError);
  CHECK_NOTHROW(Relation(8));
  set_max_carrier(saved);
}
