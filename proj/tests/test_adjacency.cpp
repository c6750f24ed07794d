#include <doctest.h>

#include <set>

#include "lftopo/adjacency.hpp"
#include "support.hpp"

using namespace lftopo;

namespace {

DigitalImage image2(int w, int h, std::initializer_list<GridPoint> fg) {
  DigitalImage img({w, h});
  for (const auto& p : fg) img.set(p, true);
  return img;
}

DigitalImage image3(int dx, int dy, int dz, std::initializer_list<GridPoint> fg) {
  DigitalImage img({dx, dy, dz});
  for (const auto& p : fg) img.set(p, true);
  return img;
}

}  // namespace

TEST_CASE("adjacency predicate") {
  CHECK(a_adjacent({0, 0}, {1, 1}, 2));
  CHECK_FALSE(a_adjacent({0, 0}, {1, 1}, 1));
  CHECK_FALSE(a_adjacent({0, 0}, {2, 0}, 2));  // not close
  CHECK_FALSE(a_adjacent({3, 3}, {3, 3}, 2));  // never self-adjacent
  CHECK_THROWS_AS(a_adjacent({0}, {0, 1}, 1), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric, irreflexive and monotone in the index") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 500; ++round) {
    GridPoint p{int(rng() % 4), int(rng() % 4), int(rng() % 4)};
    GridPoint q{int(rng() % 4), int(rng() % 4), int(rng() % 4)};
    for (int a = 1; a <= 3; ++a) {
      CHECK(a_adjacent(p, q, a) == a_adjacent(q, p, a));
      if (a < 3) {
        // a lower index never connects more
        CHECK((!a_adjacent(p, q, a) || a_adjacent(p, q, a + 1)));
      }
    }
    CHECK_FALSE(a_adjacent(p, p, 3));
  }
}

TEST_CASE("point components") {
  DigitalImage img = image2(2, 2, {{0, 0}, {1, 1}});
  CHECK(a_components(img, 1).size() == 2);
  CHECK(a_components(img, 2).size() == 1);
  DigitalImage empty({3, 3});
  CHECK(a_components(empty, 1).empty());
  // the complement of the hollow cubes splits in three under index two
  DigitalImage hc = hollow_cubes(3);
  CHECK(a_components(hc, 2, false).size() == 3);
}

TEST_CASE("predicted consistency follows the closed form") {
  auto v = predicted_consistency(3, 3, 2);
  CHECK(v.consistent);
  CHECK_FALSE(v.face_convex_consistent);
  CHECK_FALSE(predicted_consistency(3, 1, 2).consistent);
  auto fc = predicted_consistency(2, 2, 1);
  CHECK(fc.consistent);
  CHECK(fc.face_convex_consistent);
  CHECK_THROWS_AS(predicted_consistency(2, 3, 1), std::out_of_range);
}

TEST_CASE("analog construction on the diagonal checkerboard") {
  DigitalImage img = image2(2, 2, {{0, 0}, {1, 1}});

  auto good = build_analog(img, 2, 1);
  REQUIRE(good.satisfiable());
  // the shared corner cell must join the foreground
  CHECK(good.analog->in_foreground(Cell{{1, 1}}));

  auto bad = build_analog(img, 2, 2);
  CHECK_FALSE(bad.satisfiable());
  REQUIRE(bad.conflict.has_value());
  CHECK(bad.conflict->cell == Cell{{1, 1}});
  CHECK(bad.conflict->first.foreground != bad.conflict->second.foreground);

  DigitalImage empty({2, 2});
  auto trivial = build_analog(empty, 2, 2);
  REQUIRE(trivial.satisfiable());
  for (std::size_t i = 0; i < trivial.analog->complex().cell_count(); ++i)
    CHECK_FALSE(trivial.analog->in_foreground_at(i));
}

TEST_CASE("successful analogs verify") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 60; ++round) {
    DigitalImage img({3, 2, 2});
    for (std::size_t i = 0; i < img.point_count(); ++i)
      if (rng() & 1) img.set_at(i, true);
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        auto r = build_analog(img, a, b);
        if (r.satisfiable()) {
          CHECK(verify_analog(img, a, b, r.analog.value()));
          CHECK(verify_analog(img, a, b, r.analog.value(), true));
        }
      }
    }
  }
}

TEST_CASE("face-convex analogs verify too") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 40; ++round) {
    DigitalImage img({2, 2, 3});
    for (std::size_t i = 0; i < img.point_count(); ++i)
      if (rng() & 1) img.set_at(i, true);
    auto r = build_analog(img, 3, 1, true);
    REQUIRE(r.satisfiable());
    CHECK(verify_analog(img, 3, 1, r.analog.value()));
  }
}

TEST_CASE("verify_analog rejects a broken assignment") {
  DigitalImage img = image2(2, 2, {{0, 0}, {1, 1}});
  auto r = build_analog(img, 2, 1);
  REQUIRE(r.satisfiable());
  TopologicalImage broken = r.analog.value();
  broken.assign(Cell{{1, 1}}, false);  // disconnect the diagonal pair
  CHECK_FALSE(verify_analog(img, 2, 1, broken));
  DigitalImage other = image2(2, 2, {{0, 1}});
  CHECK_THROWS_AS(verify_analog(other, 2, 1, broken), std::invalid_argument);
}

TEST_CASE("a randomized box matches the picture of consistent pairs") {
  // (26,18) in index form on a 3x4x3 box: always satisfiable, closures match
  std::mt19937_64 rng(53);
  for (int round = 0; round < 10; ++round) {
    DigitalImage img({3, 4, 3});
    for (std::size_t i = 0; i < img.point_count(); ++i)
      if (rng() & 1) img.set_at(i, true);
    auto r = build_analog(img, 3, 2);
    REQUIRE(r.satisfiable());
    CHECK(verify_analog(img, 3, 2, r.analog.value()));
  }
  DigitalImage single = image3(3, 3, 3, {{1, 1, 1}});
  auto r = build_analog(single, 3, 2);
  REQUIRE(r.satisfiable());
  CHECK(verify_analog(single, 3, 2, r.analog.value()));
}

TEST_CASE("hollow cubes") {
  CHECK_THROWS_AS(hollow_cubes(2), std::invalid_argument);
  DigitalImage hc = hollow_cubes(3);
  CHECK(hc.dims() == std::vector<int>{6, 6, 6});
  CHECK(hc.foreground_count() == 44);
  CHECK(a_components(hc, 1).size() == 1);
  CHECK(a_components(hc, 2, false).size() == 3);
  DigitalImage hc4 = hollow_cubes(4);
  CHECK(a_components(hc4, 1).size() == 1);
  CHECK(a_components(hc4, 2, false).size() == 3);
}

TEST_CASE("simple surface test") {
  CHECK(is_simple_surface(hollow_cubes(3), 1, 2));
  CHECK(is_simple_surface(hollow_cubes(4), 1, 2));
  DigitalImage voxel = image3(3, 3, 3, {{1, 1, 1}});
  CHECK_FALSE(is_simple_surface(voxel, 1, 2));
  DigitalImage block({4, 4, 4});
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y)
      for (int z = 1; z <= 2; ++z) block.set({x, y, z}, true);
  CHECK_FALSE(is_simple_surface(block, 1, 2));
}

TEST_CASE("mask enumeration agrees with the closed form") {
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      auto got = exhaustive_pair_check(2, {3, 3}, a, b);
      CHECK(got.consistent == predicted_consistency(2, a, b).consistent);
      if (!got.consistent) CHECK(got.witness.has_value());
    }
}

TEST_CASE("known witnesses are unsatisfiable") {
  // the three-dimensional minimal/medium pair fails on the antipodal corners
  DigitalImage anti = image3(2, 2, 2, {{0, 0, 0}, {1, 1, 1}});
  CHECK_FALSE(build_analog(anti, 1, 2).satisfiable());
  auto verdict = exhaustive_pair_check(3, {2, 2, 2}, 1, 2);
  CHECK_FALSE(verdict.consistent);
  REQUIRE(verdict.witness.has_value());
  CHECK_FALSE(build_analog(verdict.witness.value(), 1, 2).satisfiable());
}

TEST_CASE("enumeration bound and sampling") {
  CHECK_THROWS_AS(exhaustive_pair_check(2, {4, 3}, 1, 2), std::length_error);
  PairCheckOptions sample;
  sample.sample_count = 32;
  sample.seed = 9;
  auto v = exhaustive_pair_check(2, {4, 3}, 1, 2, sample);
  CHECK(v.consistent);  // the maximal pair never fails
  PairCheckOptions forced;
  forced.exhaustive = true;
  auto w = exhaustive_pair_check(2, {2, 2}, 2, 2, forced);
  CHECK_FALSE(w.consistent);
  REQUIRE(w.witness.has_value());
  // a one-diagonal mask is among the unsatisfiable ones
  CHECK(w.witness->foreground_count() == 2);
}

TEST_CASE("closure special case of the maximal/minimal pair") {
  // with indices (n,1) on a 2x2 box the closure of the built foreground
  // equals the closure of the principal cells, for every non-empty mask
  for (std::uint32_t bits = 1; bits < 16; ++bits) {
    DigitalImage img({2, 2});
    for (std::size_t i = 0; i < 4; ++i)
      if (bits >> i & 1u) img.set_at(i, true);
    auto r = build_analog(img, 2, 1, true);
    REQUIRE(r.satisfiable());
    const auto& topo = r.analog.value();
    LFSpace space = topo.complex().to_lf_space();
    SubsetMask built(space.element_count());
    for (std::size_t i = 0; i < space.element_count(); ++i)
      if (topo.in_foreground_at(i)) built.set(static_cast<ElementId>(i));
    SubsetMask principals(space.element_count());
    for (std::size_t i = 0; i < space.element_count(); ++i) {
      Cell c = topo.complex().cell_at(i);
      if (topo.complex().is_principal(c) && topo.in_foreground_at(i))
        principals.set(static_cast<ElementId>(i));
    }
    SubsetMask full(space.element_count(), true);
    CHECK(closure(space, built, full) == closure(space, principals, full));
  }
}
