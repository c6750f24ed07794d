#include <doctest.h>

#include <set>

#include "lftopo/cartesian.hpp"
#include "support.hpp"

using namespace lftopo;

namespace {

std::set<Cell> as_set(const std::vector<Cell>& v) { return {v.begin(), v.end()}; }

Cell c2(int x, int y) { return Cell{{x, y}}; }
Cell c3(int x, int y, int z) { return Cell{{x, y, z}}; }

}  // namespace

TEST_CASE("construction and addressing") {
  CHECK_THROWS_AS(CartesianComplex({0}), std::invalid_argument);
  CartesianComplex cx({3, 2});
  CHECK(cx.order() == 2);
  CHECK(cx.cell_extents() == std::vector<int>{5, 3});
  CHECK(cx.cell_count() == 15);
  for (std::size_t i = 0; i < cx.cell_count(); ++i) CHECK(cx.index_of(cx.cell_at(i)) == i);
  CHECK_FALSE(cx.in_range(c2(5, 0)));
  CHECK_THROWS_AS(cx.index_of(c2(-1, 0)), std::out_of_range);
}

TEST_CASE("cell dimension counts open components") {
  CartesianComplex cx2({2, 2});
  CHECK(cx2.cell_dim(c2(2, 2)) == 2);
  CHECK(cx2.cell_dim(c2(1, 2)) == 1);
  CartesianComplex cx3({3, 3, 3});
  CHECK(cx3.cell_dim(c3(1, 3, 1)) == 0);
  CHECK(cx3.is_principal(c3(0, 2, 4)));
  CartesianComplex cx4({4, 4, 4});
  CHECK(cx4.cell_dim(c3(1, 3, 5)) == 0);
}

TEST_CASE("face relation") {
  CartesianComplex cx({2, 2});
  CHECK(cx.is_face(c2(1, 1), c2(2, 2)));
  CHECK(cx.is_face(c2(1, 2), c2(1, 2)));  // non-proper face
  CHECK_FALSE(cx.is_face(c2(2, 2), c2(1, 1)));
  CartesianComplex line({3});
  CHECK_FALSE(line.is_face(Cell{{0}}, Cell{{2}}));
  // reflexive, antisymmetric, transitive over the whole small complex
  for (std::size_t i = 0; i < cx.cell_count(); ++i) {
    Cell a = cx.cell_at(i);
    CHECK(cx.is_face(a, a));
    for (std::size_t j = 0; j < cx.cell_count(); ++j) {
      Cell b = cx.cell_at(j);
      if (i != j && cx.is_face(a, b)) CHECK_FALSE(cx.is_face(b, a));
      for (std::size_t k = 0; k < cx.cell_count(); ++k) {
        Cell c = cx.cell_at(k);
        if (cx.is_face(a, b) && cx.is_face(b, c)) CHECK(cx.is_face(a, c));
      }
    }
  }
}

TEST_CASE("open star") {
  CartesianComplex cx({2, 2});
  auto star = cx.open_star(c2(1, 1));
  CHECK(star.size() == 9);
  std::set<Cell> expect;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) expect.insert(c2(x, y));
  CHECK(as_set(star) == expect);
  CHECK(cx.open_star(c2(2, 2)) == std::vector<Cell>{c2(2, 2)});
  CHECK(as_set(cx.open_star(c2(1, 2))) == std::set<Cell>{c2(0, 2), c2(1, 2), c2(2, 2)});
}

TEST_CASE("incident principal counts") {
  CartesianComplex cx3({3, 3, 3});
  // an interior edge of a 3D complex lies on four voxels
  CHECK(cx3.incident_principals(c3(2, 3, 3)).size() == 4);
  CHECK(cx3.incident_principals(c3(2, 2, 2)) == std::vector<Cell>{c3(2, 2, 2)});
  CartesianComplex cx2({2, 2});
  CHECK(as_set(cx2.incident_principals(c2(1, 1))) ==
        std::set<Cell>{c2(0, 0), c2(0, 2), c2(2, 0), c2(2, 2)});
  // interior count doubles with each closed coordinate
  for (std::size_t i = 0; i < cx3.cell_count(); ++i) {
    Cell c = cx3.cell_at(i);
    bool interior = true;
    for (std::size_t k = 0; k < 3; ++k)
      if (c.comb[k] == 0 || c.comb[k] == cx3.cell_extents()[k] - 1) interior = false;
    if (interior)
      CHECK(cx3.incident_principals(c).size() == (1u << (3 - cx3.cell_dim(c))));
  }
}

TEST_CASE("intermediate cells") {
  CartesianComplex cx({2, 2});
  auto mid = cx.intermediate(c2(0, 0), c2(2, 2));
  CHECK(mid.cell == c2(1, 1));
  CHECK(cx.cell_dim(mid.cell) == 0);
  CHECK(mid.complex_cells == std::vector<Cell>{c2(1, 1)});

  auto edge = cx.intermediate(c2(0, 0), c2(2, 0));
  CHECK(edge.cell == c2(1, 0));
  CHECK(cx.cell_dim(edge.cell) == 1);
  CHECK(as_set(edge.complex_cells) == std::set<Cell>{c2(1, 0), c2(1, 1)});  // clipped

  CartesianComplex cx3({3, 3, 3});
  auto ic3 = cx3.intermediate(c3(2, 2, 2), c3(4, 4, 2));
  CHECK(ic3.complex_cells.size() == 3);  // an edge plus its two endpoints

  CHECK_THROWS_AS(cx.intermediate(c2(1, 1), c2(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(cx3.intermediate(c3(0, 0, 0), c3(4, 0, 0)), std::invalid_argument);
}

TEST_CASE("intermediate complex properties") {
  CartesianComplex cx3({3, 3, 3});
  LFSpace space = cx3.to_lf_space();
  std::vector<Cell> principals;
  for (std::size_t i = 0; i < cx3.cell_count(); ++i)
    if (cx3.is_principal(cx3.cell_at(i))) principals.push_back(cx3.cell_at(i));
  for (const Cell& v : principals) {
    for (const Cell& w : principals) {
      if (w == v) continue;
      bool close = true;
      int d2 = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        int d = (v.comb[k] - w.comb[k]) / 2;
        if (std::abs(v.comb[k] - w.comb[k]) > 2) close = false;
        d2 += d * d;
      }
      if (!close) {
        // closures of far principal cells share nothing
        auto ca = as_set(cx3.closure_of(v));
        for (const Cell& c : cx3.closure_of(w)) CHECK(ca.count(c) == 0);
        continue;
      }
      auto ic = cx3.intermediate(v, w);
      CHECK(cx3.cell_dim(ic.cell) == 3 - d2);
      for (const Cell& c : ic.complex_cells) {
        auto vi = static_cast<ElementId>(cx3.index_of(v));
        auto wi = static_cast<ElementId>(cx3.index_of(w));
        auto ci = static_cast<ElementId>(cx3.index_of(c));
        CHECK(incident(space, ci, vi));
        CHECK(incident(space, ci, wi));
      }
    }
  }
}

TEST_CASE("derived space") {
  // one axis of three pixels gives the five-cell interval
  CartesianComplex line({3});
  LFSpace k = line.to_lf_space();
  REQUIRE(k.element_count() == 5);
  LFSpace expect = testsupport::k5();
  for (ElementId e = 0; e < 5; ++e) CHECK(k.sn(e) == expect.sn(e));

  CartesianComplex cx({2, 2});
  LFSpace s = cx.to_lf_space();
  CHECK(s.element_count() == 9);
  CHECK(verify_axioms(s, true).all_passed());

  CartesianComplex dot({1});
  CHECK(dot.to_lf_space().element_count() == 1);

  CHECK_THROWS_AS(CartesianComplex({200, 200, 200}).to_lf_space(1000), std::length_error);
}

TEST_CASE("derived dimension equals the open-component count") {
  CartesianComplex cx3({3, 3, 3});
  LFSpace space = cx3.to_lf_space();
  std::vector<int> dims = dimensions(space);
  for (std::size_t i = 0; i < cx3.cell_count(); ++i)
    CHECK(dims[i] == cx3.cell_dim(cx3.cell_at(i)));
}

TEST_CASE("coordinates") {
  CartesianComplex cx({2, 2});
  auto c = cx.coords(c2(1, 2));
  CHECK(c.comb == std::vector<int>{1, 2});
  CHECK(c.semi == std::vector<double>{0.5, 1.0});
  CHECK(cx.coords(c2(2, 2)).semi == std::vector<double>{1.0, 1.0});
  // semi (1.5, 0) names the combinatorial cell (3, 0)
  CartesianComplex wide({3, 3});
  CHECK(wide.coords(c2(3, 0)).semi == std::vector<double>{1.5, 0.0});
}
