#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// Oracles implement the definitions by direct quantifier scans and stay
// independent of the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "lftopo/cartesian.hpp"
#include "lftopo/labeling.hpp"
#include "lftopo/lf_space.hpp"

namespace testsupport {

using lftopo::ElementId;
using lftopo::LFSpace;
using lftopo::SubsetMask;

inline LFSpace make_space(std::vector<std::vector<ElementId>> sn) {
  return LFSpace(std::move(sn));
}

// Khalimsky interval with five cells: even indices open, SN(odd) covers the
// two neighbors.
inline LFSpace k5() {
  return make_space({{0}, {0, 1, 2}, {2}, {2, 3, 4}, {4}});
}

// Chain p < e < f < v, the minimal poset with a three-step bounding path.
inline LFSpace chain4() {
  return LFSpace({{0, 1, 2, 3}, {1, 2, 3}, {2, 3}, {3}},
                 {"p", "e", "f", "v"});
}

// Two mutually neighboring elements; the canonical antisymmetry violation.
inline LFSpace symmetric_pair() { return make_space({{0, 1}, {0, 1}}); }

// SN(a)={a,b}, SN(b)={b,c}, SN(c)={c}; breaks transitivity.
inline LFSpace chain_nontransitive() { return make_space({{0, 1}, {1, 2}, {2}}); }

// Points of a w x h patch with parity topology: a point with even
// coordinate sum sees itself and its axis neighbors, odd points see only
// themselves. Element id = y*w + x.
inline LFSpace odd_even_space(int w, int h) {
  std::vector<std::vector<ElementId>> sn(static_cast<std::size_t>(w) * h);
  auto id = [&](int x, int y) { return static_cast<ElementId>(y * w + x); };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      auto& nb = sn[id(x, y)];
      nb.push_back(id(x, y));
      if ((x + y) % 2 == 0) {
        if (x > 0) nb.push_back(id(x - 1, y));
        if (x + 1 < w) nb.push_back(id(x + 1, y));
        if (y > 0) nb.push_back(id(x, y - 1));
        if (y + 1 < h) nb.push_back(id(x, y + 1));
      }
    }
  }
  return LFSpace(std::move(sn));
}

// Random reflexive SN system on n elements.
inline LFSpace random_space(int n, std::mt19937_64& rng) {
  std::vector<std::vector<ElementId>> sn(n);
  for (int e = 0; e < n; ++e) {
    sn[e].push_back(static_cast<ElementId>(e));
    for (int m = 0; m < n; ++m)
      if (m != e && (rng() & 1)) sn[e].push_back(static_cast<ElementId>(m));
  }
  return LFSpace(std::move(sn));
}

// Random axiom-passing space: the reachability closure of a random acyclic
// edge set, with at least one edge.
inline LFSpace random_poset_space(int n, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::vector<char>> edge(n, std::vector<char>(n, 0));
    bool any = false;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) {
          edge[a][b] = 1;
          any = true;
        }
    if (!any) continue;
    // reachability closure keeps the relation transitive
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        if (edge[a][k])
          for (int b = 0; b < n; ++b)
            if (edge[k][b]) edge[a][b] = 1;
    std::vector<std::vector<ElementId>> sn(n);
    for (int a = 0; a < n; ++a) {
      sn[a].push_back(static_cast<ElementId>(a));
      for (int b = 0; b < n; ++b)
        if (edge[a][b]) sn[a].push_back(static_cast<ElementId>(b));
    }
    return LFSpace(std::move(sn));
  }
}

// Canonical two-V image: two black strokes crossing over the upper white
// half, and a white V carved into the black lower half. 0 = black,
// 255 = white. Matches tests/data/two_v.pgm byte for byte.
inline lftopo::GrayImage2D two_v_image() {
  lftopo::GrayImage2D img(8, 8, 255);
  const int black[][2] = {{1, 1}, {2, 2}, {3, 3}, {4, 1}, {3, 2}, {2, 3}};  // (x, y)
  for (auto [x, y] : black) img.set_label(x, y, 0);
  for (int y = 4; y < 8; ++y)
    for (int x = 0; x < 8; ++x) img.set_label(x, y, 0);
  const int white[][2] = {{3, 4}, {2, 5}, {1, 6}, {4, 5}, {5, 6}};  // carved V
  for (auto [x, y] : white) img.set_label(x, y, 255);
  return img;
}

inline std::vector<SubsetMask> all_masks(std::size_t n) {
  std::vector<SubsetMask> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    SubsetMask m(n);
    for (std::size_t e = 0; e < n; ++e)
      if (bits >> e & 1u) m.set(static_cast<ElementId>(e));
    out.push_back(m);
  }
  return out;
}

// ---- oracles ----

inline bool oracle_incident(const LFSpace& s, ElementId a, ElementId b) {
  auto has = [&](ElementId m, ElementId owner) {
    const auto& nb = s.sn(owner);
    return std::find(nb.begin(), nb.end(), m) != nb.end();
  };
  return has(a, b) || has(b, a);
}

// Frontier by the definition: SN meets both sides.
inline std::set<ElementId> oracle_frontier(const LFSpace& s, const SubsetMask& t) {
  std::set<ElementId> out;
  for (ElementId e = 0; e < s.element_count(); ++e) {
    bool in = false, outside = false;
    for (ElementId m : s.sn(e)) (t.contains(m) ? in : outside) = true;
    if (in && outside) out.insert(e);
  }
  return out;
}

// Components by iterated pairwise merging over incidence inside the subset.
inline std::vector<std::set<ElementId>> oracle_components(const LFSpace& s,
                                                          const SubsetMask& t) {
  std::vector<std::set<ElementId>> comps;
  for (ElementId e : t.elements()) comps.push_back({e});
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < comps.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < comps.size() && !merged; ++j) {
        for (ElementId a : comps[i]) {
          bool touch = false;
          for (ElementId b : comps[j])
            if (oracle_incident(s, a, b)) {
              touch = true;
              break;
            }
          if (touch) {
            comps[i].insert(comps[j].begin(), comps[j].end());
            comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(j));
            merged = true;
            break;
          }
        }
      }
    }
  }
  return comps;
}

// Longest bounding chain ending at e by depth-first enumeration.
inline int oracle_dimension(const LFSpace& s, ElementId e) {
  int best = 0;
  for (ElementId p = 0; p < s.element_count(); ++p) {
    if (p == e) continue;
    const auto& nb = s.sn(p);
    if (std::find(nb.begin(), nb.end(), e) == nb.end()) continue;
    best = std::max(best, 1 + oracle_dimension(s, p));
  }
  return best;
}

}  // namespace testsupport
