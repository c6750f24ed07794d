#include "lftopo/adjacency.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace lftopo {

DigitalImage::DigitalImage(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("image needs at least one axis");
  std::size_t n = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("image extents must be positive");
    n *= static_cast<std::size_t>(d);
  }
  mask_.assign(n, 0);
}

bool DigitalImage::in_range(const GridPoint& p) const {
  if (p.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0 || p[i] >= dims_[i]) return false;
  return true;
}

std::size_t DigitalImage::index_of(const GridPoint& p) const {
  if (!in_range(p)) throw std::out_of_range("point out of range");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    idx = idx * static_cast<std::size_t>(dims_[i]) + static_cast<std::size_t>(p[i]);
  return idx;
}

GridPoint DigitalImage::point_at(std::size_t index) const {
  if (index >= mask_.size()) throw std::out_of_range("point index out of range");
  GridPoint p(dims_.size(), 0);
  for (std::size_t i = dims_.size(); i-- > 0;) {
    p[i] = static_cast<int>(index % static_cast<std::size_t>(dims_[i]));
    index /= static_cast<std::size_t>(dims_[i]);
  }
  return p;
}

std::size_t DigitalImage::foreground_count() const {
  std::size_t c = 0;
  for (char b : mask_) c += b != 0;
  return c;
}

std::vector<GridPoint> DigitalImage::foreground_points() const {
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(point_at(i));
  return out;
}

bool a_adjacent(const GridPoint& p1, const GridPoint& p2, int a) {
  if (p1.size() != p2.size()) throw std::invalid_argument("point dimension mismatch");
  bool distinct = false;
  int d2 = 0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    int d = p1[i] - p2[i];
    if (std::abs(d) > 1) return false;
    if (d != 0) distinct = true;
    d2 += d * d;
  }
  return distinct && d2 <= a;
}

// All close offsets with squared norm <= a, excluding zero.
static std::vector<GridPoint> close_offsets(int n, int a) {
  std::vector<GridPoint> out;
  GridPoint off(n, -1);
  while (true) {
    int d2 = 0;
    for (int v : off) d2 += v * v;
    if (d2 != 0 && d2 <= a) out.push_back(off);
    int i = n - 1;
    while (i >= 0 && off[i] == 1) off[i--] = -1;
    if (i < 0) break;
    ++off[i];
  }
  return out;
}

std::vector<std::vector<GridPoint>> a_components(const DigitalImage& img, int a,
                                                 bool foreground) {
  const std::size_t n = img.point_count();
  const auto offsets = close_offsets(img.order(), a);
  std::vector<char> seen(n, 0);
  std::vector<std::vector<GridPoint>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (img.foreground_at(i) != foreground || seen[i]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{i};
    seen[i] = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      GridPoint p = img.point_at(u);
      for (const auto& off : offsets) {
        GridPoint q = p;
        bool ok = true;
        for (std::size_t k = 0; k < q.size(); ++k) {
          q[k] += off[k];
          if (q[k] < 0 || q[k] >= img.dims()[k]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::size_t v = img.index_of(q);
        if (img.foreground_at(v) == foreground && !seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<GridPoint> pts;
    pts.reserve(comp.size());
    for (std::size_t idx : comp) pts.push_back(img.point_at(idx));
    out.push_back(std::move(pts));
  }
  return out;
}

ConsistencyVerdict predicted_consistency(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n) throw std::out_of_range("adjacency index out of range");
  ConsistencyVerdict v;
  v.consistent = (a != b) && (a == n || b == n);
  v.face_convex_consistent = (a == n && b == 1) || (a == 1 && b == n);
  return v;
}

TopologicalImage::TopologicalImage(CartesianComplex complex, std::vector<char> membership)
    : complex_(std::move(complex)), membership_(std::move(membership)) {
  if (membership_.size() != complex_.cell_count())
    throw std::invalid_argument("membership length does not match the complex");
}

TopologicalImage TopologicalImage::from_image(const DigitalImage& img) {
  CartesianComplex cx(img.dims());
  std::vector<char> membership(cx.cell_count(), 0);
  for (std::size_t i = 0; i < img.point_count(); ++i) {
    if (!img.foreground_at(i)) continue;
    GridPoint p = img.point_at(i);
    Cell c;
    for (int x : p) c.comb.push_back(2 * x);
    membership[cx.index_of(c)] = 1;
  }
  return TopologicalImage(std::move(cx), std::move(membership));
}

std::vector<Cell> TopologicalImage::foreground_cells() const {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < membership_.size(); ++i)
    if (membership_[i]) out.push_back(complex_.cell_at(i));
  return out;
}

namespace {

struct Demand {
  bool in_foreground;
  PairConstraint source;
};

int squared_distance(const GridPoint& p, const GridPoint& q) {
  int d2 = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int d = p[i] - q[i];
    d2 += d * d;
  }
  return d2;
}

Cell principal_cell(const GridPoint& p) {
  Cell c;
  for (int x : p) c.comb.push_back(2 * x);
  return c;
}

struct Clause {
  std::vector<std::size_t> cells;  // cell indices
  bool want_foreground;
  PairConstraint source;
};

struct Assignment {
  char value;
  PairConstraint reason;
};

// Assigns clause cells depth-first, preferring the wanted value; unit
// demands were already applied. On failure reports the starved clause and
// the demand that pinned its first cell.
bool solve_clauses(const std::vector<Clause>& clauses,
                   std::map<std::size_t, Assignment>& assigned, std::size_t at,
                   std::optional<UnsatCertificate>& conflict, const CartesianComplex& cx) {
  if (at == clauses.size()) return true;
  const Clause& cl = clauses[at];
  char want = cl.want_foreground ? 1 : 0;
  std::vector<std::size_t> free_cells;
  for (std::size_t c : cl.cells) {
    auto it = assigned.find(c);
    if (it == assigned.end())
      free_cells.push_back(c);
    else if (it->second.value == want)
      return solve_clauses(clauses, assigned, at + 1, conflict, cx);
  }
  for (std::size_t c : free_cells) {
    assigned[c] = Assignment{want, cl.source};
    if (solve_clauses(clauses, assigned, at + 1, conflict, cx)) return true;
    assigned.erase(c);
  }
  if (free_cells.empty() && !conflict) {
    std::size_t cell = cl.cells.front();
    conflict = UnsatCertificate{cx.cell_at(cell), assigned.at(cell).reason, cl.source};
  }
  return false;
}

}  // namespace

AnalogResult build_analog(const DigitalImage& img, int a, int b, bool face_convex) {
  const int n = img.order();
  if (a < 1 || a > n || b < 1 || b > n) throw std::out_of_range("adjacency index out of range");
  CartesianComplex cx(img.dims());

  std::map<std::size_t, Demand> units;
  std::vector<Clause> clauses;
  AnalogResult result;

  auto add_unit = [&](std::size_t cell_idx, bool value, const PairConstraint& source) {
    auto [it, inserted] = units.try_emplace(cell_idx, Demand{value, source});
    if (!inserted && it->second.in_foreground != value) {
      result.conflict = UnsatCertificate{cx.cell_at(cell_idx), it->second.source, source};
      return false;
    }
    return true;
  };

  const auto offsets = close_offsets(n, n);
  for (std::size_t i = 0; i < img.point_count(); ++i) {
    GridPoint p = img.point_at(i);
    for (const auto& off : offsets) {
      GridPoint q = p;
      bool ok = true;
      for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] += off[k];
        if (q[k] < 0 || q[k] >= img.dims()[k]) {
          ok = false;
          break;
        }
      }
      if (!ok || img.index_of(q) <= i) continue;
      bool fp = img.foreground_at(i), fq = img.foreground(q);
      if (fp != fq) continue;  // mixed pairs impose nothing
      int d2 = squared_distance(p, q);
      int index = fp ? a : b;
      PairConstraint pc{p, q, fp, d2, d2 <= index};
      Intermediate ic = cx.intermediate(principal_cell(p), principal_cell(q));
      if (pc.keeps_connected) {
        if (face_convex) {
          // the whole intermediate complex goes to the pair's side; the
          // decision is keyed by its top cell
          if (!add_unit(cx.index_of(ic.cell), fp, pc)) return result;
        } else {
          Clause cl;
          cl.want_foreground = fp;
          cl.source = pc;
          for (const Cell& c : ic.complex_cells) cl.cells.push_back(cx.index_of(c));
          clauses.push_back(std::move(cl));
        }
      } else {
        // separation: no cell of the intermediate complex may stay on the
        // pair's side
        for (const Cell& c : ic.complex_cells)
          if (!add_unit(cx.index_of(c), !fp, pc)) return result;
      }
    }
  }

  std::map<std::size_t, Assignment> assigned;
  for (const auto& [cell, demand] : units)
    assigned[cell] = Assignment{static_cast<char>(demand.in_foreground ? 1 : 0), demand.source};
  if (!solve_clauses(clauses, assigned, 0, result.conflict, cx)) return result;

  TopologicalImage topo = TopologicalImage::from_image(img);
  for (const auto& [cell_idx, value] : assigned) {
    Cell c = cx.cell_at(cell_idx);
    if (cx.is_principal(c)) continue;  // principal flags come from the image
    topo.assign(c, value.value != 0);
  }
  result.analog = std::move(topo);
  return result;
}

namespace {

// Component count of `cells` (complex indices) under incidence, where two
// cells are incident when one is a face of the other.
std::size_t complex_component_count(const CartesianComplex& cx,
                                    const std::vector<std::size_t>& cells) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i]] = i;
  std::vector<char> seen(cells.size(), 0);
  std::size_t comps = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (seen[i]) continue;
    ++comps;
    std::deque<std::size_t> queue{i};
    seen[i] = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      Cell c = cx.cell_at(cells[u]);
      std::vector<Cell> nbrs = cx.open_star(c);
      std::vector<Cell> below = cx.closure_of(c);
      nbrs.insert(nbrs.end(), below.begin(), below.end());
      for (const Cell& v : nbrs) {
        auto it = pos.find(cx.index_of(v));
        if (it != pos.end() && !seen[it->second]) {
          seen[it->second] = 1;
          queue.push_back(it->second);
        }
      }
    }
  }
  return comps;
}

// Closure of a set of principal cells within one side of the membership.
std::vector<std::size_t> side_closure(const TopologicalImage& topo,
                                      const std::vector<GridPoint>& points, bool side) {
  const CartesianComplex& cx = topo.complex();
  std::vector<std::size_t> out;
  std::vector<char> in(cx.cell_count(), 0);
  for (const GridPoint& p : points) {
    std::size_t idx = cx.index_of(principal_cell(p));
    if (!in[idx]) {
      in[idx] = 1;
      out.push_back(idx);
    }
    for (const Cell& f : cx.closure_of(principal_cell(p))) {
      std::size_t fi = cx.index_of(f);
      if (!in[fi] && topo.in_foreground_at(fi) == side) {
        in[fi] = 1;
        out.push_back(fi);
      }
    }
  }
  return out;
}

std::size_t point_component_count(const std::vector<GridPoint>& pts, int index) {
  std::vector<char> seen(pts.size(), 0);
  std::size_t comps = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (seen[i]) continue;
    ++comps;
    std::deque<std::size_t> queue{i};
    seen[i] = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < pts.size(); ++v)
        if (!seen[v] && a_adjacent(pts[u], pts[v], index)) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
  }
  return comps;
}

bool check_side_subsets(const DigitalImage& img, const TopologicalImage& topo, int index,
                        bool side) {
  std::vector<GridPoint> pts;
  for (std::size_t i = 0; i < img.point_count(); ++i)
    if (img.foreground_at(i) == side) pts.push_back(img.point_at(i));
  if (pts.size() > 20) return false;
  for (std::uint32_t bits = 1; bits < (1u << pts.size()); ++bits) {
    std::vector<GridPoint> sub;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (bits >> k & 1u) sub.push_back(pts[k]);
    bool connected_pts = point_component_count(sub, index) <= 1;
    auto cl = side_closure(topo, sub, side);
    bool connected_cl = complex_component_count(topo.complex(), cl) <= 1;
    if (connected_pts != connected_cl) return false;
  }
  return true;
}

}  // namespace

bool verify_analog(const DigitalImage& img, int a, int b, const TopologicalImage& topo,
                   bool exhaustive) {
  const int n = img.order();
  if (topo.complex().pixel_counts() != img.dims())
    throw std::invalid_argument("complex shape does not match the image");
  for (std::size_t i = 0; i < img.point_count(); ++i) {
    GridPoint p = img.point_at(i);
    if (topo.in_foreground(principal_cell(p)) != img.foreground_at(i))
      throw std::invalid_argument("principal cells do not match the image");
  }

  // Per-pair criterion over every close same-subset pair.
  const auto offsets = close_offsets(n, n);
  for (std::size_t i = 0; i < img.point_count(); ++i) {
    GridPoint p = img.point_at(i);
    for (const auto& off : offsets) {
      GridPoint q = p;
      bool ok = true;
      for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] += off[k];
        if (q[k] < 0 || q[k] >= img.dims()[k]) {
          ok = false;
          break;
        }
      }
      if (!ok || img.index_of(q) <= i) continue;
      bool fp = img.foreground_at(i);
      if (fp != img.foreground(q)) continue;
      int index = fp ? a : b;
      bool adjacent = squared_distance(p, q) <= index;
      auto cl = side_closure(topo, {p, q}, fp);
      bool connected = complex_component_count(topo.complex(), cl) <= 1;
      if (connected != adjacent) return false;
    }
  }

  // Whole-side component counts.
  for (bool side : {true, false}) {
    std::vector<GridPoint> pts;
    for (std::size_t i = 0; i < img.point_count(); ++i)
      if (img.foreground_at(i) == side) pts.push_back(img.point_at(i));
    if (pts.empty()) continue;
    auto comps = a_components(img, side ? a : b, side);
    auto cl = side_closure(topo, pts, side);
    if (complex_component_count(topo.complex(), cl) != comps.size()) return false;
  }

  if (exhaustive) {
    if (img.point_count() > 12) throw std::length_error("exhaustive check limited to 12 points");
    if (!check_side_subsets(img, topo, a, true)) return false;
    if (!check_side_subsets(img, topo, b, false)) return false;
  }
  return true;
}

DigitalImage hollow_cubes(int m) {
  if (m < 3) throw std::invalid_argument("hollow cubes need m >= 3");
  const int extent = 2 * m;  // two overlapping cubes plus a one-voxel margin
  DigitalImage img({extent, extent, extent});
  auto between = [](const GridPoint& p, int lo, int hi) {
    for (int x : p)
      if (x < lo || x > hi) return false;
    return true;
  };
  for (std::size_t i = 0; i < img.point_count(); ++i) {
    GridPoint p = img.point_at(i);
    bool in_a = between(p, 1, m);
    bool in_b = between(p, m - 1, 2 * m - 2);
    bool in_hole_a = between(p, 2, m - 1);
    bool in_hole_b = between(p, m, 2 * m - 3);
    if ((in_a || in_b) && !in_hole_a && !in_hole_b) img.set_at(i, true);
  }
  return img;
}

bool is_simple_surface(const DigitalImage& img, int a, int b) {
  auto fg = a_components(img, a, true);
  if (fg.size() != 1) return false;
  const auto offs_b = close_offsets(img.order(), b);
  const auto offs_close = close_offsets(img.order(), img.order());
  for (std::size_t i = 0; i < img.point_count(); ++i) {
    if (!img.foreground_at(i)) continue;
    GridPoint p = img.point_at(i);
    std::vector<GridPoint> ring;
    for (const auto& off : offs_b) {
      GridPoint q = p;
      bool ok = true;
      for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] += off[k];
        if (q[k] < 0 || q[k] >= img.dims()[k]) {
          ok = false;
          break;
        }
      }
      if (ok && img.foreground(q)) ring.push_back(q);
    }
    if (ring.empty() || point_component_count(ring, b) != 1) return false;
    // the surface must separate the nearby background into two sides
    std::vector<GridPoint> near_bg;
    for (const auto& off : offs_close) {
      GridPoint q = p;
      bool ok = true;
      for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] += off[k];
        if (q[k] < 0 || q[k] >= img.dims()[k]) {
          ok = false;
          break;
        }
      }
      if (ok && !img.foreground(q)) near_bg.push_back(q);
    }
    if (point_component_count(near_bg, b) < 2) return false;
  }
  return true;
}

ConsistencyVerdict exhaustive_pair_check(int n, const std::vector<int>& dims, int a, int b,
                                         const PairCheckOptions& options) {
  if (static_cast<int>(dims.size()) != n) throw std::invalid_argument("dims/dimension mismatch");
  DigitalImage base(dims);
  const std::size_t points = base.point_count();
  ConsistencyVerdict verdict = predicted_consistency(n, a, b);
  verdict.consistent = true;
  verdict.witness.reset();

  auto run_mask = [&](std::uint64_t mask) {
    DigitalImage img(dims);
    for (std::size_t i = 0; i < points; ++i)
      if (mask >> i & 1u) img.set_at(i, true);
    AnalogResult r = build_analog(img, a, b, false);
    if (!r.satisfiable() && !verdict.witness) {
      verdict.consistent = false;
      verdict.witness = img;
    }
  };

  if (options.sample_count > 0) {
    std::mt19937_64 rng(options.seed);
    for (int s = 0; s < options.sample_count && verdict.consistent; ++s) {
      std::uint64_t mask = rng();
      if (points < 64) mask &= (std::uint64_t{1} << points) - 1;
      run_mask(mask);
    }
    return verdict;
  }

  std::size_t bound = options.exhaustive ? options.hard_bound : options.enumeration_bound;
  if (points > bound)
    throw std::length_error("mask enumeration bound exceeded; use sampling or raise the bound");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << points); ++mask) {
    run_mask(mask);
    if (!verdict.consistent) break;
  }
  return verdict;
}

}  // namespace lftopo
