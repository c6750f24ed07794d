#include "lftopo/grids.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lftopo {

HexGrid::HexGrid(int width, int height, HexDiagonal diagonal)
    : width_(width), height_(height), diagonal_(diagonal) {
  if (width_ < 1 || height_ < 1) throw std::invalid_argument("grid extents must be positive");
  labels_.assign(static_cast<std::size_t>(width_) * height_, 0);
  bits_.assign(labels_.size(), 0);
}

std::size_t HexGrid::pixel_index(int x, int y) const {
  if (!in_range(x, y)) throw std::out_of_range("pixel out of range");
  return static_cast<std::size_t>(y) * width_ + x;
}

std::vector<std::pair<int, int>> hex_neighbors(int x, int y, const HexGrid& grid) {
  if (!grid.in_range(x, y)) throw std::out_of_range("pixel out of range");
  const int dx = grid.diagonal() == HexDiagonal::kUpLeft ? -1 : 1;
  const std::pair<int, int> cand[6] = {
      {x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}, {x + dx, y - 1}, {x - dx, y + 1}};
  std::vector<std::pair<int, int>> out;
  for (const auto& [nx, ny] : cand)
    if (grid.in_range(nx, ny)) out.emplace_back(nx, ny);
  return out;
}

ElementId hex_element_id(const HexGrid& grid, int x, int y, HexCellType type) {
  return static_cast<ElementId>(grid.pixel_index(x, y) * kHexCellTypes +
                                static_cast<int>(type));
}

LFSpace hex_to_lf_space(const HexGrid& grid, std::size_t max_elements) {
  const int w = grid.width(), h = grid.height();
  const std::size_t count = static_cast<std::size_t>(w) * h * kHexCellTypes;
  if (count > max_elements) throw std::length_error("grid exceeds the element bound");
  const int dx = grid.diagonal() == HexDiagonal::kUpLeft ? -1 : 1;

  std::vector<std::vector<ElementId>> sn(count);
  std::vector<std::string> names(count);
  static const char* kTypeName[kHexCellTypes] = {"P", "EN", "EW", "ED", "V0", "V1"};

  auto id = [&](int x, int y, HexCellType t) { return hex_element_id(grid, x, y, t); };
  auto add_pixel = [&](std::vector<ElementId>& nb, int x, int y) {
    if (grid.in_range(x, y)) nb.push_back(id(x, y, HexCellType::kPixel));
  };
  auto add = [&](std::vector<ElementId>& nb, int x, int y, HexCellType t) {
    if (grid.in_range(x, y)) nb.push_back(id(x, y, t));
  };

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int t = 0; t < kHexCellTypes; ++t) {
        auto type = static_cast<HexCellType>(t);
        ElementId e = id(x, y, type);
        names[e] = std::string(kTypeName[t]) + "(" + std::to_string(x) + "," +
                   std::to_string(y) + ")";
        auto& nb = sn[e];
        nb.push_back(e);
        switch (type) {
          case HexCellType::kPixel:
            break;  // a pixel is its own smallest neighborhood
          case HexCellType::kEdgeTop:
            add_pixel(nb, x, y);
            add_pixel(nb, x, y - 1);
            break;
          case HexCellType::kEdgeLeft:
            add_pixel(nb, x, y);
            add_pixel(nb, x - 1, y);
            break;
          case HexCellType::kEdgeDiag:
            add_pixel(nb, x, y);
            add_pixel(nb, x + dx, y - 1);
            break;
          case HexCellType::kVertexTop:
            // three hexagons meet at the upper end of the slant; the edge
            // between the two upper pixels is owned by the rightmost of them
            add_pixel(nb, x, y);
            add_pixel(nb, x, y - 1);
            add_pixel(nb, x + dx, y - 1);
            add(nb, x, y, HexCellType::kEdgeDiag);
            add(nb, x, y, HexCellType::kEdgeTop);
            add(nb, x + (dx + 1) / 2, y - 1, HexCellType::kEdgeLeft);
            break;
          case HexCellType::kVertexBottom:
            add_pixel(nb, x, y);
            add_pixel(nb, x + dx, y);
            add_pixel(nb, x + dx, y - 1);
            add(nb, x, y, HexCellType::kEdgeDiag);
            add(nb, x + (dx + 1) / 2, y, HexCellType::kEdgeLeft);
            add(nb, x + dx, y, HexCellType::kEdgeTop);
            break;
        }
      }
    }
  }
  return LFSpace(std::move(sn), std::move(names));
}

namespace {

std::vector<std::vector<std::pair<int, int>>> mask_components(
    const HexGrid& grid, const std::vector<char>& mask,
    const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t n = mask.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask[i] || seen[i]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{i};
    seen[i] = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (std::size_t v : adjacency[u]) {
        if (mask[v] && !seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<std::pair<int, int>> pts;
    for (std::size_t idx : comp)
      pts.emplace_back(static_cast<int>(idx % grid.width()), static_cast<int>(idx / grid.width()));
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> hex_components(const HexGrid& grid,
                                                             const std::vector<char>& mask) {
  if (mask.size() != grid.labels().size()) throw std::invalid_argument("mask length mismatch");
  std::vector<std::vector<std::size_t>> adjacency(mask.size());
  for (int y = 0; y < grid.height(); ++y)
    for (int x = 0; x < grid.width(); ++x)
      for (const auto& [nx, ny] : hex_neighbors(x, y, grid))
        adjacency[grid.pixel_index(x, y)].push_back(grid.pixel_index(nx, ny));
  return mask_components(grid, mask, adjacency);
}

std::vector<std::vector<std::pair<int, int>>> hex_components_via_space(
    const HexGrid& grid, const std::vector<char>& mask) {
  if (mask.size() != grid.labels().size()) throw std::invalid_argument("mask length mismatch");
  LFSpace space = hex_to_lf_space(grid);
  SubsetMask subset(space.element_count());
  for (int y = 0; y < grid.height(); ++y)
    for (int x = 0; x < grid.width(); ++x)
      if (mask[grid.pixel_index(x, y)])
        subset.set(hex_element_id(grid, x, y, HexCellType::kPixel));
  // widen with every virtual cell touching a mask pixel
  for (ElementId e = 0; e < space.element_count(); ++e) {
    if (e % kHexCellTypes == static_cast<ElementId>(HexCellType::kPixel)) continue;
    for (ElementId m : space.sn(e)) {
      if (m != e && subset.contains(m)) {
        subset.set(e);
        break;
      }
    }
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& comp : components(space, subset)) {
    std::vector<std::pair<int, int>> pts;
    for (ElementId e : comp) {
      if (e % kHexCellTypes != static_cast<ElementId>(HexCellType::kPixel)) continue;
      std::size_t pix = e / kHexCellTypes;
      pts.emplace_back(static_cast<int>(pix % grid.width()),
                       static_cast<int>(pix / grid.width()));
    }
    if (!pts.empty()) out.push_back(std::move(pts));
  }
  return out;
}

bool hcc_check(const LFSpace& space, int principal_dim) {
  AxiomReport report = verify_axioms(space);
  if (!report.all_passed()) throw std::domain_error("space does not satisfy the axioms");
  std::vector<int> dim = dimensions(space);

  auto incident_of = [&](ElementId e) {
    std::vector<ElementId> out = space.sn(e);
    const auto& st = space.star(e);
    out.insert(out.end(), st.begin(), st.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  // lower-face sets of the principal elements
  std::vector<std::vector<ElementId>> lower(space.element_count());
  for (ElementId e = 0; e < space.element_count(); ++e) {
    if (dim[e] != principal_dim) continue;
    for (ElementId f : incident_of(e))
      if (dim[f] == principal_dim - 1) lower[e].push_back(f);
  }

  for (ElementId e = 0; e < space.element_count(); ++e) {
    std::vector<ElementId> principals;
    for (ElementId x : incident_of(e))
      if (dim[x] == principal_dim && x != e) principals.push_back(x);
    for (std::size_t i = 0; i < principals.size(); ++i) {
      for (std::size_t j = i + 1; j < principals.size(); ++j) {
        const auto& la = lower[principals[i]];
        const auto& lb = lower[principals[j]];
        bool shared = false;
        for (ElementId f : la) {
          if (std::binary_search(lb.begin(), lb.end(), f)) {
            shared = true;
            break;
          }
        }
        if (!shared) return false;
      }
    }
  }
  return true;
}

const std::vector<GridPoint>& bcc14_offsets() {
  static const std::vector<GridPoint> offsets = [] {
    std::vector<GridPoint> out;
    out.push_back({1, 0, 0});
    out.push_back({-1, 0, 0});
    out.push_back({0, 1, 0});
    out.push_back({0, -1, 0});
    out.push_back({0, 0, 1});
    out.push_back({0, 0, -1});
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) out.push_back({sx, sy, sz});
    return out;
  }();
  return offsets;
}

std::vector<GridPoint> bcc14_neighbors(const GridPoint& p, const Bcc14Grid& grid) {
  if (grid.order() != 3) throw std::invalid_argument("14-adjacency needs a 3D grid");
  if (!grid.in_range(p)) throw std::out_of_range("voxel out of range");
  std::vector<GridPoint> out;
  for (const auto& off : bcc14_offsets()) {
    GridPoint q = p;
    bool ok = true;
    for (std::size_t k = 0; k < 3; ++k) {
      q[k] += off[k];
      if (q[k] < 0 || q[k] >= grid.dims()[k]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(q);
  }
  return out;
}

std::vector<std::vector<GridPoint>> bcc14_components(const Bcc14Grid& grid, bool foreground) {
  if (grid.order() != 3) throw std::invalid_argument("14-adjacency needs a 3D grid");
  const std::size_t n = grid.point_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<GridPoint>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (grid.foreground_at(i) != foreground || seen[i]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{i};
    seen[i] = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (const GridPoint& q : bcc14_neighbors(grid.point_at(u), grid)) {
        std::size_t v = grid.index_of(q);
        if (grid.foreground_at(v) == foreground && !seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<GridPoint> pts;
    for (std::size_t idx : comp) pts.push_back(grid.point_at(idx));
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace lftopo
