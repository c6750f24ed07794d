#include "lftopo/labeling.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lftopo {

GrayImage2D::GrayImage2D(int width, int height, std::vector<int> labels)
    : width_(width), height_(height), labels_(std::move(labels)) {
  if (width_ < 1 || height_ < 1) throw std::invalid_argument("image extents must be positive");
  if (labels_.size() != static_cast<std::size_t>(width_) * height_)
    throw std::invalid_argument("label buffer length mismatch");
}

GrayImage2D::GrayImage2D(int width, int height, int fill)
    : width_(width), height_(height) {
  if (width_ < 1 || height_ < 1) throw std::invalid_argument("image extents must be positive");
  labels_.assign(static_cast<std::size_t>(width_) * height_, fill);
}

int GrayImage2D::label(int x, int y) const {
  if (x < 0 || x >= width_ || y < 0 || y >= height_) throw std::out_of_range("pixel out of range");
  return labels_[static_cast<std::size_t>(y) * width_ + x];
}

void GrayImage2D::set_label(int x, int y, int value) {
  if (x < 0 || x >= width_ || y < 0 || y >= height_) throw std::out_of_range("pixel out of range");
  labels_[static_cast<std::size_t>(y) * width_ + x] = value;
}

namespace {

// Complex axes are (x, y); pixel (x, y) is the principal cell (2x, 2y).
CartesianComplex image_complex(const GrayImage2D& img) {
  return CartesianComplex({img.width(), img.height()});
}

int clamp(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }

}  // namespace

CellLabeling max_rule(const GrayImage2D& img) {
  CartesianComplex cx = image_complex(img);
  std::vector<int> labels(cx.cell_count(), 0);
  for (std::size_t idx = 0; idx < cx.cell_count(); ++idx) {
    Cell c = cx.cell_at(idx);
    int best = 0;
    bool first = true;
    for (const Cell& p : cx.incident_principals(c)) {
      int v = img.label(p.comb[0] / 2, p.comb[1] / 2);
      best = first ? v : std::max(best, v);
      first = false;
    }
    labels[idx] = best;
  }
  return CellLabeling{std::move(cx), std::move(labels)};
}

CellLabeling equnali(const GrayImage2D& img) {
  CellLabeling out = max_rule(img);
  const CartesianComplex& cx = out.complex;
  // Revisit interior corner cells: both combinatorial coordinates odd means
  // four incident pixels and two complete diagonal pairs.
  for (int cy = 1; cy < 2 * img.height() - 1; cy += 2) {
    for (int cxo = 1; cxo < 2 * img.width() - 1; cxo += 2) {
      int i = (cxo - 1) / 2, j = (cy - 1) / 2;  // upper-left pixel of the block
      int d1a = img.label(i, j), d1b = img.label(i + 1, j + 1);
      int d2a = img.label(i + 1, j), d2b = img.label(i, j + 1);
      bool eq1 = d1a == d1b, eq2 = d2a == d2b;
      int value;
      if (eq1 && !eq2) {
        value = d1a;
      } else if (eq2 && !eq1) {
        value = d2a;
      } else if (eq1 && eq2 && d1a != d2a) {
        // narrow test over the 4x4 pixel window centered at the corner
        int count1 = 0, count2 = 0;
        for (int wy = j - 1; wy <= j + 2; ++wy) {
          for (int wx = i - 1; wx <= i + 2; ++wx) {
            int v = img.label(clamp(wx, 0, img.width() - 1), clamp(wy, 0, img.height() - 1));
            if (v == d1a) ++count1;
            if (v == d2a) ++count2;
          }
        }
        if (count1 < count2)
          value = d1a;
        else if (count2 < count1)
          value = d2a;
        else
          value = std::max({d1a, d1b, d2a, d2b});
      } else {
        value = std::max({d1a, d1b, d2a, d2b});
      }
      out.labels[cx.index_of(Cell{{cxo, cy}})] = value;
    }
  }
  return out;
}

std::vector<std::vector<Cell>> label_components(const CellLabeling& labeling, int value) {
  const CartesianComplex& cx = labeling.complex;
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < labeling.labels.size(); ++i)
    if (labeling.labels[i] == value) cells.push_back(i);
  if (cells.empty()) throw std::invalid_argument("no cell carries the requested label");

  std::vector<char> in(cx.cell_count(), 0), seen(cx.cell_count(), 0);
  for (std::size_t i : cells) in[i] = 1;
  std::vector<std::vector<Cell>> out;
  for (std::size_t i : cells) {
    if (seen[i]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{i};
    seen[i] = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      Cell c = cx.cell_at(u);
      std::vector<Cell> nbrs = cx.open_star(c);
      std::vector<Cell> below = cx.closure_of(c);
      nbrs.insert(nbrs.end(), below.begin(), below.end());
      for (const Cell& v : nbrs) {
        std::size_t vi = cx.index_of(v);
        if (in[vi] && !seen[vi]) {
          seen[vi] = 1;
          queue.push_back(vi);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<Cell> comp_cells;
    comp_cells.reserve(comp.size());
    for (std::size_t idx : comp) comp_cells.push_back(cx.cell_at(idx));
    out.push_back(std::move(comp_cells));
  }
  return out;
}

}  // namespace lftopo
