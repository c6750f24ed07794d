#include "lftopo/cartesian.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lftopo {

std::string Cell::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < comb.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(comb[i]);
  }
  out += ")";
  return out;
}

CartesianComplex::CartesianComplex(std::vector<int> pixel_counts)
    : pixel_counts_(std::move(pixel_counts)) {
  if (pixel_counts_.empty()) throw std::invalid_argument("complex needs at least one axis");
  for (int m : pixel_counts_) {
    if (m < 1) throw std::invalid_argument("axis pixel count must be positive");
    extents_.push_back(2 * m - 1);
    cell_count_ *= static_cast<std::size_t>(2 * m - 1);
  }
}

bool CartesianComplex::in_range(const Cell& c) const {
  if (c.comb.size() != pixel_counts_.size()) return false;
  for (std::size_t i = 0; i < c.comb.size(); ++i)
    if (c.comb[i] < 0 || c.comb[i] >= extents_[i]) return false;
  return true;
}

void CartesianComplex::check_cell(const Cell& c) const {
  if (!in_range(c)) throw std::out_of_range("cell " + c.to_string() + " out of range");
}

std::size_t CartesianComplex::index_of(const Cell& c) const {
  check_cell(c);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < c.comb.size(); ++i)
    idx = idx * static_cast<std::size_t>(extents_[i]) + static_cast<std::size_t>(c.comb[i]);
  return idx;
}

Cell CartesianComplex::cell_at(std::size_t index) const {
  if (index >= cell_count_) throw std::out_of_range("cell index out of range");
  Cell c;
  c.comb.assign(pixel_counts_.size(), 0);
  for (std::size_t i = pixel_counts_.size(); i-- > 0;) {
    c.comb[i] = static_cast<int>(index % static_cast<std::size_t>(extents_[i]));
    index /= static_cast<std::size_t>(extents_[i]);
  }
  return c;
}

int CartesianComplex::cell_dim(const Cell& c) const {
  check_cell(c);
  int k = 0;
  for (int x : c.comb) k += (x % 2 == 0);
  return k;
}

bool CartesianComplex::is_principal(const Cell& c) const {
  return cell_dim(c) == order();
}

bool CartesianComplex::is_face(const Cell& a, const Cell& b) const {
  check_cell(a);
  check_cell(b);
  for (std::size_t i = 0; i < a.comb.size(); ++i) {
    int x = a.comb[i], y = b.comb[i];
    if (x == y) continue;
    if (x % 2 != 0 && std::abs(x - y) == 1) continue;
    return false;
  }
  return true;
}

// Enumerates the product of per-axis candidate lists in lexicographic order.
static std::vector<Cell> product_cells(const std::vector<std::vector<int>>& per_axis) {
  std::vector<Cell> out;
  Cell cur;
  cur.comb.assign(per_axis.size(), 0);
  std::size_t total = 1;
  for (const auto& v : per_axis) total *= v.size();
  out.reserve(total);
  std::vector<std::size_t> pos(per_axis.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < per_axis.size(); ++i) cur.comb[i] = per_axis[i][pos[i]];
    out.push_back(cur);
    for (std::size_t i = per_axis.size(); i-- > 0;) {
      if (++pos[i] < per_axis[i].size()) break;
      pos[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> CartesianComplex::open_star(const Cell& c) const {
  check_cell(c);
  std::vector<std::vector<int>> per_axis(c.comb.size());
  for (std::size_t i = 0; i < c.comb.size(); ++i) {
    int x = c.comb[i];
    if (x % 2 == 0) {
      per_axis[i] = {x};
    } else {
      per_axis[i] = {x - 1, x, x + 1};  // odd coordinates never sit on the border
    }
  }
  return product_cells(per_axis);
}

std::vector<Cell> CartesianComplex::closure_of(const Cell& c) const {
  check_cell(c);
  std::vector<std::vector<int>> per_axis(c.comb.size());
  for (std::size_t i = 0; i < c.comb.size(); ++i) {
    int x = c.comb[i];
    if (x % 2 != 0) {
      per_axis[i] = {x};
    } else {
      per_axis[i].push_back(x);
      if (x - 1 >= 0) per_axis[i].push_back(x - 1);
      if (x + 1 < extents_[i]) per_axis[i].push_back(x + 1);
    }
  }
  return product_cells(per_axis);
}

std::vector<Cell> CartesianComplex::incident_principals(const Cell& c) const {
  check_cell(c);
  std::vector<std::vector<int>> per_axis(c.comb.size());
  for (std::size_t i = 0; i < c.comb.size(); ++i) {
    int x = c.comb[i];
    if (x % 2 == 0) {
      per_axis[i] = {x};
    } else {
      per_axis[i] = {x - 1, x + 1};
    }
  }
  return product_cells(per_axis);
}

Intermediate CartesianComplex::intermediate(const Cell& v1, const Cell& v2) const {
  check_cell(v1);
  check_cell(v2);
  if (!is_principal(v1) || !is_principal(v2))
    throw std::invalid_argument("intermediate requires principal cells");
  Cell mid;
  mid.comb.reserve(v1.comb.size());
  for (std::size_t i = 0; i < v1.comb.size(); ++i) {
    int d = std::abs(v1.comb[i] - v2.comb[i]);
    if (d > 2) throw std::invalid_argument("principal cells are not close");
    mid.comb.push_back((v1.comb[i] + v2.comb[i]) / 2);
  }
  if (v1 == v2) throw std::invalid_argument("intermediate requires distinct cells");
  Intermediate out;
  out.complex_cells = closure_of(mid);
  out.cell = std::move(mid);
  return out;
}

CellCoords CartesianComplex::coords(const Cell& c) const {
  check_cell(c);
  CellCoords out;
  out.comb = c.comb;
  for (int x : c.comb) out.semi.push_back(static_cast<double>(x) / 2.0);
  return out;
}

LFSpace CartesianComplex::to_lf_space(std::size_t max_elements) const {
  if (cell_count_ > max_elements) throw std::length_error("complex exceeds the element bound");
  std::vector<std::vector<ElementId>> sn(cell_count_);
  std::vector<std::string> names(cell_count_);
  for (std::size_t idx = 0; idx < cell_count_; ++idx) {
    Cell c = cell_at(idx);
    names[idx] = c.to_string();
    for (const Cell& s : open_star(c)) sn[idx].push_back(static_cast<ElementId>(index_of(s)));
  }
  return LFSpace(std::move(sn), std::move(names));
}

}  // namespace lftopo
