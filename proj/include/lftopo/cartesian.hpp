#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lftopo/lf_space.hpp"

namespace lftopo {

/// A cell addressed by combinatorial coordinates: axis index i runs over
/// 0..2m_i-2 where m_i is the pixel count of that axis. Even coordinates are
/// open axis cells, odd ones closed. Semi-combinatorial coordinates are the
/// combinatorial ones halved.
struct Cell {
  std::vector<int> comb;

  friend bool operator==(const Cell& a, const Cell& b) { return a.comb == b.comb; }
  friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
  friend bool operator<(const Cell& a, const Cell& b) { return a.comb < b.comb; }
  std::string to_string() const;
};

struct CellCoords {
  std::vector<int> comb;
  std::vector<double> semi;  // comb / 2, exact halves
};

struct Intermediate {
  Cell cell;                          // the mean-coordinate cell
  std::vector<Cell> complex_cells;    // its closure, clipped to range
};

/// Product of one-dimensional axis complexes. Each axis with m pixels spans
/// combinatorial indices 0..2m-2 with open endpoints; the grid boundary is
/// made of pixels and there is no outside cell.
class CartesianComplex {
 public:
  explicit CartesianComplex(std::vector<int> pixel_counts);

  int order() const { return static_cast<int>(pixel_counts_.size()); }  // spatial dimension n
  const std::vector<int>& pixel_counts() const { return pixel_counts_; }
  /// Number of cells along each axis (2m-1).
  const std::vector<int>& cell_extents() const { return extents_; }
  std::size_t cell_count() const { return cell_count_; }

  bool in_range(const Cell& c) const;
  void check_cell(const Cell& c) const;
  std::size_t index_of(const Cell& c) const;  // row-major over cell extents
  Cell cell_at(std::size_t index) const;

  /// Number of open (even) coordinates.
  int cell_dim(const Cell& c) const;
  bool is_principal(const Cell& c) const;

  /// Componentwise face relation: a_i equals b_i, or a_i is odd and differs
  /// from b_i by one. Reflexive, antisymmetric, transitive.
  bool is_face(const Cell& a, const Cell& b) const;

  /// Cells having c as a face; equals SN(c) of the derived space. Sorted.
  std::vector<Cell> open_star(const Cell& c) const;

  /// c plus all its faces, clipped to range. Sorted.
  std::vector<Cell> closure_of(const Cell& c) const;

  /// Principal cells having c as a face. Interior count is 2^(n-dim),
  /// smaller at the border.
  std::vector<Cell> incident_principals(const Cell& c) const;

  /// For two close principal cells: the mean-coordinate cell plus its
  /// closure. Throws if the cells are not principal or not close.
  Intermediate intermediate(const Cell& v1, const Cell& v2) const;

  CellCoords coords(const Cell& c) const;

  /// Derived space with SN(c) = open_star(c); element order is index order
  /// and element names are the combinatorial coordinates.
  LFSpace to_lf_space(std::size_t max_elements = kDefaultMaxElements) const;

  static constexpr std::size_t kDefaultMaxElements = 1u << 20;

 private:
  std::vector<int> pixel_counts_;
  std::vector<int> extents_;
  std::size_t cell_count_ = 1;
};

}  // namespace lftopo
