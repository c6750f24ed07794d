#pragma once

#include <vector>

#include "lftopo/cartesian.hpp"

namespace lftopo {

/// Single-channel 2D image; larger label means lighter.
class GrayImage2D {
 public:
  GrayImage2D(int width, int height, std::vector<int> labels);
  GrayImage2D(int width, int height, int fill = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  int label(int x, int y) const;
  void set_label(int x, int y, int value);
  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const GrayImage2D& a, const GrayImage2D& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.labels_ == b.labels_;
  }

 private:
  int width_, height_;
  std::vector<int> labels_;  // row-major
};

/// A label for every cell of the image's 2D complex; principal-cell labels
/// equal the source pixels.
struct CellLabeling {
  CartesianComplex complex;
  std::vector<int> labels;  // by cell index

  int label_of(const Cell& c) const { return labels[complex.index_of(c)]; }
};

/// Every non-principal cell gets the maximum label over its incident pixels.
CellLabeling max_rule(const GrayImage2D& img);

/// Edges get the maximum of their two pixels. A corner cell prefers the
/// single equal diagonal pair; with two equal pairs the narrow stripe wins
/// (strictly smaller count over the 4x4 window centered at the corner,
/// edge-replicated); otherwise the lightest incident label.
CellLabeling equnali(const GrayImage2D& img);

/// Incidence-connected components of the cells carrying the given label.
/// Throws if no cell has it.
std::vector<std::vector<Cell>> label_components(const CellLabeling& labeling, int value);

}  // namespace lftopo
