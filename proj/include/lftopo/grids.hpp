#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lftopo/adjacency.hpp"
#include "lftopo/lf_space.hpp"

namespace lftopo {

/// Which way the cut corner of each pixel slants. The mirrored convention is
/// the reflection of the default one.
enum class HexDiagonal { kUpLeft, kUpRight };

/// Virtual cells assigned to each pixel of a hexagonal-topology grid: one
/// pixel, three edges and two vertices, five bits of the per-pixel word.
enum class HexCellType : int {
  kPixel = 0,
  kEdgeTop = 1,    // shared with (x, y-1)
  kEdgeLeft = 2,   // shared with (x-1, y)
  kEdgeDiag = 3,   // the slanted corner edge, shared with the diagonal pixel
  kVertexTop = 4,  // upper end of the slant
  kVertexBottom = 5,
};
inline constexpr int kHexCellTypes = 6;

/// Bit layout of the per-pixel virtual-cell word: bits 0-1 vertices (top,
/// bottom), bits 2-4 edges (top, left, diagonal).
inline constexpr std::uint8_t kHexBitVertexTop = 1u << 0;
inline constexpr std::uint8_t kHexBitVertexBottom = 1u << 1;
inline constexpr std::uint8_t kHexBitEdgeTop = 1u << 2;
inline constexpr std::uint8_t kHexBitEdgeLeft = 1u << 3;
inline constexpr std::uint8_t kHexBitEdgeDiag = 1u << 4;

/// Rectangular pixel array carrying hexagonal topology: labels plus a
/// five-bit virtual-cell word per pixel.
class HexGrid {
 public:
  HexGrid(int width, int height, HexDiagonal diagonal = HexDiagonal::kUpLeft);

  int width() const { return width_; }
  int height() const { return height_; }
  HexDiagonal diagonal() const { return diagonal_; }
  bool in_range(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }
  std::size_t pixel_index(int x, int y) const;

  int label(int x, int y) const { return labels_[pixel_index(x, y)]; }
  void set_label(int x, int y, int v) { labels_[pixel_index(x, y)] = v; }
  std::uint8_t cell_bits(int x, int y) const { return bits_[pixel_index(x, y)]; }
  void set_cell_bits(int x, int y, std::uint8_t b) { bits_[pixel_index(x, y)] = b & 0x1f; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  int width_, height_;
  HexDiagonal diagonal_;
  std::vector<int> labels_;
  std::vector<std::uint8_t> bits_;
};

/// The six in-range neighbors of a pixel: the four axis neighbors plus one
/// diagonal pair fixed by the grid's slant convention.
std::vector<std::pair<int, int>> hex_neighbors(int x, int y, const HexGrid& grid);

/// Element id of (pixel, cell type) in the derived space.
ElementId hex_element_id(const HexGrid& grid, int x, int y, HexCellType type);

/// Space over (pixel, type) elements realizing the hexagonal complex: pixels
/// are their own neighborhoods, edges see their incident pixels, vertices
/// see their incident pixels and edges.
LFSpace hex_to_lf_space(const HexGrid& grid,
                        std::size_t max_elements = CartesianComplex::kDefaultMaxElements);

/// Component partition of a pixel mask under hex adjacency.
std::vector<std::vector<std::pair<int, int>>> hex_components(const HexGrid& grid,
                                                             const std::vector<char>& mask);

/// Component partition of the same mask computed through the derived space:
/// the mask pixels plus every virtual cell touching one of them, restricted
/// back to pixels.
std::vector<std::vector<std::pair<int, int>>> hex_components_via_space(
    const HexGrid& grid, const std::vector<char>& mask);

/// True iff every pair of principal-dimension elements sharing any incident
/// element also shares an incident element one dimension lower.
bool hcc_check(const LFSpace& space, int principal_dim);

using Bcc14Grid = DigitalImage;  // 3D box of voxels

/// The fourteen offsets: six axis units plus the eight full diagonals.
const std::vector<GridPoint>& bcc14_offsets();

/// In-range 14-neighbors of a voxel.
std::vector<GridPoint> bcc14_neighbors(const GridPoint& p, const Bcc14Grid& grid);

/// Components of the foreground (or background) under 14-adjacency.
std::vector<std::vector<GridPoint>> bcc14_components(const Bcc14Grid& grid,
                                                     bool foreground = true);

}  // namespace lftopo
