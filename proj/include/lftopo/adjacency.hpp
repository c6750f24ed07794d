#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lftopo/cartesian.hpp"
#include "lftopo/lf_space.hpp"

namespace lftopo {

using GridPoint = std::vector<int>;

/// n-dimensional box of points with a foreground mask. The background is the
/// rest of the box; there is no outside.
class DigitalImage {
 public:
  explicit DigitalImage(std::vector<int> dims);

  int order() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t point_count() const { return mask_.size(); }

  bool in_range(const GridPoint& p) const;
  std::size_t index_of(const GridPoint& p) const;
  GridPoint point_at(std::size_t index) const;

  bool foreground(const GridPoint& p) const { return mask_[index_of(p)] != 0; }
  bool foreground_at(std::size_t index) const { return mask_[index] != 0; }
  void set(const GridPoint& p, bool value = true) { mask_[index_of(p)] = value ? 1 : 0; }
  void set_at(std::size_t index, bool value = true) { mask_[index] = value ? 1 : 0; }
  std::size_t foreground_count() const;
  std::vector<GridPoint> foreground_points() const;

  friend bool operator==(const DigitalImage& a, const DigitalImage& b) {
    return a.dims_ == b.dims_ && a.mask_ == b.mask_;
  }

 private:
  std::vector<int> dims_;
  std::vector<char> mask_;
};

/// True iff the points are distinct, close (all coordinate differences at
/// most one) and their squared distance is at most the index.
bool a_adjacent(const GridPoint& p1, const GridPoint& p2, int a);

/// Partition of the foreground (or background) into maximal a-connected
/// subsets, ordered by smallest point index, each sorted.
std::vector<std::vector<GridPoint>> a_components(const DigitalImage& img, int a,
                                                 bool foreground = true);

struct ConsistencyVerdict {
  bool consistent = false;
  bool face_convex_consistent = false;
  std::optional<DigitalImage> witness;  // set by the search when inconsistent
};

/// Closed-form verdict: a pair is consistent iff the indices differ and one
/// of them is maximal; face-convex additionally needs the other index to be
/// minimal.
ConsistencyVerdict predicted_consistency(int n, int a, int b);

/// A Cartesian complex together with a membership flag for every cell. The
/// principal-cell flags always match the source image.
class TopologicalImage {
 public:
  TopologicalImage(CartesianComplex complex, std::vector<char> membership);
  static TopologicalImage from_image(const DigitalImage& img);

  const CartesianComplex& complex() const { return complex_; }
  bool in_foreground(const Cell& c) const { return membership_[complex_.index_of(c)] != 0; }
  bool in_foreground_at(std::size_t index) const { return membership_[index] != 0; }
  void assign(const Cell& c, bool value) { membership_[complex_.index_of(c)] = value ? 1 : 0; }
  const std::vector<char>& membership() const { return membership_; }
  std::vector<Cell> foreground_cells() const;

 private:
  CartesianComplex complex_;
  std::vector<char> membership_;
};

/// One connectivity demand derived from a close same-subset point pair.
struct PairConstraint {
  GridPoint p1, p2;
  bool foreground = false;  // which subset the pair lies in
  int squared_distance = 0;
  bool keeps_connected = false;  // true: connection demand, false: separation
};

struct UnsatCertificate {
  Cell cell;  // the cell pulled both ways
  PairConstraint first, second;
};

struct AnalogResult {
  std::optional<TopologicalImage> analog;
  std::optional<UnsatCertificate> conflict;
  bool satisfiable() const { return analog.has_value(); }
};

/// Assigns a membership to every non-principal cell so that, for every close
/// same-subset pair, connection demands place a cell of the intermediate
/// complex on the pair's side and separation demands push the whole
/// intermediate complex to the other side. Face-convex mode decides each
/// intermediate complex as a unit, keyed by its top cell. Unconstrained
/// cells default to background. Unsatisfiable demands are a valid outcome
/// and produce a certificate.
AnalogResult build_analog(const DigitalImage& img, int a, int b, bool face_convex = false);

/// Pairwise closure-connectivity criterion: for every close same-subset
/// pair, the closure of the two principal cells on their side is connected
/// exactly when the pair is adjacent; full foreground and background closure
/// component counts must match the point components. When `exhaustive` and
/// the image has at most 12 points, every subset of the foreground and of
/// the background is checked literally.
bool verify_analog(const DigitalImage& img, int a, int b, const TopologicalImage& topo,
                   bool exhaustive = false);

/// Two m-cubes sharing a 2x2x2 corner block, interiors removed, in a box
/// with a one-voxel margin. Requires m >= 3.
DigitalImage hollow_cubes(int m);

/// The foreground is a-connected and every point's b-neighbors inside the
/// foreground close around it: they are b-connected and the nearby
/// background splits into at least two b-components (the two sides of the
/// surface).
bool is_simple_surface(const DigitalImage& img, int a, int b);

struct PairCheckOptions {
  bool exhaustive = false;     // force full enumeration beyond the default bound
  int sample_count = 0;        // > 0: sample masks instead of enumerating
  std::uint64_t seed = 0;
  std::size_t enumeration_bound = 9;   // max points for implicit full enumeration
  std::size_t hard_bound = 16;         // absolute cap for full enumeration
};

/// Runs build_analog over every (or sampled) foreground mask; consistent
/// means all were satisfiable, and the lowest-index unsatisfiable mask is
/// kept as witness.
ConsistencyVerdict exhaustive_pair_check(int n, const std::vector<int>& dims, int a, int b,
                                         const PairCheckOptions& options = {});

}  // namespace lftopo
