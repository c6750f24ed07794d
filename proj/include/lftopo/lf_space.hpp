#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lftopo {

using ElementId = std::uint32_t;

/// Boolean mask over the elements of a space. Length always equals the
/// element count of the space it belongs to.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}

  static SubsetMask from_elements(std::size_t n, const std::vector<ElementId>& elems);

  std::size_t size() const { return bits_.size(); }
  bool contains(ElementId e) const { return bits_[e] != 0; }
  void set(ElementId e, bool value = true) { bits_[e] = value ? 1 : 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  SubsetMask complement() const;
  bool is_subset_of(const SubsetMask& other) const;
  std::vector<ElementId> elements() const;

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const SubsetMask& a, const SubsetMask& b) { return !(a == b); }

 private:
  std::vector<char> bits_;
};

/// A locally finite space given by its smallest-neighborhood map. The
/// neighborhood system is generated by the SN sets, so every element's
/// smallest neighborhood exists by construction. Reflexivity (e in SN(e))
/// is required and checked.
class LFSpace {
 public:
  explicit LFSpace(std::vector<std::vector<ElementId>> sn,
                   std::vector<std::string> names = {});

  std::size_t element_count() const { return sn_.size(); }
  /// SN(e), sorted ascending. Always contains e.
  const std::vector<ElementId>& sn(ElementId e) const;
  /// true iff member is in SN(owner).
  bool in_sn(ElementId member, ElementId owner) const;
  /// Elements whose SN contains e (the star of e), sorted. Contains e.
  const std::vector<ElementId>& star(ElementId e) const;
  /// Optional display name; element id rendered as decimal when unnamed.
  std::string name(ElementId e) const;
  bool has_names() const { return !names_.empty(); }

  void check_element(ElementId e) const;

 private:
  std::vector<std::vector<ElementId>> sn_;
  std::vector<std::vector<ElementId>> star_;
  std::vector<std::string> names_;
};

struct RelationProperties {
  bool antisymmetric = false;
  bool bounding_transitive = false;
  /// pair (a,b), a != b, with a in SN(b) and b in SN(a)
  std::optional<std::pair<ElementId, ElementId>> symmetry_witness;
  /// triple (a,b,c) with b in SN(a), c in SN(b), c not in SN(a)
  std::optional<std::array<ElementId, 3>> transitivity_witness;
};

struct Extrema {
  std::vector<ElementId> minima;  // bounded by no other element
  std::vector<ElementId> maxima;  // bound no other element
};

struct AxiomReport {
  bool axiom1 = true;  // holds by construction of LFSpace
  bool axiom2 = false;
  bool axiom3 = false;
  bool axiom4 = false;
  bool t0 = false;
  std::optional<std::pair<ElementId, ElementId>> axiom3_witness;
  std::optional<std::array<ElementId, 3>> axiom4_witness;
  /// element whose smallest neighborhood holds no maximal element; the other
  /// way frontier idempotence can break
  std::optional<ElementId> axiom4_max_witness;
  std::optional<std::pair<ElementId, ElementId>> t0_witness;
  // Subset-enumeration route, filled only on request for small spaces.
  std::optional<bool> axiom3_by_subsets;
  std::optional<bool> axiom4_by_subsets;
  std::optional<std::vector<ElementId>> axiom3_subset_witness;
  std::optional<std::vector<ElementId>> axiom4_subset_witness;

  bool all_passed() const { return axiom1 && axiom2 && axiom3 && axiom4 && t0; }
};

const std::vector<ElementId>& smallest_neighborhood(const LFSpace& space, ElementId e);

bool incident(const LFSpace& space, ElementId a, ElementId b);

/// Maximal incidence-connected subsets of the mask, each sorted; the list is
/// ordered by smallest member.
std::vector<std::vector<ElementId>> components(const LFSpace& space, const SubsetMask& subset);

/// Elements whose SN meets both the subset and its complement.
SubsetMask frontier(const LFSpace& space, const SubsetMask& subset);

/// Frontier of `part` computed inside the subspace `within` (neighborhoods
/// restricted to `within`). Requires part to be a subset of within.
SubsetMask frontier_within(const LFSpace& space, const SubsetMask& part, const SubsetMask& within);

/// Unordered frontier pairs (a,b) with mutual SN membership and exactly one
/// of a,b in the subset. Empty result means the frontier is thin.
std::vector<std::pair<ElementId, ElementId>> opponents(const LFSpace& space,
                                                       const SubsetMask& subset);

/// Cl(part, within): part plus every element of `within` bounding a member
/// of part. Requires part to be a subset of within.
SubsetMask closure(const LFSpace& space, const SubsetMask& part, const SubsetMask& within);

/// Int(part, within) = part minus the frontier of part inside `within`.
SubsetMask interior(const LFSpace& space, const SubsetMask& part, const SubsetMask& within);

/// True iff the subset contains no element of its frontier. Agrees with the
/// smallest-neighborhood containment criterion; both routes are compared in
/// debug builds.
bool is_open(const LFSpace& space, const SubsetMask& subset);

/// The containment criterion alone: SN(a) inside the subset for every member a.
bool is_open_by_sn_containment(const LFSpace& space, const SubsetMask& subset);

RelationProperties relation_properties(const LFSpace& space);

/// Length of the longest bounding chain ending at e, with a < b meaning
/// a != b and b in SN(a). Throws std::domain_error if the bounding relation
/// has a cycle.
int dimension(const LFSpace& space, ElementId e);

/// Dimensions of all elements at once.
std::vector<int> dimensions(const LFSpace& space);

Extrema extrema(const LFSpace& space);

/// Axiom 2 directly; axiom 3 via antisymmetry of the neighborhood relation;
/// axiom 4 via its exact polynomial criterion: neighborhood nesting plus a
/// maximal element inside every smallest neighborhood. T0 via the smallest
/// open neighborhoods. When `exhaustive` and the space has at most 16
/// elements, axioms 3 and 4 are additionally checked by enumerating every
/// subset; the routes agree by construction.
AxiomReport verify_axioms(const LFSpace& space, bool exhaustive = false);

}  // namespace lftopo
