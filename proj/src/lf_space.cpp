#include "lftopo/lf_space.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <string>

namespace lftopo {

SubsetMask SubsetMask::from_elements(std::size_t n, const std::vector<ElementId>& elems) {
  SubsetMask m(n);
  for (ElementId e : elems) {
    if (e >= n) throw std::out_of_range("mask element out of range");
    m.set(e);
  }
  return m;
}

std::size_t SubsetMask::count() const {
  std::size_t c = 0;
  for (char b : bits_) c += b != 0;
  return c;
}

SubsetMask SubsetMask::complement() const {
  SubsetMask m(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) m.bits_[i] = bits_[i] ? 0 : 1;
  return m;
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  if (bits_.size() != other.bits_.size()) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

std::vector<ElementId> SubsetMask::elements() const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<ElementId>(i));
  return out;
}

LFSpace::LFSpace(std::vector<std::vector<ElementId>> sn, std::vector<std::string> names)
    : sn_(std::move(sn)), names_(std::move(names)) {
  if (sn_.empty()) throw std::invalid_argument("a space needs at least one element");
  if (!names_.empty() && names_.size() != sn_.size())
    throw std::invalid_argument("name table length mismatch");
  const auto n = static_cast<ElementId>(sn_.size());
  star_.assign(n, {});
  for (ElementId e = 0; e < n; ++e) {
    auto& nb = sn_[e];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    if (!nb.empty() && nb.back() >= n)
      throw std::invalid_argument("SN(" + std::to_string(e) + ") references unknown element");
    if (!std::binary_search(nb.begin(), nb.end(), e))
      throw std::invalid_argument("SN(" + std::to_string(e) + ") must contain the element itself");
    for (ElementId m : nb) star_[m].push_back(e);
  }
}

void LFSpace::check_element(ElementId e) const {
  if (e >= sn_.size()) throw std::out_of_range("element id out of range");
}

const std::vector<ElementId>& LFSpace::sn(ElementId e) const {
  check_element(e);
  return sn_[e];
}

bool LFSpace::in_sn(ElementId member, ElementId owner) const {
  check_element(member);
  check_element(owner);
  const auto& nb = sn_[owner];
  return std::binary_search(nb.begin(), nb.end(), member);
}

const std::vector<ElementId>& LFSpace::star(ElementId e) const {
  check_element(e);
  return star_[e];
}

std::string LFSpace::name(ElementId e) const {
  check_element(e);
  if (!names_.empty()) return names_[e];
  return std::to_string(e);
}

const std::vector<ElementId>& smallest_neighborhood(const LFSpace& space, ElementId e) {
  return space.sn(e);
}

bool incident(const LFSpace& space, ElementId a, ElementId b) {
  return space.in_sn(a, b) || space.in_sn(b, a);
}

static void check_mask(const LFSpace& space, const SubsetMask& mask) {
  if (mask.size() != space.element_count())
    throw std::invalid_argument("mask length does not match the space");
}

std::vector<std::vector<ElementId>> components(const LFSpace& space, const SubsetMask& subset) {
  check_mask(space, subset);
  const std::size_t n = space.element_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<ElementId>> out;
  for (ElementId e = 0; e < n; ++e) {
    if (!subset.contains(e) || seen[e]) continue;
    std::vector<ElementId> comp;
    std::deque<ElementId> queue{e};
    seen[e] = 1;
    while (!queue.empty()) {
      ElementId u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (const auto* nbrs : {&space.sn(u), &space.star(u)}) {
        for (ElementId v : *nbrs) {
          if (subset.contains(v) && !seen[v]) {
            seen[v] = 1;
            queue.push_back(v);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SubsetMask frontier(const LFSpace& space, const SubsetMask& subset) {
  check_mask(space, subset);
  const std::size_t n = space.element_count();
  SubsetMask fr(n);
  for (ElementId e = 0; e < n; ++e) {
    bool hits = false, misses = false;
    for (ElementId m : space.sn(e)) {
      (subset.contains(m) ? hits : misses) = true;
      if (hits && misses) break;
    }
    if (hits && misses) fr.set(e);
  }
  return fr;
}

SubsetMask frontier_within(const LFSpace& space, const SubsetMask& part, const SubsetMask& within) {
  check_mask(space, part);
  check_mask(space, within);
  if (!part.is_subset_of(within)) throw std::invalid_argument("part must lie inside the subspace");
  SubsetMask fr(space.element_count());
  for (ElementId e : within.elements()) {
    bool hits = false, misses = false;
    for (ElementId m : space.sn(e)) {
      if (!within.contains(m)) continue;
      (part.contains(m) ? hits : misses) = true;
      if (hits && misses) break;
    }
    if (hits && misses) fr.set(e);
  }
  return fr;
}

std::vector<std::pair<ElementId, ElementId>> opponents(const LFSpace& space,
                                                       const SubsetMask& subset) {
  check_mask(space, subset);
  SubsetMask fr = frontier(space, subset);
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId a : fr.elements()) {
    for (ElementId b : space.sn(a)) {
      if (b <= a || !fr.contains(b)) continue;
      if (!space.in_sn(a, b)) continue;
      if (subset.contains(a) != subset.contains(b)) out.emplace_back(a, b);
    }
  }
  return out;
}

SubsetMask closure(const LFSpace& space, const SubsetMask& part, const SubsetMask& within) {
  check_mask(space, part);
  check_mask(space, within);
  if (!part.is_subset_of(within)) throw std::invalid_argument("part must lie inside the subspace");
  SubsetMask out = part;
  for (ElementId a : part.elements()) {
    // b bounds a when a is in SN(b); closure collects those b inside `within`.
    for (ElementId b : space.star(a)) {
      if (b != a && within.contains(b)) out.set(b);
    }
  }
  return out;
}

SubsetMask interior(const LFSpace& space, const SubsetMask& part, const SubsetMask& within) {
  SubsetMask fr = frontier_within(space, part, within);
  SubsetMask out = part;
  for (ElementId e : fr.elements())
    if (out.contains(e)) out.set(e, false);
  return out;
}

bool is_open_by_sn_containment(const LFSpace& space, const SubsetMask& subset) {
  check_mask(space, subset);
  for (ElementId a : subset.elements())
    for (ElementId m : space.sn(a))
      if (!subset.contains(m)) return false;
  return true;
}

bool is_open(const LFSpace& space, const SubsetMask& subset) {
  check_mask(space, subset);
  SubsetMask fr = frontier(space, subset);
  bool open = true;
  for (ElementId e : fr.elements()) {
    if (subset.contains(e)) {
      open = false;
      break;
    }
  }
  assert(open == is_open_by_sn_containment(space, subset));
  return open;
}

RelationProperties relation_properties(const LFSpace& space) {
  RelationProperties props;
  props.antisymmetric = true;
  props.bounding_transitive = true;
  const std::size_t n = space.element_count();
  for (ElementId a = 0; a < n && props.antisymmetric; ++a) {
    for (ElementId b : space.sn(a)) {
      if (b != a && space.in_sn(a, b)) {
        props.antisymmetric = false;
        props.symmetry_witness = {a, b};
        break;
      }
    }
  }
  // Neighborhood nesting: SN(b) inside SN(a) whenever b is in SN(a).
  for (ElementId a = 0; a < n && props.bounding_transitive; ++a) {
    for (ElementId b : space.sn(a)) {
      for (ElementId c : space.sn(b)) {
        if (!space.in_sn(c, a)) {
          props.bounding_transitive = false;
          props.transitivity_witness = {{a, b, c}};
          break;
        }
      }
      if (!props.bounding_transitive) break;
    }
  }
  return props;
}

std::vector<int> dimensions(const LFSpace& space) {
  const std::size_t n = space.element_count();
  // Bounding order a < b iff b in SN(a), a != b. dim(e) is the length of the
  // longest chain ending at e; Kahn order with cycle detection.
  std::vector<int> indeg(n, 0);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b : space.sn(a))
      if (b != a) ++indeg[b];
  std::deque<ElementId> queue;
  for (ElementId e = 0; e < n; ++e)
    if (indeg[e] == 0) queue.push_back(e);
  std::vector<int> dim(n, 0);
  std::size_t processed = 0;
  while (!queue.empty()) {
    ElementId a = queue.front();
    queue.pop_front();
    ++processed;
    for (ElementId b : space.sn(a)) {
      if (b == a) continue;
      dim[b] = std::max(dim[b], dim[a] + 1);
      if (--indeg[b] == 0) queue.push_back(b);
    }
  }
  if (processed != n) throw std::domain_error("bounding relation has a cycle");
  return dim;
}

int dimension(const LFSpace& space, ElementId e) {
  space.check_element(e);
  return dimensions(space)[e];
}

Extrema extrema(const LFSpace& space) {
  Extrema ex;
  const std::size_t n = space.element_count();
  for (ElementId e = 0; e < n; ++e) {
    bool bounded = false;  // some other element bounds e, i.e. e in SN(x), x != e
    for (ElementId x : space.star(e)) {
      if (x != e) {
        bounded = true;
        break;
      }
    }
    if (!bounded) ex.minima.push_back(e);
    if (space.sn(e).size() == 1) ex.maxima.push_back(e);
  }
  return ex;
}

AxiomReport verify_axioms(const LFSpace& space, bool exhaustive) {
  AxiomReport report;
  const std::size_t n = space.element_count();

  for (ElementId e = 0; e < n; ++e) {
    if (space.sn(e).size() > 1) {
      report.axiom2 = true;
      break;
    }
  }

  RelationProperties props = relation_properties(space);
  report.axiom3 = props.antisymmetric;
  report.axiom3_witness = props.symmetry_witness;
  report.axiom4 = props.bounding_transitive;
  report.axiom4_witness = props.transitivity_witness;
  if (report.axiom4) {
    // nesting alone does not force idempotent frontiers: every smallest
    // neighborhood must also reach a maximal element
    for (ElementId e = 0; e < n; ++e) {
      bool has_max = false;
      for (ElementId m : space.sn(e)) {
        if (space.sn(m).size() == 1) {
          has_max = true;
          break;
        }
      }
      if (!has_max) {
        report.axiom4 = false;
        report.axiom4_max_witness = e;
        break;
      }
    }
  }

  report.t0 = true;
  for (ElementId a = 0; a < n && report.t0; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      bool separated = false;
      for (ElementId e = 0; e < n; ++e) {
        if (space.in_sn(a, e) != space.in_sn(b, e)) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        report.t0 = false;
        report.t0_witness = {a, b};
        break;
      }
    }
  }

  if (exhaustive && n <= 16) {
    bool thin_all = true, idem_all = true;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      SubsetMask subset(n);
      for (ElementId e = 0; e < n; ++e)
        if (bits >> e & 1u) subset.set(e);
      if (thin_all && !opponents(space, subset).empty()) {
        thin_all = false;
        report.axiom3_subset_witness = subset.elements();
      }
      if (idem_all) {
        SubsetMask fr = frontier(space, subset);
        if (frontier(space, fr) != fr) {
          idem_all = false;
          report.axiom4_subset_witness = subset.elements();
        }
      }
      if (!thin_all && !idem_all) break;
    }
    report.axiom3_by_subsets = thin_all;
    report.axiom4_by_subsets = idem_all;
  }

  return report;
}

}  // namespace lftopo
