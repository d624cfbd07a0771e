#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "group_order.hpp"
#include "perm.hpp"

namespace autkit {

// Base and strong generating set for a permutation group, built with a
// deterministic incremental Schreier-Sims procedure. Transversals are kept
// as Schreier vectors (parent point + generator index); coset representatives
// are reconstructed by walking the tree.
class StabilizerChain {
 public:
  StabilizerChain(uint32_t degree, const std::vector<Perm>& generators);

  uint32_t degree() const { return degree_; }
  GroupOrder order() const;
  bool contains(const Perm& p) const;

  // Strips p through the chain starting at level `start`. Returns the residue
  // and the level at which stripping stopped (levels() when fully stripped;
  // the residue is the identity exactly when p is in the group, for start 0).
  std::pair<Perm, size_t> sift_from(Perm p, size_t start) const;

  size_t levels() const { return levels_.size(); }
  // All coset representatives of one level, in orbit (BFS) order.
  std::vector<Perm> transversal(size_t level) const;
  // 0-based base points, one per level.
  std::vector<uint32_t> base_points() const;
  // Fundamental orbit sizes, one per level; their product is the order.
  std::vector<uint64_t> orbit_sizes() const;

 private:
  struct Level {
    uint32_t base = 0;
    std::vector<Perm> gens;
    std::vector<Perm> inv_gens;
    std::vector<uint32_t> orbit;  // BFS order, orbit[0] == base
    std::vector<int32_t> parent_gen;
    std::vector<uint32_t> parent_point;
    std::vector<uint8_t> in_orbit;
  };

  void push_level(uint32_t base);
  void rebuild_orbit(size_t level);
  Perm rep(size_t level, uint32_t point) const;
  void add_to_levels(const Perm& g, size_t first, size_t last);
  void verify();

  uint32_t degree_;
  std::vector<Level> levels_;
};

// A finite permutation group on the points 1..degree given by generators.
class PermGroup {
 public:
  PermGroup(uint32_t degree, std::vector<Perm> generators);

  static PermGroup trivial(uint32_t degree);
  static PermGroup symmetric(uint32_t n);

  uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  GroupOrder order() const { return chain_.order(); }
  bool contains(const Perm& p) const { return chain_.contains(p); }
  bool is_trivial() const { return order() == 1; }

  std::vector<uint32_t> base_points() const { return chain_.base_points(); }
  std::vector<uint64_t> transversal_sizes() const {
    return chain_.orbit_sizes();
  }

  // Every element, one Perm each. Throws order_exceeds_cap when the group
  // order is above `cap`.
  std::vector<Perm> elements(uint64_t cap = 1u << 20) const;

  bool is_subgroup_of(const PermGroup& g) const;
  // True when this group is a normal subgroup of g. Throws not_a_subgroup
  // if it is not contained in g at all.
  bool is_normal_in(const PermGroup& g) const;
  bool same_group_as(const PermGroup& g) const;

 private:
  uint32_t degree_;
  std::vector<Perm> generators_;
  StabilizerChain chain_;
};

// Acts on the disjoint union of the two point sets, a's points first.
// The result has degree a.degree() + b.degree() and order |a| * |b|.
PermGroup direct_sum(const PermGroup& a, const PermGroup& b);

// Wreath product a[b] in its imprimitive action on pairs (x, y), encoded as
// point x * b.degree() + y. Order |a| * |b| ^ a.degree().
PermGroup wreath(const PermGroup& a, const PermGroup& b);

}  // namespace autkit
