#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"
#include "group_order.hpp"
#include "perm.hpp"
#include "permgroup.hpp"
#include "transposition.hpp"

namespace autkit {

// The Cayley graph of Gr(S) with respect to a transposition set S, where
// Gr(S) is the group generated by S: the direct product of the symmetric
// groups on the connected components of the transposition graph. Vertices
// are group elements; the neighbors of g are {s*g : s in S} (apply s first,
// then g). Since every s is an involution the graph is undirected, and it is
// always connected on its vertex set Gr(S).
//
// Vertices are indexed without any element table: each element restricts to
// a permutation of every component, the restriction is ranked by its Lehmer
// code, and the per-component ranks combine in a mixed-radix number.
// The identity is vertex 0. Adjacency is computed on demand; nothing of
// size |Gr(S)| is stored except the BFS distance array.
class CayleyGraph {
 public:
  CayleyGraph(TranspositionSet s, uint64_t budget_vertices = 1000000);

  const TranspositionSet& generating_set() const { return set_; }
  uint32_t points() const { return set_.points(); }
  uint64_t num_vertices() const { return num_vertices_; }
  // Every vertex has exactly |S| neighbors.
  uint32_t regular_degree() const { return static_cast<uint32_t>(set_.size()); }
  GroupOrder group_order() const;
  bool transposition_graph_connected() const { return t_connected_; }

  uint64_t index_of(const Perm& g) const;
  Perm perm_at(uint64_t v) const;
  std::vector<uint64_t> neighbor_indices(uint64_t v) const;
  bool adjacent(uint64_t x, uint64_t y) const;

  const std::vector<uint16_t>& distances_from_identity() const;
  uint32_t diameter() const;
  // Vertices at BFS distance exactly d from the identity.
  std::vector<uint64_t> sphere(uint32_t d) const;
  // Count of vertices per distance, index = distance.
  std::vector<uint64_t> level_sizes() const;

  // The right-translation maps v -> v*s for s in S, as permutations of the
  // vertex indices; they generate the regular representation of Gr(S) inside
  // the automorphism group. Each generator is checked against the edge set.
  std::vector<Perm> right_translation_generators() const;
  PermGroup right_translations() const;

  // True when the vertex permutation maps every edge to an edge.
  bool preserves_adjacency(const Perm& vertex_perm) const;

  // Explicit form with cycle-notation vertex labels.
  SimpleGraph to_simple_graph() const;

  std::string summary_json(bool with_diameter = false) const;

 private:
  uint64_t rank_component(size_t c, const std::vector<uint32_t>& images) const;
  void unrank_component(size_t c, uint64_t rank,
                        std::vector<uint32_t>& images) const;

  TranspositionSet set_;
  bool t_connected_ = false;
  std::vector<std::vector<uint32_t>> components_;  // sorted 0-based points
  std::vector<uint32_t> comp_of_point_;
  std::vector<uint32_t> pos_in_comp_;
  std::vector<std::vector<uint64_t>> factorials_;  // per component, 0!..m!
  std::vector<uint64_t> weights_;                  // mixed-radix weights
  uint64_t num_vertices_ = 1;
  mutable std::vector<uint16_t> dist_;  // lazy BFS result
};

}  // namespace autkit
