#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "group_order.hpp"
#include "perm.hpp"
#include "permgroup.hpp"

namespace autkit {

struct AutSearchOptions {
  // Hard cap on the vertex count accepted by the search.
  uint32_t max_vertices = 5000;
  // Backtracking budget; exceeding it raises search_bound_exceeded.
  uint64_t max_nodes = 50000000;
};

// Automorphism group of a graph, as permutations of the vertex indices
// (points 1..V stand for vertices 0..V-1).
struct AutResult {
  PermGroup group;
  GroupOrder order;
  GroupOrder stabilizer_order;  // automorphisms fixing vertex 0
  uint64_t orbit_size = 1;      // orbit of vertex 0
  std::vector<uint32_t> base_vertices;
  std::vector<uint64_t> level_orbit_sizes;
  uint64_t nodes = 0;  // search tree size
};

AutResult automorphism_group(const SimpleGraph& g,
                             const AutSearchOptions& options = {});

// Same search, pre-seeded with automorphisms that are already known (they
// are re-verified against the edge set before use). With a transitive seed
// group the top-level orbit needs no backtracking at all; this is the fast
// path for Cayley graphs, whose right translations are known automorphisms.
AutResult automorphism_group_seeded(const SimpleGraph& g,
                                    const std::vector<Perm>& seeds,
                                    const AutSearchOptions& options = {});

PermGroup vertex_stabilizer(const SimpleGraph& g, uint32_t v,
                            const AutSearchOptions& options = {});

bool is_vertex_transitive(const SimpleGraph& g,
                          const AutSearchOptions& options = {});

// Vertex bijection carrying the edge set of g1 exactly onto that of g2,
// if one exists; result[v] is the image of v.
std::optional<std::vector<uint32_t>> find_isomorphism(
    const SimpleGraph& g1, const SimpleGraph& g2, uint32_t max_vertices = 2000);
bool is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2,
                   uint32_t max_vertices = 2000);

std::string aut_result_json(const AutResult& r);

}  // namespace autkit
