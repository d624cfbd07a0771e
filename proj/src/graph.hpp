#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace autkit {

// Undirected simple graph on vertices 0..n-1. Edges are kept sorted with
// each pair (u, v) normalized to u < v; adjacency lists are sorted too.
// Vertices may carry optional text labels.
class SimpleGraph {
 public:
  SimpleGraph(uint32_t num_vertices,
              std::vector<std::pair<uint32_t, uint32_t>> edges);

  uint32_t num_vertices() const { return n_; }
  uint32_t num_edges() const { return static_cast<uint32_t>(edges_.size()); }
  const std::vector<std::pair<uint32_t, uint32_t>>& edges() const {
    return edges_;
  }
  const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj_[v]; }
  uint32_t degree_of(uint32_t v) const {
    return static_cast<uint32_t>(adj_[v].size());
  }
  bool has_edge(uint32_t u, uint32_t v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(uint32_t v) const;
  void set_labels(std::vector<std::string> labels);

  bool is_connected() const;
  // Vertex sets of the connected components, each sorted, ordered by their
  // smallest vertex.
  std::vector<std::vector<uint32_t>> connected_components() const;
  // Non-increasing degree sequence.
  std::vector<uint32_t> degree_sequence() const;
  bool is_regular() const;

 private:
  uint32_t n_;
  std::vector<std::pair<uint32_t, uint32_t>> edges_;
  std::vector<std::vector<uint32_t>> adj_;
  std::vector<std::string> labels_;
};

// Named families.
SimpleGraph complete_graph(uint32_t n);
SimpleGraph complete_bipartite_graph(uint32_t a, uint32_t b);
// Star on n vertices: vertex 0 joined to each of 1..n-1.
SimpleGraph star_graph(uint32_t n);
SimpleGraph path_graph(uint32_t n);
SimpleGraph cycle_graph(uint32_t n);
// m disjoint edges on 2m vertices: (0,1), (2,3), ...
SimpleGraph matching_graph(uint32_t m);
// Vertices are the d-bit strings in binary order, labelled as such; two
// vertices are adjacent when the strings differ in exactly one bit.
SimpleGraph hypercube_graph(uint32_t d);
// Vertices are the k-subsets of {1..n} in lexicographic order, labelled
// "{a,b,...}"; two subsets are adjacent when their intersection has size i.
SimpleGraph johnson_style_graph(uint32_t n, uint32_t k, uint32_t i);
SimpleGraph kneser_graph(uint32_t n, uint32_t k);  // intersection size 0
SimpleGraph petersen_graph();
SimpleGraph octahedron_graph();

// Dispatch by family name for the command line: complete, complete_bipartite,
// star, path, cycle, matching, hypercube, kneser, johnson, petersen,
// octahedron. Unused parameters may stay nullopt when the family ignores them.
SimpleGraph make_named_graph(const std::string& name,
                             std::optional<uint32_t> n,
                             std::optional<uint32_t> k,
                             std::optional<uint32_t> i);

SimpleGraph complement(const SimpleGraph& g);
// Vertices of the result are the edges of g in sorted order, labelled "u-v";
// two of them are adjacent when the edges share an endpoint.
SimpleGraph line_graph(const SimpleGraph& g);
SimpleGraph disjoint_copies(const SimpleGraph& g, uint32_t copies);

// Number of vertex subsets of the given size inducing a complete subgraph.
uint64_t count_cliques(const SimpleGraph& g, uint32_t size);

struct GirthData {
  uint32_t girth = 0;  // 0 when the graph has no cycle
  bool triangle_free = true;
  bool square_free = true;  // no cycle of length 4
};

GirthData girth_data(const SimpleGraph& g);

// Serialization.
std::string to_dot(const SimpleGraph& g);
std::string to_json_string(const SimpleGraph& g);
// Plain text: first non-comment line is the vertex count, then one "u v"
// pair per line. '#' starts a comment.
std::string format_edge_list(const SimpleGraph& g);
SimpleGraph parse_edge_list(std::string_view text);

}  // namespace autkit
