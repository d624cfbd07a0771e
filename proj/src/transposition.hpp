#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "perm.hpp"
#include "permgroup.hpp"

namespace autkit {

// A set of transpositions of the points 1..n, kept as sorted unordered
// pairs (i, j) with i < j. The associated transposition graph has one edge
// per pair, on vertices 0..n-1 (vertex v standing for point v+1).
class TranspositionSet {
 public:
  TranspositionSet(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> pairs);

  // Accepts "(1,2)(2,3)" or "(1,2) (2,3)". With n = 0 the degree is inferred
  // as the largest point mentioned.
  static TranspositionSet parse(std::string_view text, uint32_t n = 0);
  static TranspositionSet from_json(std::string_view json_text, uint32_t n = 0);
  static TranspositionSet from_graph(const SimpleGraph& g);

  uint32_t points() const { return n_; }
  size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<uint32_t, uint32_t>>& pairs() const {
    return pairs_;
  }

  std::vector<Perm> perms() const;
  bool contains(const Perm& t) const;

  std::string format() const;          // "(1,2)(2,3)"
  std::string to_json_string() const;  // [[1,2],[2,3]]

  friend bool operator==(const TranspositionSet&,
                         const TranspositionSet&) = default;

 private:
  uint32_t n_;
  std::vector<std::pair<uint32_t, uint32_t>> pairs_;
};

SimpleGraph transposition_graph(const TranspositionSet& s);

// True iff the transposition graph is connected, which is equivalent to the
// set generating the full symmetric group on its points.
bool generates_full_symmetric(const TranspositionSet& s);
// True iff the transposition graph is a tree (minimal generating set).
bool is_minimal_generating(const TranspositionSet& s);

enum class GraphFamily {
  star,
  path,
  cycle,
  matching,
  complete,
  complete_bipartite,
  tree,
  triangle_and_square_free,
  other,
};

struct FamilyTag {
  GraphFamily family = GraphFamily::other;
  // Family parameters: star/path/cycle/complete carry the point count in a;
  // matching carries the edge count in a; complete_bipartite carries the two
  // part sizes in a and b.
  uint32_t a = 0;
  uint32_t b = 0;
};

// Most specific structural match, tested in the declaration order of
// GraphFamily. Invariant under relabelling of the points.
FamilyTag recognize_family(const TranspositionSet& s);
const char* family_name(GraphFamily f);

// The group generated by the set, acting on 1..n.
PermGroup group_of(const TranspositionSet& s);

// Stock generating sets.
namespace tsets {
// {(1,i) : 2 <= i <= n}; the transposition graph is the star K_{1,n-1}.
TranspositionSet star(uint32_t n);
// {(i,i+1)}; the transposition graph is the path P_n.
TranspositionSet path(uint32_t n);
// Path plus (1,n); the transposition graph is the cycle C_n, n >= 3.
TranspositionSet cycle(uint32_t n);
// {(1,2),(3,4),...}; n even; the transposition graph is a perfect matching.
TranspositionSet matching(uint32_t n);
// All transpositions of 1..n.
TranspositionSet complete(uint32_t n);
// A spider tree with legs of lengths 1, 2 and n-4 hanging off point 1.
// For n >= 7 the three lengths are distinct, so the tree has no nontrivial
// symmetry.
TranspositionSet asymmetric_tree(uint32_t n);
}  // namespace tsets

}  // namespace autkit
