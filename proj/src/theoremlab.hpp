#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autsearch.hpp"
#include "cayley.hpp"
#include "group_order.hpp"
#include "perm.hpp"
#include "permgroup.hpp"
#include "transposition.hpp"

namespace autkit {

// Every symmetry of the transposition graph induces a symmetry of the Cayley
// graph: relabel the points of each vertex permutation. The lifted maps all
// fix the identity vertex and permute the generating set, and each one is
// verified edge-by-edge before it is returned. Requires a connected
// transposition graph.
PermGroup lift_transposition_graph_symmetries(const CayleyGraph& g);
PermGroup lift_transposition_graph_symmetries(const TranspositionSet& s,
                                              uint64_t budget_vertices = 1000000);

enum class Normality { normal, not_normal, unknown };

// What the automorphism group of Cay(Gr(S), S) should look like, read off
// from the shape of the transposition graph alone.
struct Prediction {
  FamilyTag family;
  std::optional<GroupOrder> order;  // empty: no prediction for this shape
  Normality normal = Normality::unknown;
  std::string rule;  // stable key naming the rule that fired
  std::string description;
};

// Shape-based prediction table. A connected transposition graph is required;
// shapes outside the table yield an order-less "unknown" prediction.
Prediction predict(const TranspositionSet& s);

// Counts of short cycles through the identity vertex e and the two
// generator vertices t, k. Cycles are vertex cycles, counted once up to
// rotation and reflection. six_cycles only counts 6-cycles that also pass
// through a vertex at distance 3 from e; distance3_vertices is the number
// of distinct such vertices over all counted 6-cycles.
struct CycleCensus {
  uint64_t four_cycles = 0;
  uint64_t six_cycles = 0;
  uint64_t distance3_vertices = 0;
};

uint64_t four_cycle_census(const CayleyGraph& g, const Perm& t, const Perm& k);
CycleCensus six_cycle_census(const CayleyGraph& g, const Perm& t,
                             const Perm& k);

// The local cycle structure around the identity pins down commutation when
// it holds: a commuting generator pair must lie on exactly one 4-cycle
// through e, and a non-commuting pair must avoid that count and lie on
// exactly one distance-3 6-cycle. `failing` lists the pairs that break the
// rule.
struct CensusCriterion {
  bool holds = true;
  std::vector<std::pair<Perm, Perm>> failing;
};

CensusCriterion census_criterion(const CayleyGraph& g);

// Whether the right translations form a normal subgroup of the computed
// automorphism group.
bool check_normal(const CayleyGraph& g, const AutResult& aut);

struct VerifyReport {
  Prediction predicted;
  GroupOrder computed_order;
  bool computed_normal = false;
  bool agree = true;
  bool computed_only = false;  // no prediction existed; computed values only
};

// Build the Cayley graph, run the automorphism search, and compare against
// the prediction table. budget_vertices bounds the graph size.
VerifyReport verify_prediction(const TranspositionSet& s,
                               uint64_t budget_vertices = 1000000);

const char* normality_name(Normality n);
std::string prediction_json(const Prediction& p);
std::string census_json(const CycleCensus& c);
std::string criterion_json(const CensusCriterion& c);
std::string verify_report_json(const VerifyReport& r);

}  // namespace autkit
