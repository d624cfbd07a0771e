#include "theoremlab.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "errors.hpp"

namespace autkit {

PermGroup lift_transposition_graph_symmetries(const CayleyGraph& g) {
  if (!g.transposition_graph_connected())
    fail(Errc::disconnected,
         "lifting requires a connected transposition graph");
  const TranspositionSet& s = g.generating_set();
  SimpleGraph t = transposition_graph(s);
  AutResult aut_t = automorphism_group(t);
  std::vector<Perm> elems = aut_t.group.elements();

  uint64_t nv = g.num_vertices();
  std::vector<Perm> lifted;
  lifted.reserve(elems.size());
  std::vector<uint32_t> images(nv);
  for (const Perm& pi : elems) {
    if (pi.is_identity()) continue;
    for (uint64_t v = 0; v < nv; ++v)
      images[v] = static_cast<uint32_t>(g.index_of(conjugate(g.perm_at(v), pi)));
    Perm map = Perm::from_images(images);
    if (!g.preserves_adjacency(map))
      fail(Errc::internal_error, "lifted relabelling map broke an edge");
    lifted.push_back(std::move(map));
  }
  return PermGroup(static_cast<uint32_t>(nv), lifted);
}

PermGroup lift_transposition_graph_symmetries(const TranspositionSet& s,
                                              uint64_t budget_vertices) {
  return lift_transposition_graph_symmetries(CayleyGraph(s, budget_vertices));
}

Prediction predict(const TranspositionSet& s) {
  SimpleGraph t = transposition_graph(s);
  if (!t.is_connected())
    fail(Errc::disconnected,
         "predictions require a connected transposition graph");

  Prediction p;
  p.family = recognize_family(s);
  uint32_t n = s.points();
  auto nf = GroupOrder::factorial(n);

  switch (p.family.family) {
    case GraphFamily::star:
      p.order = GroupOrder::factorial(n - 1) * nf;
      p.normal = Normality::normal;
      p.rule = "star-set";
      p.description =
          "set symmetries of order (n-1)! extending the right translations";
      return p;
    case GraphFamily::path:
      p.order = GroupOrder(2) * nf;
      p.normal = Normality::normal;
      p.rule = "path-set";
      p.description =
          "the order-2 path reversal extending the right translations";
      return p;
    case GraphFamily::cycle:
      if (n == 4) {
        p.order = GroupOrder(768);
        p.normal = Normality::not_normal;
        p.rule = "cycle-4";
        p.description =
            "the 4-cycle set gains extra symmetries beyond the dihedral "
            "lift; the translations are not normal";
        return p;
      }
      if (n >= 5) {
        p.order = GroupOrder(2 * n) * nf;
        p.normal = Normality::normal;
        p.rule = "cycle-n";
        p.description =
            "dihedral set symmetries of order 2n extending the right "
            "translations";
        return p;
      }
      break;  // the 3-cycle is a triangle; no prediction
    case GraphFamily::tree:
    case GraphFamily::triangle_and_square_free: {
      GroupOrder aut_t = automorphism_group(t).order;
      bool is_tree = p.family.family == GraphFamily::tree;
      if (is_tree && aut_t == GroupOrder::one()) {
        p.order = nf;
        p.normal = Normality::normal;
        p.rule = "asymmetric-tree";
        p.description = "right translations only";
        return p;
      }
      p.order = aut_t * nf;
      p.normal = Normality::normal;
      p.rule = is_tree ? "tree-set" : "forbidden-short-cycles";
      p.description =
          "set symmetries extending the right translations (no triangles "
          "or 4-cycles in the set graph)";
      return p;
    }
    default:
      break;
  }
  p.normal = Normality::unknown;
  p.rule = "none";
  p.description = "no prediction for this set shape";
  return p;
}

namespace {

uint64_t generator_vertex(const CayleyGraph& g, const Perm& t) {
  if (!g.generating_set().contains(t))
    fail(Errc::generator_not_in_set,
         "census transposition " + format_cycles(t) +
             " is not in the generating set");
  return g.index_of(t);
}

// Neighbor lists fetched on demand; censuses only ever touch the radius-3
// ball around the identity.
class NeighborCache {
 public:
  explicit NeighborCache(const CayleyGraph& g) : g_(g) {}

  const std::vector<uint64_t>& of(uint64_t v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(v, g_.neighbor_indices(v)).first->second;
  }

 private:
  const CayleyGraph& g_;
  std::unordered_map<uint64_t, std::vector<uint64_t>> cache_;
};

}  // namespace

uint64_t four_cycle_census(const CayleyGraph& g, const Perm& t,
                           const Perm& k) {
  if (t == k) fail(Errc::invalid_argument, "census needs two distinct generators");
  uint64_t tv = generator_vertex(g, t);
  uint64_t kv = generator_vertex(g, k);
  // A 4-cycle through e, t and k must visit them as e-t-x-k: two distinct
  // generator vertices are never adjacent (their quotient is not a
  // transposition), so t and k flank e and the count is the number of
  // common neighbors x other than e.
  std::vector<uint64_t> nt = g.neighbor_indices(tv);
  std::vector<uint64_t> nk = g.neighbor_indices(kv);
  std::sort(nt.begin(), nt.end());
  std::sort(nk.begin(), nk.end());
  std::vector<uint64_t> common;
  std::set_intersection(nt.begin(), nt.end(), nk.begin(), nk.end(),
                        std::back_inserter(common));
  uint64_t count = 0;
  for (uint64_t x : common)
    if (x != 0) ++count;
  return count;
}

CycleCensus six_cycle_census(const CayleyGraph& g, const Perm& t,
                             const Perm& k) {
  CycleCensus census;
  census.four_cycles = four_cycle_census(g, t, k);
  uint64_t tv = g.index_of(t);
  uint64_t kv = g.index_of(k);
  const std::vector<uint16_t>& dist = g.distances_from_identity();
  NeighborCache nb(g);

  std::unordered_set<uint64_t> d3_vertices;
  // Walks e-v1-v2-v3-v4-v5-e with distinct vertices; v1 < v5 picks one of
  // the two traversal directions of each cycle.
  for (uint64_t v1 : nb.of(0)) {
    for (uint64_t v2 : nb.of(v1)) {
      if (v2 == 0) continue;
      for (uint64_t v3 : nb.of(v2)) {
        if (v3 == 0 || v3 == v1) continue;
        for (uint64_t v4 : nb.of(v3)) {
          if (v4 == 0 || v4 == v1 || v4 == v2 || dist[v4] > 2) continue;
          for (uint64_t v5 : nb.of(v4)) {
            if (dist[v5] != 1 || v5 == v1 || v5 == v2 || v5 == v3) continue;
            if (v1 >= v5) continue;
            const uint64_t cyc[5] = {v1, v2, v3, v4, v5};
            bool has_t = false, has_k = false;
            for (uint64_t v : cyc) {
              if (v == tv) has_t = true;
              if (v == kv) has_k = true;
            }
            if (!has_t || !has_k) continue;
            bool has_d3 = false;
            for (uint64_t v : cyc)
              if (dist[v] == 3) has_d3 = true;
            if (!has_d3) continue;
            ++census.six_cycles;
            for (uint64_t v : cyc)
              if (dist[v] == 3) d3_vertices.insert(v);
          }
        }
      }
    }
  }
  census.distance3_vertices = d3_vertices.size();
  return census;
}

CensusCriterion census_criterion(const CayleyGraph& g) {
  CensusCriterion result;
  std::vector<Perm> gens = g.generating_set().perms();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      const Perm& t = gens[i];
      const Perm& k = gens[j];
      bool commute = compose(t, k) == compose(k, t);
      bool pass;
      if (commute) {
        pass = four_cycle_census(g, t, k) == 1;
      } else {
        CycleCensus c = six_cycle_census(g, t, k);
        pass = c.four_cycles != 1 && c.six_cycles == 1;
      }
      if (!pass) {
        result.holds = false;
        result.failing.emplace_back(t, k);
      }
    }
  return result;
}

bool check_normal(const CayleyGraph& g, const AutResult& aut) {
  return g.right_translations().is_normal_in(aut.group);
}

VerifyReport verify_prediction(const TranspositionSet& s,
                               uint64_t budget_vertices) {
  Prediction pred = predict(s);
  CayleyGraph g(s, budget_vertices);

  AutSearchOptions opt;
  opt.max_vertices = static_cast<uint32_t>(g.num_vertices());
  AutResult aut = automorphism_group_seeded(
      g.to_simple_graph(), g.right_translation_generators(), opt);

  VerifyReport report;
  report.computed_order = aut.order;
  report.computed_normal = check_normal(g, aut);
  if (pred.order.has_value()) {
    bool order_ok = *pred.order == aut.order;
    bool normal_ok = pred.normal == (report.computed_normal
                                         ? Normality::normal
                                         : Normality::not_normal);
    report.agree = order_ok && normal_ok;
  } else {
    report.agree = true;
    report.computed_only = true;
  }
  report.predicted = std::move(pred);
  return report;
}

const char* normality_name(Normality n) {
  switch (n) {
    case Normality::normal:
      return "normal";
    case Normality::not_normal:
      return "not_normal";
    case Normality::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

nlohmann::json prediction_to_json(const Prediction& p) {
  nlohmann::json j;
  j["family"] = family_name(p.family.family);
  if (p.order.has_value())
    j["predicted_order"] = p.order->to_decimal();
  else
    j["predicted_order"] = nullptr;
  j["normal"] = normality_name(p.normal);
  j["rule"] = p.rule;
  j["description"] = p.description;
  return j;
}

}  // namespace

std::string prediction_json(const Prediction& p) {
  return prediction_to_json(p).dump(2);
}

std::string census_json(const CycleCensus& c) {
  nlohmann::json j;
  j["four_cycles"] = c.four_cycles;
  j["six_cycles"] = c.six_cycles;
  j["distance3_vertices"] = c.distance3_vertices;
  return j.dump(2);
}

std::string criterion_json(const CensusCriterion& c) {
  nlohmann::json j;
  j["holds"] = c.holds;
  nlohmann::json failing = nlohmann::json::array();
  for (const auto& [t, k] : c.failing)
    failing.push_back({format_cycles(t), format_cycles(k)});
  j["failing_pairs"] = failing;
  return j.dump(2);
}

std::string verify_report_json(const VerifyReport& r) {
  nlohmann::json j;
  j["prediction"] = prediction_to_json(r.predicted);
  j["computed_order"] = r.computed_order.to_decimal();
  j["computed_normal"] = r.computed_normal;
  j["agree"] = r.agree;
  j["computed_only"] = r.computed_only;
  return j.dump(2);
}

}  // namespace autkit
