#include "autkit.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "autsearch.hpp"
#include "cayley.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "perm.hpp"
#include "permgroup.hpp"
#include "theoremlab.hpp"
#include "transposition.hpp"

struct autkit_perm {
  autkit::Perm v;
};
struct autkit_tset {
  autkit::TranspositionSet v;
};
struct autkit_graph {
  autkit::SimpleGraph v;
};
struct autkit_cayley {
  autkit::CayleyGraph v;
};
struct autkit_group {
  autkit::PermGroup v;
};
struct autkit_aut {
  autkit::AutResult v;
};

namespace {

thread_local std::string t_last_error;

autkit_status to_status(autkit::Errc code) {
  switch (code) {
    case autkit::Errc::invalid_argument:
      return AUTKIT_ERR_INVALID_ARGUMENT;
    case autkit::Errc::parse_error:
      return AUTKIT_ERR_PARSE;
    case autkit::Errc::degree_mismatch:
      return AUTKIT_ERR_DEGREE_MISMATCH;
    case autkit::Errc::budget_exceeded:
      return AUTKIT_ERR_BUDGET_EXCEEDED;
    case autkit::Errc::order_exceeds_cap:
      return AUTKIT_ERR_ORDER_EXCEEDS_CAP;
    case autkit::Errc::disconnected:
      return AUTKIT_ERR_DISCONNECTED;
    case autkit::Errc::not_a_subgroup:
      return AUTKIT_ERR_NOT_A_SUBGROUP;
    case autkit::Errc::search_bound_exceeded:
      return AUTKIT_ERR_SEARCH_BOUND_EXCEEDED;
    case autkit::Errc::size_limit_exceeded:
      return AUTKIT_ERR_SIZE_LIMIT_EXCEEDED;
    case autkit::Errc::generator_not_in_set:
      return AUTKIT_ERR_GENERATOR_NOT_IN_SET;
    case autkit::Errc::internal_error:
      return AUTKIT_ERR_INTERNAL;
  }
  return AUTKIT_ERR_UNKNOWN;
}

template <typename F>
autkit_status guarded(F&& body) noexcept {
  try {
    body();
    t_last_error.clear();
    return AUTKIT_OK;
  } catch (const autkit::Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return AUTKIT_ERR_UNKNOWN;
  } catch (...) {
    t_last_error = "unknown failure";
    return AUTKIT_ERR_UNKNOWN;
  }
}

void require(bool ok, const char* what) {
  if (!ok) autkit::fail(autkit::Errc::invalid_argument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) autkit::fail(autkit::Errc::internal_error, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

constexpr uint32_t kDefaultSearchBound = 5000;
constexpr uint32_t kDefaultIsoBound = 2000;
constexpr uint64_t kDefaultVertexBudget = 1000000;

autkit::AutSearchOptions search_options(uint32_t max_vertices) {
  autkit::AutSearchOptions opt;
  opt.max_vertices = max_vertices ? max_vertices : kDefaultSearchBound;
  return opt;
}

// Degree 0 means "infer": the largest point named in the text. Works for
// both notations, since an image list of length n must mention n itself.
uint32_t infer_perm_degree(const char* text) {
  uint32_t best = 0;
  for (const char* p = text; *p;) {
    if (std::isdigit(static_cast<unsigned char>(*p))) {
      uint64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(*p))) {
        v = v * 10 + static_cast<uint64_t>(*p - '0');
        if (v > UINT32_MAX) autkit::fail(autkit::Errc::parse_error,
                                         "point too large");
        ++p;
      }
      best = std::max<uint32_t>(best, static_cast<uint32_t>(v));
    } else {
      ++p;
    }
  }
  if (best == 0)
    autkit::fail(autkit::Errc::parse_error, "no points named, cannot infer degree");
  return best;
}

}  // namespace

extern "C" {

const char* autkit_last_error(void) { return t_last_error.c_str(); }

void autkit_string_free(char* s) { std::free(s); }
void autkit_u64_array_free(uint64_t* a) { std::free(a); }
void autkit_u32_array_free(uint32_t* a) { std::free(a); }

void autkit_perm_free(autkit_perm* p) { delete p; }
void autkit_tset_free(autkit_tset* s) { delete s; }
void autkit_graph_free(autkit_graph* g) { delete g; }
void autkit_cayley_free(autkit_cayley* c) { delete c; }
void autkit_group_free(autkit_group* g) { delete g; }
void autkit_aut_free(autkit_aut* a) { delete a; }

/* ---- permutations ------------------------------------------------------ */

autkit_status autkit_perm_parse(const char* text, uint32_t degree,
                                autkit_perm** out) {
  return guarded([&] {
    require(text && out, "null argument");
    uint32_t n = degree ? degree : infer_perm_degree(text);
    *out = new autkit_perm{autkit::parse_perm(text, n)};
  });
}

autkit_status autkit_perm_identity(uint32_t degree, autkit_perm** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new autkit_perm{autkit::Perm::identity(degree)};
  });
}

autkit_status autkit_perm_compose(const autkit_perm* p, const autkit_perm* q,
                                  autkit_perm** out) {
  return guarded([&] {
    require(p && q && out, "null argument");
    *out = new autkit_perm{autkit::compose(p->v, q->v)};
  });
}

autkit_status autkit_perm_inverse(const autkit_perm* p, autkit_perm** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = new autkit_perm{autkit::inverse(p->v)};
  });
}

uint32_t autkit_perm_degree(const autkit_perm* p) {
  return p ? p->v.degree() : 0;
}

uint32_t autkit_perm_image(const autkit_perm* p, uint32_t point) {
  if (!p || point == 0 || point > p->v.degree()) return 0;
  return p->v.image_of(point);
}

int autkit_perm_equal(const autkit_perm* p, const autkit_perm* q) {
  if (!p || !q) return 0;
  return p->v == q->v ? 1 : 0;
}

autkit_status autkit_perm_format(const autkit_perm* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = dup_string(autkit::format_cycles(p->v));
  });
}

/* ---- transposition sets ------------------------------------------------ */

autkit_status autkit_tset_parse(const char* text, uint32_t n,
                                autkit_tset** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new autkit_tset{autkit::TranspositionSet::parse(text, n)};
  });
}

autkit_status autkit_tset_family(const char* family, uint32_t n,
                                 autkit_tset** out) {
  return guarded([&] {
    require(family && out, "null argument");
    std::string f = family;
    autkit::TranspositionSet s = [&] {
      if (f == "star") return autkit::tsets::star(n);
      if (f == "path") return autkit::tsets::path(n);
      if (f == "cycle") return autkit::tsets::cycle(n);
      if (f == "matching") return autkit::tsets::matching(n);
      if (f == "complete") return autkit::tsets::complete(n);
      if (f == "tree") return autkit::tsets::asymmetric_tree(n);
      autkit::fail(autkit::Errc::invalid_argument,
                   "unknown set family '" + f + "'");
    }();
    *out = new autkit_tset{std::move(s)};
  });
}

uint32_t autkit_tset_points(const autkit_tset* s) {
  return s ? s->v.points() : 0;
}

size_t autkit_tset_size(const autkit_tset* s) { return s ? s->v.size() : 0; }

autkit_status autkit_tset_format(const autkit_tset* s, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = dup_string(s->v.format());
  });
}

autkit_status autkit_tset_json(const autkit_tset* s, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = dup_string(s->v.to_json_string());
  });
}

int autkit_tset_connected(const autkit_tset* s) {
  if (!s) return 0;
  return autkit::generates_full_symmetric(s->v) ? 1 : 0;
}

autkit_status autkit_tset_family_name(const autkit_tset* s, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = dup_string(
        autkit::family_name(autkit::recognize_family(s->v).family));
  });
}

autkit_status autkit_tset_graph(const autkit_tset* s, autkit_graph** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = new autkit_graph{autkit::transposition_graph(s->v)};
  });
}

autkit_status autkit_tset_group(const autkit_tset* s, autkit_group** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = new autkit_group{autkit::group_of(s->v)};
  });
}

/* ---- graphs ------------------------------------------------------------ */

autkit_status autkit_graph_named(const char* name, uint32_t n, uint32_t k,
                                 uint32_t i, autkit_graph** out) {
  return guarded([&] {
    require(name && out, "null argument");
    auto opt = [](uint32_t x) {
      return x ? std::optional<uint32_t>(x) : std::nullopt;
    };
    *out = new autkit_graph{
        autkit::make_named_graph(name, opt(n), opt(k), opt(i))};
  });
}

autkit_status autkit_graph_parse(const char* text, autkit_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new autkit_graph{autkit::parse_edge_list(text)};
  });
}

uint32_t autkit_graph_num_vertices(const autkit_graph* g) {
  return g ? g->v.num_vertices() : 0;
}

uint64_t autkit_graph_num_edges(const autkit_graph* g) {
  return g ? g->v.num_edges() : 0;
}

int autkit_graph_has_edge(const autkit_graph* g, uint32_t u, uint32_t v) {
  if (!g || u >= g->v.num_vertices() || v >= g->v.num_vertices()) return 0;
  return g->v.has_edge(u, v) ? 1 : 0;
}

int autkit_graph_is_connected(const autkit_graph* g) {
  return g && g->v.is_connected() ? 1 : 0;
}

autkit_status autkit_graph_complement(const autkit_graph* g,
                                      autkit_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new autkit_graph{autkit::complement(g->v)};
  });
}

autkit_status autkit_graph_line_graph(const autkit_graph* g,
                                      autkit_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new autkit_graph{autkit::line_graph(g->v)};
  });
}

autkit_status autkit_graph_disjoint_copies(const autkit_graph* g,
                                           uint32_t copies,
                                           autkit_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new autkit_graph{autkit::disjoint_copies(g->v, copies)};
  });
}

autkit_status autkit_graph_count_cliques(const autkit_graph* g, uint32_t size,
                                         uint64_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = autkit::count_cliques(g->v, size);
  });
}

autkit_status autkit_graph_girth(const autkit_graph* g, uint32_t* girth,
                                 int* has_triangle, int* has_4cycle) {
  return guarded([&] {
    require(g != nullptr, "null argument");
    autkit::GirthData d = autkit::girth_data(g->v);
    if (girth) *girth = d.girth;
    if (has_triangle) *has_triangle = d.triangle_free ? 0 : 1;
    if (has_4cycle) *has_4cycle = d.square_free ? 0 : 1;
  });
}

autkit_status autkit_graph_isomorphism(const autkit_graph* a,
                                       const autkit_graph* b,
                                       uint32_t max_vertices, int* found,
                                       uint32_t** map) {
  return guarded([&] {
    require(a && b && found, "null argument");
    auto witness = autkit::find_isomorphism(
        a->v, b->v, max_vertices ? max_vertices : kDefaultIsoBound);
    *found = witness.has_value() ? 1 : 0;
    if (witness && map) {
      uint32_t n = a->v.num_vertices();
      auto* buf = static_cast<uint32_t*>(std::malloc(sizeof(uint32_t) * n));
      if (!buf) autkit::fail(autkit::Errc::internal_error, "out of memory");
      std::memcpy(buf, witness->data(), sizeof(uint32_t) * n);
      *map = buf;
    }
  });
}

autkit_status autkit_graph_to_dot(const autkit_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = dup_string(autkit::to_dot(g->v));
  });
}

autkit_status autkit_graph_to_json(const autkit_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = dup_string(autkit::to_json_string(g->v));
  });
}

autkit_status autkit_graph_to_edge_list(const autkit_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = dup_string(autkit::format_edge_list(g->v));
  });
}

/* ---- automorphism search ----------------------------------------------- */

autkit_status autkit_graph_aut(const autkit_graph* g, uint32_t max_vertices,
                               autkit_aut** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new autkit_aut{
        autkit::automorphism_group(g->v, search_options(max_vertices))};
  });
}

autkit_status autkit_graph_is_vertex_transitive(const autkit_graph* g,
                                                uint32_t max_vertices,
                                                int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = autkit::is_vertex_transitive(g->v, search_options(max_vertices))
               ? 1
               : 0;
  });
}

autkit_status autkit_graph_vertex_stabilizer(const autkit_graph* g,
                                             uint32_t vertex,
                                             uint32_t max_vertices,
                                             autkit_group** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new autkit_group{autkit::vertex_stabilizer(
        g->v, vertex, search_options(max_vertices))};
  });
}

autkit_status autkit_aut_order(const autkit_aut* a, char** decimal_out) {
  return guarded([&] {
    require(a && decimal_out, "null argument");
    *decimal_out = dup_string(a->v.order.to_decimal());
  });
}

autkit_status autkit_aut_stabilizer_order(const autkit_aut* a,
                                          char** decimal_out) {
  return guarded([&] {
    require(a && decimal_out, "null argument");
    *decimal_out = dup_string(a->v.stabilizer_order.to_decimal());
  });
}

uint64_t autkit_aut_orbit_size(const autkit_aut* a) {
  return a ? a->v.orbit_size : 0;
}

autkit_status autkit_aut_group(const autkit_aut* a, autkit_group** out) {
  return guarded([&] {
    require(a && out, "null argument");
    *out = new autkit_group{a->v.group};
  });
}

autkit_status autkit_aut_json(const autkit_aut* a, char** out) {
  return guarded([&] {
    require(a && out, "null argument");
    *out = dup_string(autkit::aut_result_json(a->v));
  });
}

/* ---- permutation groups ------------------------------------------------ */

autkit_status autkit_group_from_generators(uint32_t degree,
                                           const char* const* gens,
                                           size_t count, autkit_group** out) {
  return guarded([&] {
    require(out && (count == 0 || gens), "null argument");
    std::vector<autkit::Perm> parsed;
    parsed.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      require(gens[i] != nullptr, "null generator string");
      parsed.push_back(autkit::parse_perm(gens[i], degree));
    }
    *out = new autkit_group{autkit::PermGroup(degree, parsed)};
  });
}

autkit_status autkit_group_symmetric(uint32_t n, autkit_group** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new autkit_group{autkit::PermGroup::symmetric(n)};
  });
}

uint32_t autkit_group_degree(const autkit_group* g) {
  return g ? g->v.degree() : 0;
}

size_t autkit_group_num_generators(const autkit_group* g) {
  return g ? g->v.generators().size() : 0;
}

autkit_status autkit_group_generator(const autkit_group* g, size_t index,
                                     autkit_perm** out) {
  return guarded([&] {
    require(g && out, "null argument");
    require(index < g->v.generators().size(), "generator index out of range");
    *out = new autkit_perm{g->v.generators()[index]};
  });
}

autkit_status autkit_group_order(const autkit_group* g, char** decimal_out) {
  return guarded([&] {
    require(g && decimal_out, "null argument");
    *decimal_out = dup_string(g->v.order().to_decimal());
  });
}

autkit_status autkit_group_contains(const autkit_group* g,
                                    const autkit_perm* p, int* out) {
  return guarded([&] {
    require(g && p && out, "null argument");
    *out = g->v.contains(p->v) ? 1 : 0;
  });
}

autkit_status autkit_group_is_subgroup(const autkit_group* a,
                                       const autkit_group* b, int* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = a->v.is_subgroup_of(b->v) ? 1 : 0;
  });
}

autkit_status autkit_group_is_normal_in(const autkit_group* a,
                                        const autkit_group* b, int* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = a->v.is_normal_in(b->v) ? 1 : 0;
  });
}

autkit_status autkit_group_same(const autkit_group* a, const autkit_group* b,
                                int* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = a->v.same_group_as(b->v) ? 1 : 0;
  });
}

autkit_status autkit_group_direct_sum(const autkit_group* a,
                                      const autkit_group* b,
                                      autkit_group** out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = new autkit_group{autkit::direct_sum(a->v, b->v)};
  });
}

autkit_status autkit_group_wreath(const autkit_group* a,
                                  const autkit_group* b, autkit_group** out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = new autkit_group{autkit::wreath(a->v, b->v)};
  });
}

/* ---- Cayley graphs ------------------------------------------------------ */

autkit_status autkit_cayley_build(const autkit_tset* s,
                                  uint64_t budget_vertices,
                                  autkit_cayley** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = new autkit_cayley{autkit::CayleyGraph(
        s->v, budget_vertices ? budget_vertices : kDefaultVertexBudget)};
  });
}

uint64_t autkit_cayley_num_vertices(const autkit_cayley* c) {
  return c ? c->v.num_vertices() : 0;
}

uint32_t autkit_cayley_degree(const autkit_cayley* c) {
  return c ? c->v.regular_degree() : 0;
}

autkit_status autkit_cayley_group_order(const autkit_cayley* c,
                                        char** decimal_out) {
  return guarded([&] {
    require(c && decimal_out, "null argument");
    *decimal_out = dup_string(c->v.group_order().to_decimal());
  });
}

autkit_status autkit_cayley_diameter(const autkit_cayley* c, uint32_t* out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = c->v.diameter();
  });
}

autkit_status autkit_cayley_level_sizes(const autkit_cayley* c,
                                        uint64_t** levels, size_t* count) {
  return guarded([&] {
    require(c && levels && count, "null argument");
    std::vector<uint64_t> sizes = c->v.level_sizes();
    auto* buf =
        static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * sizes.size()));
    if (!buf) autkit::fail(autkit::Errc::internal_error, "out of memory");
    std::memcpy(buf, sizes.data(), sizeof(uint64_t) * sizes.size());
    *levels = buf;
    *count = sizes.size();
  });
}

autkit_status autkit_cayley_summary_json(const autkit_cayley* c,
                                         int with_diameter, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = dup_string(c->v.summary_json(with_diameter != 0));
  });
}

autkit_status autkit_cayley_to_graph(const autkit_cayley* c,
                                     autkit_graph** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new autkit_graph{c->v.to_simple_graph()};
  });
}

autkit_status autkit_cayley_translations(const autkit_cayley* c,
                                         autkit_group** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new autkit_group{c->v.right_translations()};
  });
}

autkit_status autkit_cayley_aut(const autkit_cayley* c, uint32_t max_vertices,
                                autkit_aut** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new autkit_aut{autkit::automorphism_group_seeded(
        c->v.to_simple_graph(), c->v.right_translation_generators(),
        search_options(max_vertices))};
  });
}

autkit_status autkit_cayley_lift_set_symmetries(const autkit_cayley* c,
                                                autkit_group** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new autkit_group{autkit::lift_transposition_graph_symmetries(c->v)};
  });
}

autkit_status autkit_check_normal(const autkit_cayley* c,
                                  const autkit_aut* aut, int* out) {
  return guarded([&] {
    require(c && aut && out, "null argument");
    *out = autkit::check_normal(c->v, aut->v) ? 1 : 0;
  });
}

/* ---- cycle censuses and predictions ------------------------------------ */

autkit_status autkit_cayley_census(const autkit_cayley* c, const char* t,
                                   const char* k, uint64_t* four_cycles,
                                   uint64_t* six_cycles,
                                   uint64_t* distance3_vertices) {
  return guarded([&] {
    require(c && t && k, "null argument");
    autkit::Perm tp = autkit::parse_perm(t, c->v.points());
    autkit::Perm kp = autkit::parse_perm(k, c->v.points());
    autkit::CycleCensus census = autkit::six_cycle_census(c->v, tp, kp);
    if (four_cycles) *four_cycles = census.four_cycles;
    if (six_cycles) *six_cycles = census.six_cycles;
    if (distance3_vertices) *distance3_vertices = census.distance3_vertices;
  });
}

autkit_status autkit_cayley_criterion(const autkit_cayley* c, int* holds,
                                      char** json) {
  return guarded([&] {
    require(c != nullptr, "null argument");
    autkit::CensusCriterion crit = autkit::census_criterion(c->v);
    if (holds) *holds = crit.holds ? 1 : 0;
    if (json) *json = dup_string(autkit::criterion_json(crit));
  });
}

autkit_status autkit_predict_json(const autkit_tset* s, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = dup_string(autkit::prediction_json(autkit::predict(s->v)));
  });
}

autkit_status autkit_verify(const autkit_tset* s, uint64_t budget_vertices,
                            int* agree, char** json) {
  return guarded([&] {
    require(s != nullptr, "null argument");
    autkit::VerifyReport report = autkit::verify_prediction(
        s->v, budget_vertices ? budget_vertices : kDefaultVertexBudget);
    if (agree) *agree = report.agree ? 1 : 0;
    if (json) *json = dup_string(autkit::verify_report_json(report));
  });
}

} /* extern "C" */
