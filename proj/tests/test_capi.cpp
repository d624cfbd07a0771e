// Exercises the shared library through the C header only; no core headers.
#include <doctest.h>

#include <cstring>
#include <string>

#include <autkit.h>

namespace {

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { autkit_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

}  // namespace

TEST_CASE("perm lifecycle and arithmetic") {
  autkit_perm* p = nullptr;
  autkit_perm* q = nullptr;
  REQUIRE(autkit_perm_parse("(1,2)", 3, &p) == AUTKIT_OK);
  REQUIRE(autkit_perm_parse("(2,3)", 3, &q) == AUTKIT_OK);
  CHECK(autkit_perm_degree(p) == 3);
  CHECK(autkit_perm_image(p, 1) == 2);
  CHECK(autkit_perm_image(p, 3) == 3);
  CHECK(autkit_perm_image(p, 4) == 0);  // out of range
  CHECK(autkit_perm_equal(p, q) == 0);

  autkit_perm* pq = nullptr;
  REQUIRE(autkit_perm_compose(p, q, &pq) == AUTKIT_OK);
  OwnedString text;
  REQUIRE(autkit_perm_format(pq, &text.ptr) == AUTKIT_OK);
  CHECK(text.str() == "(1,3,2)");  // left-to-right product

  autkit_perm* inv = nullptr;
  REQUIRE(autkit_perm_inverse(pq, &inv) == AUTKIT_OK);
  autkit_perm* round = nullptr;
  REQUIRE(autkit_perm_compose(pq, inv, &round) == AUTKIT_OK);
  autkit_perm* id = nullptr;
  REQUIRE(autkit_perm_identity(3, &id) == AUTKIT_OK);
  CHECK(autkit_perm_equal(round, id) == 1);

  autkit_perm_free(p);
  autkit_perm_free(q);
  autkit_perm_free(pq);
  autkit_perm_free(inv);
  autkit_perm_free(round);
  autkit_perm_free(id);
}

TEST_CASE("parse failures set the status and the message") {
  autkit_perm* p = nullptr;
  CHECK(autkit_perm_parse("(1,2", 0, &p) == AUTKIT_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::strlen(autkit_last_error()) > 0);

  autkit_perm* ok = nullptr;
  REQUIRE(autkit_perm_parse("(1,2)", 0, &ok) == AUTKIT_OK);
  CHECK(std::strlen(autkit_last_error()) == 0);  // cleared on success
  autkit_perm_free(ok);

  autkit_tset* s = nullptr;
  CHECK(autkit_tset_parse("(1,1)", 0, &s) == AUTKIT_ERR_INVALID_ARGUMENT);
  CHECK(autkit_tset_parse("", 0, &s) == AUTKIT_ERR_PARSE);
  CHECK(autkit_tset_family("pentagon", 5, &s) == AUTKIT_ERR_INVALID_ARGUMENT);
  CHECK(autkit_tset_family("tree", 6, &s) == AUTKIT_ERR_INVALID_ARGUMENT);

  autkit_graph* g = nullptr;
  CHECK(autkit_graph_parse("3\n0 1\n5 2\n", &g) ==
        AUTKIT_ERR_INVALID_ARGUMENT);
  CHECK(autkit_graph_named("dodecahedron", 0, 0, 0, &g) ==
        AUTKIT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("transposition sets and their graphs") {
  autkit_tset* s = nullptr;
  REQUIRE(autkit_tset_family("cycle", 5, &s) == AUTKIT_OK);
  CHECK(autkit_tset_points(s) == 5);
  CHECK(autkit_tset_size(s) == 5);
  CHECK(autkit_tset_connected(s) == 1);

  OwnedString text;
  REQUIRE(autkit_tset_format(s, &text.ptr) == AUTKIT_OK);
  CHECK(text.str() == "(1,2)(1,5)(2,3)(3,4)(4,5)");
  OwnedString fam;
  REQUIRE(autkit_tset_family_name(s, &fam.ptr) == AUTKIT_OK);
  CHECK(fam.str() == "cycle");
  OwnedString json;
  REQUIRE(autkit_tset_json(s, &json.ptr) == AUTKIT_OK);
  CHECK(json.str() == "[[1,2],[1,5],[2,3],[3,4],[4,5]]");

  autkit_graph* g = nullptr;
  REQUIRE(autkit_tset_graph(s, &g) == AUTKIT_OK);
  CHECK(autkit_graph_num_vertices(g) == 5);
  CHECK(autkit_graph_num_edges(g) == 5);

  autkit_group* gr = nullptr;
  REQUIRE(autkit_tset_group(s, &gr) == AUTKIT_OK);
  OwnedString order;
  REQUIRE(autkit_group_order(gr, &order.ptr) == AUTKIT_OK);
  CHECK(order.str() == "120");

  autkit_group_free(gr);
  autkit_graph_free(g);
  autkit_tset_free(s);

  autkit_tset* parsed = nullptr;
  REQUIRE(autkit_tset_parse("(1,2)(3,4)", 0, &parsed) == AUTKIT_OK);
  CHECK(autkit_tset_connected(parsed) == 0);
  autkit_tset_free(parsed);
}

TEST_CASE("graph queries through the handle") {
  autkit_graph* pet = nullptr;
  REQUIRE(autkit_graph_named("petersen", 0, 0, 0, &pet) == AUTKIT_OK);
  CHECK(autkit_graph_num_vertices(pet) == 10);
  CHECK(autkit_graph_num_edges(pet) == 15);
  CHECK(autkit_graph_is_connected(pet) == 1);
  CHECK(autkit_graph_has_edge(pet, 0, 1) ==
        autkit_graph_has_edge(pet, 1, 0));  // symmetric

  uint32_t girth = 0;
  int tri = 0, sq = 0;
  REQUIRE(autkit_graph_girth(pet, &girth, &tri, &sq) == AUTKIT_OK);
  CHECK(girth == 5);
  CHECK(tri == 0);
  CHECK(sq == 0);

  uint64_t cliques = 0;
  autkit_graph* lk5 = nullptr;
  autkit_graph* k5 = nullptr;
  REQUIRE(autkit_graph_named("complete", 5, 0, 0, &k5) == AUTKIT_OK);
  REQUIRE(autkit_graph_line_graph(k5, &lk5) == AUTKIT_OK);
  REQUIRE(autkit_graph_count_cliques(lk5, 4, &cliques) == AUTKIT_OK);
  CHECK(cliques == 5);

  autkit_graph* comp = nullptr;
  REQUIRE(autkit_graph_complement(lk5, &comp) == AUTKIT_OK);
  int found = 0;
  uint32_t* map = nullptr;
  REQUIRE(autkit_graph_isomorphism(comp, pet, 0, &found, &map) == AUTKIT_OK);
  CHECK(found == 1);
  REQUIRE(map != nullptr);
  for (uint32_t u = 0; u < 10; ++u)
    for (uint32_t v = u + 1; v < 10; ++v)
      CHECK(autkit_graph_has_edge(comp, u, v) ==
            autkit_graph_has_edge(pet, map[u], map[v]));
  autkit_u32_array_free(map);

  // verdict-only form, negative case
  autkit_graph* c6 = nullptr;
  REQUIRE(autkit_graph_named("cycle", 6, 0, 0, &c6) == AUTKIT_OK);
  autkit_graph* two_c3 = nullptr;
  autkit_graph* c3 = nullptr;
  REQUIRE(autkit_graph_named("cycle", 3, 0, 0, &c3) == AUTKIT_OK);
  REQUIRE(autkit_graph_disjoint_copies(c3, 2, &two_c3) == AUTKIT_OK);
  found = 1;
  REQUIRE(autkit_graph_isomorphism(c6, two_c3, 0, &found, nullptr) ==
          AUTKIT_OK);
  CHECK(found == 0);

  OwnedString dot;
  REQUIRE(autkit_graph_to_dot(c6, &dot.ptr) == AUTKIT_OK);
  CHECK(dot.str().find("--") != std::string::npos);
  OwnedString gj;
  REQUIRE(autkit_graph_to_json(c6, &gj.ptr) == AUTKIT_OK);
  CHECK(gj.str().find("\"num_vertices\": 6") != std::string::npos);
  OwnedString el;
  REQUIRE(autkit_graph_to_edge_list(c6, &el.ptr) == AUTKIT_OK);
  autkit_graph* back = nullptr;
  REQUIRE(autkit_graph_parse(el.ptr, &back) == AUTKIT_OK);
  CHECK(autkit_graph_num_edges(back) == 6);

  autkit_graph_free(back);
  autkit_graph_free(c3);
  autkit_graph_free(two_c3);
  autkit_graph_free(c6);
  autkit_graph_free(comp);
  autkit_graph_free(lk5);
  autkit_graph_free(k5);
  autkit_graph_free(pet);
}

TEST_CASE("automorphism search and groups") {
  autkit_graph* pet = nullptr;
  REQUIRE(autkit_graph_named("petersen", 0, 0, 0, &pet) == AUTKIT_OK);
  autkit_aut* aut = nullptr;
  REQUIRE(autkit_graph_aut(pet, 0, &aut) == AUTKIT_OK);

  OwnedString order;
  REQUIRE(autkit_aut_order(aut, &order.ptr) == AUTKIT_OK);
  CHECK(order.str() == "120");
  OwnedString stab;
  REQUIRE(autkit_aut_stabilizer_order(aut, &stab.ptr) == AUTKIT_OK);
  CHECK(stab.str() == "12");
  CHECK(autkit_aut_orbit_size(aut) == 10);
  OwnedString json;
  REQUIRE(autkit_aut_json(aut, &json.ptr) == AUTKIT_OK);
  CHECK(json.str().find("\"order\": \"120\"") != std::string::npos);

  int transitive = 0;
  REQUIRE(autkit_graph_is_vertex_transitive(pet, 0, &transitive) == AUTKIT_OK);
  CHECK(transitive == 1);

  autkit_group* stab_group = nullptr;
  REQUIRE(autkit_graph_vertex_stabilizer(pet, 3, 0, &stab_group) == AUTKIT_OK);
  OwnedString stab_order;
  REQUIRE(autkit_group_order(stab_group, &stab_order.ptr) == AUTKIT_OK);
  CHECK(stab_order.str() == "12");

  autkit_group* full = nullptr;
  REQUIRE(autkit_aut_group(aut, &full) == AUTKIT_OK);
  CHECK(autkit_group_degree(full) == 10);
  int is_sub = 0;
  REQUIRE(autkit_group_is_subgroup(stab_group, full, &is_sub) == AUTKIT_OK);
  CHECK(is_sub == 1);

  // generator round trip through perm handles
  size_t gens = autkit_group_num_generators(full);
  CHECK(gens > 0);
  autkit_perm* g0 = nullptr;
  REQUIRE(autkit_group_generator(full, 0, &g0) == AUTKIT_OK);
  int contains = 0;
  REQUIRE(autkit_group_contains(full, g0, &contains) == AUTKIT_OK);
  CHECK(contains == 1);
  autkit_perm_free(g0);

  autkit_group_free(full);
  autkit_group_free(stab_group);
  autkit_aut_free(aut);
  autkit_graph_free(pet);
}

TEST_CASE("group constructions") {
  autkit_group* s3 = nullptr;
  REQUIRE(autkit_group_symmetric(3, &s3) == AUTKIT_OK);
  autkit_group* s2 = nullptr;
  REQUIRE(autkit_group_symmetric(2, &s2) == AUTKIT_OK);

  autkit_group* w = nullptr;
  REQUIRE(autkit_group_wreath(s3, s2, &w) == AUTKIT_OK);
  OwnedString worder;
  REQUIRE(autkit_group_order(w, &worder.ptr) == AUTKIT_OK);
  CHECK(worder.str() == "48");
  CHECK(autkit_group_degree(w) == 6);

  autkit_group* d = nullptr;
  REQUIRE(autkit_group_direct_sum(s3, s2, &d) == AUTKIT_OK);
  OwnedString dorder;
  REQUIRE(autkit_group_order(d, &dorder.ptr) == AUTKIT_OK);
  CHECK(dorder.str() == "12");

  const char* gens[] = {"(1,2,3)"};
  autkit_group* a3 = nullptr;
  REQUIRE(autkit_group_from_generators(3, gens, 1, &a3) == AUTKIT_OK);
  int normal = 0;
  REQUIRE(autkit_group_is_normal_in(a3, s3, &normal) == AUTKIT_OK);
  CHECK(normal == 1);

  // not even a subgroup: mismatched degrees surface as NOT_A_SUBGROUP
  CHECK(autkit_group_is_normal_in(s2, s3, &normal) ==
        AUTKIT_ERR_NOT_A_SUBGROUP);

  int same = 0;
  const char* gens2[] = {"(1,2)", "(1,3)"};
  autkit_group* s3b = nullptr;
  REQUIRE(autkit_group_from_generators(3, gens2, 2, &s3b) == AUTKIT_OK);
  REQUIRE(autkit_group_same(s3, s3b, &same) == AUTKIT_OK);
  CHECK(same == 1);

  autkit_group_free(s3b);
  autkit_group_free(a3);
  autkit_group_free(d);
  autkit_group_free(w);
  autkit_group_free(s2);
  autkit_group_free(s3);
}

TEST_CASE("cayley pipeline end to end") {
  autkit_tset* s = nullptr;
  REQUIRE(autkit_tset_family("cycle", 4, &s) == AUTKIT_OK);
  autkit_cayley* c = nullptr;
  REQUIRE(autkit_cayley_build(s, 0, &c) == AUTKIT_OK);
  CHECK(autkit_cayley_num_vertices(c) == 24);
  CHECK(autkit_cayley_degree(c) == 4);

  OwnedString order;
  REQUIRE(autkit_cayley_group_order(c, &order.ptr) == AUTKIT_OK);
  CHECK(order.str() == "24");

  uint32_t diameter = 0;
  REQUIRE(autkit_cayley_diameter(c, &diameter) == AUTKIT_OK);
  CHECK(diameter == 4);

  uint64_t* levels = nullptr;
  size_t count = 0;
  REQUIRE(autkit_cayley_level_sizes(c, &levels, &count) == AUTKIT_OK);
  REQUIRE(count == 5);
  CHECK(levels[0] == 1);
  uint64_t total = 0;
  for (size_t i = 0; i < count; ++i) total += levels[i];
  CHECK(total == 24);
  autkit_u64_array_free(levels);

  autkit_aut* aut = nullptr;
  REQUIRE(autkit_cayley_aut(c, 0, &aut) == AUTKIT_OK);
  OwnedString aorder;
  REQUIRE(autkit_aut_order(aut, &aorder.ptr) == AUTKIT_OK);
  CHECK(aorder.str() == "768");

  int normal = 1;
  REQUIRE(autkit_check_normal(c, aut, &normal) == AUTKIT_OK);
  CHECK(normal == 0);

  autkit_group* lifted = nullptr;
  REQUIRE(autkit_cayley_lift_set_symmetries(c, &lifted) == AUTKIT_OK);
  OwnedString lorder;
  REQUIRE(autkit_group_order(lifted, &lorder.ptr) == AUTKIT_OK);
  CHECK(lorder.str() == "8");

  autkit_group* trans = nullptr;
  REQUIRE(autkit_cayley_translations(c, &trans) == AUTKIT_OK);
  autkit_group* aut_group = nullptr;
  REQUIRE(autkit_aut_group(aut, &aut_group) == AUTKIT_OK);
  int sub = 0;
  REQUIRE(autkit_group_is_subgroup(trans, aut_group, &sub) == AUTKIT_OK);
  CHECK(sub == 1);

  uint64_t four = 0, six = 0, d3 = 0;
  REQUIRE(autkit_cayley_census(c, "(1,2)", "(3,4)", &four, &six, &d3) ==
          AUTKIT_OK);
  CHECK(four == 1);
  REQUIRE(autkit_cayley_census(c, "(1,2)", "(2,3)", &four, &six, &d3) ==
          AUTKIT_OK);
  CHECK(four == 0);
  CHECK(six == 8);
  CHECK(d3 == 6);
  CHECK(autkit_cayley_census(c, "(1,3)", "(1,2)", &four, &six, &d3) ==
        AUTKIT_ERR_GENERATOR_NOT_IN_SET);

  int holds = 1;
  OwnedString crit_json;
  REQUIRE(autkit_cayley_criterion(c, &holds, &crit_json.ptr) == AUTKIT_OK);
  CHECK(holds == 0);
  CHECK(crit_json.str().find("failing_pairs") != std::string::npos);

  OwnedString summary;
  REQUIRE(autkit_cayley_summary_json(c, 1, &summary.ptr) == AUTKIT_OK);
  CHECK(summary.str().find("\"diameter\": 4") != std::string::npos);

  autkit_graph* as_graph = nullptr;
  REQUIRE(autkit_cayley_to_graph(c, &as_graph) == AUTKIT_OK);
  CHECK(autkit_graph_num_vertices(as_graph) == 24);
  CHECK(autkit_graph_num_edges(as_graph) == 48);

  OwnedString pred;
  REQUIRE(autkit_predict_json(s, &pred.ptr) == AUTKIT_OK);
  CHECK(pred.str().find("\"rule\": \"cycle-4\"") != std::string::npos);

  int agree = 0;
  OwnedString verify_json;
  REQUIRE(autkit_verify(s, 0, &agree, &verify_json.ptr) == AUTKIT_OK);
  CHECK(agree == 1);
  CHECK(verify_json.str().find("\"computed_order\": \"768\"") !=
        std::string::npos);

  autkit_graph_free(as_graph);
  autkit_group_free(aut_group);
  autkit_group_free(trans);
  autkit_group_free(lifted);
  autkit_aut_free(aut);
  autkit_cayley_free(c);
  autkit_tset_free(s);
}

TEST_CASE("budget errors cross the boundary") {
  autkit_tset* s = nullptr;
  REQUIRE(autkit_tset_family("path", 8, &s) == AUTKIT_OK);
  autkit_cayley* c = nullptr;
  CHECK(autkit_cayley_build(s, 100, &c) == AUTKIT_ERR_BUDGET_EXCEEDED);
  CHECK(c == nullptr);
  CHECK(std::strlen(autkit_last_error()) > 0);
  autkit_tset_free(s);

  autkit_graph* big = nullptr;
  REQUIRE(autkit_graph_named("cycle", 50, 0, 0, &big) == AUTKIT_OK);
  autkit_aut* aut = nullptr;
  CHECK(autkit_graph_aut(big, 10, &aut) == AUTKIT_ERR_SEARCH_BOUND_EXCEEDED);
  autkit_graph_free(big);

  // disconnected transposition graph cannot be lifted or predicted
  autkit_tset* m = nullptr;
  REQUIRE(autkit_tset_family("matching", 4, &m) == AUTKIT_OK);
  OwnedString pred;
  CHECK(autkit_predict_json(m, &pred.ptr) == AUTKIT_ERR_DISCONNECTED);
  autkit_cayley* mc = nullptr;
  REQUIRE(autkit_cayley_build(m, 0, &mc) == AUTKIT_OK);
  autkit_group* lifted = nullptr;
  CHECK(autkit_cayley_lift_set_symmetries(mc, &lifted) ==
        AUTKIT_ERR_DISCONNECTED);
  autkit_cayley_free(mc);
  autkit_tset_free(m);
}
