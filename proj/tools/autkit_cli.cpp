// Command line front end. Everything below goes through the public C API in
// autkit.h; the C++ core stays an implementation detail of the shared
// library.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autkit.h"

namespace {

// Exit codes: 0 ok, 1 usage or resource failure, 2 verification disagreement.
constexpr int kExitError = 1;
constexpr int kExitDisagree = 2;

template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  ~Handle() {
    if (ptr_) Free(ptr_);
  }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;

  T** out() { return &ptr_; }
  operator T*() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using PermHandle = Handle<autkit_perm, autkit_perm_free>;
using TsetHandle = Handle<autkit_tset, autkit_tset_free>;
using GraphHandle = Handle<autkit_graph, autkit_graph_free>;
using CayleyHandle = Handle<autkit_cayley, autkit_cayley_free>;
using GroupHandle = Handle<autkit_group, autkit_group_free>;
using AutHandle = Handle<autkit_aut, autkit_aut_free>;

class CString {
 public:
  CString() = default;
  ~CString() { autkit_string_free(str_); }
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;

  char** out() { return &str_; }
  std::string str() const { return str_ ? str_ : ""; }

 private:
  char* str_ = nullptr;
};

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitError);
}

void check(autkit_status status) {
  if (status != AUTKIT_OK) die(autkit_last_error());
}

struct CommonOptions {
  std::string family;
  std::string set;
  std::string named;
  uint32_t n = 0;
  uint32_t k = 0;
  uint32_t i = 0;
  uint64_t budget_vertices = 0;  // 0: library default
  uint32_t search_bound = 0;     // 0: library default
  std::string format = "text";
};

std::string resolve_family(const std::string& family) {
  // Shorthand used throughout the literature on these graphs: mbs is the
  // cycle set (modified bubble-sort), bs the path set (bubble-sort), st the
  // star set.
  if (family == "mbs") return "cycle";
  if (family == "bs") return "path";
  if (family == "st") return "star";
  return family;
}

void add_set_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--family", opt.family,
                  "stock set family: star|path|cycle|matching|complete|tree "
                  "(aliases: st, bs, mbs)");
  cmd->add_option("--set", opt.set,
                  "explicit transposition set, e.g. \"(1,2)(2,3)\"");
  cmd->add_option("--n", opt.n, "point count for --family");
}

void add_budget_flag(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--budget-vertices", opt.budget_vertices,
                  "refuse to build graphs with more vertices than this "
                  "(default: AUTKIT_BUDGET_VERTICES or 1000000)")
      ->envname("AUTKIT_BUDGET_VERTICES");
}

void add_format_flag(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--format", opt.format, "output format: text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
}

void make_set(const CommonOptions& opt, TsetHandle& out) {
  bool have_family = !opt.family.empty();
  bool have_set = !opt.set.empty();
  if (have_family == have_set)
    die("give exactly one input source: --family with --n, or --set");
  if (have_set) {
    check(autkit_tset_parse(opt.set.c_str(), opt.n, out.out()));
    return;
  }
  if (opt.n == 0) die("--family needs --n");
  check(autkit_tset_family(resolve_family(opt.family).c_str(), opt.n,
                           out.out()));
}

void make_cayley(const CommonOptions& opt, TsetHandle& set, CayleyHandle& out) {
  make_set(opt, set);
  check(autkit_cayley_build(set, opt.budget_vertices, out.out()));
}

void print_graph(const CommonOptions& opt, autkit_graph* g,
                 const std::string& title) {
  if (opt.format == "dot") {
    CString dot;
    check(autkit_graph_to_dot(g, dot.out()));
    std::cout << dot.str();
  } else if (opt.format == "json") {
    CString json;
    check(autkit_graph_to_json(g, json.out()));
    std::cout << json.str() << "\n";
  } else {
    std::cout << title << "\n"
              << "vertices: " << autkit_graph_num_vertices(g) << "\n"
              << "edges: " << autkit_graph_num_edges(g) << "\n"
              << "connected: "
              << (autkit_graph_is_connected(g) ? "true" : "false") << "\n";
  }
}

int cmd_build(const CommonOptions& opt) {
  TsetHandle set;
  CayleyHandle cayley;
  make_cayley(opt, set, cayley);
  if (opt.format == "dot") {
    GraphHandle graph;
    check(autkit_cayley_to_graph(cayley, graph.out()));
    CString dot;
    check(autkit_graph_to_dot(graph, dot.out()));
    std::cout << dot.str();
    return 0;
  }
  if (opt.format == "json") {
    CString json;
    check(autkit_cayley_summary_json(cayley, 0, json.out()));
    std::cout << json.str() << "\n";
    return 0;
  }
  CString family, text, order;
  check(autkit_tset_family_name(set, family.out()));
  check(autkit_tset_format(set, text.out()));
  check(autkit_cayley_group_order(cayley, order.out()));
  std::cout << "family: " << family.str() << "\n"
            << "points: " << autkit_tset_points(set) << "\n"
            << "set: " << text.str() << "\n"
            << "vertices: " << order.str() << "\n"
            << "degree: " << autkit_cayley_degree(cayley) << "\n"
            << "generates_full_symmetric: "
            << (autkit_tset_connected(set) ? "true" : "false") << "\n";
  return 0;
}

int cmd_named(const CommonOptions& opt) {
  GraphHandle graph;
  check(autkit_graph_named(opt.named.c_str(), opt.n, opt.k, opt.i,
                           graph.out()));
  print_graph(opt, graph, opt.named);
  return 0;
}

int print_aut(const CommonOptions& opt, autkit_aut* aut) {
  if (opt.format == "json") {
    CString json;
    check(autkit_aut_json(aut, json.out()));
    std::cout << json.str() << "\n";
    return 0;
  }
  CString order, stab;
  check(autkit_aut_order(aut, order.out()));
  check(autkit_aut_stabilizer_order(aut, stab.out()));
  std::cout << "order: " << order.str() << "\n"
            << "stabilizer_order: " << stab.str() << "\n"
            << "orbit_size: " << autkit_aut_orbit_size(aut) << "\n";
  GroupHandle group;
  check(autkit_aut_group(aut, group.out()));
  size_t count = autkit_group_num_generators(group);
  std::cout << "generators: " << count << "\n";
  for (size_t g = 0; g < count; ++g) {
    PermHandle perm;
    check(autkit_group_generator(group, g, perm.out()));
    CString text;
    check(autkit_perm_format(perm, text.out()));
    std::cout << "  " << text.str() << "\n";
  }
  return 0;
}

int cmd_aut(const CommonOptions& opt) {
  AutHandle aut;
  if (!opt.named.empty()) {
    if (!opt.family.empty() || !opt.set.empty())
      die("give either --named or a transposition set, not both");
    GraphHandle graph;
    check(autkit_graph_named(opt.named.c_str(), opt.n, opt.k, opt.i,
                             graph.out()));
    check(autkit_graph_aut(graph, opt.search_bound, aut.out()));
  } else {
    TsetHandle set;
    CayleyHandle cayley;
    make_cayley(opt, set, cayley);
    check(autkit_cayley_aut(cayley, opt.search_bound, aut.out()));
  }
  return print_aut(opt, aut);
}

int cmd_diameter(const CommonOptions& opt, bool with_levels) {
  TsetHandle set;
  CayleyHandle cayley;
  make_cayley(opt, set, cayley);
  uint32_t diameter = 0;
  check(autkit_cayley_diameter(cayley, &diameter));
  uint64_t* levels = nullptr;
  size_t level_count = 0;
  if (with_levels || opt.format == "json")
    check(autkit_cayley_level_sizes(cayley, &levels, &level_count));
  if (opt.format == "json") {
    nlohmann::json j;
    j["diameter"] = diameter;
    if (with_levels) {
      nlohmann::json arr = nlohmann::json::array();
      for (size_t d = 0; d < level_count; ++d) arr.push_back(levels[d]);
      j["levels"] = arr;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << diameter << "\n";
    if (with_levels)
      for (size_t d = 0; d < level_count; ++d)
        std::cout << "level " << d << ": " << levels[d] << "\n";
  }
  autkit_u64_array_free(levels);
  return 0;
}

int cmd_census(const CommonOptions& opt, const std::string& t,
               const std::string& k) {
  TsetHandle set;
  CayleyHandle cayley;
  make_cayley(opt, set, cayley);
  if (t.empty() != k.empty()) die("--t and --k go together");
  if (!t.empty()) {
    uint64_t four = 0, six = 0, d3 = 0;
    check(autkit_cayley_census(cayley, t.c_str(), k.c_str(), &four, &six,
                               &d3));
    if (opt.format == "json") {
      nlohmann::json j;
      j["four_cycles"] = four;
      j["six_cycles"] = six;
      j["distance3_vertices"] = d3;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "four_cycles: " << four << "\n"
                << "six_cycles: " << six << "\n"
                << "distance3_vertices: " << d3 << "\n";
    }
    return 0;
  }
  // No pair given: sweep every generator pair against the local cycle rule.
  int holds = 0;
  CString json;
  check(autkit_cayley_criterion(cayley, &holds, json.out()));
  if (opt.format == "json") {
    std::cout << json.str() << "\n";
  } else {
    auto j = nlohmann::json::parse(json.str());
    std::cout << "holds: " << (holds ? "true" : "false") << "\n";
    for (const auto& pair : j["failing_pairs"])
      std::cout << "failing: " << pair[0].get<std::string>() << " "
                << pair[1].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_check_normal(const CommonOptions& opt) {
  TsetHandle set;
  CayleyHandle cayley;
  make_cayley(opt, set, cayley);
  AutHandle aut;
  check(autkit_cayley_aut(cayley, opt.search_bound, aut.out()));
  int normal = 0;
  check(autkit_check_normal(cayley, aut, &normal));
  if (opt.format == "json") {
    nlohmann::json j;
    j["normal"] = normal != 0;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "normal: " << (normal ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_predict(const CommonOptions& opt) {
  TsetHandle set;
  make_set(opt, set);
  CString json;
  check(autkit_predict_json(set, json.out()));
  if (opt.format == "json") {
    std::cout << json.str() << "\n";
    return 0;
  }
  auto j = nlohmann::json::parse(json.str());
  std::cout << "family: " << j["family"].get<std::string>() << "\n"
            << "predicted_order: "
            << (j["predicted_order"].is_null()
                    ? std::string("none")
                    : j["predicted_order"].get<std::string>())
            << "\n"
            << "normal: " << j["normal"].get<std::string>() << "\n"
            << "rule: " << j["rule"].get<std::string>() << "\n";
  return 0;
}

int cmd_verify(const CommonOptions& opt) {
  TsetHandle set;
  make_set(opt, set);
  int agree = 0;
  CString json;
  check(autkit_verify(set, opt.budget_vertices, &agree, json.out()));
  if (opt.format == "json") {
    std::cout << json.str() << "\n";
  } else {
    auto j = nlohmann::json::parse(json.str());
    const auto& p = j["prediction"];
    std::cout << "family: " << p["family"].get<std::string>() << "\n"
              << "predicted_order: "
              << (p["predicted_order"].is_null()
                      ? std::string("none")
                      : p["predicted_order"].get<std::string>())
              << "\n"
              << "computed_order: " << j["computed_order"].get<std::string>()
              << "\n"
              << "computed_normal: "
              << (j["computed_normal"].get<bool>() ? "true" : "false") << "\n";
    if (j["computed_only"].get<bool>())
      std::cout << "agree: computed only (no prediction)\n";
    else
      std::cout << "agree: " << (agree ? "true" : "false") << "\n";
  }
  return agree ? 0 : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "autkit: automorphism groups of Cayley graphs generated by "
      "transpositions"};
  app.require_subcommand(1);

  CommonOptions opt;
  uint64_t seed = 0;
  app.add_option("--seed", seed,
                 "accepted for script compatibility; core computations are "
                 "deterministic and ignore it");

  auto* build = app.add_subcommand("build", "build a Cayley graph and report its shape");
  add_set_flags(build, opt);
  add_budget_flag(build, opt);
  add_format_flag(build, opt);

  auto* aut = app.add_subcommand("aut", "compute the automorphism group");
  add_set_flags(aut, opt);
  aut->add_option("--named", opt.named,
                  "named graph instead of a Cayley graph: petersen, kneser, "
                  "hypercube, octahedron, complete, complete_bipartite, "
                  "star, path, cycle, matching, johnson");
  aut->add_option("--k", opt.k, "second parameter for named families");
  aut->add_option("--i", opt.i, "intersection size for johnson");
  add_budget_flag(aut, opt);
  aut->add_option("--search-bound", opt.search_bound,
                  "vertex cap for the automorphism search (default 5000)");
  add_format_flag(aut, opt);

  auto* diameter = app.add_subcommand("diameter", "BFS diameter from the identity");
  add_set_flags(diameter, opt);
  add_budget_flag(diameter, opt);
  add_format_flag(diameter, opt);
  bool with_levels = false;
  diameter->add_flag("--levels", with_levels, "also print per-distance vertex counts");

  auto* census = app.add_subcommand(
      "census", "4-/6-cycle counts through the identity and two generators");
  add_set_flags(census, opt);
  add_budget_flag(census, opt);
  add_format_flag(census, opt);
  std::string census_t, census_k;
  census->add_option("--t", census_t, "first transposition, e.g. \"(1,2)\"");
  census->add_option("--k", census_k, "second transposition");

  auto* check_normal = app.add_subcommand(
      "check-normal", "are the right translations normal in the automorphism group?");
  add_set_flags(check_normal, opt);
  add_budget_flag(check_normal, opt);
  check_normal->add_option("--search-bound", opt.search_bound,
                           "vertex cap for the automorphism search");
  add_format_flag(check_normal, opt);

  auto* predict = app.add_subcommand(
      "predict", "predicted automorphism group from the set shape");
  add_set_flags(predict, opt);
  add_format_flag(predict, opt);

  auto* verify = app.add_subcommand(
      "verify", "compare the prediction against the computed group");
  add_set_flags(verify, opt);
  add_budget_flag(verify, opt);
  add_format_flag(verify, opt);

  auto* named = app.add_subcommand("named", "build a named graph");
  named->add_option("--named", opt.named, "petersen, kneser, hypercube, ...")
      ->required();
  named->add_option("--n", opt.n, "first parameter");
  named->add_option("--k", opt.k, "second parameter");
  named->add_option("--i", opt.i, "intersection size for johnson");
  add_format_flag(named, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(opt);
    if (aut->parsed()) return cmd_aut(opt);
    if (diameter->parsed()) return cmd_diameter(opt, with_levels);
    if (census->parsed()) return cmd_census(opt, census_t, census_k);
    if (check_normal->parsed()) return cmd_check_normal(opt);
    if (predict->parsed()) return cmd_predict(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (named->parsed()) return cmd_named(opt);
  } catch (const std::exception& e) {
    die(e.what());
  }
  return 0;
}
