#include "autsearch.hpp"

#include <algorithm>
#include <span>
#include <utility>

#include <json.hpp>

#include "errors.hpp"

namespace autkit {

namespace {

// A coloring assigns each vertex a color in 0..count-1. Refinement splits
// color classes by the multiset of neighbor colors until stable; the final
// ids are ranks in a sorted signature order, so two refined colorings are
// directly comparable color-by-color.
struct ColorState {
  std::vector<uint32_t> color;
  uint32_t count = 1;
};

ColorState uniform_coloring(uint32_t n) {
  return ColorState{std::vector<uint32_t>(n, 0), 1};
}

void individualize(ColorState& s, uint32_t v) {
  s.color[v] = s.count;
  ++s.count;
}

// Per-vertex signature: own color followed by sorted neighbor colors,
// stored flat.
struct SigTable {
  std::vector<uint32_t> data;
  std::vector<uint32_t> begin;

  void build(const SimpleGraph& g, const std::vector<uint32_t>& color) {
    uint32_t n = g.num_vertices();
    begin.assign(n + 1, 0);
    for (uint32_t v = 0; v < n; ++v)
      begin[v + 1] = begin[v] + 1 + static_cast<uint32_t>(g.neighbors(v).size());
    data.resize(begin[n]);
    for (uint32_t v = 0; v < n; ++v) {
      uint32_t pos = begin[v];
      data[pos++] = color[v];
      for (uint32_t w : g.neighbors(v)) data[pos++] = color[w];
      std::sort(data.begin() + begin[v] + 1, data.begin() + begin[v + 1]);
    }
  }

  std::span<const uint32_t> sig(uint32_t v) const {
    return {data.data() + begin[v], data.data() + begin[v + 1]};
  }
};

bool sig_less(std::span<const uint32_t> a, std::span<const uint32_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Refine two colorings (of possibly different graphs) in lockstep, with a
// shared canonical numbering. Returns false as soon as some signature class
// has different sizes on the two sides, meaning no color-respecting
// bijection can exist.
bool refine_pair(const SimpleGraph& ga, ColorState& sa,
                 const SimpleGraph& gb, ColorState& sb) {
  const uint32_t na = ga.num_vertices();
  const uint32_t nb = gb.num_vertices();
  SigTable ta, tb;
  std::vector<uint32_t> order(na + nb);
  while (true) {
    ta.build(ga, sa.color);
    tb.build(gb, sb.color);
    for (uint32_t i = 0; i < na + nb; ++i) order[i] = i;
    auto sig_of = [&](uint32_t e) {
      return e < na ? ta.sig(e) : tb.sig(e - na);
    };
    std::sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) {
      return sig_less(sig_of(x), sig_of(y));
    });

    uint32_t next_id = 0;
    uint32_t run_a = 0, run_b = 0;
    for (uint32_t i = 0; i < na + nb; ++i) {
      if (i > 0) {
        auto prev = sig_of(order[i - 1]);
        auto cur = sig_of(order[i]);
        if (!std::equal(prev.begin(), prev.end(), cur.begin(), cur.end())) {
          if (run_a != run_b) return false;
          run_a = run_b = 0;
          ++next_id;
        }
      }
      uint32_t e = order[i];
      if (e < na) {
        sa.color[e] = next_id;
        ++run_a;
      } else {
        sb.color[e - na] = next_id;
        ++run_b;
      }
    }
    if (run_a != run_b) return false;
    uint32_t new_count = next_id + 1;
    if (new_count == sa.count) return true;
    sa.count = new_count;
    sb.count = new_count;
  }
}

void refine_single(const SimpleGraph& g, ColorState& s) {
  const uint32_t n = g.num_vertices();
  SigTable t;
  std::vector<uint32_t> order(n);
  while (true) {
    t.build(g, s.color);
    for (uint32_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) {
      return sig_less(t.sig(x), t.sig(y));
    });
    uint32_t next_id = 0;
    for (uint32_t i = 0; i < n; ++i) {
      if (i > 0) {
        auto prev = t.sig(order[i - 1]);
        auto cur = t.sig(order[i]);
        if (!std::equal(prev.begin(), prev.end(), cur.begin(), cur.end()))
          ++next_id;
      }
      s.color[order[i]] = next_id;
    }
    uint32_t new_count = next_id + 1;
    if (new_count == s.count) return;
    s.count = new_count;
  }
}

constexpr uint32_t kNoCell = UINT32_MAX;

// Smallest non-singleton color class (by size, then by color id); kNoCell
// when the coloring is discrete.
uint32_t choose_cell(const ColorState& s) {
  std::vector<uint32_t> sizes(s.count, 0);
  for (uint32_t c : s.color) ++sizes[c];
  uint32_t best = kNoCell;
  uint32_t best_size = UINT32_MAX;
  for (uint32_t c = 0; c < s.count; ++c)
    if (sizes[c] >= 2 && sizes[c] < best_size) {
      best = c;
      best_size = sizes[c];
    }
  return best;
}

uint32_t cell_size(const ColorState& s, uint32_t cell) {
  uint32_t size = 0;
  for (uint32_t c : s.color)
    if (c == cell) ++size;
  return size;
}

bool preserves_edges(const SimpleGraph& g, const Perm& p) {
  if (p.degree() != g.num_vertices()) return false;
  for (auto [u, v] : g.edges())
    if (!g.has_edge(p(u), p(v))) return false;
  return true;
}

struct LevelOutcome {
  std::vector<Perm> gens;
  GroupOrder order = GroupOrder::one();
  std::vector<uint32_t> base;
  std::vector<uint64_t> orbit_sizes;
};

class Searcher {
 public:
  Searcher(const SimpleGraph& gs, const SimpleGraph& gt, uint64_t max_nodes)
      : gs_(gs), gt_(gt), max_nodes_(max_nodes) {}

  uint64_t nodes() const { return nodes_; }

  // Individualize-and-refine backtracking for one color-respecting vertex
  // bijection gs -> gt. Both colorings must already be refined and
  // compatible.
  std::optional<std::vector<uint32_t>> witness(ColorState cs, ColorState ct) {
    bump();
    uint32_t cell = choose_cell(cs);
    if (cell == kNoCell) {
      // Discrete: the map is forced color-by-color. Only the edge check
      // remains; edge counts match, so edges map onto edges exactly.
      uint32_t n = gs_.num_vertices();
      std::vector<uint32_t> target_of_color(cs.count, 0);
      for (uint32_t v = 0; v < n; ++v) target_of_color[ct.color[v]] = v;
      std::vector<uint32_t> map(n);
      for (uint32_t v = 0; v < n; ++v) map[v] = target_of_color[cs.color[v]];
      for (auto [u, v] : gs_.edges())
        if (!gt_.has_edge(map[u], map[v])) return std::nullopt;
      return map;
    }
    uint32_t v = 0;
    while (cs.color[v] != cell) ++v;
    for (uint32_t u = 0; u < gt_.num_vertices(); ++u) {
      if (ct.color[u] != cell) continue;
      ColorState cs2 = cs;
      ColorState ct2 = ct;
      individualize(cs2, v);
      individualize(ct2, u);
      if (!refine_pair(gs_, cs2, gt_, ct2)) continue;
      if (auto r = witness(std::move(cs2), std::move(ct2))) return r;
    }
    return std::nullopt;
  }

  // One level of the stabilizer tower: pick a base vertex, recurse into its
  // stabilizer, then close the base orbit. Every other member of the base
  // vertex's cell is either reached by the known generators or handed to a
  // witness search, so the computed orbit is the full orbit and the product
  // of level orbit sizes is the exact group order.
  LevelOutcome level(const ColorState& c, bool prefer_vertex_zero,
                     const std::vector<Perm>* seeds) {
    bump();
    uint32_t n = gs_.num_vertices();
    uint32_t cell = choose_cell(c);
    if (cell == kNoCell) return LevelOutcome{};

    uint32_t b;
    if (prefer_vertex_zero && cell_size(c, c.color[0]) >= 2) {
      cell = c.color[0];
      b = 0;
    } else {
      b = 0;
      while (c.color[b] != cell) ++b;
    }

    ColorState down = c;
    individualize(down, b);
    refine_single(gs_, down);
    LevelOutcome sub = level(down, false, nullptr);

    std::vector<Perm> gens = std::move(sub.gens);
    if (seeds) gens.insert(gens.end(), seeds->begin(), seeds->end());

    std::vector<uint8_t> in_orbit(n, 0);
    std::vector<uint32_t> orbit{b};
    in_orbit[b] = 1;
    auto close_orbit = [&] {
      for (size_t head = 0; head < orbit.size(); ++head)
        for (const Perm& p : gens) {
          uint32_t w = p(orbit[head]);
          if (!in_orbit[w]) {
            in_orbit[w] = 1;
            orbit.push_back(w);
          }
        }
    };
    close_orbit();

    for (uint32_t w = 0; w < n; ++w) {
      if (c.color[w] != cell || w == b || in_orbit[w]) continue;
      ColorState cs = c;
      ColorState ct = c;
      individualize(cs, b);
      individualize(ct, w);
      std::optional<std::vector<uint32_t>> found;
      if (refine_pair(gs_, cs, gt_, ct))
        found = witness(std::move(cs), std::move(ct));
      if (!found) continue;
      gens.push_back(Perm::from_images(std::move(*found)));
      close_orbit();
    }

    LevelOutcome out;
    out.order = sub.order * static_cast<uint64_t>(orbit.size());
    out.gens = std::move(gens);
    out.base.reserve(sub.base.size() + 1);
    out.base.push_back(b);
    out.base.insert(out.base.end(), sub.base.begin(), sub.base.end());
    out.orbit_sizes.reserve(sub.orbit_sizes.size() + 1);
    out.orbit_sizes.push_back(orbit.size());
    out.orbit_sizes.insert(out.orbit_sizes.end(), sub.orbit_sizes.begin(),
                           sub.orbit_sizes.end());
    return out;
  }

 private:
  void bump() {
    if (++nodes_ > max_nodes_)
      fail(Errc::search_bound_exceeded,
           "automorphism search exceeded its node budget of " +
               std::to_string(max_nodes_));
  }

  const SimpleGraph& gs_;
  const SimpleGraph& gt_;
  uint64_t max_nodes_;
  uint64_t nodes_ = 0;
};

AutResult run_search(const SimpleGraph& g, const std::vector<Perm>* seeds,
                     const AutSearchOptions& options) {
  uint32_t n = g.num_vertices();
  if (n > options.max_vertices)
    fail(Errc::search_bound_exceeded,
         "graph has " + std::to_string(n) +
             " vertices, above the search bound of " +
             std::to_string(options.max_vertices) +
             " (raise the bound to force the search)");

  Searcher searcher(g, g, options.max_nodes);
  ColorState c = uniform_coloring(n);
  refine_single(g, c);
  LevelOutcome top = searcher.level(c, true, seeds);

  for (const Perm& p : top.gens)
    if (!preserves_edges(g, p))
      fail(Errc::internal_error,
           "automorphism search produced a non-automorphism");

  PermGroup group(n, top.gens);
  if (group.order() != top.order)
    fail(Errc::internal_error,
         "stabilizer chain order disagrees with the search tree");

  AutResult r{std::move(group),  top.order, GroupOrder::one(), 1,
              std::move(top.base), std::move(top.orbit_sizes),
              searcher.nodes()};
  if (!r.base_vertices.empty() && r.base_vertices[0] == 0) {
    r.orbit_size = r.level_orbit_sizes[0];
    GroupOrder stab = GroupOrder::one();
    for (size_t i = 1; i < r.level_orbit_sizes.size(); ++i)
      stab *= GroupOrder(r.level_orbit_sizes[i]);
    r.stabilizer_order = stab;
  } else {
    // Vertex 0 sits in a singleton cell, so everything fixes it.
    r.orbit_size = 1;
    r.stabilizer_order = r.order;
  }
  return r;
}

}  // namespace

AutResult automorphism_group(const SimpleGraph& g,
                             const AutSearchOptions& options) {
  return run_search(g, nullptr, options);
}

AutResult automorphism_group_seeded(const SimpleGraph& g,
                                    const std::vector<Perm>& seeds,
                                    const AutSearchOptions& options) {
  std::vector<Perm> usable;
  usable.reserve(seeds.size());
  for (const Perm& p : seeds) {
    if (!preserves_edges(g, p))
      fail(Errc::invalid_argument,
           "seed permutation is not an automorphism of the graph");
    if (!p.is_identity()) usable.push_back(p);
  }
  return run_search(g, &usable, options);
}

PermGroup vertex_stabilizer(const SimpleGraph& g, uint32_t v,
                            const AutSearchOptions& options) {
  uint32_t n = g.num_vertices();
  if (v >= n) fail(Errc::invalid_argument, "vertex out of range");
  if (n > options.max_vertices)
    fail(Errc::search_bound_exceeded,
         "graph has " + std::to_string(n) +
             " vertices, above the search bound of " +
             std::to_string(options.max_vertices));
  Searcher searcher(g, g, options.max_nodes);
  ColorState c = uniform_coloring(n);
  individualize(c, v);
  refine_single(g, c);
  LevelOutcome out = searcher.level(c, false, nullptr);
  for (const Perm& p : out.gens)
    if (!preserves_edges(g, p) || p(v) != v)
      fail(Errc::internal_error, "stabilizer search produced a bad element");
  return PermGroup(n, out.gens);
}

bool is_vertex_transitive(const SimpleGraph& g,
                          const AutSearchOptions& options) {
  return automorphism_group(g, options).orbit_size == g.num_vertices();
}

std::optional<std::vector<uint32_t>> find_isomorphism(const SimpleGraph& g1,
                                                      const SimpleGraph& g2,
                                                      uint32_t max_vertices) {
  if (g1.num_vertices() > max_vertices || g2.num_vertices() > max_vertices)
    fail(Errc::size_limit_exceeded,
         "isomorphism test limited to " + std::to_string(max_vertices) +
             " vertices per graph");
  if (g1.num_vertices() != g2.num_vertices() ||
      g1.num_edges() != g2.num_edges())
    return std::nullopt;
  if (g1.degree_sequence() != g2.degree_sequence()) return std::nullopt;
  if (g1.num_vertices() == 0) return std::vector<uint32_t>{};

  Searcher searcher(g1, g2, AutSearchOptions{}.max_nodes);
  ColorState c1 = uniform_coloring(g1.num_vertices());
  ColorState c2 = uniform_coloring(g2.num_vertices());
  if (!refine_pair(g1, c1, g2, c2)) return std::nullopt;
  auto map = searcher.witness(std::move(c1), std::move(c2));
  if (map) {
    for (auto [u, v] : g1.edges())
      if (!g2.has_edge((*map)[u], (*map)[v]))
        fail(Errc::internal_error, "isomorphism witness fails an edge");
  }
  return map;
}

bool is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2,
                   uint32_t max_vertices) {
  return find_isomorphism(g1, g2, max_vertices).has_value();
}

std::string aut_result_json(const AutResult& r) {
  nlohmann::json j;
  j["order"] = r.order.to_decimal();
  j["stabilizer_order"] = r.stabilizer_order.to_decimal();
  j["orbit_size"] = r.orbit_size;
  nlohmann::json gens = nlohmann::json::array();
  for (const Perm& p : r.group.generators()) gens.push_back(format_cycles(p));
  j["generators"] = gens;
  nlohmann::json base = nlohmann::json::array();
  for (uint32_t b : r.base_vertices) base.push_back(b);
  j["base_vertices"] = base;
  nlohmann::json levels = nlohmann::json::array();
  for (uint64_t s : r.level_orbit_sizes) levels.push_back(s);
  j["level_orbit_sizes"] = levels;
  j["nodes"] = r.nodes;
  return j.dump(2);
}

}  // namespace autkit
