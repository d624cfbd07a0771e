#include "transposition.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "errors.hpp"

namespace autkit {

TranspositionSet::TranspositionSet(
    uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  if (n_ == 0) fail(Errc::invalid_argument, "point count must be >= 1");
  for (auto& [i, j] : pairs_) {
    if (i == j) fail(Errc::invalid_argument, "transposition points must differ");
    if (i < 1 || j < 1 || i > n_ || j > n_)
      fail(Errc::invalid_argument, "transposition point out of range 1..n");
    if (i > j) std::swap(i, j);
  }
  std::sort(pairs_.begin(), pairs_.end());
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end())
    fail(Errc::invalid_argument, "repeated transposition");
}

TranspositionSet TranspositionSet::parse(std::string_view text, uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  uint32_t max_point = 0;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto read_point = [&]() -> uint32_t {
    skip_ws();
    size_t start = pos;
    uint64_t value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<uint64_t>(text[pos] - '0');
      if (value > 0xFFFFFFFFull) fail(Errc::parse_error, "point out of range");
      ++pos;
    }
    if (pos == start) fail(Errc::parse_error, "expected a point number");
    return static_cast<uint32_t>(value);
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail(Errc::parse_error, "expected '(' in transposition list");
    ++pos;
    uint32_t i = read_point();
    skip_ws();
    if (pos >= text.size() || text[pos] != ',')
      fail(Errc::parse_error, "expected ',' inside a transposition");
    ++pos;
    uint32_t j = read_point();
    skip_ws();
    if (pos >= text.size() || text[pos] != ')')
      fail(Errc::parse_error, "expected ')' closing a transposition");
    ++pos;
    pairs.emplace_back(i, j);
    max_point = std::max({max_point, i, j});
    skip_ws();
  }
  if (pairs.empty()) fail(Errc::parse_error, "no transpositions found");
  if (n == 0) n = max_point;
  return TranspositionSet(n, std::move(pairs));
}

TranspositionSet TranspositionSet::from_json(std::string_view json_text,
                                             uint32_t n) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    fail(Errc::parse_error, "expected a JSON array of point pairs");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  uint32_t max_point = 0;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 ||
        !item[0].is_number_unsigned() || !item[1].is_number_unsigned())
      fail(Errc::parse_error, "each transposition must be a pair of points");
    uint32_t a = item[0].get<uint32_t>();
    uint32_t b = item[1].get<uint32_t>();
    pairs.emplace_back(a, b);
    max_point = std::max({max_point, a, b});
  }
  if (pairs.empty()) fail(Errc::parse_error, "no transpositions found");
  if (n == 0) n = max_point;
  return TranspositionSet(n, std::move(pairs));
}

TranspositionSet TranspositionSet::from_graph(const SimpleGraph& g) {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  pairs.reserve(g.num_edges());
  for (const auto& [u, v] : g.edges()) pairs.emplace_back(u + 1, v + 1);
  return TranspositionSet(g.num_vertices(), std::move(pairs));
}

std::vector<Perm> TranspositionSet::perms() const {
  std::vector<Perm> result;
  result.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_)
    result.push_back(Perm::transposition(n_, i, j));
  return result;
}

bool TranspositionSet::contains(const Perm& t) const {
  if (t.degree() != n_ || !t.is_transposition()) return false;
  uint32_t i = 0;
  while (t(i) == i) ++i;
  std::pair<uint32_t, uint32_t> key{i + 1, t(i) + 1};
  return std::binary_search(pairs_.begin(), pairs_.end(), key);
}

std::string TranspositionSet::format() const {
  std::string out;
  for (const auto& [i, j] : pairs_)
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return out;
}

std::string TranspositionSet::to_json_string() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [i, j2] : pairs_) j.push_back({i, j2});
  return j.dump();
}

SimpleGraph transposition_graph(const TranspositionSet& s) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(s.size());
  for (const auto& [i, j] : s.pairs()) edges.emplace_back(i - 1, j - 1);
  return SimpleGraph(s.points(), std::move(edges));
}

bool generates_full_symmetric(const TranspositionSet& s) {
  return transposition_graph(s).is_connected();
}

bool is_minimal_generating(const TranspositionSet& s) {
  const SimpleGraph g = transposition_graph(s);
  return g.is_connected() && g.num_edges() == g.num_vertices() - 1;
}

namespace {

bool is_star(const SimpleGraph& g, FamilyTag& tag) {
  uint32_t n = g.num_vertices();
  if (n < 2 || !g.is_connected() || g.num_edges() != n - 1) return false;
  // one vertex adjacent to all others, the rest of degree 1
  uint32_t centers = 0;
  for (uint32_t v = 0; v < n; ++v) {
    if (g.degree_of(v) == n - 1)
      ++centers;
    else if (g.degree_of(v) != 1)
      return false;
  }
  if (n == 2 ? centers != 2 : centers != 1) return false;
  tag = {GraphFamily::star, n, 0};
  return true;
}

bool is_path(const SimpleGraph& g, FamilyTag& tag) {
  uint32_t n = g.num_vertices();
  if (n < 2 || !g.is_connected() || g.num_edges() != n - 1) return false;
  uint32_t endpoints = 0;
  for (uint32_t v = 0; v < n; ++v) {
    if (g.degree_of(v) == 1)
      ++endpoints;
    else if (g.degree_of(v) != 2)
      return false;
  }
  if (endpoints != 2) return false;
  tag = {GraphFamily::path, n, 0};
  return true;
}

bool is_cycle(const SimpleGraph& g, FamilyTag& tag) {
  uint32_t n = g.num_vertices();
  if (n < 3 || !g.is_connected()) return false;
  for (uint32_t v = 0; v < n; ++v)
    if (g.degree_of(v) != 2) return false;
  tag = {GraphFamily::cycle, n, 0};
  return true;
}

bool is_perfect_matching(const SimpleGraph& g, FamilyTag& tag) {
  for (uint32_t v = 0; v < g.num_vertices(); ++v)
    if (g.degree_of(v) != 1) return false;
  tag = {GraphFamily::matching, g.num_vertices() / 2, 0};
  return true;
}

bool is_complete(const SimpleGraph& g, FamilyTag& tag) {
  uint32_t n = g.num_vertices();
  if (g.num_edges() != static_cast<uint64_t>(n) * (n - 1) / 2) return false;
  tag = {GraphFamily::complete, n, 0};
  return true;
}

bool is_complete_bipartite(const SimpleGraph& g, FamilyTag& tag) {
  uint32_t n = g.num_vertices();
  if (!g.is_connected() || n < 2) return false;
  // two-color by BFS, then demand every cross pair is an edge
  std::vector<int8_t> side(n, -1);
  std::vector<uint32_t> queue{0};
  side[0] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    uint32_t u = queue[head];
    for (uint32_t w : g.neighbors(u)) {
      if (side[w] == -1) {
        side[w] = static_cast<int8_t>(1 - side[u]);
        queue.push_back(w);
      } else if (side[w] == side[u]) {
        return false;
      }
    }
  }
  uint64_t a = static_cast<uint64_t>(
      std::count(side.begin(), side.end(), static_cast<int8_t>(0)));
  uint64_t b = n - a;
  if (g.num_edges() != a * b) return false;
  tag = {GraphFamily::complete_bipartite, static_cast<uint32_t>(std::min(a, b)),
         static_cast<uint32_t>(std::max(a, b))};
  return true;
}

}  // namespace

FamilyTag recognize_family(const TranspositionSet& s) {
  const SimpleGraph g = transposition_graph(s);
  FamilyTag tag;
  if (is_star(g, tag)) return tag;
  if (is_path(g, tag)) return tag;
  if (is_cycle(g, tag)) return tag;
  if (is_perfect_matching(g, tag)) return tag;
  if (is_complete(g, tag)) return tag;
  if (is_complete_bipartite(g, tag)) return tag;
  if (g.is_connected() && g.num_edges() == g.num_vertices() - 1)
    return {GraphFamily::tree, g.num_vertices(), 0};
  if (g.is_connected()) {
    GirthData girth = girth_data(g);
    if (girth.triangle_free && girth.square_free)
      return {GraphFamily::triangle_and_square_free, g.num_vertices(), 0};
  }
  return {GraphFamily::other, 0, 0};
}

const char* family_name(GraphFamily f) {
  switch (f) {
    case GraphFamily::star: return "star";
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::matching: return "matching";
    case GraphFamily::complete: return "complete";
    case GraphFamily::complete_bipartite: return "complete_bipartite";
    case GraphFamily::tree: return "tree";
    case GraphFamily::triangle_and_square_free:
      return "triangle_and_square_free";
    case GraphFamily::other: return "other";
  }
  return "other";
}

PermGroup group_of(const TranspositionSet& s) {
  return PermGroup(s.points(), s.perms());
}

namespace tsets {

TranspositionSet star(uint32_t n) {
  if (n < 2) fail(Errc::invalid_argument, "star needs n >= 2");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t i = 2; i <= n; ++i) pairs.emplace_back(1u, i);
  return TranspositionSet(n, std::move(pairs));
}

TranspositionSet path(uint32_t n) {
  if (n < 2) fail(Errc::invalid_argument, "path needs n >= 2");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  return TranspositionSet(n, std::move(pairs));
}

TranspositionSet cycle(uint32_t n) {
  if (n < 3) fail(Errc::invalid_argument, "cycle needs n >= 3");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(1u, n);
  return TranspositionSet(n, std::move(pairs));
}

TranspositionSet matching(uint32_t n) {
  if (n < 2 || n % 2 != 0)
    fail(Errc::invalid_argument, "matching needs an even n >= 2");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t i = 1; i < n; i += 2) pairs.emplace_back(i, i + 1);
  return TranspositionSet(n, std::move(pairs));
}

TranspositionSet complete(uint32_t n) {
  if (n < 2) fail(Errc::invalid_argument, "complete set needs n >= 2");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  return TranspositionSet(n, std::move(pairs));
}

TranspositionSet asymmetric_tree(uint32_t n) {
  if (n < 7)
    fail(Errc::invalid_argument,
         "asymmetric spider needs n >= 7 (legs 1, 2 and n-4 must be distinct "
         "and a smaller tree always has a symmetry)");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  pairs.emplace_back(1u, 2u);                        // leg of length 1
  pairs.emplace_back(1u, 3u);                        // leg of length 2
  pairs.emplace_back(3u, 4u);
  pairs.emplace_back(1u, 5u);                        // leg of length n-4
  for (uint32_t i = 5; i < n; ++i) pairs.emplace_back(i, i + 1);
  return TranspositionSet(n, std::move(pairs));
}

}  // namespace tsets

}  // namespace autkit
