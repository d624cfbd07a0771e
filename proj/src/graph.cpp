#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_set>

#include <json.hpp>

#include "errors.hpp"

namespace autkit {

SimpleGraph::SimpleGraph(uint32_t num_vertices,
                         std::vector<std::pair<uint32_t, uint32_t>> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ == 0) fail(Errc::invalid_argument, "graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_)
      fail(Errc::invalid_argument, "edge endpoint out of range");
    if (u == v) fail(Errc::invalid_argument, "loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    fail(Errc::invalid_argument, "duplicate edge");
  adj_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool SimpleGraph::has_edge(uint32_t u, uint32_t v) const {
  if (u >= n_ || v >= n_ || u == v) return false;
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  uint32_t target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(list.begin(), list.end(), target);
}

const std::string& SimpleGraph::label(uint32_t v) const {
  static const std::string empty;
  if (labels_.empty()) return empty;
  return labels_[v];
}

void SimpleGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_)
    fail(Errc::invalid_argument, "label count does not match vertex count");
  labels_ = std::move(labels);
}

bool SimpleGraph::is_connected() const {
  return connected_components().size() == 1;
}

std::vector<std::vector<uint32_t>> SimpleGraph::connected_components() const {
  std::vector<std::vector<uint32_t>> components;
  std::vector<uint8_t> seen(n_, 0);
  for (uint32_t start = 0; start < n_; ++start) {
    if (seen[start]) continue;
    std::vector<uint32_t> component{start};
    seen[start] = 1;
    for (size_t head = 0; head < component.size(); ++head) {
      for (uint32_t w : adj_[component[head]]) {
        if (seen[w]) continue;
        seen[w] = 1;
        component.push_back(w);
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::vector<uint32_t> SimpleGraph::degree_sequence() const {
  std::vector<uint32_t> degrees(n_);
  for (uint32_t v = 0; v < n_; ++v) degrees[v] = degree_of(v);
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

bool SimpleGraph::is_regular() const {
  for (uint32_t v = 1; v < n_; ++v)
    if (degree_of(v) != degree_of(0)) return false;
  return true;
}

SimpleGraph complete_graph(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph complete_bipartite_graph(uint32_t a, uint32_t b) {
  if (a == 0 || b == 0)
    fail(Errc::invalid_argument, "both parts need at least one vertex");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < a; ++u)
    for (uint32_t v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return SimpleGraph(a + b, std::move(edges));
}

SimpleGraph star_graph(uint32_t n) {
  if (n < 2) fail(Errc::invalid_argument, "star needs at least 2 vertices");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 1; v < n; ++v) edges.emplace_back(0u, v);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph path_graph(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph cycle_graph(uint32_t n) {
  if (n < 3) fail(Errc::invalid_argument, "cycle needs at least 3 vertices");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0u, n - 1);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph matching_graph(uint32_t m) {
  if (m == 0) fail(Errc::invalid_argument, "matching needs at least one edge");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t e = 0; e < m; ++e) edges.emplace_back(2 * e, 2 * e + 1);
  return SimpleGraph(2 * m, std::move(edges));
}

SimpleGraph hypercube_graph(uint32_t d) {
  if (d == 0 || d > 20)
    fail(Errc::invalid_argument, "hypercube dimension must be in 1..20");
  uint32_t n = 1u << d;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t bit = 0; bit < d; ++bit) {
      uint32_t w = v ^ (1u << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  SimpleGraph g(n, std::move(edges));
  std::vector<std::string> labels(n);
  for (uint32_t v = 0; v < n; ++v) {
    std::string bits(d, '0');
    for (uint32_t bit = 0; bit < d; ++bit)
      if (v & (1u << (d - 1 - bit))) bits[bit] = '1';
    labels[v] = std::move(bits);
  }
  g.set_labels(std::move(labels));
  return g;
}

namespace {

uint64_t binomial(uint32_t n, uint32_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<uint32_t>> k_subsets_lex(uint32_t n, uint32_t k) {
  std::vector<std::vector<uint32_t>> subsets;
  std::vector<uint32_t> current(k);
  for (uint32_t i = 0; i < k; ++i) current[i] = i + 1;
  while (true) {
    subsets.push_back(current);
    // advance to the next k-subset of {1..n} in lexicographic order
    int32_t pos = static_cast<int32_t>(k) - 1;
    while (pos >= 0 && current[pos] == n - (k - 1 - static_cast<uint32_t>(pos)))
      --pos;
    if (pos < 0) break;
    ++current[pos];
    for (uint32_t j = static_cast<uint32_t>(pos) + 1; j < k; ++j)
      current[j] = current[j - 1] + 1;
  }
  return subsets;
}

uint32_t intersection_size(const std::vector<uint32_t>& a,
                           const std::vector<uint32_t>& b) {
  uint32_t count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

}  // namespace

SimpleGraph johnson_style_graph(uint32_t n, uint32_t k, uint32_t i) {
  if (k == 0 || k > n)
    fail(Errc::invalid_argument, "subset size must be in 1..n");
  if (i >= k)
    fail(Errc::invalid_argument, "intersection size must be below k");
  if (binomial(n, k) > 100000)
    fail(Errc::size_limit_exceeded, "too many subsets");
  auto subsets = k_subsets_lex(n, k);
  uint32_t count = static_cast<uint32_t>(subsets.size());
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < count; ++u)
    for (uint32_t v = u + 1; v < count; ++v)
      if (intersection_size(subsets[u], subsets[v]) == i)
        edges.emplace_back(u, v);
  SimpleGraph g(count, std::move(edges));
  std::vector<std::string> labels(count);
  for (uint32_t v = 0; v < count; ++v) {
    std::string text = "{";
    for (size_t t = 0; t < subsets[v].size(); ++t) {
      if (t) text += ',';
      text += std::to_string(subsets[v][t]);
    }
    text += '}';
    labels[v] = std::move(text);
  }
  g.set_labels(std::move(labels));
  return g;
}

SimpleGraph kneser_graph(uint32_t n, uint32_t k) {
  return johnson_style_graph(n, k, 0);
}

SimpleGraph petersen_graph() { return kneser_graph(5, 2); }

SimpleGraph octahedron_graph() { return complement(matching_graph(3)); }

SimpleGraph make_named_graph(const std::string& name,
                             std::optional<uint32_t> n,
                             std::optional<uint32_t> k,
                             std::optional<uint32_t> i) {
  std::string key;
  for (char c : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  auto need = [&](const std::optional<uint32_t>& value,
                  const char* what) -> uint32_t {
    if (!value) fail(Errc::invalid_argument, std::string("missing parameter ") + what);
    return *value;
  };

  if (key == "complete") return complete_graph(need(n, "n"));
  if (key == "complete_bipartite" || key == "bipartite")
    return complete_bipartite_graph(need(n, "n"), need(k, "k"));
  if (key == "star") return star_graph(need(n, "n"));
  if (key == "path") return path_graph(need(n, "n"));
  if (key == "cycle") return cycle_graph(need(n, "n"));
  if (key == "matching") return matching_graph(need(n, "n"));
  if (key == "hypercube" || key == "cube") return hypercube_graph(need(n, "n"));
  if (key == "kneser") return kneser_graph(need(n, "n"), need(k, "k"));
  if (key == "johnson")
    return johnson_style_graph(need(n, "n"), need(k, "k"),
                               i ? *i : need(k, "k") - 1);
  if (key == "petersen") return petersen_graph();
  if (key == "octahedron") return octahedron_graph();
  fail(Errc::invalid_argument, "unknown graph family: " + name);
}

SimpleGraph complement(const SimpleGraph& g) {
  uint32_t n = g.num_vertices();
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  SimpleGraph result(n, std::move(edges));
  if (g.has_labels()) {
    std::vector<std::string> labels(n);
    for (uint32_t v = 0; v < n; ++v) labels[v] = g.label(v);
    result.set_labels(std::move(labels));
  }
  return result;
}

SimpleGraph line_graph(const SimpleGraph& g) {
  const auto& edges = g.edges();
  uint32_t m = g.num_edges();
  if (m == 0) fail(Errc::invalid_argument, "line graph of an empty graph");
  std::vector<std::pair<uint32_t, uint32_t>> line_edges;
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = a + 1; b < m; ++b) {
      const auto& [u1, v1] = edges[a];
      const auto& [u2, v2] = edges[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
        line_edges.emplace_back(a, b);
    }
  SimpleGraph result(m, std::move(line_edges));
  std::vector<std::string> labels(m);
  for (uint32_t a = 0; a < m; ++a)
    labels[a] = std::to_string(edges[a].first) + "-" +
                std::to_string(edges[a].second);
  result.set_labels(std::move(labels));
  return result;
}

SimpleGraph disjoint_copies(const SimpleGraph& g, uint32_t copies) {
  if (copies == 0) fail(Errc::invalid_argument, "need at least one copy");
  uint32_t n = g.num_vertices();
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(static_cast<size_t>(g.num_edges()) * copies);
  for (uint32_t c = 0; c < copies; ++c)
    for (const auto& [u, v] : g.edges())
      edges.emplace_back(c * n + u, c * n + v);
  return SimpleGraph(n * copies, std::move(edges));
}

namespace {

uint64_t extend_clique(const SimpleGraph& g, std::vector<uint32_t>& clique,
                       const std::vector<uint32_t>& candidates,
                       uint32_t remaining) {
  if (remaining == 0) return 1;
  if (candidates.size() < remaining) return 0;
  uint64_t total = 0;
  for (size_t idx = 0; idx < candidates.size(); ++idx) {
    uint32_t v = candidates[idx];
    std::vector<uint32_t> next;
    for (size_t jdx = idx + 1; jdx < candidates.size(); ++jdx)
      if (g.has_edge(v, candidates[jdx])) next.push_back(candidates[jdx]);
    clique.push_back(v);
    total += extend_clique(g, clique, next, remaining - 1);
    clique.pop_back();
  }
  return total;
}

}  // namespace

uint64_t count_cliques(const SimpleGraph& g, uint32_t size) {
  if (size == 0) return 1;
  std::vector<uint32_t> all(g.num_vertices());
  for (uint32_t v = 0; v < g.num_vertices(); ++v) all[v] = v;
  std::vector<uint32_t> clique;
  return extend_clique(g, clique, all, size);
}

GirthData girth_data(const SimpleGraph& g) {
  GirthData data;
  uint32_t n = g.num_vertices();
  uint32_t best = 0;

  // The shortest cycle shows up as a non-tree edge in some breadth first
  // search; the closed walk length dist(u) + dist(w) + 1 can only ever
  // overshoot, so the minimum over all roots is exact.
  std::vector<uint32_t> dist(n);
  std::vector<int64_t> parent(n);
  std::vector<uint32_t> queue;
  for (uint32_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    std::fill(parent.begin(), parent.end(), -1);
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      uint32_t u = queue[head];
      if (best != 0 && dist[u] * 2 >= best) break;
      for (uint32_t w : g.neighbors(u)) {
        if (dist[w] == UINT32_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (static_cast<int64_t>(w) != parent[u] &&
                   static_cast<int64_t>(u) != parent[w]) {
          uint32_t len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  data.girth = best;
  data.triangle_free = best != 3;

  // A 4-cycle is two distinct vertices with two common neighbours; record
  // every neighbour pair per midpoint and watch for a repeat.
  std::unordered_set<uint64_t> seen_pairs;
  bool square = false;
  for (uint32_t x = 0; x < n && !square; ++x) {
    const auto& nb = g.neighbors(x);
    for (size_t a = 0; a < nb.size() && !square; ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) {
        uint64_t key = static_cast<uint64_t>(nb[a]) * n + nb[b];
        if (!seen_pairs.insert(key).second) {
          square = true;
          break;
        }
      }
  }
  data.square_free = !square;
  return data;
}

std::string to_dot(const SimpleGraph& g) {
  std::string out = "graph G {\n";
  for (uint32_t v = 0; v < g.num_vertices(); ++v) {
    out += "  " + std::to_string(v);
    if (g.has_labels() && !g.label(v).empty())
      out += " [label=\"" + g.label(v) + "\"]";
    out += ";\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string to_json_string(const SimpleGraph& g) {
  nlohmann::json j;
  j["num_vertices"] = g.num_vertices();
  j["num_edges"] = g.num_edges();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) {
    auto labels = nlohmann::json::array();
    for (uint32_t v = 0; v < g.num_vertices(); ++v) labels.push_back(g.label(v));
    j["labels"] = std::move(labels);
  }
  return j.dump(2);
}

std::string format_edge_list(const SimpleGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::vector<uint64_t> numbers;
  size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<uint64_t>(text[pos] - '0');
        if (value > UINT32_MAX) fail(Errc::parse_error, "number out of range");
        ++pos;
      }
      numbers.push_back(value);
    } else {
      fail(Errc::parse_error, "unexpected character in edge list");
    }
  }
  if (numbers.empty()) fail(Errc::parse_error, "empty edge list");
  if (numbers.size() % 2 == 0)
    fail(Errc::parse_error, "expected a vertex count then pairs of endpoints");
  uint32_t n = static_cast<uint32_t>(numbers[0]);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (size_t idx = 1; idx + 1 < numbers.size(); idx += 2)
    edges.emplace_back(static_cast<uint32_t>(numbers[idx]),
                       static_cast<uint32_t>(numbers[idx + 1]));
  return SimpleGraph(n, std::move(edges));
}

}  // namespace autkit
