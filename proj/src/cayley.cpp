#include "cayley.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

#include "errors.hpp"

namespace autkit {

namespace {

// Lehmer rank of a permutation given as images over 0..m-1, m <= 20.
uint64_t lehmer_rank(const uint32_t* q, uint32_t m, const uint64_t* fact) {
  uint64_t used = 0;
  uint64_t rank = 0;
  for (uint32_t i = 0; i < m; ++i) {
    uint32_t v = q[i];
    uint64_t smaller_used =
        static_cast<uint64_t>(std::popcount(used & ((1ull << v) - 1)));
    rank += (v - smaller_used) * fact[m - 1 - i];
    used |= 1ull << v;
  }
  return rank;
}

void lehmer_unrank(uint64_t rank, uint32_t m, const uint64_t* fact,
                   uint32_t* q_out) {
  uint64_t avail = (m >= 64) ? ~0ull : ((1ull << m) - 1);
  for (uint32_t i = 0; i < m; ++i) {
    uint64_t f = fact[m - 1 - i];
    uint64_t digit = rank / f;
    rank %= f;
    // select the (digit+1)-th remaining value
    uint64_t bits = avail;
    for (uint64_t skip = 0; skip < digit; ++skip) bits &= bits - 1;
    uint32_t v = static_cast<uint32_t>(std::countr_zero(bits));
    q_out[i] = v;
    avail &= ~(1ull << v);
  }
}

}  // namespace

CayleyGraph::CayleyGraph(TranspositionSet s, uint64_t budget_vertices)
    : set_(std::move(s)) {
  const SimpleGraph t = transposition_graph(set_);
  t_connected_ = t.is_connected();
  components_ = t.connected_components();

  uint32_t n = set_.points();
  comp_of_point_.resize(n);
  pos_in_comp_.resize(n);
  for (size_t c = 0; c < components_.size(); ++c)
    for (size_t idx = 0; idx < components_[c].size(); ++idx) {
      comp_of_point_[components_[c][idx]] = static_cast<uint32_t>(c);
      pos_in_comp_[components_[c][idx]] = static_cast<uint32_t>(idx);
    }

  GroupOrder order = GroupOrder::one();
  for (const auto& component : components_) {
    if (component.size() > 20)
      fail(Errc::size_limit_exceeded,
           "transposition graph component exceeds 20 points");
    order *= GroupOrder::factorial(static_cast<uint32_t>(component.size()));
  }
  if (!order.fits_u64() || order.to_u64() > budget_vertices)
    fail(Errc::budget_exceeded, "group order " + order.to_decimal() +
                                    " exceeds the vertex budget of " +
                                    std::to_string(budget_vertices));
  num_vertices_ = order.to_u64();

  factorials_.resize(components_.size());
  weights_.resize(components_.size());
  uint64_t weight = 1;
  for (size_t c = 0; c < components_.size(); ++c) {
    uint32_t m = static_cast<uint32_t>(components_[c].size());
    factorials_[c].resize(m + 1);
    factorials_[c][0] = 1;
    for (uint32_t i = 1; i <= m; ++i)
      factorials_[c][i] = factorials_[c][i - 1] * i;
    weights_[c] = weight;
    weight *= factorials_[c][m];
  }
}

GroupOrder CayleyGraph::group_order() const {
  return GroupOrder(num_vertices_);
}

uint64_t CayleyGraph::rank_component(size_t c,
                                     const std::vector<uint32_t>& images) const {
  const auto& component = components_[c];
  uint32_t m = static_cast<uint32_t>(component.size());
  uint32_t local[20];
  for (uint32_t i = 0; i < m; ++i) {
    uint32_t image = images[component[i]];
    if (comp_of_point_[image] != c)
      fail(Errc::invalid_argument,
           "permutation does not lie in the group generated by the set");
    local[i] = pos_in_comp_[image];
  }
  return lehmer_rank(local, m, factorials_[c].data());
}

void CayleyGraph::unrank_component(size_t c, uint64_t rank,
                                   std::vector<uint32_t>& images) const {
  const auto& component = components_[c];
  uint32_t m = static_cast<uint32_t>(component.size());
  uint32_t local[20];
  lehmer_unrank(rank, m, factorials_[c].data(), local);
  for (uint32_t i = 0; i < m; ++i) images[component[i]] = component[local[i]];
}

uint64_t CayleyGraph::index_of(const Perm& g) const {
  if (g.degree() != set_.points())
    fail(Errc::degree_mismatch, "permutation degree does not match the set");
  std::vector<uint32_t> images(g.images().begin(), g.images().end());
  uint64_t index = 0;
  for (size_t c = 0; c < components_.size(); ++c)
    index += rank_component(c, images) * weights_[c];
  return index;
}

Perm CayleyGraph::perm_at(uint64_t v) const {
  if (v >= num_vertices_) fail(Errc::invalid_argument, "vertex out of range");
  std::vector<uint32_t> images(set_.points());
  for (size_t c = 0; c < components_.size(); ++c) {
    uint32_t m = static_cast<uint32_t>(components_[c].size());
    uint64_t rank = (v / weights_[c]) % factorials_[c][m];
    unrank_component(c, rank, images);
  }
  return Perm::from_images(std::move(images));
}

std::vector<uint64_t> CayleyGraph::neighbor_indices(uint64_t v) const {
  if (v >= num_vertices_) fail(Errc::invalid_argument, "vertex out of range");
  std::vector<uint32_t> images(set_.points());
  for (size_t c = 0; c < components_.size(); ++c) {
    uint32_t m = static_cast<uint32_t>(components_[c].size());
    uint64_t rank = (v / weights_[c]) % factorials_[c][m];
    unrank_component(c, rank, images);
  }
  std::vector<uint64_t> result;
  result.reserve(set_.size());
  for (const auto& [i, j] : set_.pairs()) {
    // neighbor s*g: swap the images at positions i-1 and j-1
    std::swap(images[i - 1], images[j - 1]);
    size_t c = comp_of_point_[i - 1];
    uint32_t m = static_cast<uint32_t>(components_[c].size());
    uint64_t old_rank = (v / weights_[c]) % factorials_[c][m];
    uint64_t new_rank = rank_component(c, images);
    result.push_back(v + (new_rank - old_rank) * weights_[c]);
    std::swap(images[i - 1], images[j - 1]);
  }
  return result;
}

bool CayleyGraph::adjacent(uint64_t x, uint64_t y) const {
  if (x == y) return false;
  Perm px = perm_at(x);
  Perm py = perm_at(y);
  Perm s = compose(py, inverse(px));
  return set_.contains(s);
}

const std::vector<uint16_t>& CayleyGraph::distances_from_identity() const {
  if (!dist_.empty()) return dist_;
  dist_.assign(num_vertices_, UINT16_MAX);
  std::vector<uint64_t> frontier{0};
  dist_[0] = 0;
  uint16_t level = 0;
  while (!frontier.empty()) {
    std::vector<uint64_t> next;
    for (uint64_t v : frontier)
      for (uint64_t w : neighbor_indices(v))
        if (dist_[w] == UINT16_MAX) {
          dist_[w] = static_cast<uint16_t>(level + 1);
          next.push_back(w);
        }
    frontier = std::move(next);
    ++level;
  }
  return dist_;
}

uint32_t CayleyGraph::diameter() const {
  const auto& dist = distances_from_identity();
  uint16_t best = 0;
  for (uint16_t d : dist) best = std::max(best, d);
  return best;
}

std::vector<uint64_t> CayleyGraph::sphere(uint32_t d) const {
  const auto& dist = distances_from_identity();
  std::vector<uint64_t> result;
  for (uint64_t v = 0; v < num_vertices_; ++v)
    if (dist[v] == d) result.push_back(v);
  return result;
}

std::vector<uint64_t> CayleyGraph::level_sizes() const {
  const auto& dist = distances_from_identity();
  std::vector<uint64_t> sizes(diameter() + 1, 0);
  for (uint16_t d : dist) ++sizes[d];
  return sizes;
}

std::vector<Perm> CayleyGraph::right_translation_generators() const {
  if (num_vertices_ > UINT32_MAX)
    fail(Errc::size_limit_exceeded,
         "vertex count too large for explicit vertex permutations");
  uint32_t count = static_cast<uint32_t>(num_vertices_);
  std::vector<Perm> gens;
  for (const Perm& s : set_.perms()) {
    std::vector<uint32_t> images(count);
    for (uint32_t v = 0; v < count; ++v)
      images[v] = static_cast<uint32_t>(index_of(compose(perm_at(v), s)));
    Perm r = Perm::from_images(std::move(images));
    if (!preserves_adjacency(r))
      fail(Errc::internal_error, "right translation failed the edge check");
    gens.push_back(std::move(r));
  }
  return gens;
}

PermGroup CayleyGraph::right_translations() const {
  if (num_vertices_ == 1) return PermGroup::trivial(1);
  return PermGroup(static_cast<uint32_t>(num_vertices_),
                   right_translation_generators());
}

bool CayleyGraph::preserves_adjacency(const Perm& vertex_perm) const {
  if (vertex_perm.degree() != num_vertices_) return false;
  std::vector<Perm> perms;
  perms.reserve(num_vertices_);
  for (uint64_t v = 0; v < num_vertices_; ++v) perms.push_back(perm_at(v));
  for (uint64_t v = 0; v < num_vertices_; ++v) {
    const Perm& image_v = perms[vertex_perm(static_cast<uint32_t>(v))];
    for (uint64_t w : neighbor_indices(v)) {
      if (w < v) continue;  // each edge once
      const Perm& image_w = perms[vertex_perm(static_cast<uint32_t>(w))];
      if (!set_.contains(compose(image_w, inverse(image_v)))) return false;
    }
  }
  return true;
}

SimpleGraph CayleyGraph::to_simple_graph() const {
  if (num_vertices_ > UINT32_MAX)
    fail(Errc::size_limit_exceeded, "vertex count too large to materialize");
  uint32_t count = static_cast<uint32_t>(num_vertices_);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(static_cast<size_t>(count) * set_.size() / 2);
  std::vector<std::string> labels(count);
  for (uint32_t v = 0; v < count; ++v) {
    for (uint64_t w : neighbor_indices(v))
      if (w > v) edges.emplace_back(v, static_cast<uint32_t>(w));
    labels[v] = format_cycles(perm_at(v));
  }
  SimpleGraph g(count, std::move(edges));
  g.set_labels(std::move(labels));
  return g;
}

std::string CayleyGraph::summary_json(bool with_diameter) const {
  nlohmann::json j;
  FamilyTag tag = recognize_family(set_);
  j["family"] = family_name(tag.family);
  j["n"] = set_.points();
  j["set"] = set_.format();
  j["vertices"] = group_order().to_decimal();
  j["degree"] = regular_degree();
  j["generates_full_symmetric"] = t_connected_;
  if (with_diameter) j["diameter"] = diameter();
  return j.dump(2);
}

}  // namespace autkit
