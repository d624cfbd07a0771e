#include "permgroup.hpp"

#include <algorithm>

#include "errors.hpp"

namespace autkit {

StabilizerChain::StabilizerChain(uint32_t degree,
                                 const std::vector<Perm>& generators)
    : degree_(degree) {
  if (degree == 0) fail(Errc::invalid_argument, "degree must be >= 1");
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      fail(Errc::degree_mismatch, "generator degree does not match group");
    if (g.is_identity()) continue;
    // g belongs to every level whose base prefix it fixes.
    size_t j = 0;
    while (true) {
      if (j == levels_.size()) push_level(g.smallest_moved_point());
      levels_[j].gens.push_back(g);
      levels_[j].inv_gens.push_back(inverse(g));
      if (g(levels_[j].base) != levels_[j].base) break;
      ++j;
    }
    for (size_t l = 0; l <= j; ++l) rebuild_orbit(l);
  }
  verify();
}

void StabilizerChain::push_level(uint32_t base) {
  Level level;
  level.base = base;
  level.parent_gen.assign(degree_, -1);
  level.parent_point.assign(degree_, 0);
  level.in_orbit.assign(degree_, 0);
  level.in_orbit[base] = 1;
  level.orbit = {base};
  levels_.push_back(std::move(level));
}

void StabilizerChain::rebuild_orbit(size_t li) {
  Level& level = levels_[li];
  std::fill(level.parent_gen.begin(), level.parent_gen.end(), -1);
  std::fill(level.in_orbit.begin(), level.in_orbit.end(), 0);
  level.orbit.clear();
  level.orbit.push_back(level.base);
  level.in_orbit[level.base] = 1;
  for (size_t head = 0; head < level.orbit.size(); ++head) {
    uint32_t v = level.orbit[head];
    for (size_t gi = 0; gi < level.gens.size(); ++gi) {
      uint32_t w = level.gens[gi](v);
      if (level.in_orbit[w]) continue;
      level.in_orbit[w] = 1;
      level.parent_gen[w] = static_cast<int32_t>(gi);
      level.parent_point[w] = v;
      level.orbit.push_back(w);
    }
  }
}

Perm StabilizerChain::rep(size_t li, uint32_t point) const {
  const Level& level = levels_[li];
  std::vector<int32_t> path;
  uint32_t w = point;
  while (w != level.base) {
    path.push_back(level.parent_gen[w]);
    w = level.parent_point[w];
  }
  Perm u = Perm::identity(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = compose(u, level.gens[static_cast<size_t>(*it)]);
  return u;
}

std::pair<Perm, size_t> StabilizerChain::sift_from(Perm p, size_t start) const {
  for (size_t i = start; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    uint32_t w = p(level.base);
    if (w == level.base) continue;
    if (!level.in_orbit[w]) return {std::move(p), i};
    while (w != level.base) {
      int32_t gi = level.parent_gen[w];
      p = compose(p, level.inv_gens[static_cast<size_t>(gi)]);
      w = level.parent_point[w];
    }
  }
  return {std::move(p), levels_.size()};
}

void StabilizerChain::add_to_levels(const Perm& g, size_t first, size_t last) {
  for (size_t l = first; l <= last; ++l) {
    levels_[l].gens.push_back(g);
    levels_[l].inv_gens.push_back(inverse(g));
    rebuild_orbit(l);
  }
}

void StabilizerChain::verify() {
  if (levels_.empty()) return;
  // Checks, from the deepest level up, that every Schreier generator strips
  // to the identity through the levels below. A residue that does not strip
  // becomes a new strong generator and verification resumes at its level.
  size_t i = levels_.size() - 1;
  while (true) {
    bool restarted = false;
    size_t orbit_count = levels_[i].orbit.size();
    for (size_t oi = 0; oi < orbit_count && !restarted; ++oi) {
      uint32_t v = levels_[i].orbit[oi];
      Perm uv = rep(i, v);
      size_t gen_count = levels_[i].gens.size();
      for (size_t gi = 0; gi < gen_count; ++gi) {
        Perm m = compose(uv, levels_[i].gens[gi]);
        auto [residue, j] = sift_from(std::move(m), i);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) push_level(residue.smallest_moved_point());
        add_to_levels(residue, i + 1, j);
        i = j;
        restarted = true;
        break;
      }
    }
    if (restarted) continue;
    if (i == 0) break;
    --i;
  }
}

GroupOrder StabilizerChain::order() const {
  GroupOrder result = GroupOrder::one();
  for (const Level& level : levels_) result *= level.orbit.size();
  return result;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = sift_from(p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<Perm> StabilizerChain::transversal(size_t level) const {
  std::vector<Perm> reps;
  reps.reserve(levels_[level].orbit.size());
  for (uint32_t v : levels_[level].orbit) reps.push_back(rep(level, v));
  return reps;
}

std::vector<uint32_t> StabilizerChain::base_points() const {
  std::vector<uint32_t> base;
  base.reserve(levels_.size());
  for (const Level& level : levels_) base.push_back(level.base);
  return base;
}

std::vector<uint64_t> StabilizerChain::orbit_sizes() const {
  std::vector<uint64_t> sizes;
  sizes.reserve(levels_.size());
  for (const Level& level : levels_) sizes.push_back(level.orbit.size());
  return sizes;
}

PermGroup::PermGroup(uint32_t degree, std::vector<Perm> generators)
    : degree_(degree),
      generators_(std::move(generators)),
      chain_(degree, generators_) {}

PermGroup PermGroup::trivial(uint32_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(uint32_t n) {
  if (n == 0) fail(Errc::invalid_argument, "degree must be >= 1");
  std::vector<Perm> gens;
  for (uint32_t k = 2; k <= n; ++k)
    gens.push_back(Perm::transposition(n, 1, k));
  return PermGroup(n, std::move(gens));
}

std::vector<Perm> PermGroup::elements(uint64_t cap) const {
  GroupOrder n = order();
  if (!n.fits_u64() || n.to_u64() > cap)
    fail(Errc::order_exceeds_cap,
         "group order " + n.to_decimal() + " exceeds enumeration cap");
  // Every element factors uniquely as u_{k-1} * ... * u_0 with u_i a coset
  // representative of level i, so fold the transversals from the deepest
  // level up.
  std::vector<Perm> result{Perm::identity(degree_)};
  for (size_t li = chain_.levels(); li-- > 0;) {
    std::vector<Perm> reps = chain_.transversal(li);
    std::vector<Perm> next;
    next.reserve(result.size() * reps.size());
    for (const Perm& p : result)
      for (const Perm& u : reps) next.push_back(compose(p, u));
    result = std::move(next);
  }
  return result;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  for (const Perm& s : generators_)
    if (!g.contains(s)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
  if (!is_subgroup_of(g))
    fail(Errc::not_a_subgroup, "normality test on a non-subgroup");
  for (const Perm& x : g.generators_)
    for (const Perm& s : generators_)
      if (!contains(conjugate(s, x))) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& g) const {
  return degree_ == g.degree_ && order() == g.order() && g.is_subgroup_of(*this);
}

PermGroup direct_sum(const PermGroup& a, const PermGroup& b) {
  uint32_t n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<uint32_t> images(n);
    for (uint32_t i = 0; i < a.degree(); ++i) images[i] = g(i);
    for (uint32_t i = a.degree(); i < n; ++i) images[i] = i;
    gens.push_back(Perm::from_images(std::move(images)));
  }
  for (const Perm& g : b.generators()) {
    std::vector<uint32_t> images(n);
    for (uint32_t i = 0; i < a.degree(); ++i) images[i] = i;
    for (uint32_t i = 0; i < b.degree(); ++i) images[a.degree() + i] = a.degree() + g(i);
    gens.push_back(Perm::from_images(std::move(images)));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup wreath(const PermGroup& a, const PermGroup& b) {
  uint32_t d = a.degree();
  uint32_t m = b.degree();
  uint32_t n = d * m;
  std::vector<Perm> gens;
  // Top group permutes the blocks.
  for (const Perm& g : a.generators()) {
    std::vector<uint32_t> images(n);
    for (uint32_t x = 0; x < d; ++x)
      for (uint32_t y = 0; y < m; ++y) images[x * m + y] = g(x) * m + y;
    gens.push_back(Perm::from_images(std::move(images)));
  }
  // One copy of the bottom group inside each block.
  for (uint32_t x = 0; x < d; ++x) {
    for (const Perm& g : b.generators()) {
      std::vector<uint32_t> images(n);
      for (uint32_t i = 0; i < n; ++i) images[i] = i;
      for (uint32_t y = 0; y < m; ++y) images[x * m + y] = x * m + g(y);
      gens.push_back(Perm::from_images(std::move(images)));
    }
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace autkit
