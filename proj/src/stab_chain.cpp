#include "pel/stab_chain.hpp"

#include <algorithm>

namespace pel {

StabChain StabChain::build(uint32_t degree, const std::vector<Permutation>& gens) {
  StabChain chain(degree);
  for (const auto& g : gens) chain.extend(g);
  return chain;
}

BigInt StabChain::order() const {
  BigInt n = 1;
  for (const auto& lvl : levels_) n *= static_cast<uint64_t>(lvl.orbit.size());
  return n;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g, 0).first.is_identity();
}

std::vector<uint32_t> StabChain::base() const {
  std::vector<uint32_t> b;
  for (const auto& lvl : levels_) b.push_back(lvl.base_point);
  return b;
}

std::vector<Permutation> StabChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& lvl : levels_)
    for (const auto& g : lvl.gens) out.push_back(g);
  return out;
}

std::vector<const Permutation*> StabChain::level_generators(size_t level) const {
  // the stabilizer at `level` is generated by everything assigned at this
  // level or deeper (deeper generators fix the earlier base points)
  std::vector<const Permutation*> out;
  for (size_t i = level; i < levels_.size(); ++i)
    for (const auto& g : levels_[i].gens) out.push_back(&g);
  return out;
}

std::pair<Permutation, size_t> StabChain::sift(Permutation g, size_t from) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& lvl = levels_[i];
    uint32_t beta = g[lvl.base_point];
    if (beta == lvl.base_point) continue;
    int32_t pos = lvl.orbit_pos.empty() ? -1 : lvl.orbit_pos[beta];
    if (pos < 0) return {std::move(g), i};
    g = g * lvl.transversal[pos].inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabChain::recompute_orbit(size_t level) {
  Level& lvl = levels_[level];
  auto gens = level_generators(level);
  lvl.orbit_pos.assign(degree_, -1);
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.orbit.push_back(lvl.base_point);
  lvl.transversal.push_back(Permutation::identity(degree_));
  lvl.orbit_pos[lvl.base_point] = 0;
  for (size_t i = 0; i < lvl.orbit.size(); ++i) {
    for (const Permutation* s : gens) {
      uint32_t q = (*s)[lvl.orbit[i]];
      if (lvl.orbit_pos[q] < 0) {
        lvl.orbit_pos[q] = static_cast<int32_t>(lvl.orbit.size());
        lvl.orbit.push_back(q);
        lvl.transversal.push_back(lvl.transversal[i] * *s);
      }
    }
  }
}

void StabChain::insert_generator(Permutation g, size_t level) {
  if (level == levels_.size()) {
    Level lvl;
    lvl.base_point = g.smallest_moved_point();
    levels_.push_back(std::move(lvl));
  }
  levels_[level].gens.push_back(std::move(g));
}

// Re-establishes chain completeness for levels <= start: every Schreier
// generator of level i sifts to the identity through levels > i.
void StabChain::complete_from(size_t start) {
  size_t i = start;
  for (;;) {
    recompute_orbit(i);
    Level& lvl = levels_[i];
    bool clean = true;
    auto gens = level_generators(i);
    for (size_t oi = 0; oi < lvl.orbit.size() && clean; ++oi) {
      for (const Permutation* s : gens) {
        uint32_t q = (*s)[lvl.orbit[oi]];
        Permutation schreier =
            lvl.transversal[oi] * *s * lvl.transversal[lvl.orbit_pos[q]].inverse();
        auto [res, at] = sift(std::move(schreier), i + 1);
        if (!res.is_identity()) {
          insert_generator(std::move(res), at);
          i = at;  // levels > at are still complete; redo from `at`
          clean = false;
          break;
        }
      }
    }
    if (!clean) continue;
    if (i == 0) return;
    --i;
  }
}

bool StabChain::extend(const Permutation& g) {
  if (g.is_identity()) return false;
  auto [res, at] = sift(g, 0);
  if (res.is_identity()) return false;
  insert_generator(std::move(res), at);
  // the new generator can enlarge orbits at every level above `at` too
  complete_from(levels_.size() - 1);
  return true;
}

std::vector<Permutation> StabChain::enumerate() const {
  std::vector<Permutation> elems{Permutation::identity(degree_)};
  // a member factors as t_k * ... * t_1 with t_i from the level-i transversal
  for (size_t i = levels_.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(elems.size() * levels_[i].transversal.size());
    for (const auto& e : elems)
      for (const auto& t : levels_[i].transversal) next.push_back(e * t);
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace pel
