#include "pel/fpr.hpp"

#include <algorithm>
#include <stdexcept>

namespace pel {

namespace {
constexpr uint64_t kMaxCosetIndex = 10000;
}

uint32_t CosetAction::coset_of(const Permutation& x) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), x,
                             [](const auto& a, const Permutation& b) { return a.first < b; });
  if (it == lookup_.end() || !(it->first == x))
    throw std::invalid_argument("coset_of: element not in the group");
  return it->second;
}

Permutation CosetAction::act(const Permutation& x) const {
  std::vector<uint32_t> img(coset_reps.size());
  for (uint32_t i = 0; i < coset_reps.size(); ++i) img[i] = coset_of(coset_reps[i] * x);
  return Permutation(img);
}

CosetAction coset_action(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("coset_action: h is not a subgroup of g");
  BigInt index = g.order() / h.order();
  if (index > kMaxCosetIndex) throw GroupTooLarge(index, kMaxCosetIndex);

  const auto& gelems = g.elements();
  const auto& helems = h.elements();

  // coset of e = { k*e : k in h }; label it by its minimal member
  CosetAction act;
  std::vector<std::pair<Permutation, uint32_t>> lookup;
  lookup.reserve(gelems.size());
  std::vector<bool> seen(gelems.size(), false);
  for (size_t i = 0; i < gelems.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Permutation> coset;
    coset.reserve(helems.size());
    for (const auto& k : helems) coset.push_back(k * gelems[i]);
    std::sort(coset.begin(), coset.end());
    for (const auto& m : coset) {
      auto it = std::lower_bound(gelems.begin(), gelems.end(), m);
      seen[static_cast<size_t>(it - gelems.begin())] = true;
    }
    uint32_t id = static_cast<uint32_t>(act.coset_reps.size());
    act.coset_reps.push_back(coset.front());
    for (auto& m : coset) lookup.emplace_back(std::move(m), id);
  }
  // renumber cosets so ids follow the minimal-representative order
  std::vector<uint32_t> rank(act.coset_reps.size());
  {
    std::vector<uint32_t> by_rep(act.coset_reps.size());
    for (uint32_t i = 0; i < by_rep.size(); ++i) by_rep[i] = i;
    std::sort(by_rep.begin(), by_rep.end(), [&](uint32_t a, uint32_t b) {
      return act.coset_reps[a] < act.coset_reps[b];
    });
    for (uint32_t pos = 0; pos < by_rep.size(); ++pos) rank[by_rep[pos]] = pos;
  }
  for (auto& [elem, id] : lookup) id = rank[id];
  std::sort(act.coset_reps.begin(), act.coset_reps.end());
  std::sort(lookup.begin(), lookup.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  act.lookup_ = std::move(lookup);

  for (const auto& gen : g.generators()) act.image_gens.push_back(act.act(gen));
  act.image = PermGroup(act.index(), act.image_gens);
  return act;
}

Rational fixed_point_ratio(const PermGroup& g, const PermGroup& h, const Permutation& x) {
  if (!g.contains(x)) throw std::invalid_argument("fixed_point_ratio: x not in g");
  CosetAction act = coset_action(g, h);
  Permutation px = act.act(x);
  uint64_t fixed = 0;
  for (uint32_t i = 0; i < act.index(); ++i)
    if (px[i] == i) ++fixed;

  // independent route: fix(x) = |x^g ∩ h| * |C_g(x)| / |h|; the loop counts
  // #{e in g : x^e in h} = |x^g ∩ h| * |C_g(x)| directly
  uint64_t hits = 0;
  for (const auto& e : g.elements())
    if (h.contains(conjugate(x, e))) ++hits;
  BigInt fix_check = BigInt(hits) / h.order();
  if (fix_check != fixed)
    throw std::logic_error("fixed_point_ratio: direct count " + std::to_string(fixed) +
                           " != class-intersection count " + fix_check.str());
  return Rational(BigInt(fixed), BigInt(act.index()));
}

Rational class_commuting_ratio(const PermGroup& g, const Permutation& y, const Permutation& x) {
  if (!g.contains(y)) throw std::invalid_argument("class_commuting_ratio: y not in g");
  std::vector<Permutation> cls;
  for (const auto& e : g.elements()) cls.push_back(conjugate(y, e));
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  uint64_t commuting = 0;
  for (const auto& z : cls)
    if (commute(z, x)) ++commuting;
  return Rational(BigInt(commuting), BigInt(cls.size()));
}

PermGroup quotient(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient: n is not normal in g");
  CosetAction act = coset_action(g, n);
  if (act.image.order() * n.order() != g.order())
    throw std::logic_error("quotient: image order times kernel order != group order");
  return act.image;
}

}  // namespace pel
