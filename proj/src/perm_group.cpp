#include "pel/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace pel {

namespace config {
namespace {
std::atomic<uint64_t> g_bound{kDefaultEnumerationBound};
}
uint64_t enumeration_bound() { return g_bound.load(); }
void set_enumeration_bound(uint64_t bound) { g_bound.store(bound); }
}  // namespace config

PermGroup::PermGroup(uint32_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
}

PermGroup PermGroup::trivial(uint32_t degree) { return PermGroup(degree, {}); }

const StabChain& PermGroup::chain() const {
  std::lock_guard lock(lazy_->mu);
  if (!lazy_->chain) lazy_->chain = StabChain::build(degree_, generators_);
  return *lazy_->chain;
}

BigInt PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree_) return false;
  {
    std::lock_guard lock(lazy_->mu);
    if (lazy_->elements)
      return std::binary_search(lazy_->elements->begin(), lazy_->elements->end(), x);
  }
  return chain().contains(x);
}

bool PermGroup::has_element_cache() const {
  std::lock_guard lock(lazy_->mu);
  return lazy_->elements.has_value();
}

const std::vector<Permutation>& PermGroup::elements() const {
  BigInt n = order();  // builds the chain outside the lock below
  std::lock_guard lock(lazy_->mu);
  if (!lazy_->elements) {
    uint64_t bound = config::enumeration_bound();
    if (n > bound) throw GroupTooLarge(n, bound);
    lazy_->elements = lazy_->chain->enumerate();
  }
  return *lazy_->elements;
}

PermGroup PermGroup::from_elements(uint32_t degree, std::vector<Permutation> sorted_elements) {
  // reduce to a strong generating set by sifting
  StabChain chain(degree);
  std::vector<Permutation> gens;
  for (const auto& e : sorted_elements)
    if (chain.extend(e)) gens.push_back(e);
  PermGroup g(degree, std::move(gens));
  g.lazy_->chain = std::move(chain);
  g.lazy_->elements = std::move(sorted_elements);
  return g;
}

BigInt group_order(const PermGroup& g) { return g.order(); }

const std::vector<Permutation>& enumerate_elements(const PermGroup& g) {
  return g.elements();
}

PermGroup subgroup_generated_by(uint32_t degree, const std::vector<Permutation>& elems,
                                bool closed) {
  if (closed) {
    std::vector<Permutation> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    return PermGroup::from_elements(degree, std::move(sorted));
  }
  StabChain chain(degree);
  std::vector<Permutation> gens;
  for (const auto& e : elems)
    if (chain.extend(e)) gens.push_back(e);
  return PermGroup(degree, std::move(gens));
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g) {
  const auto& elems = g.elements();
  std::unordered_map<Permutation, uint32_t, PermHash> index;
  index.reserve(elems.size() * 2);
  for (uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  std::vector<bool> done(elems.size(), false);
  std::vector<ConjClass> classes;
  for (uint32_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    // BFS of the class under conjugation by the generators
    std::vector<uint32_t> cls{i};
    done[i] = true;
    for (size_t head = 0; head < cls.size(); ++head) {
      for (const auto& s : g.generators()) {
        Permutation c = conjugate(elems[cls[head]], s);
        uint32_t j = index.at(c);
        if (!done[j]) {
          done[j] = true;
          cls.push_back(j);
        }
      }
    }
    uint32_t min_idx = *std::min_element(cls.begin(), cls.end());
    classes.push_back(ConjClass{elems[min_idx], cls.size(), elems[min_idx].order()});
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });
  return classes;
}

PermGroup centralizer(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw std::invalid_argument("centralizer: x not in G");
  std::vector<Permutation> cent;
  for (const auto& e : g.elements())
    if (commute(e, x)) cent.push_back(e);
  return subgroup_generated_by(g.degree(), cent, /*closed=*/true);
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s) {
  for (const auto& x : s)
    if (!g.contains(x)) throw std::invalid_argument("normal_closure: S not a subset of G");
  StabChain chain(g.degree());
  std::vector<Permutation> gens;
  std::vector<Permutation> queue;
  for (const auto& x : s)
    if (chain.extend(x)) {
      gens.push_back(x);
      queue.push_back(x);
    }
  while (!queue.empty()) {
    Permutation c = std::move(queue.back());
    queue.pop_back();
    for (const auto& a : g.generators()) {
      Permutation h = conjugate(c, a);
      if (chain.extend(h)) {
        gens.push_back(h);
        queue.push_back(h);
      }
    }
  }
  return PermGroup(g.degree(), std::move(gens));
}

BigInt p_part(const BigInt& n, uint64_t p) {
  BigInt m = n, part = 1;
  while (m % p == 0) {
    m /= p;
    part *= p;
  }
  return part;
}

std::vector<uint64_t> prime_divisors(BigInt n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; BigInt(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n.convert_to<uint64_t>());
  return out;
}

namespace {

// <x>: all powers of x
std::vector<Permutation> cyclic_elements(const Permutation& x) {
  std::vector<Permutation> out{Permutation::identity(x.degree())};
  Permutation y = x;
  while (!y.is_identity()) {
    out.push_back(y);
    y = y * x;
  }
  return out;
}

bool normalizes(const Permutation& y, const PermGroup& p) {
  for (const auto& s : p.generators())
    if (!p.contains(conjugate(s, y))) return false;
  return true;
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& g, uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup: p is not prime");
  BigInt target = p_part(g.order(), p);
  if (target == 1) return PermGroup::trivial(g.degree());

  const auto& elems = g.elements();
  std::vector<Permutation> p_elems;
  for (const auto& e : elems)
    if (!e.is_identity() && is_p_element(e, p)) p_elems.push_back(e);

  // seed: first p-element of maximal order (elements are sorted)
  const Permutation* seed = &p_elems.front();
  for (const auto& e : p_elems)
    if (e.order() > seed->order()) seed = &e;

  PermGroup syl = subgroup_generated_by(g.degree(), cyclic_elements(*seed), true);
  while (syl.order() < target) {
    // normalizer ascent: a p-element of N_G(P) \ P always exists here
    bool grew = false;
    for (const auto& y : p_elems) {
      if (syl.contains(y) || !normalizes(y, syl)) continue;
      std::vector<Permutation> gens = syl.generators();
      gens.push_back(y);
      PermGroup bigger(g.degree(), std::move(gens));
      bigger.elements();  // force the cache; p-subgroups stay small
      syl = std::move(bigger);
      grew = true;
      break;
    }
    if (!grew)
      throw std::logic_error("sylow_subgroup: normalizer ascent stalled");
  }
  return syl;
}

PermGroup p_core(const PermGroup& g, uint64_t p) {
  PermGroup core = sylow_subgroup(g, p);
  for (;;) {
    const Permutation* bad = nullptr;
    for (const auto& a : g.generators())
      if (!normalizes(a, core)) {
        bad = &a;
        break;
      }
    if (!bad) return core;
    // intersect with the conjugate; contains O_p(G), order strictly drops
    const auto& ce = core.elements();
    std::unordered_set<Permutation, PermHash> conj_set;
    for (const auto& e : ce) conj_set.insert(conjugate(e, *bad));
    std::vector<Permutation> inter;
    for (const auto& e : ce)
      if (conj_set.count(e)) inter.push_back(e);
    core = subgroup_generated_by(g.degree(), inter, /*closed=*/true);
  }
}

PermGroup o_p_prime_residual(const PermGroup& g, uint64_t p) {
  PermGroup syl = sylow_subgroup(g, p);
  if (syl.generators().empty()) return PermGroup::trivial(g.degree());
  return normal_closure(g, syl.generators());
}

PermGroup center(const PermGroup& g) {
  std::vector<Permutation> z;
  for (const auto& e : g.elements()) {
    bool central = true;
    for (const auto& s : g.generators())
      if (!commute(e, s)) {
        central = false;
        break;
      }
    if (central) z.push_back(e);
  }
  return subgroup_generated_by(g.degree(), z, /*closed=*/true);
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  for (const auto& a : g.generators())
    for (const auto& b : g.generators()) {
      Permutation c = commutator(a, b);
      if (!c.is_identity()) comms.push_back(c);
    }
  if (comms.empty()) return PermGroup::trivial(g.degree());
  return normal_closure(g, comms);
}

bool is_solvable(const PermGroup& g) {
  PermGroup d = g;
  BigInt n = g.order();
  for (;;) {
    if (n == 1) return true;
    PermGroup next = derived_subgroup(d);
    BigInt m = next.order();
    if (m == n) return false;
    d = std::move(next);
    n = std::move(m);
  }
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(gens[i], gens[j])) return false;
  return true;
}

bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  for (const auto& s : h.generators())
    if (!g.contains(s)) return false;
  return true;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("is_normal: H not a subgroup of G");
  for (const auto& a : g.generators())
    for (const auto& s : h.generators())
      if (!h.contains(conjugate(s, a))) return false;
  return true;
}

bool coprime_coset_conjugacy_check(const PermGroup& g, const PermGroup& k,
                                   const Permutation& x, const Permutation& y) {
  if (!g.contains(x) || !g.contains(y))
    throw std::invalid_argument("coprime_coset_conjugacy_check: x or y not in G");
  if (!is_normal(g, k))
    throw std::invalid_argument("coprime_coset_conjugacy_check: K not normal in G");
  BigInt ord_k = k.order();
  uint64_t oxy = x.order() * y.order();
  if (boost::multiprecision::gcd(ord_k, BigInt(oxy)) != 1)
    throw std::invalid_argument("coprime_coset_conjugacy_check: |K| not coprime to o(x)o(y)");
  if (!normalizes(x, k) || !normalizes(y, k))
    throw std::invalid_argument("coprime_coset_conjugacy_check: x or y does not normalize K");
  if (!k.contains(y * x.inverse()))
    throw std::invalid_argument("coprime_coset_conjugacy_check: Kx != Ky");
  for (const auto& e : k.elements())
    if (conjugate(x, e) == y) return true;
  return false;
}

}  // namespace pel
