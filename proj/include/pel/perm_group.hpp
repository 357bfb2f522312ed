#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pel/perm.hpp"
#include "pel/rational.hpp"
#include "pel/stab_chain.hpp"

namespace pel {

/// Thrown by operations that need the full element set of a group whose
/// order exceeds the enumeration bound.
struct GroupTooLarge : std::runtime_error {
  explicit GroupTooLarge(const BigInt& order, uint64_t bound)
      : std::runtime_error("group of order " + order.str() +
                           " exceeds enumeration bound " + std::to_string(bound)) {}
};

namespace config {
/// Global element-enumeration bound (default 200 000). Operations that
/// require the full element set fail loudly above it.
uint64_t enumeration_bound();
void set_enumeration_bound(uint64_t bound);
constexpr uint64_t kDefaultEnumerationBound = 200000;
}  // namespace config

/// A permutation group given by generators, with a lazily built stabilizer
/// chain and (when small enough) a cached, sorted element set. Immutable
/// after construction; the lazy members are built under a lock so
/// concurrent readers observe a single construction.
class PermGroup {
public:
  PermGroup(uint32_t degree, std::vector<Permutation> generators);
  static PermGroup trivial(uint32_t degree);

  uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  BigInt order() const;
  bool contains(const Permutation& x) const;
  const StabChain& chain() const;

  /// Sorted element set; throws GroupTooLarge above the enumeration bound.
  const std::vector<Permutation>& elements() const;
  bool has_element_cache() const;

  /// Internal: groups built from an already-known element set.
  static PermGroup from_elements(uint32_t degree, std::vector<Permutation> sorted_elements);

private:
  struct Lazy {
    std::mutex mu;
    std::optional<StabChain> chain;
    std::optional<std::vector<Permutation>> elements;
  };

  uint32_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;  // shared so PermGroup stays copyable
};

struct ConjClass {
  Permutation representative;  // minimal image table in the class
  uint64_t size;
  uint64_t element_order;
};

BigInt group_order(const PermGroup& g);
const std::vector<Permutation>& enumerate_elements(const PermGroup& g);

/// Conjugacy classes sorted by (element_order, size, representative).
std::vector<ConjClass> conjugacy_classes(const PermGroup& g);

/// {g in G : gx = xg}; requires x in G.
PermGroup centralizer(const PermGroup& g, const Permutation& x);

/// Smallest normal subgroup of G containing S; requires S subset of G.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s);

/// A Sylow p-subgroup, found by normalizer ascent from a p-element of
/// maximal order.
PermGroup sylow_subgroup(const PermGroup& g, uint64_t p);

/// O_p(G), the largest normal p-subgroup.
PermGroup p_core(const PermGroup& g, uint64_t p);

/// O^{p'}(G) = normal closure of a Sylow p-subgroup = <all p-elements>.
PermGroup o_p_prime_residual(const PermGroup& g, uint64_t p);

PermGroup center(const PermGroup& g);
PermGroup derived_subgroup(const PermGroup& g);
bool is_solvable(const PermGroup& g);

bool is_abelian(const PermGroup& g);
/// Requires H <= G (throws otherwise).
bool is_normal(const PermGroup& g, const PermGroup& h);
bool is_subgroup(const PermGroup& g, const PermGroup& h);

/// Lemma-style check: K normal in G, |K| coprime to o(x)o(y), Kx = Ky.
/// Returns true iff some k in K conjugates x to y (brute force over K).
/// Throws std::invalid_argument naming the violated precondition.
bool coprime_coset_conjugacy_check(const PermGroup& g, const PermGroup& k,
                                   const Permutation& x, const Permutation& y);

/// p-part of n.
BigInt p_part(const BigInt& n, uint64_t p);

/// Prime divisors of n, ascending.
std::vector<uint64_t> prime_divisors(BigInt n);

/// Builds the subgroup generated by a set of elements, reducing to a small
/// strong generating set; attaches the element cache when `elems` is known
/// to be the complete subgroup (closed == true).
PermGroup subgroup_generated_by(uint32_t degree, const std::vector<Permutation>& elems,
                                bool closed);

}  // namespace pel
