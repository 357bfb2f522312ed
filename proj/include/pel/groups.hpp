#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pel/group_spec.hpp"
#include "pel/perm.hpp"
#include "pel/perm_group.hpp"
#include "pel/rational.hpp"

namespace pel {

/// Builds the faithful permutation group described by the spec (smallest
/// natural action per family, disjoint unions for products and extensions).
/// Throws InvalidSpec on bad parameters. Construction itself never checks
/// the enumeration bound.
PermGroup construct(const GroupSpec& spec);

/// Closed-form order of the construction, when the family has one
/// (everything except perm_gens). Lets callers detect too-large groups
/// without building a stabilizer chain.
std::optional<BigInt> closed_form_order(const GroupSpec& spec);

/// Isomorphism-invariant tuple: equal fingerprints are necessary (not
/// sufficient) for isomorphism.
struct Fingerprint {
  BigInt order;
  std::vector<std::pair<uint64_t, uint64_t>> order_multiset;  // (element order, count)
  BigInt center_order;
  BigInt derived_order;
  struct PrimeData {
    uint64_t p;
    uint64_t p_element_count;
    BigInt sylow_order;
    bool sylow_normal;
    bool sylow_abelian;
    BigInt p_core_order;
    bool operator==(const PrimeData&) const = default;
  };
  std::vector<PrimeData> primes;  // one per prime divisor of |G|, ascending

  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
};

Fingerprint fingerprint(const PermGroup& g);

/// The witness element the construction carries for ex1/ex2 (the central
/// element of O_p with large centralizer ratio): x in K \ Z(H) for ex1,
/// a^2 of the D_16 for ex2. Throws InvalidSpec for other kinds.
Permutation example_witness(const GroupSpec& spec);

}  // namespace pel
