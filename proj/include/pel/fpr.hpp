#pragma once

#include <cstdint>
#include <vector>

#include "pel/perm.hpp"
#include "pel/perm_group.hpp"
#include "pel/rational.hpp"

namespace pel {

/// Action of g on the right cosets of a subgroup h, by right
/// multiplication. Cosets are numbered by their minimal representative
/// (image-table order), so the numbering is deterministic.
struct CosetAction {
  PermGroup image{0, {}};                       // the induced permutation group
  std::vector<Permutation> coset_reps;   // minimal rep of coset i
  std::vector<Permutation> image_gens;   // induced gen for each generator of g

  /// Permutation induced on the cosets by an arbitrary element of g.
  Permutation act(const Permutation& x) const;

  uint32_t index() const { return static_cast<uint32_t>(coset_reps.size()); }

 private:
  friend CosetAction coset_action(const PermGroup&, const PermGroup&);
  std::vector<std::pair<Permutation, uint32_t>> lookup_;  // sorted (element, coset id)
  uint32_t coset_of(const Permutation& x) const;
};

/// Requires h <= g and index at most max_index (default 10000; the cap
/// keeps accidental huge actions from exhausting memory). Throws
/// GroupTooLarge past the cap and std::invalid_argument if h is not a
/// subgroup.
CosetAction coset_action(const PermGroup& g, const PermGroup& h);

/// Fixed point ratio of x on the cosets of h in g. Counts fixed cosets
/// directly and independently checks the count against
/// |x^g intersect h| * |C_g(x)| / |h|; throws std::logic_error if the two
/// routes disagree.
Rational fixed_point_ratio(const PermGroup& g, const PermGroup& h, const Permutation& x);

/// Proportion of the conjugacy class of y (in g) commuting with x.
Rational class_commuting_ratio(const PermGroup& g, const Permutation& y, const Permutation& x);

/// Quotient g/n realized as the coset-action image. Requires n normal in
/// g; verifies |g| = |image| * |n| and throws std::logic_error otherwise.
PermGroup quotient(const PermGroup& g, const PermGroup& n);

}  // namespace pel
