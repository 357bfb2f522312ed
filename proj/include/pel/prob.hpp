#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pel/perm.hpp"
#include "pel/perm_group.hpp"
#include "pel/rational.hpp"

namespace pel {

/// The threshold (p^2 + p - 1) / p^3. Throws std::invalid_argument if p is
/// not prime.
Rational f_threshold(uint64_t p);

/// Number of p-elements of g (the identity counts for every p).
uint64_t count_p_elements(const PermGroup& g, uint64_t p);

/// Commuting probability of p-elements:
///   |{(x, y) : x, y p-elements, xy = yx}| / (#p-elements)^2.
/// Computed class-wise: the inner count is constant on conjugacy classes,
/// so the double sum collapses to one centralizer scan per p-class.
Rational pr_p(const PermGroup& g, uint64_t p);

/// Ordinary commuting probability Pr(G) = k(G) / |G|.
Rational pr_global(const PermGroup& g);

/// |C_G(x)_p| / |G_p|: the proportion of p-elements commuting with x.
/// x need not lie in g (only its commuting behaviour on g's elements is
/// used), but callers normally pass members.
Rational centralizer_p_ratio(const PermGroup& g, uint64_t p, const Permutation& x);

/// Maximum of centralizer_p_ratio over nontrivial p-elements of g
/// (one representative per conjugacy class suffices). Returns 0 when g
/// has no nontrivial p-element; the witness is set to the maximizing rep.
Rational max_centralizer_p_ratio(const PermGroup& g, uint64_t p, Permutation* witness = nullptr);

/// Closed-form p-element counts for the families with published formulas.
struct PairCount {
  BigInt centralizer_p;  // |C_G(x)_p| for the designated witness x
  BigInt total_p;        // |G_p|
};

/// (p^3-p^2) r^p + p^2  and  (p^3-p^2) r^p + (p^4-p^3) r^(p-1) + p^2.
PairCount scalar_block_family_counts(uint64_t p, uint64_t r);

/// 4r^2 + 4  and  4r^2 + 8r + 4.
PairCount dihedral_plane_family_counts(uint64_t r);

/// One row per prime: the quantities the consistency checks compare.
struct RatioRow {
  uint64_t p;
  uint64_t p_element_count;
  Rational prp;
  Rational threshold;        // f(p)
  Rational max_ratio;        // max |C_G(x)_p|/|G_p| over nontrivial p-elements
  bool sylow_normal_abelian;
};

std::vector<RatioRow> ratio_table(const PermGroup& g);

std::string format_ratio_table(const std::vector<RatioRow>& rows);

}  // namespace pel
