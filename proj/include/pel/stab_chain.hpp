#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pel/perm.hpp"
#include "pel/rational.hpp"

namespace pel {

/// Deterministic Schreier-Sims stabilizer chain (base + strong generating
/// set). Base points are always the smallest moved points of the sifted
/// residues, so the chain is a pure function of the generator list.
class StabChain {
public:
  explicit StabChain(uint32_t degree) : degree_(degree) {}
  static StabChain build(uint32_t degree, const std::vector<Permutation>& gens);

  uint32_t degree() const { return degree_; }
  BigInt order() const;
  bool contains(const Permutation& g) const;

  /// Sifts g and inserts the residue as a new strong generator if it is
  /// nontrivial. Returns true iff the group grew.
  bool extend(const Permutation& g);

  std::vector<uint32_t> base() const;

  /// All group elements as transversal products, sorted by image table.
  /// The caller is responsible for checking the enumeration bound.
  std::vector<Permutation> enumerate() const;

  /// All strong generators (generates the group).
  std::vector<Permutation> strong_generators() const;

private:
  struct Level {
    uint32_t base_point;
    std::vector<Permutation> gens;  // generators assigned at this level
    std::vector<int32_t> orbit_pos;  // point -> index into orbit, or -1
    std::vector<uint32_t> orbit;
    std::vector<Permutation> transversal;  // base_point ^ transversal[i] = orbit[i]
  };

  // residue of sifting g through levels [from, end); second = level where
  // sifting stopped (levels.size() if it ran off the end)
  std::pair<Permutation, size_t> sift(Permutation g, size_t from) const;
  void recompute_orbit(size_t level);
  void insert_generator(Permutation g, size_t level);
  void complete_from(size_t start);
  std::vector<const Permutation*> level_generators(size_t level) const;

  uint32_t degree_;
  std::vector<Level> levels_;
};

}  // namespace pel
