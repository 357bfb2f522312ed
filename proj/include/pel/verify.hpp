#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pel/corpus.hpp"
#include "pel/group_spec.hpp"
#include "pel/perm_group.hpp"
#include "pel/prob.hpp"

namespace pel {

/// Per-group computation cache shared by all checkers for one corpus
/// entry. Built lazily; every accessor may throw GroupTooLarge. Not
/// thread-safe (one context per worker).
class GroupContext {
 public:
  explicit GroupContext(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  const std::string& spec_str() const { return spec_str_; }

  /// Order from the closed form when available, so oversized entries can
  /// be skipped without constructing anything.
  BigInt order();
  bool too_large();

  const PermGroup& group();
  const std::vector<ConjClass>& classes();
  const std::vector<Permutation>& p_elems(uint64_t p);
  Rational prp(uint64_t p);
  Rational ratio(uint64_t p, const Permutation& x);  // |C_G(x)_p| / |G_p|
  const PermGroup& core(uint64_t p);                 // largest normal p-subgroup
  const PermGroup& core_center(uint64_t p);
  const PermGroup& sylow(uint64_t p);
  const PermGroup& p_residual(uint64_t p);  // smallest N with G/N a p'-group

  std::vector<uint64_t> primes();  // prime divisors of |G|, ascending

 private:
  GroupSpec spec_;
  std::string spec_str_;
  std::optional<BigInt> order_;
  std::optional<PermGroup> group_;
  std::optional<std::vector<ConjClass>> classes_;
  std::map<uint64_t, std::vector<Permutation>> p_elems_;
  std::map<uint64_t, Rational> prp_;
  std::map<uint64_t, PermGroup> core_, core_center_, sylow_, residual_;
};

/// Checker ids, in canonical (report-sorted) order:
///   centralizer-sum      Pr_p recomputation from the centralizer sum, plus
///                        the (1 + (|G_p|-1)/p)/|G_p| bound when the p-core
///                        is trivial
///   conj-character       |C_G(x)_p| equals the fixed points of x in the
///                        conjugation action on p-elements
///   conjugate-cyclic-count  #{y : <y> conjugate to <x>} >= p^2 - 1 for
///                        p-elements x outside the p-core
///   core-noncentral      ratio <= 1/p for x in the p-core but not central in it
///   cyclic-sylow-equality  |P| = p, G = p-residual, Pr_p = f(p) implies a
///                        fingerprint match with one of the known groups
///   equality-class       classification of Pr_p = f(p) into tags i-v
///   equality-solvability solvability consequences of Pr_2 = f(2) / Pr_3 = f(3)
///   expect               corpus expected values
///   max-ratio-bound      Pr_p <= 1/|G_p| + (1 - 1/|G_p|) max-ratio
///   pgroup-abelian       Pr(G) > f(smallest prime) implies G abelian
///   quotient-mono        Pr_p(G) <= Pr_p(G/N) for the normal p-core N, and
///                        the documented strict violation for the order-420
///                        group with its normal C_3
///   ratio-bound          ratio <= 1/p for p-elements outside the p-core
///   residual-invariance  Pr_p(G) = Pr_p(p-residual)
///   central-ratio        ratio > 1/p implies x central in the p-core
///   threshold-bicond     Pr_p > f(p) iff the Sylow p-subgroup is normal
///                        and abelian
std::vector<std::string> checker_ids();

struct RunConfig {
  unsigned jobs = 1;
  std::vector<std::string> theorems;  // empty = all
};

/// Every enabled checker over (entry, prime) for all requested primes
/// (default: all prime divisors). GroupTooLarge anywhere inside a checker
/// yields a skipped-too-large report for that checker.
std::vector<VerificationReport> check_entry(const CorpusEntry& entry, const RunConfig& config);

/// All entries, optionally in parallel (one entry per worker); reports
/// sorted by (spec, prime, theorem).
std::vector<VerificationReport> run_corpus(const Corpus& corpus, const RunConfig& config);

bool any_failures(const std::vector<VerificationReport>& reports);

}  // namespace pel
