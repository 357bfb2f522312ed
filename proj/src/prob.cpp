#include "pel/prob.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace pel {

Rational f_threshold(uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("f_threshold: p must be prime");
  BigInt P = p;
  return Rational(P * P + P - 1, P * P * P);
}

uint64_t count_p_elements(const PermGroup& g, uint64_t p) {
  uint64_t n = 0;
  for (const auto& e : g.elements())
    if (is_p_element(e, p)) ++n;
  return n;
}

namespace {

uint64_t commuting_p_elements(const std::vector<Permutation>& p_elems, const Permutation& x) {
  uint64_t n = 0;
  for (const auto& y : p_elems)
    if (commute(x, y)) ++n;
  return n;
}

std::vector<Permutation> p_elements(const PermGroup& g, uint64_t p) {
  std::vector<Permutation> out;
  for (const auto& e : g.elements())
    if (is_p_element(e, p)) out.push_back(e);
  return out;
}

}  // namespace

Rational pr_p(const PermGroup& g, uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("pr_p: p must be prime");
  auto gp = p_elements(g, p);
  BigInt total = 0;
  for (const auto& cls : conjugacy_classes(g)) {
    if (!is_p_element(cls.representative, p)) continue;
    total += BigInt(cls.size) * commuting_p_elements(gp, cls.representative);
  }
  BigInt denom = BigInt(gp.size()) * gp.size();
  return Rational(total, denom);
}

Rational pr_global(const PermGroup& g) {
  return Rational(BigInt(conjugacy_classes(g).size()), g.order());
}

Rational centralizer_p_ratio(const PermGroup& g, uint64_t p, const Permutation& x) {
  auto gp = p_elements(g, p);
  return Rational(BigInt(commuting_p_elements(gp, x)), BigInt(gp.size()));
}

Rational max_centralizer_p_ratio(const PermGroup& g, uint64_t p, Permutation* witness) {
  auto gp = p_elements(g, p);
  BigInt denom = gp.size();
  Rational best(0);
  for (const auto& cls : conjugacy_classes(g)) {
    const auto& rep = cls.representative;
    if (rep.is_identity() || !is_p_element(rep, p)) continue;
    Rational ratio(BigInt(commuting_p_elements(gp, rep)), denom);
    if (best < ratio) {
      best = ratio;
      if (witness) *witness = rep;
    }
  }
  return best;
}

PairCount scalar_block_family_counts(uint64_t p, uint64_t r) {
  BigInt P = p, R = r;
  BigInt rp = boost::multiprecision::pow(R, static_cast<unsigned>(p));
  BigInt rp1 = boost::multiprecision::pow(R, static_cast<unsigned>(p - 1));
  BigInt p2 = P * P, p3 = p2 * P, p4 = p3 * P;
  return {(p3 - p2) * rp + p2, (p3 - p2) * rp + (p4 - p3) * rp1 + p2};
}

PairCount dihedral_plane_family_counts(uint64_t r) {
  BigInt R = r;
  return {4 * R * R + 4, 4 * R * R + 8 * R + 4};
}

std::vector<RatioRow> ratio_table(const PermGroup& g) {
  std::vector<RatioRow> rows;
  for (uint64_t p : prime_divisors(g.order())) {
    RatioRow row;
    row.p = p;
    row.p_element_count = count_p_elements(g, p);
    row.prp = pr_p(g, p);
    row.threshold = f_threshold(p);
    row.max_ratio = max_centralizer_p_ratio(g, p);
    PermGroup syl = sylow_subgroup(g, p);
    row.sylow_normal_abelian = is_abelian(syl) && is_normal(g, syl);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_ratio_table(const std::vector<RatioRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(5) << "p" << std::setw(10) << "#p-elts" << std::setw(22)
      << "Pr_p" << std::setw(14) << "f(p)" << std::setw(8) << "cmp" << std::setw(18)
      << "max-ratio" << "normal-abelian-Sylow\n";
  for (const auto& r : rows) {
    const char* cmp = r.prp == r.threshold ? "=" : (r.threshold < r.prp ? ">" : "<");
    out << std::left << std::setw(5) << r.p << std::setw(10) << r.p_element_count
        << std::setw(22) << r.prp.str() << std::setw(14) << r.threshold.str() << std::setw(8)
        << cmp << std::setw(18) << r.max_ratio.str() << (r.sylow_normal_abelian ? "yes" : "no")
        << "\n";
  }
  return out.str();
}

}  // namespace pel
