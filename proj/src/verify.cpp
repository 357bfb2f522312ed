#include "pel/verify.hpp"

#include <atomic>
#include <numeric>
#include <chrono>
#include <set>
#include <thread>

#include "pel/fpr.hpp"
#include "pel/groups.hpp"

namespace pel {

// ---------------------------------------------------------------- context

GroupContext::GroupContext(GroupSpec spec) : spec_(std::move(spec)), spec_str_(spec_.str()) {}

BigInt GroupContext::order() {
  if (!order_) {
    if (auto n = closed_form_order(spec_))
      order_ = *n;
    else
      order_ = group().order();
  }
  return *order_;
}

bool GroupContext::too_large() { return order() > config::enumeration_bound(); }

const PermGroup& GroupContext::group() {
  if (!group_) group_ = construct(spec_);
  return *group_;
}

const std::vector<ConjClass>& GroupContext::classes() {
  if (!classes_) classes_ = conjugacy_classes(group());
  return *classes_;
}

const std::vector<Permutation>& GroupContext::p_elems(uint64_t p) {
  auto it = p_elems_.find(p);
  if (it == p_elems_.end()) {
    std::vector<Permutation> out;
    for (const auto& e : group().elements())
      if (is_p_element(e, p)) out.push_back(e);
    it = p_elems_.emplace(p, std::move(out)).first;
  }
  return it->second;
}

Rational GroupContext::prp(uint64_t p) {
  auto it = prp_.find(p);
  if (it == prp_.end()) {
    const auto& gp = p_elems(p);
    BigInt total = 0;
    for (const auto& cls : classes()) {
      if (!is_p_element(cls.representative, p)) continue;
      BigInt cent = 0;
      for (const auto& y : gp)
        if (commute(cls.representative, y)) ++cent;
      total += BigInt(cls.size) * cent;
    }
    it = prp_.emplace(p, Rational(total, BigInt(gp.size()) * BigInt(gp.size()))).first;
  }
  return it->second;
}

Rational GroupContext::ratio(uint64_t p, const Permutation& x) {
  const auto& gp = p_elems(p);
  uint64_t c = 0;
  for (const auto& y : gp)
    if (commute(x, y)) ++c;
  return Rational(BigInt(c), BigInt(gp.size()));
}

const PermGroup& GroupContext::core(uint64_t p) {
  auto it = core_.find(p);
  if (it == core_.end()) it = core_.emplace(p, p_core(group(), p)).first;
  return it->second;
}

const PermGroup& GroupContext::core_center(uint64_t p) {
  auto it = core_center_.find(p);
  if (it == core_center_.end()) it = core_center_.emplace(p, center(core(p))).first;
  return it->second;
}

const PermGroup& GroupContext::sylow(uint64_t p) {
  auto it = sylow_.find(p);
  if (it == sylow_.end()) it = sylow_.emplace(p, sylow_subgroup(group(), p)).first;
  return it->second;
}

const PermGroup& GroupContext::p_residual(uint64_t p) {
  auto it = residual_.find(p);
  if (it == residual_.end()) it = residual_.emplace(p, o_p_prime_residual(group(), p)).first;
  return it->second;
}

std::vector<uint64_t> GroupContext::primes() { return prime_divisors(order()); }

// ---------------------------------------------------------------- helpers

namespace {

using Report = VerificationReport;

void detail(Report& r, const std::string& k, const std::string& v) { r.details.emplace_back(k, v); }
void detail(Report& r, const std::string& k, const char* v) { r.details.emplace_back(k, v); }
void detail(Report& r, const std::string& k, const Rational& v) { r.details.emplace_back(k, v.str()); }
void detail(Report& r, const std::string& k, const BigInt& v) { r.details.emplace_back(k, v.str()); }
void detail(Report& r, const std::string& k, uint64_t v) {
  r.details.emplace_back(k, std::to_string(v));
}
void detail(Report& r, const std::string& k, bool v) { r.details.emplace_back(k, v ? "true" : "false"); }

void fail_with(Report& r, const Permutation& witness) {
  r.verdict = Verdict::fail;
  r.witness = std::vector<uint32_t>(witness.images().begin(), witness.images().end());
}

Rational one_over(uint64_t p) { return Rational(1, BigInt(p)); }

std::vector<Permutation> class_members(const PermGroup& g, const Permutation& x) {
  std::set<Permutation> seen{x};
  std::vector<Permutation> queue{x};
  while (!queue.empty()) {
    Permutation z = std::move(queue.back());
    queue.pop_back();
    for (const auto& gen : g.generators()) {
      Permutation c = conjugate(z, gen);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

// how many p-elements are fixed by conjugation by x
uint64_t conjugation_fixed(const std::vector<Permutation>& gp, const Permutation& x) {
  uint64_t n = 0;
  for (const auto& z : gp)
    if (conjugate(z, x) == z) ++n;
  return n;
}

// ---------------------------------------------------------------- checkers

Report check_threshold_bicond(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "threshold-bicond", .spec = ctx.spec_str(), .prime = p};
  Rational prp = ctx.prp(p), f = f_threshold(p);
  bool above = f < prp;
  const PermGroup& syl = ctx.sylow(p);
  bool normal_abelian = is_abelian(syl) && is_normal(ctx.group(), syl);
  detail(r, "prp", prp);
  detail(r, "threshold", f);
  detail(r, "above", above);
  detail(r, "normal-abelian-sylow", normal_abelian);
  if (above != normal_abelian) r.verdict = Verdict::fail;
  return r;
}

Report check_ratio_bound(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "ratio-bound", .spec = ctx.spec_str(), .prime = p};
  const PermGroup& core = ctx.core(p);
  uint64_t checked = 0;
  Rational max(0);
  for (const auto& cls : ctx.classes()) {
    const auto& x = cls.representative;
    if (x.is_identity() || !is_p_element(x, p) || core.contains(x)) continue;
    ++checked;
    Rational rt = ctx.ratio(p, x);
    if (max < rt) max = rt;
    if (one_over(p) < rt) {
      detail(r, "violating-ratio", rt);
      fail_with(r, x);
      return r;
    }
  }
  detail(r, "classes-outside-core", checked);
  detail(r, "max-ratio", max);
  return r;
}

Report check_central_ratio(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "central-ratio", .spec = ctx.spec_str(), .prime = p};
  const PermGroup& zcore = ctx.core_center(p);
  uint64_t large = 0;
  for (const auto& cls : ctx.classes()) {
    const auto& x = cls.representative;
    if (x.is_identity() || !is_p_element(x, p)) continue;
    Rational rt = ctx.ratio(p, x);
    if (!(one_over(p) < rt)) continue;
    ++large;
    if (!zcore.contains(x)) {
      detail(r, "ratio", rt);
      fail_with(r, x);
      return r;
    }
  }
  detail(r, "large-ratio-classes", large);
  return r;
}

Report check_core_noncentral(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "core-noncentral", .spec = ctx.spec_str(), .prime = p};
  const PermGroup& core = ctx.core(p);
  const PermGroup& zcore = ctx.core_center(p);
  uint64_t checked = 0;
  for (const auto& cls : ctx.classes()) {
    const auto& x = cls.representative;
    if (x.is_identity() || !is_p_element(x, p)) continue;
    if (!core.contains(x) || zcore.contains(x)) continue;
    ++checked;
    Rational rt = ctx.ratio(p, x);
    if (one_over(p) < rt) {
      detail(r, "violating-ratio", rt);
      fail_with(r, x);
      return r;
    }
  }
  detail(r, "classes-checked", checked);
  return r;
}

Report check_conjugate_cyclic_count(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "conjugate-cyclic-count", .spec = ctx.spec_str(), .prime = p};
  const PermGroup& core = ctx.core(p);
  BigInt needed = BigInt(p) * p - 1;
  uint64_t checked = 0;
  for (const auto& cls : ctx.classes()) {
    const auto& x = cls.representative;
    if (x.is_identity() || !is_p_element(x, p) || core.contains(x)) continue;
    ++checked;
    // D = generators of subgroups conjugate to <x>
    uint64_t o = x.order();
    std::set<Permutation> d;
    for (const auto& z : class_members(ctx.group(), x)) {
      Permutation pw = z;
      for (uint64_t j = 1; j < o; ++j) {
        if (std::gcd(j, o) == 1) d.insert(pw);
        pw = pw * z;
      }
    }
    if (BigInt(d.size()) < needed) {
      detail(r, "count", BigInt(d.size()));
      detail(r, "required", needed);
      fail_with(r, x);
      return r;
    }
  }
  detail(r, "classes-checked", checked);
  return r;
}

constexpr uint64_t kPairCountBound = 2000;

Report check_centralizer_sum(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "centralizer-sum", .spec = ctx.spec_str(), .prime = p};
  const auto& gp = ctx.p_elems(p);
  Rational prp = ctx.prp(p);
  if (gp.size() <= kPairCountBound) {
    BigInt sum = 0;
    for (const auto& x : gp)
      for (const auto& y : gp)
        if (commute(x, y)) ++sum;
    Rational direct(sum, BigInt(gp.size()) * BigInt(gp.size()));
    detail(r, "direct", direct);
    detail(r, "classwise", prp);
    if (!(direct == prp)) {
      r.verdict = Verdict::fail;
      return r;
    }
  } else {
    r.verdict = Verdict::skipped_too_large;
    detail(r, "p-elements", static_cast<uint64_t>(gp.size()));
    detail(r, "pair-count-bound", kPairCountBound);
    return r;
  }
  if (ctx.core(p).order() == 1) {
    // with trivial p-core: Pr_p <= (1 + (|G_p|-1)/p) / |G_p|
    BigInt n = gp.size();
    Rational bound = Rational(BigInt(p) + n - 1, n * p);
    detail(r, "trivial-core-bound", bound);
    if (bound < prp) r.verdict = Verdict::fail;
  }
  return r;
}

Report check_conj_character(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "conj-character", .spec = ctx.spec_str(), .prime = p};
  const auto& gp = ctx.p_elems(p);
  uint64_t checked = 0;
  for (const auto& cls : ctx.classes()) {
    const auto& x = cls.representative;
    if (x.is_identity() || !is_p_element(x, p)) continue;
    ++checked;
    uint64_t fixed = conjugation_fixed(gp, x);
    Rational rt = ctx.ratio(p, x);
    if (!(Rational(BigInt(fixed), BigInt(gp.size())) == rt)) {
      detail(r, "fixed", fixed);
      detail(r, "ratio", rt);
      fail_with(r, x);
      return r;
    }
  }
  detail(r, "classes-checked", checked);
  return r;
}

Report check_max_ratio_bound(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "max-ratio-bound", .spec = ctx.spec_str(), .prime = p};
  const auto& gp = ctx.p_elems(p);
  Rational max(0);
  for (const auto& cls : ctx.classes()) {
    const auto& x = cls.representative;
    if (x.is_identity() || !is_p_element(x, p)) continue;
    Rational rt = ctx.ratio(p, x);
    if (max < rt) max = rt;
  }
  BigInt n = gp.size();
  Rational inv(1, n);
  Rational bound = inv + (Rational(1) - inv) * max;
  Rational prp = ctx.prp(p);
  detail(r, "prp", prp);
  detail(r, "max-ratio", max);
  detail(r, "bound", bound);
  if (bound < prp) r.verdict = Verdict::fail;
  return r;
}

Report check_residual_invariance(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "residual-invariance", .spec = ctx.spec_str(), .prime = p};
  const PermGroup& res = ctx.p_residual(p);
  detail(r, "residual-order", res.order());
  if (res.order() == ctx.order()) {
    detail(r, "full", true);
    return r;
  }
  Rational inner = pr_p(res, p), outer = ctx.prp(p);
  detail(r, "prp", outer);
  detail(r, "residual-prp", inner);
  if (!(inner == outer)) r.verdict = Verdict::fail;
  return r;
}

Report check_quotient_mono(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "quotient-mono", .spec = ctx.spec_str(), .prime = p};
  const PermGroup& n = ctx.core(p);
  detail(r, "core-order", n.order());
  if (n.order() > 1 && n.order() < ctx.order()) {
    CosetAction act = coset_action(ctx.group(), n);
    Rational qprp = pr_p(act.image, p), gprp = ctx.prp(p);
    detail(r, "prp", gprp);
    detail(r, "quotient-prp", qprp);
    if (qprp < gprp) {
      r.verdict = Verdict::fail;
      return r;
    }
    // elementwise version: ratio(x) <= ratio of the image of x
    for (const auto& cls : ctx.classes()) {
      const auto& x = cls.representative;
      if (x.is_identity() || !is_p_element(x, p)) continue;
      Rational up = centralizer_p_ratio(act.image, p, act.act(x));
      if (up < ctx.ratio(p, x)) {
        detail(r, "elementwise-violation", ctx.ratio(p, x));
        fail_with(r, x);
        return r;
      }
    }
  }
  // the documented violation for a normal subgroup that is NOT a p-group:
  // the order-420 group with its normal C_3 and p = 2
  if (ctx.spec().kind == GroupKind::smallgroup_420_30 && p == 2) {
    const PermGroup& c3 = ctx.core(3);
    CosetAction act = coset_action(ctx.group(), c3);
    Rational qprp = pr_p(act.image, 2), gprp = ctx.prp(2);
    detail(r, "nonp-quotient-prp", qprp);
    detail(r, "nonp-group-prp", gprp);
    if (!(qprp < gprp)) r.verdict = Verdict::fail;  // must violate strictly
  }
  return r;
}

Report check_pgroup_abelian(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "pgroup-abelian", .spec = ctx.spec_str(), .prime = p};
  auto primes = ctx.primes();
  if (primes.empty() || primes.front() != p) {
    detail(r, "smallest-prime", false);
    return r;
  }
  Rational pr = pr_global(ctx.group());
  Rational f = f_threshold(p);
  detail(r, "pr", pr);
  detail(r, "threshold", f);
  if (f < pr) {
    bool ab = is_abelian(ctx.group());
    detail(r, "abelian", ab);
    if (!ab) r.verdict = Verdict::fail;
  }
  return r;
}

Report check_equality_solvability(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "equality-solvability", .spec = ctx.spec_str(), .prime = p};
  if (p > 3 || !(ctx.prp(p) == f_threshold(p))) {
    detail(r, "applicable", false);
    return r;
  }
  detail(r, "applicable", true);
  const PermGroup& res = ctx.p_residual(p);
  if (p == 2) {
    bool solv = is_solvable(ctx.group());
    PermGroup d2 = derived_subgroup(derived_subgroup(res));
    bool metab = d2.order() == 1;
    detail(r, "solvable", solv);
    detail(r, "residual-metabelian", metab);
    if (!solv || !metab) r.verdict = Verdict::fail;
  } else {
    bool solv = is_solvable(res);
    detail(r, "residual-solvable", solv);
    if (!solv) r.verdict = Verdict::fail;
  }
  return r;
}

bool mersenne_exponent(uint64_t p, uint64_t* r_out) {
  uint64_t q = p + 1, r = 0;
  while (q > 1 && q % 2 == 0) {
    q /= 2;
    ++r;
  }
  if (q != 1 || r < 2) return false;
  if (r != 2 && !is_prime(r)) return false;
  *r_out = r;
  return true;
}

// reference specs whose fingerprint should match a group attaining the
// threshold exactly; abelian cofactors limited to {1, C_p, C_p^2, C_p x C_p}
std::vector<GroupSpec> equality_references(uint64_t p, const BigInt& order) {
  std::vector<GroupSpec> bases;
  auto param_spec = [](GroupKind kind, std::initializer_list<std::pair<std::string, uint64_t>> ps) {
    GroupSpec s;
    s.kind = kind;
    for (auto& [k, v] : ps) s.params[k] = v;
    return s;
  };
  if (p >= 5) {
    bases.push_back(param_spec(GroupKind::psl2, {{"p", p}}));
    bases.push_back(param_spec(GroupKind::sl2, {{"p", p}}));
  }
  uint64_t r;
  if (mersenne_exponent(p, &r))
    for (uint64_t k = 1; k <= 32; ++k)
      bases.push_back(param_spec(GroupKind::singer_mersenne, {{"r", r}, {"k", k}}));
  if (p == 3)
    for (uint64_t k = 1; k <= 32; ++k)
      bases.push_back(param_spec(GroupKind::q8_ext, {{"k", k}}));
  if (p == 2)
    for (uint64_t k = 1; k <= 32; ++k)
      bases.push_back(param_spec(GroupKind::c3_ext, {{"k", k}}));

  std::vector<GroupSpec> cofactors;
  cofactors.push_back(param_spec(GroupKind::cyclic, {{"n", p}}));
  cofactors.push_back(param_spec(GroupKind::cyclic, {{"n", p * p}}));
  cofactors.push_back(param_spec(GroupKind::elementary_abelian, {{"p", p}, {"k", 2}}));

  std::vector<GroupSpec> out;
  for (const auto& base : bases) {
    auto bn = closed_form_order(base);
    if (!bn || *bn > order) continue;
    if (*bn == order) out.push_back(base);
    for (const auto& a : cofactors) {
      if (*bn * *closed_form_order(a) != order) continue;
      GroupSpec prod;
      prod.kind = GroupKind::direct_product;
      prod.factors = {base, a};
      out.push_back(prod);
    }
  }
  return out;
}

Report check_equality_class(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "equality-class", .spec = ctx.spec_str(), .prime = p};
  if (!(ctx.prp(p) == f_threshold(p))) {
    detail(r, "tag", "not-equality");
    return r;
  }
  if (ctx.p_residual(p).order() != ctx.order()) {
    detail(r, "tag", "residual-proper");
    return r;
  }
  BigInt n = ctx.order();
  if (n == p_part(n, p)) {
    BigInt zindex = n / center(ctx.group()).order();
    detail(r, "tag", "p-group");
    detail(r, "center-index", zindex);
    if (zindex != BigInt(p) * p) r.verdict = Verdict::fail;
    return r;
  }
  Fingerprint fp = fingerprint(ctx.group());
  for (const auto& cand : equality_references(p, n)) {
    PermGroup ref = construct(cand);
    if (fingerprint(ref) == fp) {
      detail(r, "tag", "reference-match");
      detail(r, "reference", cand.str());
      return r;
    }
  }
  detail(r, "tag", "none");
  r.verdict = Verdict::fail;
  r.witness = std::vector<uint32_t>{};
  return r;
}

Report check_cyclic_sylow_equality(GroupContext& ctx, uint64_t p, const CorpusEntry&) {
  Report r{.theorem = "cyclic-sylow-equality", .spec = ctx.spec_str(), .prime = p};
  bool applies = ctx.sylow(p).order() == p && ctx.p_residual(p).order() == ctx.order() &&
                 ctx.prp(p) == f_threshold(p);
  detail(r, "applicable", applies);
  if (!applies) return r;
  std::vector<GroupSpec> cands;
  {
    GroupSpec s;
    s.kind = GroupKind::psl2;
    s.params["p"] = p;
    cands.push_back(s);
    s.kind = GroupKind::sl2;
    cands.push_back(s);
    uint64_t rr;
    if (mersenne_exponent(p, &rr)) {
      GroupSpec m;
      m.kind = GroupKind::singer_mersenne;
      m.params["r"] = rr;
      m.params["k"] = 1;
      cands.push_back(m);
    }
  }
  Fingerprint fp = fingerprint(ctx.group());
  for (const auto& cand : cands) {
    if (*closed_form_order(cand) != ctx.order()) continue;
    if (fingerprint(construct(cand)) == fp) {
      detail(r, "reference", cand.str());
      return r;
    }
  }
  r.verdict = Verdict::fail;
  r.witness = std::vector<uint32_t>{};
  return r;
}

Report check_expect(GroupContext& ctx, uint64_t p, const CorpusEntry& entry) {
  Report r{.theorem = "expect", .spec = ctx.spec_str(), .prime = p};
  auto it = entry.expected_prp.find(p);
  if (it == entry.expected_prp.end()) {
    detail(r, "expected", "none");
    return r;
  }
  Rational got = ctx.prp(p);
  detail(r, "expected", it->second);
  detail(r, "computed", got);
  if (!(got == it->second)) {
    r.verdict = Verdict::fail;
    r.witness = std::vector<uint32_t>{};
  }
  return r;
}

using CheckerFn = Report (*)(GroupContext&, uint64_t, const CorpusEntry&);

const std::vector<std::pair<std::string, CheckerFn>>& checkers() {
  static const std::vector<std::pair<std::string, CheckerFn>> table = {
      {"central-ratio", check_central_ratio},
      {"centralizer-sum", check_centralizer_sum},
      {"conj-character", check_conj_character},
      {"conjugate-cyclic-count", check_conjugate_cyclic_count},
      {"core-noncentral", check_core_noncentral},
      {"cyclic-sylow-equality", check_cyclic_sylow_equality},
      {"equality-class", check_equality_class},
      {"equality-solvability", check_equality_solvability},
      {"expect", check_expect},
      {"max-ratio-bound", check_max_ratio_bound},
      {"pgroup-abelian", check_pgroup_abelian},
      {"quotient-mono", check_quotient_mono},
      {"ratio-bound", check_ratio_bound},
      {"residual-invariance", check_residual_invariance},
      {"threshold-bicond", check_threshold_bicond},
  };
  return table;
}

}  // namespace

std::vector<std::string> checker_ids() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : checkers()) out.push_back(id);
  return out;
}

std::vector<VerificationReport> check_entry(const CorpusEntry& entry, const RunConfig& config) {
  GroupContext ctx(entry.spec);
  std::set<std::string> enabled(config.theorems.begin(), config.theorems.end());
  auto is_enabled = [&](const std::string& id) { return enabled.empty() || enabled.count(id); };

  std::vector<uint64_t> primes = entry.primes;
  if (primes.empty()) primes = prime_divisors(ctx.order());

  std::vector<VerificationReport> out;
  for (uint64_t p : primes) {
    for (const auto& [id, fn] : checkers()) {
      if (!is_enabled(id)) continue;
      auto start = std::chrono::steady_clock::now();
      Report r;
      if (ctx.too_large()) {
        r = Report{.theorem = id, .spec = ctx.spec_str(), .prime = p};
        r.verdict = Verdict::skipped_too_large;
        detail(r, "order", ctx.order());
        detail(r, "bound", config::enumeration_bound());
      } else {
        try {
          r = fn(ctx, p, entry);
        } catch (const GroupTooLarge& e) {
          r = Report{.theorem = id, .spec = ctx.spec_str(), .prime = p};
          r.verdict = Verdict::skipped_too_large;
          detail(r, "reason", std::string(e.what()));
        }
      }
      r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<VerificationReport> run_corpus(const Corpus& corpus, const RunConfig& config) {
  std::vector<std::vector<VerificationReport>> per_entry(corpus.entries.size());
  unsigned jobs = std::max(1u, config.jobs);
  std::atomic<size_t> next{0};
  std::vector<std::string> errors(corpus.entries.size());
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < corpus.entries.size(); i = next.fetch_add(1)) {
      try {
        per_entry[i] = check_entry(corpus.entries[i], config);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (size_t i = 0; i < corpus.entries.size(); ++i)
    if (!errors[i].empty())
      throw std::runtime_error("entry " + corpus.entries[i].spec.str() + ": " + errors[i]);

  std::vector<VerificationReport> out;
  for (auto& v : per_entry)
    for (auto& r : v) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
    return std::tie(a.spec, a.prime, a.theorem) < std::tie(b.spec, b.prime, b.theorem);
  });
  return out;
}

bool any_failures(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::fail) return true;
  return false;
}

}  // namespace pel
