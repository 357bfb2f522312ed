#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pel/cache.hpp"
#include "pel/corpus.hpp"
#include "pel/fpr.hpp"
#include "pel/groups.hpp"
#include "pel/prob.hpp"
#include "pel/verify.hpp"

namespace {

constexpr int kExitFail = 1;      // verification failures
constexpr int kExitBadInput = 2;  // invalid spec / parse error / missing file
constexpr int kExitTooLarge = 3;  // enumeration bound exceeded

using namespace pel;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --- subgroup selectors for the fpr verb ---
// full | trivial | center | derived | sylow:<p> | core:<p> | point-stabilizer:<i>
PermGroup select_subgroup(const PermGroup& g, const std::string& sel) {
  auto split = sel.find(':');
  std::string head = sel.substr(0, split);
  auto arg = [&]() -> uint64_t {
    if (split == std::string::npos)
      throw InvalidSpec("selector '" + head + "' needs a :<value> argument");
    return std::stoull(sel.substr(split + 1));
  };
  if (head == "full") return g;
  if (head == "trivial") return PermGroup::trivial(g.degree());
  if (head == "center") return center(g);
  if (head == "derived") return derived_subgroup(g);
  if (head == "sylow") return sylow_subgroup(g, arg());
  if (head == "core") return p_core(g, arg());
  if (head == "point-stabilizer") {
    uint64_t pt = arg();
    if (pt >= g.degree()) throw InvalidSpec("point out of range");
    std::vector<Permutation> stab;
    for (const auto& e : g.elements())
      if (e[static_cast<uint32_t>(pt)] == pt) stab.push_back(e);
    return PermGroup::from_elements(g.degree(), stab);
  }
  throw InvalidSpec("unknown subgroup selector '" + sel + "'");
}

int cmd_prp(const std::string& spec_str, uint64_t p, bool table, bool json) {
  GroupSpec spec = GroupSpec::parse(spec_str);
  std::string canonical = spec.str();
  std::string key = cache::key_for(canonical, p, "prp");
  std::string value;
  if (auto hit = cache::lookup(key)) {
    value = *hit;
  } else {
    if (auto n = closed_form_order(spec); n && *n > config::enumeration_bound())
      throw GroupTooLarge(*n, config::enumeration_bound());
    value = pr_p(construct(spec), p).str();
    cache::store(key, value);
  }
  Rational r = Rational::parse(value);
  if (json) {
    nlohmann::ordered_json out;
    out["spec"] = canonical;
    out["prime"] = p;
    out["prp"] = value;
    out["approx"] = r.approx();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << value << " (~" << r.approx() << ")\n";
  }
  if (table) {
    PermGroup g = construct(spec);
    std::cout << format_ratio_table(ratio_table(g));
  }
  return 0;
}

int cmd_pr(const std::string& spec_str, bool json) {
  GroupSpec spec = GroupSpec::parse(spec_str);
  if (auto n = closed_form_order(spec); n && *n > config::enumeration_bound())
    throw GroupTooLarge(*n, config::enumeration_bound());
  Rational r = pr_global(construct(spec));
  if (json) {
    nlohmann::ordered_json out;
    out["spec"] = spec.str();
    out["pr"] = r.str();
    out["approx"] = r.approx();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.str() << " (~" << r.approx() << ")\n";
  }
  return 0;
}

int cmd_fpr(const std::string& spec_str, const std::string& subgroup_sel, bool json) {
  GroupSpec spec = GroupSpec::parse(spec_str);
  if (auto n = closed_form_order(spec); n && *n > config::enumeration_bound())
    throw GroupTooLarge(*n, config::enumeration_bound());
  PermGroup g = construct(spec);
  PermGroup h = select_subgroup(g, subgroup_sel);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (!json)
    std::cout << "index " << (g.order() / h.order()).str() << "\n"
              << "order  class-size  fpr\n";
  for (const auto& cls : conjugacy_classes(g)) {
    Rational r = fixed_point_ratio(g, h, cls.representative);
    if (json) {
      nlohmann::ordered_json rec;
      rec["element-order"] = cls.element_order;
      rec["class-size"] = cls.size;
      rec["fpr"] = r.str();
      arr.push_back(std::move(rec));
    } else {
      std::cout << cls.element_order << "      " << cls.size << "           " << r.str()
                << "\n";
    }
  }
  if (json) std::cout << arr.dump(2) << "\n";
  return 0;
}

int cmd_construct_info(const std::string& spec_str, bool json) {
  GroupSpec spec = GroupSpec::parse(spec_str);
  if (auto n = closed_form_order(spec); n && *n > config::enumeration_bound())
    throw GroupTooLarge(*n, config::enumeration_bound());
  PermGroup g = construct(spec);
  Fingerprint fp = fingerprint(g);
  if (json) {
    nlohmann::ordered_json out;
    out["spec"] = spec.str();
    out["degree"] = g.degree();
    out["order"] = fp.order.str();
    out["center-order"] = fp.center_order.str();
    out["derived-order"] = fp.derived_order.str();
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& gen : g.generators()) gens.push_back(gen.cycle_string());
    out["generators"] = gens;
    nlohmann::ordered_json primes = nlohmann::ordered_json::array();
    for (const auto& pd : fp.primes) {
      nlohmann::ordered_json rec;
      rec["p"] = pd.p;
      rec["p-elements"] = pd.p_element_count;
      rec["sylow-order"] = pd.sylow_order.str();
      rec["sylow-normal"] = pd.sylow_normal;
      rec["sylow-abelian"] = pd.sylow_abelian;
      rec["core-order"] = pd.p_core_order.str();
      primes.push_back(std::move(rec));
    }
    out["primes"] = primes;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "spec:    " << spec.str() << "\n"
              << "degree:  " << g.degree() << "\n"
              << "order:   " << fp.order.str() << "\n"
              << "profile: " << fp.str() << "\n";
    for (const auto& gen : g.generators()) std::cout << "gen:     " << gen.cycle_string() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& corpus_path, const std::string& out_path, unsigned jobs,
               const std::vector<std::string>& theorems, bool json) {
  Corpus corpus = parse_corpus(read_file(corpus_path), corpus_path);
  RunConfig config;
  config.jobs = jobs;
  config.theorems = theorems;
  auto reports = run_corpus(corpus, config);

  std::string machine = json ? serialize_reports_json(reports) : serialize_reports(reports);
  if (out_path == "-") {
    std::cout << machine;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << machine;
  }

  uint64_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::pass: ++pass; break;
      case Verdict::fail: ++fail; break;
      case Verdict::skipped_too_large: ++skipped; break;
    }
    if (r.verdict == Verdict::fail)
      std::cerr << "FAIL " << r.theorem << " " << r.spec << " p=" << r.prime << "\n";
  }
  std::cerr << "verify: " << pass << " pass, " << fail << " fail, " << skipped
            << " skipped-too-large";
  if (out_path != "-") std::cerr << "; report written to " << out_path;
  std::cerr << "\n";
  return fail ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact commuting-probability computations for permutation groups"};
  app.require_subcommand(1);

  uint64_t max_order = 0;
  app.add_option("--max-order", max_order, "override the enumeration bound");

  std::string spec_str, corpus_path = "data/corpus.txt", out_path = "pel-report.txt";
  std::string subgroup_sel = "full";
  uint64_t prime = 2;
  unsigned jobs = 1;
  bool table = false, json = false;
  std::vector<std::string> theorems;

  auto* prp = app.add_subcommand("prp", "commuting probability of p-elements");
  prp->add_option("spec", spec_str)->required();
  prp->add_option("p", prime)->required();
  prp->add_flag("--table", table, "per-prime ratio table");
  prp->add_flag("--json", json);

  auto* pr = app.add_subcommand("pr", "ordinary commuting probability");
  pr->add_option("spec", spec_str)->required();
  pr->add_flag("--json", json);

  auto* fpr = app.add_subcommand("fpr", "fixed point ratios on a coset action");
  fpr->add_option("spec", spec_str)->required();
  fpr->add_option("subgroup", subgroup_sel,
                  "full|trivial|center|derived|sylow:<p>|core:<p>|point-stabilizer:<i>");
  fpr->add_flag("--json", json);

  auto* rt = app.add_subcommand("ratio-table", "per-prime invariant table");
  rt->add_option("spec", spec_str)->required();

  auto* info = app.add_subcommand("construct-info", "construction facts and profile");
  info->add_option("spec", spec_str)->required();
  info->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "run checkers over a corpus");
  verify->add_option("--corpus", corpus_path, "corpus file (default data/corpus.txt)");
  verify->add_option("--out", out_path, "report file, '-' for stdout");
  verify->add_option("--jobs", jobs, "parallel workers");
  verify->add_option("--theorems", theorems, "comma-separated checker ids")->delimiter(',');
  verify->add_flag("--json", json, "JSON report format");

  app.add_subcommand("cache-clear", "remove all cached results");

  CLI11_PARSE(app, argc, argv);

  if (max_order) pel::config::set_enumeration_bound(max_order);

  try {
    if (prp->parsed()) return cmd_prp(spec_str, prime, table, json);
    if (pr->parsed()) return cmd_pr(spec_str, json);
    if (fpr->parsed()) return cmd_fpr(spec_str, subgroup_sel, json);
    if (rt->parsed()) {
      pel::GroupSpec spec = pel::GroupSpec::parse(spec_str);
      if (auto n = pel::closed_form_order(spec); n && *n > pel::config::enumeration_bound())
        throw pel::GroupTooLarge(*n, pel::config::enumeration_bound());
      std::cout << pel::format_ratio_table(pel::ratio_table(pel::construct(spec)));
      return 0;
    }
    if (info->parsed()) return cmd_construct_info(spec_str, json);
    if (verify->parsed()) return cmd_verify(corpus_path, out_path, jobs, theorems, json);
    if (app.get_subcommand("cache-clear")->parsed()) {
      std::cout << "removed " << pel::cache::clear() << " cached entries\n";
      return 0;
    }
  } catch (const pel::GroupTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const pel::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
