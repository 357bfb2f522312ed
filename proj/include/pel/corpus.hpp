#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pel/group_spec.hpp"
#include "pel/rational.hpp"

namespace pel {

/// One group to verify: which primes to run (empty = all prime divisors)
/// and optional expected exact values keyed by prime.
struct CorpusEntry {
  GroupSpec spec;
  std::vector<uint64_t> primes;
  std::map<uint64_t, Rational> expected_prp;

  bool operator==(const CorpusEntry&) const = default;
};

struct Corpus {
  std::vector<CorpusEntry> entries;

  bool operator==(const Corpus&) const = default;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& where, size_t line, const std::string& what)
      : std::runtime_error(where + ":" + std::to_string(line) + ": " + what) {}
};

/// Text format (version line "pel-corpus v1"):
///   spec=<canonical spec>        starts an entry
///   primes=<comma separated>     optional
///   expect.prp.<p>=<num/den>     optional, repeatable
/// Blank lines and '#' comments ignored. Throws ParseError with the
/// offending line number; `where` names the source (e.g. a file path).
Corpus parse_corpus(const std::string& text, const std::string& where);

/// Canonical serialization; parse(serialize(c)) == parse-normalized c.
std::string serialize_corpus(const Corpus& c);

enum class Verdict { pass, fail, skipped_too_large };

std::string verdict_name(Verdict v);

struct VerificationReport {
  std::string theorem;  // checker id
  std::string spec;     // canonical spec string
  uint64_t prime = 0;
  Verdict verdict = Verdict::pass;
  // (name, value) pairs; values are exact-rational strings, integers or
  // true/false — never floats
  std::vector<std::pair<std::string, std::string>> details;
  std::optional<std::vector<uint32_t>> witness;  // image table on failure
  double wall_ms = 0;  // excluded from serialized output (determinism)
};

/// One record per line after a "pel-report v1" header:
///   theorem=<id> spec=<spec> prime=<p> verdict=<v> [k=v ...] [witness=i,j,...]
std::string serialize_reports(const std::vector<VerificationReport>& reports);

/// JSON rendering (same fields; rationals stay strings).
std::string serialize_reports_json(const std::vector<VerificationReport>& reports);

}  // namespace pel
