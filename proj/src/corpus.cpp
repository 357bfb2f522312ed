#include "pel/corpus.hpp"

#include "pel/perm.hpp"

#include <sstream>

#include "json.hpp"

namespace pel {

namespace {

constexpr const char* kCorpusHeader = "pel-corpus v1";
constexpr const char* kReportHeader = "pel-report v1";

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Corpus parse_corpus(const std::string& text, const std::string& where) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  bool saw_header = false;
  Corpus corpus;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != kCorpusHeader)
        throw ParseError(where, lineno, "expected header '" + std::string(kCorpusHeader) + "'");
      saw_header = true;
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(where, lineno, "expected key=value");
    std::string key = strip(line.substr(0, eq)), value = strip(line.substr(eq + 1));
    if (key == "spec") {
      CorpusEntry entry;
      try {
        entry.spec = GroupSpec::parse(value);
      } catch (const InvalidSpec& e) {
        throw ParseError(where, lineno, e.what());
      }
      corpus.entries.push_back(std::move(entry));
      continue;
    }
    if (corpus.entries.empty())
      throw ParseError(where, lineno, "'" + key + "' before any spec= line");
    CorpusEntry& entry = corpus.entries.back();
    if (key == "primes") {
      std::istringstream ps(value);
      std::string tok;
      while (std::getline(ps, tok, ',')) {
        tok = strip(tok);
        try {
          size_t used = 0;
          uint64_t p = std::stoull(tok, &used);
          if (used != tok.size() || !is_prime(p)) throw std::invalid_argument(tok);
          entry.primes.push_back(p);
        } catch (const std::exception&) {
          throw ParseError(where, lineno, "bad prime '" + tok + "'");
        }
      }
    } else if (key.rfind("expect.prp.", 0) == 0) {
      std::string ptok = key.substr(11);
      try {
        size_t used = 0;
        uint64_t p = std::stoull(ptok, &used);
        if (used != ptok.size() || !is_prime(p)) throw std::invalid_argument(ptok);
        entry.expected_prp[p] = Rational::parse(value);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(where, lineno, "bad expectation: " + std::string(e.what()));
      }
    } else {
      throw ParseError(where, lineno, "unknown key '" + key + "'");
    }
  }
  if (!saw_header) throw ParseError(where, lineno, "empty file (missing header)");
  return corpus;
}

std::string serialize_corpus(const Corpus& c) {
  std::ostringstream out;
  out << kCorpusHeader << "\n";
  for (const auto& e : c.entries) {
    out << "\nspec=" << e.spec.str() << "\n";
    if (!e.primes.empty()) {
      out << "primes=";
      for (size_t i = 0; i < e.primes.size(); ++i) out << (i ? "," : "") << e.primes[i];
      out << "\n";
    }
    for (const auto& [p, v] : e.expected_prp)
      out << "expect.prp." << p << "=" << v.str() << "\n";
  }
  return out.str();
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped_too_large: return "skipped-too-large";
  }
  return "?";
}

std::string serialize_reports(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << kReportHeader << "\n";
  for (const auto& r : reports) {
    out << "theorem=" << r.theorem << " spec=" << r.spec << " prime=" << r.prime
        << " verdict=" << verdict_name(r.verdict);
    for (const auto& [k, v] : r.details) out << " " << k << "=" << v;
    if (r.witness) {
      out << " witness=";
      for (size_t i = 0; i < r.witness->size(); ++i) out << (i ? "," : "") << (*r.witness)[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string serialize_reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json rec;
    rec["theorem"] = r.theorem;
    rec["spec"] = r.spec;
    rec["prime"] = r.prime;
    rec["verdict"] = verdict_name(r.verdict);
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    rec["details"] = details;
    if (r.witness) rec["witness"] = *r.witness;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

}  // namespace pel
