#include "doctest.h"
#include "json.hpp"
#include "pel/corpus.hpp"

using namespace pel;

TEST_CASE("corpus parse and round trip") {
  std::string text =
      "pel-corpus v1\n"
      "# a comment\n"
      "spec=dihedral:n=4\n"
      "expect.prp.2=5/8\n"
      "\n"
      "spec=psl2:p=7\n"
      "primes=2,7\n"
      "expect.prp.7=55/343\n";
  Corpus c = parse_corpus(text, "inline");
  REQUIRE(c.entries.size() == 2);
  CHECK(c.entries[0].spec.str() == "dihedral:n=4");
  CHECK(c.entries[0].primes.empty());
  CHECK(c.entries[0].expected_prp.at(2) == Rational(5, 8));
  CHECK(c.entries[1].primes == std::vector<uint64_t>({2, 7}));
  CHECK(c.entries[1].expected_prp.at(7) == Rational(55, 343));

  // serialize-then-parse is the identity on parsed corpora
  std::string out = serialize_corpus(c);
  CHECK(parse_corpus(out, "roundtrip") == c);
  CHECK(out.substr(0, 13) == "pel-corpus v1");
}

TEST_CASE("corpus parse errors carry source and line") {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    try {
      parse_corpus(text, "src");
      FAIL("expected ParseError for: " << fragment);
    } catch (const ParseError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos,
                    e.what() << " should mention " << fragment);
      CHECK(std::string(e.what()).substr(0, 4) == "src:");
    }
  };
  expect_error("not-a-header\n", "src:1");
  expect_error("pel-corpus v1\nbogus=1\n", "src:2");
  expect_error("pel-corpus v1\nprimes=2\n", "src:2");  // key before any spec
  expect_error("pel-corpus v1\nspec=dihedral:n=4\nprimes=4\n", "src:3");
  expect_error("pel-corpus v1\nspec=dihedral:n=4\nexpect.prp.2=x/y\n", "src:3");
  expect_error("pel-corpus v1\nspec=nonsense:q=1\n", "src:2");
}

TEST_CASE("report serialization is exact and deterministic") {
  VerificationReport a;
  a.theorem = "threshold-bicond";
  a.spec = "dihedral:n=4";
  a.prime = 2;
  a.verdict = Verdict::pass;
  a.details = {{"prp", "5/8"}, {"threshold", "5/8"}};
  a.wall_ms = 123.0;  // must not appear in output

  VerificationReport b;
  b.theorem = "ratio-bound";
  b.spec = "symmetric:n=4";
  b.prime = 3;
  b.verdict = Verdict::fail;
  b.details = {{"ratio", "1/3"}};
  b.witness = std::vector<uint32_t>{1, 0, 2, 3};

  std::string text = serialize_reports({a, b});
  CHECK(text ==
        "pel-report v1\n"
        "theorem=threshold-bicond spec=dihedral:n=4 prime=2 verdict=pass "
        "prp=5/8 threshold=5/8\n"
        "theorem=ratio-bound spec=symmetric:n=4 prime=3 verdict=fail "
        "ratio=1/3 witness=1,0,2,3\n");

  // the JSON form parses back with the same content
  auto j = nlohmann::json::parse(serialize_reports_json({a, b}));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["theorem"] == "threshold-bicond");
  CHECK(j[0]["verdict"] == "pass");
  CHECK(j[0]["details"]["prp"] == "5/8");
  CHECK(j[1]["verdict"] == "fail");
  CHECK(j[1]["witness"] == nlohmann::json::array({1, 0, 2, 3}));
  CHECK_FALSE(j[0].contains("wall_ms"));
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(Verdict::pass) == "pass");
  CHECK(verdict_name(Verdict::fail) == "fail");
  CHECK(verdict_name(Verdict::skipped_too_large) == "skipped-too-large");
}
