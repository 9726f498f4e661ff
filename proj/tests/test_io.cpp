#include "doctest.h"

#include <random>

#include "countcheck/genbench.hpp"
#include "countcheck/io.hpp"
#include "helpers.hpp"

using namespace countcheck;

TEST_CASE("parse a plain instance") {
  const Instance inst = parse_instance("rank 2\n[f]\n3 2 1 2\n[g]\n");
  CHECK(inst.spec.rank == 2);
  REQUIRE(inst.f.terms.size() == 1);
  CHECK(inst.f.terms[0].coef == 3);
  CHECK(inst.f.terms[0].word == Word{2, 1, 2});
  CHECK(inst.g.terms.empty());
}

TEST_CASE("parse explicit plus signs") {
  const Instance inst = parse_instance("rank 2\n[f]\n+3 2\n+0 e\n[g]\n");
  REQUIRE(inst.f.terms.size() == 2);
  CHECK(inst.f.terms[0].coef == 3);
  CHECK(inst.f.terms[1].coef == 0);
}

TEST_CASE("parse the empty word and comments") {
  const Instance inst = parse_instance(
      "# header comment\nrank 2\n\n[f]\n-1 e   # the empty word\n[g]\n-1 e\n");
  REQUIRE(inst.f.terms.size() == 1);
  CHECK(inst.f.terms[0].coef == -1);
  CHECK(inst.f.terms[0].word.empty());
  REQUIRE(inst.g.terms.size() == 1);
  CHECK(inst.g.terms[0].word.empty());
}

TEST_CASE("parse errors carry codes and line numbers") {
  auto expect_error = [](std::string_view text, ParseErrorCode code, int line) {
    try {
      (void)parse_instance(text);
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.code() == code);
      CHECK(e.line() == line);
    }
  };
  expect_error("rank 2\n[f]\n1 3\n[g]\n", ParseErrorCode::letter, 3);
  expect_error("rank 2\n[f]\n1 0\n[g]\n", ParseErrorCode::letter, 3);
  expect_error("rank 1\n[f]\n[g]\n", ParseErrorCode::rank, 1);
  expect_error("rank\n[f]\n[g]\n", ParseErrorCode::rank, 1);
  expect_error("rank two\n", ParseErrorCode::rank, 1);
  expect_error("[f]\n[g]\n", ParseErrorCode::rank, 1);
  expect_error("", ParseErrorCode::rank, 1);
  expect_error("rank 2\n1 2\n", ParseErrorCode::section, 2);
  expect_error("rank 2\n[f]\n", ParseErrorCode::section, 3);
  expect_error("rank 2\n[f]\nx 2\n[g]\n", ParseErrorCode::coef, 3);
  expect_error("rank 2\n[f]\n2+2 2\n[g]\n", ParseErrorCode::coef, 3);
  expect_error("rank 2\n[f]\n3\n[g]\n", ParseErrorCode::syntax, 3);
  expect_error("rank 2\n[f]\n3 2 e\n[g]\n", ParseErrorCode::syntax, 3);
  expect_error("rank 2\n[f]\n[g]\n[f]\n", ParseErrorCode::syntax, 4);
}

TEST_CASE("serialize round-trips term multisets") {
  const char* sources[] = {
      "rank 2\n[f]\n3 2 1 2\n[g]\n",
      "rank 2\n[f]\n-1 e\n[g]\n-1 e\n",
      "rank 3\n[f]\n0 1 2 3\n7 3\n[g]\n-12 2 1 1 1 3\n",
  };
  for (const char* src : sources) {
    const Instance a = parse_instance(src);
    const Instance b = parse_instance(serialize_instance(a));
    CHECK(a.spec.rank == b.spec.rank);
    CHECK(testing::sorted_terms(a.f) == testing::sorted_terms(b.f));
    CHECK(testing::sorted_terms(a.g) == testing::sorted_terms(b.g));
  }
}

TEST_CASE("two-digit generator indices parse unambiguously") {
  const Instance inst = parse_instance("rank 12\n[f]\n5 11 1 12 2\n[g]\n-1 10\n");
  CHECK(inst.f.terms[0].word == Word{11, 1, 12, 2});
  CHECK(inst.g.terms[0].word == Word{10});
  const Instance back = parse_instance(serialize_instance(inst));
  CHECK(testing::sorted_terms(back.f) == testing::sorted_terms(inst.f));
}

TEST_CASE("huge coefficients round-trip exactly") {
  Instance inst;
  inst.spec.rank = 2;
  inst.f = CountingFunction{inst.spec, {Term{BigInt(1) << 128, {2}}}};
  inst.g = CountingFunction{inst.spec, {Term{-(BigInt(1) << 200) - 17, {}}}};
  const Instance back = parse_instance(serialize_instance(inst));
  CHECK(back.f.terms[0].coef == BigInt(1) << 128);
  CHECK(back.g.terms[0].coef == -(BigInt(1) << 200) - 17);
}

TEST_CASE("random instances round-trip") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenParams p;
    p.rank = 2 + static_cast<std::int32_t>(seed % 4);
    p.term_count = static_cast<std::uint32_t>(seed % 9);
    p.max_word_len = 10;
    p.coef_bits = 40;
    p.seed = seed;
    Instance inst;
    inst.spec.rank = p.rank;
    inst.f = gen_random(p);
    p.seed ^= 0x9e3779b9;
    inst.g = gen_random(p);
    const Instance back = parse_instance(serialize_instance(inst));
    CHECK(back.spec.rank == inst.spec.rank);
    CHECK(testing::sorted_terms(back.f) == testing::sorted_terms(inst.f));
    CHECK(testing::sorted_terms(back.g) == testing::sorted_terms(inst.g));
  }
}

TEST_CASE("parser survives arbitrary bytes") {
  std::mt19937_64 rng(99);
  int parsed = 0, rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::string junk(rng() % 120, '\0');
    for (char& c : junk) c = static_cast<char>(rng() & 0xFF);
    try {
      (void)parse_instance(junk);
      ++parsed;
    } catch (const ParseError&) {
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 2000);
}
