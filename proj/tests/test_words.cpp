#include "doctest.h"

#include <random>

#include "countcheck/words.hpp"
#include "helpers.hpp"

using namespace countcheck;
using countcheck::testing::for_each_word;

namespace {
const MonoidSpec kM2{2};
const MonoidSpec kM3{3};
}  // namespace

TEST_CASE("count_occurrences basics") {
  CHECK(count_occurrences({}, {1, 2, 1}) == 3);        // empty pattern counts length
  CHECK(count_occurrences({1, 1}, {1, 1, 1}) == 2);    // overlaps count
  CHECK(count_occurrences({2}, {1, 1}) == 0);
  CHECK(count_occurrences({1, 2}, {1, 2, 1, 2}) == 2);
  CHECK(count_occurrences({}, {}) == 0);
}

TEST_CASE("count_occurrences shape invariants") {
  for_each_word(2, 6, [&](const Word& w) {
    if (!w.empty()) {
      CHECK(count_occurrences(w, w) == 1);
      Word longer = w;
      longer.push_back(1);
      CHECK(count_occurrences(longer, w) == 0);  // |v| > |w| > 0
    }
  });
}

TEST_CASE("letter counts sum to length") {
  for_each_word(2, 10, [&](const Word& w) {
    std::uint64_t total = 0;
    for (Letter s = 1; s <= 2; ++s) total += count_occurrences({s}, w);
    CHECK(total == w.size());
  });
  for_each_word(3, 6, [&](const Word& w) {
    std::uint64_t total = 0;
    for (Letter s = 1; s <= 3; ++s) total += count_occurrences({s}, w);
    CHECK(total == w.size());
  });
}

TEST_CASE("evaluate") {
  CountingFunction f{kM2, {Term{2, {1}}, Term{-1, {2}}}};
  CHECK(evaluate(f, {1, 2, 1}) == 3);

  CountingFunction zero{kM2, {}};
  CHECK(evaluate(zero, {1, 2, 1}) == 0);
  CHECK(evaluate(zero, {}) == 0);

  // rho_{a1} + rho_{a2} - rho_eps is identically zero.
  CountingFunction h{kM2, {Term{1, {1}}, Term{1, {2}}, Term{-1, {}}}};
  for_each_word(2, 10, [&](const Word& w) { CHECK(evaluate(h, w) == 0); });
}

TEST_CASE("difference") {
  CountingFunction f{kM2, {Term{1, {1}}}};
  CountingFunction g{kM2, {Term{1, {1}}}};
  const CountingFunction d = difference(f, g);
  REQUIRE(d.terms.size() == 2);
  CHECK(d.terms[0].coef == 1);
  CHECK(d.terms[1].coef == -1);
  CHECK(d.terms[0].word == Word{1});
  CHECK(d.terms[1].word == Word{1});

  CountingFunction f2{kM2, {Term{3, {2}}}};
  CountingFunction zero{kM2, {}};
  const CountingFunction d2 = difference(f2, zero);
  REQUIRE(d2.terms.size() == 1);
  CHECK(d2.terms[0].coef == 3);

  CHECK_THROWS_AS(difference(f, CountingFunction{kM3, {}}), std::invalid_argument);
}

TEST_CASE("difference evaluates pointwise") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    CountingFunction f{kM2, {}}, g{kM2, {}};
    auto rnd_word = [&](std::size_t max_len) {
      Word w(rng() % (max_len + 1));
      for (Letter& s : w) s = static_cast<Letter>(1 + rng() % 2);
      return w;
    };
    for (int i = 0; i < 4; ++i) {
      f.terms.push_back(Term{static_cast<std::int64_t>(rng() % 11) - 5, rnd_word(5)});
      g.terms.push_back(Term{static_cast<std::int64_t>(rng() % 11) - 5, rnd_word(5)});
    }
    const CountingFunction d = difference(f, g);
    const Word w = rnd_word(8);
    CHECK(evaluate(d, w) == evaluate(f, w) - evaluate(g, w));
  }
}

TEST_CASE("extension relations are prefix/suffix indicators") {
  const CountingFunction l = left_relation(kM2, {2});
  REQUIRE(l.terms.size() == 3);
  CHECK(testing::sorted_terms(l) ==
        testing::sorted_terms(CountingFunction{
            kM2, {Term{1, {2}}, Term{-1, {1, 2}}, Term{-1, {2, 2}}}}));
  CHECK(evaluate(l, {2, 1}) == 1);

  for_each_word(2, 3, [&](const Word& w) {
    const CountingFunction lw = left_relation(kM2, w);
    const CountingFunction rw = right_relation(kM2, w);
    for_each_word(2, 6, [&](const Word& u) {
      if (w.empty()) {
        // Letter counts sum to the length, so the empty-word relations vanish.
        CHECK(evaluate(lw, u) == 0);
        CHECK(evaluate(rw, u) == 0);
        return;
      }
      const bool is_prefix =
          u.size() >= w.size() && std::equal(w.begin(), w.end(), u.begin());
      const bool is_suffix =
          u.size() >= w.size() && std::equal(w.rbegin(), w.rend(), u.rbegin());
      CHECK(evaluate(lw, u) == (is_prefix ? 1 : 0));
      CHECK(evaluate(rw, u) == (is_suffix ? 1 : 0));
    });
  });
}

TEST_CASE("apply_left_extension") {
  const auto out = apply_left_extension(kM2, Term{1, {1, 2}});
  REQUIRE(out.size() == 2);
  CHECK(out[0].coef == 1);
  CHECK(out[0].word == Word{2});
  CHECK(out[1].coef == -1);
  CHECK(out[1].word == Word{2, 2});

  const auto out2 = apply_left_extension(kM2, Term{1, {1}});
  REQUIRE(out2.size() == 2);
  CHECK(out2[0].word == Word{});
  CHECK(out2[1].word == Word{2});

  CHECK_THROWS_AS(apply_left_extension(kM2, Term{1, {}}), std::invalid_argument);
  CHECK_THROWS_AS(apply_right_extension(kM2, Term{1, {}}), std::invalid_argument);
}

TEST_CASE("extension steps preserve the class up to the coefficient") {
  const BigInt x = 3;
  for (const Word& w : {Word{1, 2}, Word{2, 1}, Word{1, 1, 2}, Word{2}}) {
    const Term t{x, w};
    for (bool left : {true, false}) {
      const auto outs =
          left ? apply_left_extension(kM2, t) : apply_right_extension(kM2, t);
      for_each_word(2, 8, [&](const Word& u) {
        CountingFunction fn{kM2, {t}};
        for (const Term& o : outs) fn.terms.push_back(Term{-o.coef, o.word});
        const BigInt v = evaluate(fn, u);
        CHECK((v == 0 || v == x || v == -x));
      });
    }
  }
}

TEST_CASE("input_size") {
  CHECK(input_size(CountingFunction{kM2, {Term{3, {1, 2}}}}) == 5);
  CHECK(input_size(CountingFunction{kM2, {}}) == 0);
  CHECK(input_size(CountingFunction{kM2, {Term{-1, {}}}}) == 2);
  CHECK(input_size(CountingFunction{kM2, {Term{BigInt(1) << 100, {}}}}) == 102);
}

TEST_CASE("is_power_of_a1") {
  CHECK(is_power_of_a1({}));
  CHECK(is_power_of_a1({1, 1, 1}));
  CHECK(!is_power_of_a1({1, 2}));
}
