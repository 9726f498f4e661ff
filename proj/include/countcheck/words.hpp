#pragma once

#include <cstdint>
#include <vector>

#include "countcheck/bigint.hpp"

namespace countcheck {

// Letters are generator indices 1..rank; index 1 (a1) is the distinguished
// letter whose runs the fast path compresses.
using Letter = std::int32_t;
inline constexpr Letter kA1 = 1;

// A word over the alphabet {a1..a_rank}; empty vector is the empty word.
using Word = std::vector<Letter>;

// Free monoid of rank >= 2 over the alphabet {a1..a_rank}.
struct MonoidSpec {
  std::int32_t rank = 2;
};

// One weighted elementary counting function: coef * rho_word.
struct Term {
  BigInt coef;
  Word word;
};

// A finite integer combination of elementary counting functions. Term order
// carries no meaning beyond input order; the zero function has no terms.
struct CountingFunction {
  MonoidSpec spec;
  std::vector<Term> terms;
};

// Number of (possibly overlapping) occurrences of `pattern` in `text`;
// the empty pattern counts |text|.
std::uint64_t count_occurrences(const Word& pattern, const Word& text);

// Exact value of f at w.
BigInt evaluate(const CountingFunction& f, const Word& w);

// f - g as a formal concatenation (g's coefficients negated). Throws
// std::invalid_argument on rank mismatch.
CountingFunction difference(const CountingFunction& f, const CountingFunction& g);

// Left/right extension relation functions: rho_w - sum_s rho_{sw} and
// rho_w - sum_s rho_{ws}. Both are bounded (left_relation(w) evaluates to 1
// exactly on words with prefix w).
CountingFunction left_relation(const MonoidSpec& spec, const Word& w);
CountingFunction right_relation(const MonoidSpec& spec, const Word& w);

// Substitution steps used for rewriting into the canonical basis: replaces
// coef * rho_{s1 w} by coef * rho_w - coef * rho_{sw} for every s != s1
// (and symmetrically at the right end). Throws on an empty-word term.
std::vector<Term> apply_left_extension(const MonoidSpec& spec, const Term& t);
std::vector<Term> apply_right_extension(const MonoidSpec& spec, const Term& t);

// Input-size measure: sum over terms of word length + coefficient bit-length + 1.
std::uint64_t input_size(const CountingFunction& f);

// True for the empty word and for a1^k.
bool is_power_of_a1(const Word& w);

}  // namespace countcheck
