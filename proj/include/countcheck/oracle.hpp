#pragma once

#include <cstdint>
#include <map>

#include "countcheck/errors.hpp"
#include "countcheck/verdict.hpp"
#include "countcheck/words.hpp"

namespace countcheck {

// Coordinates of an equivalence class over the canonical basis: the classes
// rho_w for w empty or with first and last letter != a1. Absent keys are zero.
using BasisCoords = std::map<Word, BigInt>;

struct OracleOptions {
  // Cap on intermediate terms created while rewriting; the rewrite strategy
  // is cubic in the worst case, so this converts blowups into BudgetError.
  std::uint64_t max_intermediate_terms = 10'000'000;
};

// Rewrites every term of f into the canonical basis by repeatedly applying
// extension relations (strip leading a1's, then trailing ones) and sums the
// coefficients. Deliberately simple and independent of the fast path.
BasisCoords basis_coordinates(const CountingFunction& f, const OracleOptions& opts = {});

// Ground-truth decision: f and g are equivalent iff difference(f, g) has
// all-zero canonical coordinates. Witness: lexicographically smallest basis
// word with a nonzero coordinate.
Verdict oracle_equivalent(const CountingFunction& f, const CountingFunction& g,
                          const OracleOptions& opts = {});

// max over all words w with |w| <= max_len of |f(w) - g(w)|. Throws
// BudgetError when rank^max_len > 10^7.
BigInt exhaustive_bound_scan(const CountingFunction& f, const CountingFunction& g,
                             std::size_t max_len);

// Which side(s) of a middle word carry an a1-power sum.
enum class SumKind { left, right, both };

// Literal term-by-term expansion of the boundary sums produced by the
// decomposition of rho_{a1^k v a1^m}:
//   left:  sum_{i<k}       rho_{s1 a1^i v}
//   right: sum_{j<m}       rho_{v a1^j s2}
//   both:  sum_{i<k, j<m}  rho_{s1 a1^i v a1^j s2}
// A zero count on a used side yields the zero function. Preconditions:
// v is non-empty with boundary letters != a1; used s1/s2 are != a1.
CountingFunction expand_interval_sum(const MonoidSpec& spec, SumKind kind, const Word& v,
                                     std::uint64_t k, std::uint64_t m, Letter s1, Letter s2);

}  // namespace countcheck
