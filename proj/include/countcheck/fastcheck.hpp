#pragma once

#include <cstdint>
#include <vector>

#include "countcheck/encoding.hpp"
#include "countcheck/normalize.hpp"
#include "countcheck/verdict.hpp"
#include "countcheck/words.hpp"

namespace countcheck {

struct PowerBasisTerm {
  PowerBasisKey key;
  BigInt coef;
};

struct RectTerm {
  RectKey key;
  BigInt coef;
};

// Maximal split w = a1^lead . middle . a1^trail with middle boundaries != a1.
struct Affixes {
  std::uint64_t lead = 0;
  Word middle;
  std::uint64_t trail = 0;
};

// Throws std::invalid_argument for pure a1-powers and the empty word (those
// are routed to the power stream directly, without decomposition).
Affixes split_power_affixes(const Word& w);

// Rewrites coef * rho_w, w = a1^k v a1^m, as an equivalent combination of
// encoded terms: the bare middle, boundary sums for a nonzero left or right
// affix, and one two-sided sum per pair of boundary letters. Boundary sums
// whose middle is a single letter are emitted letter-aggregated (one ShortKey
// summed over all letters != a1), everything else per letter. At most
// rank^2 terms.
std::vector<EncodedTerm> decompose_term(const MonoidSpec& spec, const BigInt& coef,
                                        const Word& w);

// Which reduced stream a term belongs to: power-basis rewriting for at most
// one run slot, rectangle substitution otherwise.
enum class BasisRoute { power, rect };
BasisRoute classify(const EncodedTerm& t);

// Expands a power-route term into power-basis coordinates. Closed forms only;
// never more than rank^2 output terms.
std::vector<PowerBasisTerm> rewrite_short(const MonoidSpec& spec, const EncodedTerm& t);

// Inclusion-exclusion substitution of a rectangle-route term into (0,0)-based
// rectangles: 1 to 4 terms, zero-multiplicity rectangles dropped.
std::vector<RectTerm> to_rectangles(const EncodedTerm& t);

struct CheckStats {
  std::uint64_t power_terms = 0;  // keyed terms fed to the power-stream reduce
  std::uint64_t rect_terms = 0;   // keyed terms fed to the rectangle-stream reduce
  std::uint64_t key_bytes = 0;    // total serialized key bytes across both streams
};

struct CheckOptions {
  ReduceBackend backend = ReduceBackend::hash;
  CheckStats* stats = nullptr;
};

// The linear-time equivalence check: decides whether f - g is bounded.
// Witness reporting prefers the power stream, then the rectangle stream,
// smallest serialized key first.
Verdict check_equivalent(const CountingFunction& f, const CountingFunction& g,
                         const CheckOptions& opts = {});

// Full reduced representation of one function over the combined basis:
// power-basis coordinates plus rectangle coordinates, key-sorted, zero
// coefficients dropped.
struct BasisDecomposition {
  std::vector<PowerBasisTerm> power;
  std::vector<RectTerm> rect;
};
BasisDecomposition basis_decomposition(const CountingFunction& f,
                                       ReduceBackend backend = ReduceBackend::hash);

}  // namespace countcheck
