#pragma once

#include <optional>
#include <string>
#include <vector>

#include "countcheck/bigint.hpp"

namespace countcheck {

struct KeyedTerm {
  std::string key;  // canonical serialized key, non-empty
  BigInt coefficient;
};

// Grouping backend. `hash` is expected-linear and the default; `radix` groups
// by a byte-wise MSD radix sort, deterministic worst-case linear in total key
// bytes. Both produce identical output.
enum class ReduceBackend { hash, radix };

// Sums coefficients of identical keys exactly and drops zero sums. Output is
// sorted lexicographically by key bytes and has unique keys.
std::vector<KeyedTerm> reduce(std::vector<KeyedTerm> terms,
                              ReduceBackend backend = ReduceBackend::hash);

struct TrivialityResult {
  bool trivial = false;
  std::optional<KeyedTerm> witness;  // lexicographically smallest surviving key
};

// True iff reduce() leaves nothing.
TrivialityResult is_trivial(std::vector<KeyedTerm> terms,
                            ReduceBackend backend = ReduceBackend::hash);

}  // namespace countcheck
