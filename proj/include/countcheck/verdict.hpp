#pragma once

#include <optional>
#include <string>

#include "countcheck/words.hpp"

namespace countcheck {

// A basis element with nonzero reduced coefficient, produced when two
// functions are not equivalent.
struct Witness {
  std::string text;      // human-readable description of the basis element
  BigInt coefficient;    // its reduced coefficient (never zero)
  std::string key;       // serialized grouping key (fast path; empty for the oracle)
  std::optional<Word> word;  // basis word (oracle path only)
};

struct Verdict {
  bool equivalent = false;
  std::optional<Witness> witness;  // present iff not equivalent
};

}  // namespace countcheck
