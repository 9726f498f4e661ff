#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "countcheck/words.hpp"

namespace countcheck {

// A problem instance: two counting functions over the same monoid.
struct Instance {
  MonoidSpec spec;
  CountingFunction f;
  CountingFunction g;
};

enum class ParseErrorCode {
  rank,     // rank missing, malformed, or < 2
  letter,   // generator index outside [1, rank]
  coef,     // malformed coefficient
  section,  // missing [f] or [g] header
  syntax,   // anything else
};

const char* to_string(ParseErrorCode code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, int line, const std::string& detail);
  ParseErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ParseErrorCode code_;
  int line_;
};

// Parses the line-oriented instance format:
//
//   rank 2          # header; alphabet is {a1..a_rank}
//   [f]
//   3 2 1 2         # coefficient, then the word as generator indices
//   -1 e            # `e` is the empty word
//   [g]
//
// `#` starts a comment; blank lines are ignored; coefficients are decimal at
// any precision. Every input either yields an Instance or throws ParseError.
Instance parse_instance(std::string_view text);

// Canonical text form; parse_instance(serialize_instance(x)) reproduces the
// rank and the exact term multisets.
std::string serialize_instance(const Instance& inst);

}  // namespace countcheck
