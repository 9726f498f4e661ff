#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "countcheck/words.hpp"

namespace countcheck {

// ---------------------------------------------------------------------------
// Run-length keys
//
// A word with boundary letters != a1 is described by its a1-run lengths
// between non-a1 delimiter letters. Keys generalize one run slot at each end
// to an interval {0..count-1}, which is how the decomposition writes boundary
// sums compactly. Keys compare by their canonical byte serialization.
// ---------------------------------------------------------------------------

// One boundary slot: an exact run length, or all run lengths 0..count-1.
struct Boundary {
  enum class Kind : std::uint8_t { point, interval };
  Kind kind = Kind::point;
  std::uint64_t value = 0;  // point: run length; interval: count (0 = empty sum)

  static Boundary point(std::uint64_t run) { return {Kind::point, run}; }
  static Boundary interval(std::uint64_t count) { return {Kind::interval, count}; }
  bool operator==(const Boundary&) const = default;
};

// Interior atom of a key: a run length, or (rank >= 3 only) a delimiter letter.
struct CoreAtom {
  enum class Kind : std::uint8_t { run, letter };
  Kind kind = Kind::run;
  std::uint64_t value = 0;

  static CoreAtom run(std::uint64_t len) { return {Kind::run, len}; }
  static CoreAtom letter(Letter s) { return {Kind::letter, static_cast<std::uint64_t>(s)}; }
  bool operator==(const CoreAtom&) const = default;
};

// Everything strictly between the first and last run slots. For rank 2 the
// delimiters are forced to a2 and are omitted; for rank >= 3 the core
// alternates letter, run, ..., letter.
using CoreList = std::vector<CoreAtom>;

// rho_{a1^k}; exponent 0 is rho of the empty word.
struct PowerKey {
  std::uint64_t exponent = 0;
  bool operator==(const PowerKey&) const = default;
};

// A term whose run-length form has at most one slot. Shapes:
//   single letter:        {left == right, no span}
//   rho_{left a1^k right}: {concrete letters, span = point k}
//   aggregated boundary sum (one side summed over all letters != a1):
//     left_any:  sum_{s != a1} sum_{i < count} rho_{s a1^i right}
//     right_any: sum_{s != a1} sum_{j < count} rho_{left a1^j s}
// Summed sides only occur with an interval span; at most one side is summed.
struct ShortKey {
  Letter left = 0;   // 0 when left_any
  Letter right = 0;  // 0 when right_any
  bool left_any = false;
  bool right_any = false;
  std::optional<Boundary> span;
  bool operator==(const ShortKey&) const = default;
};

// A term with >= 2 run slots: concrete boundary letters, one boundary slot on
// each side, and the shared core in between.
struct LongKey {
  Letter first = 0;
  Letter last = 0;
  Boundary left;
  Boundary right;
  CoreList core;
  bool operator==(const LongKey&) const = default;
};

using TermKey = std::variant<PowerKey, ShortKey, LongKey>;

struct EncodedTerm {
  TermKey key;
  BigInt coef;
};

// ---------------------------------------------------------------------------
// Reduced-stream keys: the two basis families the checker sums coefficients
// over. Power-basis elements avoid a2 at word boundaries; rectangles are the
// two-sided sums sum_{i<width, j<height} rho_{s1 a1^i <core word> a1^j s2}.
// ---------------------------------------------------------------------------

struct PowerBasisKey {
  enum class Kind : std::uint8_t { empty_word, letter, bracket };
  Kind kind = Kind::empty_word;
  Letter a = 0;            // letter kind, or bracket left letter (!= a2)
  Letter b = 0;            // bracket right letter (!= a2)
  std::uint64_t run = 0;   // bracket interior run length

  static PowerBasisKey empty_word() { return {}; }
  static PowerBasisKey letter(Letter s) { return {Kind::letter, s, 0, 0}; }
  static PowerBasisKey bracket(Letter l, std::uint64_t run, Letter r) {
    return {Kind::bracket, l, r, run};
  }
  // Canonical key of rho_{a1^k}: empty word, a1, or a bracket a1 a1^{k-2} a1.
  static PowerBasisKey a1_power(std::uint64_t k);
  bool operator==(const PowerBasisKey&) const = default;
};

struct RectKey {
  Letter first = 0;
  Letter last = 0;
  CoreList core;
  std::uint64_t width = 0;   // left multiplicity, >= 1
  std::uint64_t height = 0;  // right multiplicity, >= 1
  bool operator==(const RectKey&) const = default;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Run-length view of a word with boundary letters != a1:
// letters.size() == runs.size() + 1.
struct RunForm {
  std::vector<Letter> letters;
  std::vector<std::uint64_t> runs;
};
RunForm run_form(const Word& w);

// Assembles the key for a generalized run list. `letters` has one entry more
// than `slots`; the outermost slots become the boundary slots, interior slots
// must be points. Yields a ShortKey for at most one slot, a LongKey otherwise.
TermKey key_from_slots(const MonoidSpec& spec, const std::vector<Letter>& letters,
                       const std::vector<Boundary>& slots);

// Run-length key of a whole word: pure a1-powers become PowerKey; words with
// boundary letters != a1 become Short/Long keys. Throws std::invalid_argument
// for words that start or end with a1 without being pure powers (those must
// be split into affixes first).
TermKey encode_word(const MonoidSpec& spec, const Word& w);

// Number of run slots: -1 for PowerKey, 0/1 for ShortKey, >= 2 for LongKey.
std::int64_t encoded_length(const TermKey& key);
std::int64_t encoded_length(const EncodedTerm& t);

const CoreList& core_of(const LongKey& key);

// Canonical, injective, prefix-free byte serialization; equal keys <=> equal
// bytes. Integers are length-prefixed big-endian magnitudes, so total key
// size stays linear in entry count plus value bit-lengths.
std::string serialize_key(const TermKey& key);
std::string serialize_key(const PowerBasisKey& key);
std::string serialize_key(const RectKey& key);

// Parses a serialized reduced-stream key (power-basis or rectangle) back into
// its structured form; used for witness reporting and debug output.
std::variant<PowerBasisKey, RectKey> parse_reduced_key(std::string_view bytes);

// Human-readable forms, e.g. "rho(a2 a1^3 a2)" or
// "sum_{i<2, j<1} rho(a2 a1^i a2 a1^j a2)".
std::string render_key(const PowerBasisKey& key);
std::string render_key(const RectKey& key);

// Run-compressed rendering: "a2 a1^3 a2"; "eps" for the empty word.
std::string render_word(const Word& w);

// The inner word a rectangle core denotes (delimiters restored for rank 2).
Word core_word(const CoreList& core, std::int32_t rank);

}  // namespace countcheck
