#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "countcheck/normalize.hpp"
#include "countcheck/words.hpp"

namespace countcheck {

struct GenParams {
  std::int32_t rank = 2;
  std::uint32_t term_count = 8;
  std::uint32_t max_word_len = 8;
  std::uint32_t coef_bits = 8;  // >= 1
  std::uint64_t seed = 0;
};

// Deterministic in the seed: uniform word lengths in [0, max_word_len],
// uniform letters, coefficient magnitudes in [1, 2^coef_bits), uniform signs.
CountingFunction gen_random(const GenParams& p);

// f plus `count` random multiples of extension relation functions, expanded
// into elementary terms; always equivalent to f. Relation words are kept
// short (length <= 3) so the added bounded part settles within small scan
// depths.
CountingFunction perturb_equivalent(const CountingFunction& f, std::uint64_t seed,
                                    std::uint32_t count);

// f plus a nonzero multiple of one random canonical basis element (a word
// with boundary letters != a1, possibly empty); never equivalent to f.
CountingFunction perturb_inequivalent(const CountingFunction& f, std::uint64_t seed);

struct BenchRow {
  std::uint64_t size_bytes = 0;  // input_size(f) + input_size(g)
  std::uint64_t fast_ns = 0;     // median wall time of check_equivalent
  std::optional<std::uint64_t> oracle_ns;  // absent above the oracle cutoff
  bool equivalent = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<double> ratios;  // fast_ns growth between consecutive rows
  double loglog_slope = 0.0;   // least-squares slope of log(fast_ns) vs log(size)
  std::string to_table() const;
  std::string to_csv() const;
};

struct BenchOptions {
  std::uint32_t reps = 7;                     // timed repetitions per size (median)
  std::uint64_t oracle_cutoff_bytes = 10000;  // skip oracle timing above this
  ReduceBackend backend = ReduceBackend::hash;
  std::uint32_t max_word_len = 48;
  std::uint32_t coef_bits = 16;
};

// For each target size, generates an equivalent pair near that size and times
// the fast check (and the oracle below the cutoff). Runs strictly
// sequentially; rows come out in increasing size order.
BenchReport bench_scaling(const std::vector<std::uint64_t>& target_sizes, std::uint64_t seed,
                          const BenchOptions& opts = {});

}  // namespace countcheck
