#include "countcheck/genbench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "countcheck/fastcheck.hpp"
#include "countcheck/oracle.hpp"

namespace countcheck {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

BigInt random_magnitude(std::mt19937_64& rng, std::uint32_t max_bits) {
  const std::uint32_t bits = static_cast<std::uint32_t>(pick(rng, 1, max_bits));
  BigInt value = 0;
  std::uint32_t produced = 0;
  while (produced < bits) {
    const std::uint32_t chunk = std::min(64u, bits - produced);
    std::uint64_t raw = rng();
    if (chunk < 64) raw &= (1ULL << chunk) - 1;
    value <<= chunk;
    value += raw;
    produced += chunk;
  }
  if (value == 0) value = 1;
  return value;
}

Word random_word(std::mt19937_64& rng, std::int32_t rank, std::uint32_t max_len) {
  const std::uint64_t len = pick(rng, 0, max_len);
  Word w;
  w.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    w.push_back(static_cast<Letter>(pick(rng, 1, static_cast<std::uint64_t>(rank))));
  }
  return w;
}

}  // namespace

CountingFunction gen_random(const GenParams& p) {
  if (p.rank < 2) throw std::invalid_argument("gen_random: rank must be >= 2");
  if (p.coef_bits < 1) throw std::invalid_argument("gen_random: coef_bits must be >= 1");
  std::mt19937_64 rng(p.seed);
  CountingFunction f{MonoidSpec{p.rank}, {}};
  f.terms.reserve(p.term_count);
  for (std::uint32_t i = 0; i < p.term_count; ++i) {
    Term t;
    t.word = random_word(rng, p.rank, p.max_word_len);
    t.coef = random_magnitude(rng, p.coef_bits);
    if (pick(rng, 0, 1)) t.coef = -t.coef;
    f.terms.push_back(std::move(t));
  }
  return f;
}

CountingFunction perturb_equivalent(const CountingFunction& f, std::uint64_t seed,
                                    std::uint32_t count) {
  std::mt19937_64 rng(seed);
  CountingFunction out = f;
  for (std::uint32_t j = 0; j < count; ++j) {
    const Word w = random_word(rng, f.spec.rank, 3);
    BigInt c = static_cast<std::int64_t>(pick(rng, 1, 4));
    if (pick(rng, 0, 1)) c = -c;
    const bool left = pick(rng, 0, 1) != 0;
    const CountingFunction rel =
        left ? left_relation(f.spec, w) : right_relation(f.spec, w);
    for (const Term& t : rel.terms) {
      out.terms.push_back(Term{c * t.coef, t.word});
    }
  }
  return out;
}

CountingFunction perturb_inequivalent(const CountingFunction& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::int32_t rank = f.spec.rank;
  const std::uint64_t len = pick(rng, 0, 6);
  Word b;
  b.reserve(len);
  for (std::uint64_t i = 0; i < len; ++i) {
    const bool boundary = (i == 0 || i + 1 == len);
    const std::uint64_t lo = boundary ? 2 : 1;
    b.push_back(static_cast<Letter>(pick(rng, lo, static_cast<std::uint64_t>(rank))));
  }
  BigInt c = static_cast<std::int64_t>(pick(rng, 1, 8));
  if (pick(rng, 0, 1)) c = -c;
  CountingFunction out = f;
  out.terms.push_back(Term{std::move(c), std::move(b)});
  return out;
}

namespace {

std::uint64_t time_once_ns(const CountingFunction& f, const CountingFunction& g,
                           const CheckOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Verdict v = check_equivalent(f, g, opts);
  const auto stop = std::chrono::steady_clock::now();
  (void)v;
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

std::uint64_t median(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

}  // namespace

BenchReport bench_scaling(const std::vector<std::uint64_t>& target_sizes, std::uint64_t seed,
                          const BenchOptions& opts) {
  for (std::size_t i = 1; i < target_sizes.size(); ++i) {
    if (target_sizes[i] <= target_sizes[i - 1]) {
      throw std::invalid_argument("bench_scaling: sizes must be strictly increasing");
    }
  }

  BenchReport report;
  for (std::size_t i = 0; i < target_sizes.size(); ++i) {
    const std::uint64_t target = target_sizes[i];
    // Average term size under these parameters; aim the base function at half
    // the target so that the perturbed copy brings the pair close to it.
    const std::uint64_t per_term = opts.max_word_len / 2 + opts.coef_bits / 2 + 1;
    GenParams p;
    p.rank = 2;
    p.term_count = static_cast<std::uint32_t>(std::max<std::uint64_t>(1, target / 2 / per_term));
    p.max_word_len = opts.max_word_len;
    p.coef_bits = opts.coef_bits;
    p.seed = seed + i;
    const CountingFunction f = gen_random(p);
    const CountingFunction g =
        perturb_equivalent(f, seed + 1000 + i, std::max<std::uint32_t>(1, p.term_count / 32));

    BenchRow row;
    row.size_bytes = input_size(f) + input_size(g);

    CheckOptions copts;
    copts.backend = opts.backend;
    // Two warm-up runs settle the allocator before anything is timed.
    row.equivalent = check_equivalent(f, g, copts).equivalent;
    (void)check_equivalent(f, g, copts);
    std::vector<std::uint64_t> times;
    times.reserve(opts.reps);
    for (std::uint32_t r = 0; r < opts.reps; ++r) {
      times.push_back(time_once_ns(f, g, copts));
    }
    row.fast_ns = median(times);

    if (row.size_bytes <= opts.oracle_cutoff_bytes) {
      std::vector<std::uint64_t> otimes;
      otimes.reserve(opts.reps);
      for (std::uint32_t r = 0; r < opts.reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        (void)oracle_equivalent(f, g);
        const auto stop = std::chrono::steady_clock::now();
        otimes.push_back(static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
      }
      row.oracle_ns = median(otimes);
    }

    if (!report.rows.empty() && row.size_bytes <= report.rows.back().size_bytes) {
      throw std::runtime_error("bench_scaling: generated sizes are not increasing");
    }
    report.rows.push_back(row);
  }

  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    report.ratios.push_back(static_cast<double>(report.rows[i].fast_ns) /
                            static_cast<double>(std::max<std::uint64_t>(1, report.rows[i - 1].fast_ns)));
  }

  if (report.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(report.rows.size());
    for (const BenchRow& row : report.rows) {
      const double x = std::log(static_cast<double>(row.size_bytes));
      const double y = std::log(static_cast<double>(std::max<std::uint64_t>(1, row.fast_ns)));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    report.loglog_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return report;
}

std::string BenchReport::to_table() const {
  std::ostringstream os;
  os << "size_bytes    fast_ns        oracle_ns      verdict\n";
  for (const BenchRow& row : rows) {
    os << row.size_bytes << "\t" << row.fast_ns << "\t";
    if (row.oracle_ns) {
      os << *row.oracle_ns;
    } else {
      os << "-";
    }
    os << "\t" << (row.equivalent ? "EQUIVALENT" : "NOT_EQUIVALENT") << "\n";
  }
  os << "growth ratios:";
  for (double r : ratios) os << ' ' << r;
  os << "\nlog-log slope: " << loglog_slope << "\n";
  return os.str();
}

std::string BenchReport::to_csv() const {
  std::ostringstream os;
  os << "size_bytes,fast_ns,oracle_ns,ratio\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << rows[i].size_bytes << ',' << rows[i].fast_ns << ',';
    if (rows[i].oracle_ns) os << *rows[i].oracle_ns;
    os << ',';
    if (i > 0) os << ratios[i - 1];
    os << '\n';
  }
  return os.str();
}

}  // namespace countcheck
