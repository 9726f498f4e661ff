#include "countcheck/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace countcheck {

std::uint64_t count_occurrences(const Word& pattern, const Word& text) {
  if (pattern.empty()) return text.size();
  if (pattern.size() > text.size()) return 0;
  std::uint64_t hits = 0;
  const std::size_t last = text.size() - pattern.size();
  for (std::size_t i = 0; i <= last; ++i) {
    if (std::equal(pattern.begin(), pattern.end(), text.begin() + i)) ++hits;
  }
  return hits;
}

BigInt evaluate(const CountingFunction& f, const Word& w) {
  BigInt value = 0;
  for (const Term& t : f.terms) {
    value += t.coef * count_occurrences(t.word, w);
  }
  return value;
}

CountingFunction difference(const CountingFunction& f, const CountingFunction& g) {
  if (f.spec.rank != g.spec.rank) {
    throw std::invalid_argument("difference: rank mismatch");
  }
  CountingFunction d{f.spec, {}};
  d.terms.reserve(f.terms.size() + g.terms.size());
  d.terms = f.terms;
  for (const Term& t : g.terms) {
    d.terms.push_back(Term{-t.coef, t.word});
  }
  return d;
}

namespace {

CountingFunction extension_relation(const MonoidSpec& spec, const Word& w, bool left) {
  CountingFunction out{spec, {}};
  out.terms.reserve(static_cast<std::size_t>(spec.rank) + 1);
  out.terms.push_back(Term{1, w});
  for (Letter s = 1; s <= spec.rank; ++s) {
    Word ext;
    ext.reserve(w.size() + 1);
    if (left) {
      ext.push_back(s);
      ext.insert(ext.end(), w.begin(), w.end());
    } else {
      ext = w;
      ext.push_back(s);
    }
    out.terms.push_back(Term{-1, std::move(ext)});
  }
  return out;
}

std::vector<Term> apply_extension(const MonoidSpec& spec, const Term& t, bool left) {
  if (t.word.empty()) {
    throw std::invalid_argument("apply_extension: empty-word term");
  }
  const Letter fixed = left ? t.word.front() : t.word.back();
  Word rest(left ? t.word.begin() + 1 : t.word.begin(),
            left ? t.word.end() : t.word.end() - 1);
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(spec.rank));
  out.push_back(Term{t.coef, rest});
  for (Letter s = 1; s <= spec.rank; ++s) {
    if (s == fixed) continue;
    Word ext;
    ext.reserve(rest.size() + 1);
    if (left) {
      ext.push_back(s);
      ext.insert(ext.end(), rest.begin(), rest.end());
    } else {
      ext = rest;
      ext.push_back(s);
    }
    out.push_back(Term{-t.coef, std::move(ext)});
  }
  return out;
}

}  // namespace

CountingFunction left_relation(const MonoidSpec& spec, const Word& w) {
  return extension_relation(spec, w, true);
}

CountingFunction right_relation(const MonoidSpec& spec, const Word& w) {
  return extension_relation(spec, w, false);
}

std::vector<Term> apply_left_extension(const MonoidSpec& spec, const Term& t) {
  return apply_extension(spec, t, true);
}

std::vector<Term> apply_right_extension(const MonoidSpec& spec, const Term& t) {
  return apply_extension(spec, t, false);
}

std::uint64_t input_size(const CountingFunction& f) {
  std::uint64_t total = 0;
  for (const Term& t : f.terms) {
    total += t.word.size() + bit_length(t.coef) + 1;
  }
  return total;
}

bool is_power_of_a1(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](Letter s) { return s == kA1; });
}

}  // namespace countcheck
