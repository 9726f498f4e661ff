#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "countcheck/encoding.hpp"
#include "countcheck/fastcheck.hpp"
#include "countcheck/oracle.hpp"
#include "countcheck/words.hpp"

namespace countcheck::testing {

inline Word make_word(std::initializer_list<Letter> ls) { return Word(ls); }

// Visits every word over {a1..a_rank} with length <= max_len.
template <typename F>
void for_each_word(std::int32_t rank, std::size_t max_len, F&& fn) {
  Word w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    w.assign(len, 1);
    while (true) {
      fn(static_cast<const Word&>(w));
      std::size_t i = len;
      while (i > 0 && w[i - 1] == rank) {
        w[i - 1] = 1;
        --i;
      }
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

// Formal reduction by word: sums coefficients of equal words, drops zeros.
inline CountingFunction formal_reduce(const CountingFunction& f) {
  std::map<Word, BigInt> sums;
  for (const Term& t : f.terms) sums[t.word] += t.coef;
  CountingFunction out{f.spec, {}};
  for (auto& [w, c] : sums) {
    if (c != 0) out.terms.push_back(Term{c, w});
  }
  return out;
}

// Formal view of a function for multiset comparisons (coefficient rendered
// in decimal so ordering is total).
inline std::vector<std::pair<Word, std::string>> sorted_terms(const CountingFunction& f) {
  std::vector<std::pair<Word, std::string>> out;
  out.reserve(f.terms.size());
  for (const Term& t : f.terms) out.emplace_back(t.word, t.coef.str());
  std::sort(out.begin(), out.end());
  return out;
}

// The elementary word a power-basis key denotes.
inline Word power_basis_word(const PowerBasisKey& k) {
  switch (k.kind) {
    case PowerBasisKey::Kind::empty_word:
      return {};
    case PowerBasisKey::Kind::letter:
      return {k.a};
    case PowerBasisKey::Kind::bracket: {
      Word w;
      w.push_back(k.a);
      w.insert(w.end(), k.run, kA1);
      w.push_back(k.b);
      return w;
    }
  }
  return {};
}

inline void append_scaled(CountingFunction& acc, const CountingFunction& part,
                          const BigInt& scale) {
  for (const Term& t : part.terms) acc.terms.push_back(Term{scale * t.coef, t.word});
}

// Literal elementary expansion of an encoded term; the independent reading of
// what each key stands for, used to cross-check pipeline stages.
inline CountingFunction expand_encoded(const MonoidSpec& spec, const EncodedTerm& t) {
  CountingFunction out{spec, {}};
  if (const auto* p = std::get_if<PowerKey>(&t.key)) {
    out.terms.push_back(Term{t.coef, Word(p->exponent, kA1)});
    return out;
  }
  if (const auto* s = std::get_if<ShortKey>(&t.key)) {
    if (!s->span) {
      out.terms.push_back(Term{t.coef, Word{s->left}});
      return out;
    }
    if (s->span->kind == Boundary::Kind::point) {
      Word w;
      w.push_back(s->left);
      w.insert(w.end(), s->span->value, kA1);
      w.push_back(s->right);
      out.terms.push_back(Term{t.coef, std::move(w)});
      return out;
    }
    const std::uint64_t count = s->span->value;
    if (s->left_any) {
      for (Letter l = 2; l <= spec.rank; ++l) {
        append_scaled(out, expand_interval_sum(spec, SumKind::left, Word{s->right}, count, 0, l, 0),
                      t.coef);
      }
    } else {
      for (Letter l = 2; l <= spec.rank; ++l) {
        append_scaled(out, expand_interval_sum(spec, SumKind::right, Word{s->left}, 0, count, 0, l),
                      t.coef);
      }
    }
    return out;
  }
  const auto& l = std::get<LongKey>(t.key);
  const Word inner = core_word(l.core, spec.rank);
  const bool left_point = l.left.kind == Boundary::Kind::point;
  const bool right_point = l.right.kind == Boundary::Kind::point;
  if (left_point && right_point) {
    Word w;
    w.push_back(l.first);
    w.insert(w.end(), l.left.value, kA1);
    w.insert(w.end(), inner.begin(), inner.end());
    w.insert(w.end(), l.right.value, kA1);
    w.push_back(l.last);
    out.terms.push_back(Term{t.coef, std::move(w)});
  } else if (!left_point && right_point) {
    Word v = inner;
    v.insert(v.end(), l.right.value, kA1);
    v.push_back(l.last);
    append_scaled(out, expand_interval_sum(spec, SumKind::left, v, l.left.value, 0, l.first, 0),
                  t.coef);
  } else if (left_point && !right_point) {
    Word v;
    v.push_back(l.first);
    v.insert(v.end(), l.left.value, kA1);
    v.insert(v.end(), inner.begin(), inner.end());
    append_scaled(out, expand_interval_sum(spec, SumKind::right, v, 0, l.right.value, 0, l.last),
                  t.coef);
  } else {
    append_scaled(out,
                  expand_interval_sum(spec, SumKind::both, inner, l.left.value, l.right.value,
                                      l.first, l.last),
                  t.coef);
  }
  return out;
}

inline CountingFunction expand_encoded_all(const MonoidSpec& spec,
                                           const std::vector<EncodedTerm>& ts) {
  CountingFunction out{spec, {}};
  for (const EncodedTerm& t : ts) append_scaled(out, expand_encoded(spec, t), 1);
  return out;
}

inline CountingFunction expand_rect(const MonoidSpec& spec, const RectTerm& rt) {
  CountingFunction out{spec, {}};
  append_scaled(out,
                expand_interval_sum(spec, SumKind::both, core_word(rt.key.core, spec.rank),
                                    rt.key.width, rt.key.height, rt.key.first, rt.key.last),
                rt.coef);
  return out;
}

// Test-only inverse of encode_word; defined for keys that denote one word.
inline Word decode_word_key(const TermKey& key) {
  if (const auto* p = std::get_if<PowerKey>(&key)) return Word(p->exponent, kA1);
  MonoidSpec probe{2};
  if (const auto* s = std::get_if<ShortKey>(&key)) {
    if (!s->span) return Word{s->left};
    Word w;
    w.push_back(s->left);
    w.insert(w.end(), s->span->value, kA1);
    w.push_back(s->right);
    return w;
  }
  const auto& l = std::get<LongKey>(key);
  const bool rank2_core = l.core.empty() || l.core.front().kind == CoreAtom::Kind::run;
  probe.rank = rank2_core ? 2 : 3;
  const Word inner = core_word(l.core, probe.rank);
  Word w;
  w.push_back(l.first);
  w.insert(w.end(), l.left.value, kA1);
  w.insert(w.end(), inner.begin(), inner.end());
  w.insert(w.end(), l.right.value, kA1);
  w.push_back(l.last);
  return w;
}

}  // namespace countcheck::testing
