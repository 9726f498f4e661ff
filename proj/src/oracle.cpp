#include "countcheck/oracle.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "countcheck/encoding.hpp"

namespace countcheck {

namespace {

bool in_canonical_basis(const Word& w) {
  return w.empty() || (w.front() != kA1 && w.back() != kA1);
}

}  // namespace

BasisCoords basis_coordinates(const CountingFunction& f, const OracleOptions& opts) {
  BasisCoords coords;
  std::vector<std::pair<BigInt, Word>> work;
  work.reserve(f.terms.size());
  std::uint64_t created = 0;

  auto push = [&](BigInt coef, Word word) {
    if (coef == 0) return;
    if (++created > opts.max_intermediate_terms) {
      throw BudgetError("basis_coordinates: intermediate term budget exceeded");
    }
    work.emplace_back(std::move(coef), std::move(word));
  };

  for (const Term& t : f.terms) push(t.coef, t.word);

  const std::int32_t r = f.spec.rank;
  while (!work.empty()) {
    auto [coef, w] = std::move(work.back());
    work.pop_back();
    if (in_canonical_basis(w)) {
      coords[w] += coef;
      continue;
    }
    if (w.front() == kA1) {
      // rho_{a1 u} -> rho_u - sum_{s != a1} rho_{s u}
      Word rest(w.begin() + 1, w.end());
      for (Letter s = 2; s <= r; ++s) {
        Word ext;
        ext.reserve(rest.size() + 1);
        ext.push_back(s);
        ext.insert(ext.end(), rest.begin(), rest.end());
        push(-coef, std::move(ext));
      }
      push(coef, std::move(rest));
    } else {
      // rho_{u a1} -> rho_u - sum_{s != a1} rho_{u s}
      Word rest(w.begin(), w.end() - 1);
      for (Letter s = 2; s <= r; ++s) {
        Word ext = rest;
        ext.push_back(s);
        push(-coef, std::move(ext));
      }
      push(coef, std::move(rest));
    }
  }

  for (auto it = coords.begin(); it != coords.end();) {
    it = (it->second == 0) ? coords.erase(it) : std::next(it);
  }
  return coords;
}

Verdict oracle_equivalent(const CountingFunction& f, const CountingFunction& g,
                          const OracleOptions& opts) {
  const BasisCoords coords = basis_coordinates(difference(f, g), opts);
  if (coords.empty()) {
    return Verdict{true, std::nullopt};
  }
  const auto& [word, coef] = *coords.begin();
  Witness w;
  w.text = "rho(" + render_word(word) + ")";
  w.coefficient = coef;
  w.word = word;
  return Verdict{false, std::move(w)};
}

BigInt exhaustive_bound_scan(const CountingFunction& f, const CountingFunction& g,
                             std::size_t max_len) {
  const std::int32_t r = f.spec.rank;
  std::uint64_t leaves = 1;
  for (std::size_t i = 0; i < max_len; ++i) {
    if (leaves > 10'000'000ULL / static_cast<std::uint64_t>(r)) {
      throw BudgetError("exhaustive_bound_scan: rank^max_len exceeds 10^7");
    }
    leaves *= static_cast<std::uint64_t>(r);
  }

  const CountingFunction d = difference(f, g);
  BigInt best = 0;
  Word w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    w.assign(len, 1);
    while (true) {
      BigInt v = evaluate(d, w);
      if (v < 0) v = -v;
      if (v > best) best = v;
      // odometer over letters, most significant position first
      std::size_t i = len;
      while (i > 0 && w[i - 1] == r) {
        w[i - 1] = 1;
        --i;
      }
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  return best;
}

CountingFunction expand_interval_sum(const MonoidSpec& spec, SumKind kind, const Word& v,
                                     std::uint64_t k, std::uint64_t m, Letter s1, Letter s2) {
  if (v.empty() || v.front() == kA1 || v.back() == kA1) {
    throw std::invalid_argument("expand_interval_sum: middle word must have boundaries != a1");
  }
  const bool use_left = kind != SumKind::right;
  const bool use_right = kind != SumKind::left;
  if (use_left && (s1 <= kA1 || s1 > spec.rank)) {
    throw std::invalid_argument("expand_interval_sum: s1 must be a letter != a1");
  }
  if (use_right && (s2 <= kA1 || s2 > spec.rank)) {
    throw std::invalid_argument("expand_interval_sum: s2 must be a letter != a1");
  }

  CountingFunction out{spec, {}};
  auto word_for = [&](std::uint64_t i, std::uint64_t j) {
    Word w;
    w.reserve(v.size() + (use_left ? i + 1 : 0) + (use_right ? j + 1 : 0));
    if (use_left) {
      w.push_back(s1);
      w.insert(w.end(), i, kA1);
    }
    w.insert(w.end(), v.begin(), v.end());
    if (use_right) {
      w.insert(w.end(), j, kA1);
      w.push_back(s2);
    }
    return w;
  };

  switch (kind) {
    case SumKind::left:
      for (std::uint64_t i = 0; i < k; ++i) out.terms.push_back(Term{1, word_for(i, 0)});
      break;
    case SumKind::right:
      for (std::uint64_t j = 0; j < m; ++j) out.terms.push_back(Term{1, word_for(0, j)});
      break;
    case SumKind::both:
      for (std::uint64_t i = 0; i < k; ++i) {
        for (std::uint64_t j = 0; j < m; ++j) out.terms.push_back(Term{1, word_for(i, j)});
      }
      break;
  }
  return out;
}

}  // namespace countcheck
