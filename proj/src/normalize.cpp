#include "countcheck/normalize.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace countcheck {

namespace {

std::vector<KeyedTerm> reduce_hash(std::vector<KeyedTerm> terms) {
  // Views into `terms`, which outlives the map; avoids re-copying every key.
  std::unordered_map<std::string_view, BigInt> sums;
  sums.reserve(terms.size());
  for (const KeyedTerm& t : terms) {
    sums[std::string_view(t.key)] += t.coefficient;
  }
  std::vector<KeyedTerm> out;
  out.reserve(sums.size());
  for (auto& [key, coef] : sums) {
    if (coef != 0) out.push_back(KeyedTerm{std::string(key), std::move(coef)});
  }
  std::sort(out.begin(), out.end(),
            [](const KeyedTerm& a, const KeyedTerm& b) { return a.key < b.key; });
  return out;
}

// MSD radix sort on key bytes with an explicit work stack; stable so that the
// follow-up summing pass sees equal keys adjacent. Index vector avoids moving
// coefficients around.
void radix_sort_indices(const std::vector<KeyedTerm>& terms, std::vector<std::uint32_t>& idx) {
  struct Frame {
    std::uint32_t begin, end, depth;
  };
  std::vector<std::uint32_t> scratch(idx.size());
  std::vector<Frame> stack;
  stack.push_back({0, static_cast<std::uint32_t>(idx.size()), 0});

  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const std::uint32_t n = f.end - f.begin;
    if (n < 2) continue;

    // Bucket 0 holds exhausted keys; 1..256 hold byte values + 1.
    std::array<std::uint32_t, 257> count{};
    for (std::uint32_t i = f.begin; i < f.end; ++i) {
      const std::string& key = terms[idx[i]].key;
      const std::uint32_t b =
          f.depth < key.size() ? static_cast<unsigned char>(key[f.depth]) + 1u : 0u;
      ++count[b];
    }
    std::array<std::uint32_t, 257> offset{};
    std::uint32_t sum = 0;
    for (std::size_t b = 0; b < 257; ++b) {
      offset[b] = sum;
      sum += count[b];
    }
    for (std::uint32_t i = f.begin; i < f.end; ++i) {
      const std::string& key = terms[idx[i]].key;
      const std::uint32_t b =
          f.depth < key.size() ? static_cast<unsigned char>(key[f.depth]) + 1u : 0u;
      scratch[offset[b]++] = idx[i];
    }
    std::copy(scratch.begin(), scratch.begin() + n, idx.begin() + f.begin);

    std::uint32_t start = count[0];  // exhausted keys are final
    for (std::size_t b = 1; b < 257; ++b) {
      if (count[b] > 1) {
        stack.push_back({f.begin + start, f.begin + start + count[b], f.depth + 1});
      }
      start += count[b];
    }
  }
}

std::vector<KeyedTerm> reduce_radix(std::vector<KeyedTerm> terms) {
  std::vector<std::uint32_t> idx(terms.size());
  for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  radix_sort_indices(terms, idx);

  std::vector<KeyedTerm> out;
  std::size_t i = 0;
  while (i < idx.size()) {
    const std::string& key = terms[idx[i]].key;
    BigInt sum = terms[idx[i]].coefficient;
    std::size_t j = i + 1;
    while (j < idx.size() && terms[idx[j]].key == key) {
      sum += terms[idx[j]].coefficient;
      ++j;
    }
    if (sum != 0) out.push_back(KeyedTerm{key, std::move(sum)});
    i = j;
  }
  return out;
}

}  // namespace

std::vector<KeyedTerm> reduce(std::vector<KeyedTerm> terms, ReduceBackend backend) {
  return backend == ReduceBackend::hash ? reduce_hash(std::move(terms))
                                        : reduce_radix(std::move(terms));
}

TrivialityResult is_trivial(std::vector<KeyedTerm> terms, ReduceBackend backend) {
  std::vector<KeyedTerm> reduced = reduce(std::move(terms), backend);
  if (reduced.empty()) return {true, std::nullopt};
  return {false, std::move(reduced.front())};
}

}  // namespace countcheck
