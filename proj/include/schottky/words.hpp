#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "schottky/mobius.hpp"

namespace schottky {

// A freely reduced word in k generators. Letter encoding: 2*i is generator
// i (0-based), 2*i+1 its inverse; the inverse of a letter is letter ^ 1.
// Enumeration is depth-first in ascending letter order, so words appear in a
// fixed deterministic sequence: g1, g1^-1, g2, ..., g1 g2, ...
struct Word {
  std::vector<std::int8_t> letters;

  std::size_t length() const { return letters.size(); }
  Word inverse() const;
  std::string str() const;  // e.g. "a B c" style: letter i -> 'a'+i, capital = inverse
};

bool reduced(const Word& w);

// number of reduced words of exactly length n: 2k (2k-1)^(n-1); saturates
std::uint64_t shell_size(int k, int n);
std::uint64_t words_up_to(int k, int n);  // cumulative over 1..n, saturating

// Visit every nonempty reduced word of length <= max_len in deterministic
// depth-first order, carrying the incremental matrix product. The callback
// receives the word (as a letter stack) and the product map.
void walk_words(const std::vector<Mobius>& gens, int max_len,
                const std::function<void(const std::vector<std::int8_t>&, const Mobius&)>& fn);

// Materialized enumeration; throws budget_exceeded_error if the count of
// words of length <= max_len exceeds cap.
std::vector<Word> enumerate_words(int k, int max_len, std::uint64_t cap);

// left-to-right composition; the empty word is the identity
Mobius word_to_map(const Word& w, const std::vector<Mobius>& gens);

} // namespace schottky
