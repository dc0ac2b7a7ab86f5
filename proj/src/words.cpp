#include "schottky/words.hpp"

#include <limits>

#include "schottky/errors.hpp"

namespace schottky {

Word Word::inverse() const {
  Word w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(static_cast<std::int8_t>(*it ^ 1));
  return w;
}

std::string Word::str() const {
  std::string s;
  for (std::int8_t l : letters) {
    if (!s.empty()) s.push_back(' ');
    char base = static_cast<char>((l & 1) ? 'A' : 'a');
    s.push_back(static_cast<char>(base + (l >> 1)));
  }
  return s;
}

bool reduced(const Word& w) {
  for (std::size_t i = 1; i < w.letters.size(); i++)
    if ((w.letters[i] ^ 1) == w.letters[i - 1]) return false;
  return true;
}

std::uint64_t shell_size(int k, int n) {
  if (k < 1 || n < 1) return n == 0 ? 1 : 0;
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t s = static_cast<std::uint64_t>(2 * k);
  std::uint64_t base = static_cast<std::uint64_t>(2 * k - 1);
  for (int i = 1; i < n; i++) {
    if (base != 0 && s > cap / base) return cap;
    s *= base;
  }
  return s;
}

std::uint64_t words_up_to(int k, int n) {
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (int i = 1; i <= n; i++) {
    std::uint64_t s = shell_size(k, i);
    if (total > cap - s) return cap;
    total += s;
  }
  return total;
}

void walk_words(const std::vector<Mobius>& gens, int max_len,
                const std::function<void(const std::vector<std::int8_t>&, const Mobius&)>& fn) {
  int k = static_cast<int>(gens.size());
  if (k < 1 || max_len < 1) return;
  std::vector<std::int8_t> stack;
  std::vector<Mobius> prod;  // prod[i] = product of stack[0..i]
  stack.reserve(max_len);
  prod.reserve(max_len);

  auto letter_map = [&](std::int8_t l) {
    const Mobius& g = gens[l >> 1];
    return (l & 1) ? g.inverse() : g;
  };

  // Raw products: unit-determinant factors keep the product at determinant 1
  // by construction. Renormalizing per step would divide by the *computed*
  // determinant, which for deep words is a catastrophically cancelled value
  // (entries grow like |lambda|^n, the det terms like |lambda|^2n).
  auto raw_mul = [](const Mobius& m1, const Mobius& m2) {
    return Mobius{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                  m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
  };

  std::function<void()> rec = [&]() {
    if (static_cast<int>(stack.size()) >= max_len) return;
    for (std::int8_t l = 0; l < static_cast<std::int8_t>(2 * k); l++) {
      if (!stack.empty() && (stack.back() ^ 1) == l) continue;
      Mobius m = stack.empty() ? letter_map(l) : raw_mul(prod.back(), letter_map(l));
      stack.push_back(l);
      prod.push_back(m);
      fn(stack, m);
      rec();
      stack.pop_back();
      prod.pop_back();
    }
  };
  rec();
}

std::vector<Word> enumerate_words(int k, int max_len, std::uint64_t cap) {
  if (words_up_to(k, max_len) > cap) throw budget_exceeded_error();
  std::vector<Word> out;
  out.reserve(words_up_to(k, max_len));
  std::vector<Mobius> dummy(static_cast<std::size_t>(k));  // identity maps; products unused
  walk_words(dummy, max_len, [&](const std::vector<std::int8_t>& ls, const Mobius&) {
    Word w; w.letters = ls;
    out.push_back(std::move(w));
  });
  return out;
}

Mobius word_to_map(const Word& w, const std::vector<Mobius>& gens) {
  Mobius m;  // identity
  for (std::int8_t l : w.letters) {
    std::size_t i = static_cast<std::size_t>(l >> 1);
    if (i >= gens.size()) throw domain_error("word letter outside generator range");
    m = compose(m, (l & 1) ? gens[i].inverse() : gens[i]);
  }
  return m;
}

} // namespace schottky
