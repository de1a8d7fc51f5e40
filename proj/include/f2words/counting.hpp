#pragma once

#include <algorithm>
#include <cstddef>
#include <span>

#include "errors.hpp"
#include "letter.hpp"
#include "word.hpp"

namespace f2 {

// All counts here are cyclic: a length-n word has n starting positions and a
// match may run off the end and continue at the start.

/// The four independent cyclic two-letter counts (aa)_w, (bb)_w, (ab)_w,
/// (aB)_w. The remaining classes are determined by them, since (ba)_w = (ab)_w
/// and (Ba)_w = (aB)_w for every cyclic word.
struct PairCounts {
  std::size_t aa = 0;
  std::size_t bb = 0;
  std::size_t ab = 0;
  std::size_t aB = 0;

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

namespace detail {

/// Number of starting positions i in [0, n) with w[(i + k) mod n] == p[k] for
/// every k. Patterns longer than w wrap more than once.
inline std::size_t cyclic_matches(std::span<const Letter> w,
                                  std::span<const Letter> p) noexcept {
  const std::size_t n = w.size();
  if (n == 0 || p.empty()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    while (k < p.size() && w[(i + k) % n] == p[k]) ++k;
    if (k == p.size()) ++count;
  }
  return count;
}

inline std::size_t cyclic_count_both(std::span<const Letter> w,
                                     std::span<const Letter> p) {
  std::vector<Letter> inv(p.rbegin(), p.rend());
  for (Letter& x : inv) x = inverse(x);
  return cyclic_matches(w, p) + cyclic_matches(w, inv);
}

inline void check_pattern(const CyclicWord& w, const Word& pattern) {
  if (pattern.empty()) throw DomainError("subword_count: empty pattern");
  if (pattern.size() > w.size())
    throw DomainError("subword_count: pattern '" + to_string(pattern) +
                      "' is longer than word '" + to_string(w) + "'");
}

}  // namespace detail

/// {v}_w: occurrences of `pattern` alone.
inline std::size_t directed_subword_count(const CyclicWord& w, const Word& pattern) {
  detail::check_pattern(w, pattern);
  return detail::cyclic_matches(w.letters(), pattern.letters());
}

/// (v)_w = {v}_w + {v⁻¹}_w.
inline std::size_t subword_count(const CyclicWord& w, const Word& pattern) {
  detail::check_pattern(w, pattern);
  return detail::cyclic_count_both(w.letters(), pattern.letters());
}

/// (xy)_w for a two-letter pattern. Unlike subword_count this also accepts a
/// single-letter w, where the only pair is the letter with itself.
inline std::size_t pair_count(const CyclicWord& w, Letter x, Letter y) noexcept {
  const std::size_t n = w.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Letter p = w[i], q = w[(i + 1) % n];
    if ((p == x && q == y) || (p == inverse(y) && q == inverse(x))) ++count;
  }
  return count;
}

/// Single pass over the n cyclic adjacencies. Pairs ba, AB, Ba, Ab are not
/// tallied; their classes mirror (ab)_w and (aB)_w.
inline PairCounts profile(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) throw DomainError("profile: empty word");
  PairCounts c;
  for (std::size_t i = 0; i < n; ++i) {
    Letter p = w[i], q = w[(i + 1) % n];
    if (p == q) {
      (index(p) & 1 ? c.bb : c.aa)++;
    } else if ((p == Letter::a && q == Letter::b) || (p == Letter::B && q == Letter::A)) {
      ++c.ab;
    } else if ((p == Letter::a && q == Letter::B) || (p == Letter::b && q == Letter::A)) {
      ++c.aB;
    }
  }
  return c;
}

inline PairCounts profile(const CyclicWord& w) { return profile(w.letters()); }

/// λ(w): length of the longest cyclic run of a single letter.
inline std::size_t longest_run(std::span<const Letter> w) noexcept {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::size_t start = 0;
  while (start < n && w[start] == w[(start + n - 1) % n]) ++start;
  if (start == n) return n;
  std::size_t best = 0, run = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = (start + k) % n;
    run = (k > 0 && w[i] == w[(i + n - 1) % n]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

inline std::size_t longest_run(const CyclicWord& w) noexcept {
  return longest_run(w.letters());
}

inline bool is_alternating(const CyclicWord& w) noexcept { return longest_run(w) == 1; }

/// (x)_w: positions holding x or x̄.
inline std::size_t letter_count(const CyclicWord& w, Letter x) noexcept {
  return static_cast<std::size_t>(std::count_if(
      w.letters().begin(), w.letters().end(),
      [x](Letter y) { return y == x || y == inverse(x); }));
}

}  // namespace f2
