#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "letter.hpp"

namespace f2 {

/// A freely reduced element of F2. The empty word is the identity.
class Word {
 public:
  Word() = default;

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  friend Word free_reduce(std::span<const Letter> raw);

  std::vector<Letter> letters_;
};

/// Cancels adjacent inverse pairs with a stack. The result does not depend on
/// the order in which cancellations are performed.
inline Word free_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    if (!out.empty() && out.back() == inverse(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(std::move(out));
}

inline bool is_freely_reduced(std::span<const Letter> s) noexcept {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i + 1] == inverse(s[i])) return false;
  return true;
}

inline bool is_cyclically_reduced(std::span<const Letter> s) noexcept {
  if (!is_freely_reduced(s)) return false;
  return s.size() < 2 || s.back() != inverse(s.front());
}

/// Parses a word over {a, b, A, B} (uppercase is the inverse) and freely
/// reduces it.
inline Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto x = from_char(text[i]);
    if (!x) throw ParseError(i, text[i]);
    raw.push_back(*x);
  }
  return free_reduce(raw);
}

inline std::string to_string(std::span<const Letter> s) {
  std::string out;
  out.reserve(s.size());
  for (Letter x : s) out.push_back(to_char(x));
  return out;
}

inline std::string to_string(const Word& w) { return to_string(w.letters()); }

inline Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return free_reduce(raw);
}

inline Word inverse(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    raw.push_back(inverse(*it));
  return free_reduce(raw);
}

namespace detail {

/// Start index of the lexicographically least rotation (two-pointer scan, O(n)).
inline std::size_t least_rotation(std::span<const Letter> s) noexcept {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter x = s[(i + k) % n];
    Letter y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

}  // namespace detail

/// A conjugacy (~_I) class of F2, stored as its cyclically reduced
/// representative in least rotation under a < b < ā < b̄. Two CyclicWords
/// compare equal exactly when they represent the same class.
class CyclicWord {
 public:
  CyclicWord() = default;

  /// Caller guarantees `letters` is cyclically reduced and already the least
  /// rotation. Used by the enumerator, which constructs canonical words directly.
  static CyclicWord from_canonical_unchecked(std::vector<Letter> letters) {
    return CyclicWord(std::move(letters));
  }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  /// Cyclic indexing: position i modulo the length.
  Letter at_cyclic(std::size_t i) const { return letters_[i % letters_.size()]; }

  /// The canonical representative as a linear word.
  Word as_word() const { return free_reduce(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

/// Least rotation of a cyclically reduced sequence.
inline CyclicWord canonical_rotation(std::span<const Letter> letters) {
  if (!is_cyclically_reduced(letters))
    throw DomainError("canonical_rotation: input '" + to_string(letters) +
                      "' is not cyclically reduced");
  std::size_t start = detail::least_rotation(letters);
  std::vector<Letter> out;
  out.reserve(letters.size());
  out.insert(out.end(), letters.begin() + start, letters.end());
  out.insert(out.end(), letters.begin(), letters.begin() + start);
  return CyclicWord::from_canonical_unchecked(std::move(out));
}

/// Strips inverse pairs from the two ends of a freely reduced word, then
/// canonicalizes. Every conjugate of w maps to the same result.
inline CyclicWord cyclic_reduce(const Word& w) {
  auto s = w.letters();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[hi - 1] == inverse(s[lo])) {
    ++lo;
    --hi;
  }
  return canonical_rotation(s.subspan(lo, hi - lo));
}

/// Freely and cyclically reduces an arbitrary letter sequence.
inline CyclicWord cyclic_reduce(std::span<const Letter> raw) {
  return cyclic_reduce(free_reduce(raw));
}

inline std::string to_string(const CyclicWord& w) { return to_string(w.letters()); }

/// Convenience: parse text and reduce it to its conjugacy class.
inline CyclicWord parse_cyclic(std::string_view text) {
  return cyclic_reduce(parse_word(text));
}

/// w^n as a cyclic word. n = 0 gives the empty word.
inline CyclicWord power(const CyclicWord& w, std::size_t n) {
  std::vector<Letter> raw;
  raw.reserve(w.size() * n);
  for (std::size_t k = 0; k < n; ++k)
    raw.insert(raw.end(), w.letters().begin(), w.letters().end());
  return canonical_rotation(raw);
}

}  // namespace f2

template <>
struct std::hash<f2::CyclicWord> {
  std::size_t operator()(const f2::CyclicWord& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (f2::Letter x : w.letters()) {
      h ^= f2::index(x) + 1;
      h *= 1099511628211ull;
    }
    return h ^ w.size();
  }
};
