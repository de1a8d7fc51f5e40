#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "automorphism.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "word.hpp"

namespace f2 {

/// |(ab)_w − (aB)_w|, the left side of both the minimality inequality and the
/// root equality.
inline std::size_t imbalance(const PairCounts& c) noexcept {
  return c.ab > c.aB ? c.ab - c.aB : c.aB - c.ab;
}

inline bool is_minimal(const PairCounts& c) noexcept {
  return imbalance(c) <= std::min(c.aa, c.bb);
}

inline bool is_root(const PairCounts& c) noexcept {
  return imbalance(c) == c.aa && c.aa == c.bb;
}

/// w is of minimal length in its Aut(F2) orbit iff
/// |(ab)_w − (aB)_w| <= min((aa)_w, (bb)_w). The empty word is minimal.
inline bool is_minimal(const CyclicWord& w) {
  if (w.empty()) return true;
  return is_minimal(profile(w));
}

/// Root words are exactly the words where the minimality inequality is tight
/// on both sides: |(ab)_w − (aB)_w| = (aa)_w = (bb)_w. The empty word is not a
/// root (every single letter is its child).
inline bool is_root(const CyclicWord& w) {
  if (w.empty()) return false;
  return is_root(profile(w));
}

/// Minimality by brute force: no one-letter representative shortens w.
/// Shares no counting code with is_minimal.
inline bool is_minimal_oracle(const CyclicWord& w) {
  for (const auto& s : one_letter_representatives())
    if (apply_whitehead(s, w).size() < w.size()) return false;
  return true;
}

/// Words obtained by lengthening one x-run by a single letter. The children of
/// the empty word are the four letters.
inline std::set<CyclicWord> children(const CyclicWord& w) {
  std::set<CyclicWord> out;
  if (w.empty()) {
    for (Letter x : kLetters) out.insert(canonical_rotation(std::vector<Letter>{x}));
    return out;
  }
  const auto s = w.letters();
  std::vector<Letter> grown;
  grown.reserve(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    grown.assign(s.begin(), s.end());
    grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
    out.insert(canonical_rotation(grown));
  }
  return out;
}

/// Words obtained by shortening one cyclic x-run of length >= 2 by a single
/// letter. A single letter has the empty word as its parent.
inline std::set<CyclicWord> parents(const CyclicWord& w) {
  std::set<CyclicWord> out;
  const auto s = w.letters();
  const std::size_t n = s.size();
  std::vector<Letter> shrunk;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] != s[(i + 1) % n]) continue;
    shrunk.assign(s.begin(), s.end());
    shrunk.erase(shrunk.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(canonical_rotation(shrunk));
  }
  return out;
}

/// Root by definition: minimal, and no parent is minimal. Uses only
/// is_minimal_oracle and parents.
inline bool is_root_oracle(const CyclicWord& w) {
  if (!is_minimal_oracle(w)) return false;
  for (const auto& p : parents(w))
    if (is_minimal_oracle(p)) return false;
  return true;
}

/// Concatenates rotations of w and v that begin with the same letter (the least
/// such letter). The product of two minimal words joined this way is minimal;
/// a non-minimal result throws std::logic_error. The empty word is the identity.
inline CyclicWord concat_minimal_check(const CyclicWord& w, const CyclicWord& v) {
  if (!is_minimal(w) || !is_minimal(v))
    throw DomainError("concat_minimal_check: both inputs must be minimal");
  if (w.empty()) return v;
  if (v.empty()) return w;

  auto first_of = [](const CyclicWord& u, Letter x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] == x) return i;
    return std::nullopt;
  };
  for (Letter x : kLetters) {
    auto i = first_of(w, x), j = first_of(v, x);
    if (!i || !j) continue;
    std::vector<Letter> raw;
    raw.reserve(w.size() + v.size());
    for (std::size_t k = 0; k < w.size(); ++k) raw.push_back(w.at_cyclic(*i + k));
    for (std::size_t k = 0; k < v.size(); ++k) raw.push_back(v.at_cyclic(*j + k));
    CyclicWord out = canonical_rotation(raw);
    if (!is_minimal(out))
      throw std::logic_error("concat_minimal_check: product " + to_string(out) +
                             " is not minimal");
    return out;
  }
  throw DomainError("concat_minimal_check: '" + to_string(w) + "' and '" + to_string(v) +
                    "' share no letter to start both representatives");
}

}  // namespace f2
