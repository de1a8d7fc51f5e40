#pragma once

// Brute-force reference implementations for the tests. These work on plain
// strings over a, b, A, B and share no code with the library.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline char inv(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

inline std::string invert(const std::string& s) {
  std::string out(s.rbegin(), s.rend());
  for (char& c : out) c = inv(c);
  return out;
}

/// Deletes a randomly chosen adjacent inverse pair until none remains.
inline std::string free_reduce(std::string s, std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i + 1] == inv(s[i])) spots.push_back(i);
    if (spots.empty()) return s;
    s.erase(spots[rng() % spots.size()], 2);
  }
}

inline bool freely_reduced(const std::string& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i + 1] == inv(s[i])) return false;
  return true;
}

inline bool cyclically_reduced(const std::string& s) {
  return freely_reduced(s) && (s.size() < 2 || s.back() != inv(s.front()));
}

/// Letter rank in the canonical order a < b < A < B.
inline int rank(char c) {
  switch (c) {
    case 'a': return 0;
    case 'b': return 1;
    case 'A': return 2;
    default: return 3;
  }
}

inline bool less(const std::string& x, const std::string& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](char p, char q) { return rank(p) < rank(q); });
}

/// Least rotation by generating all rotations.
inline std::string least_rotation(const std::string& s) {
  std::string best = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::string r = s.substr(i) + s.substr(0, i);
    if (less(r, best)) best = r;
  }
  return best;
}

/// Free reduction, then strip inverse pairs at the ends, then least rotation.
inline std::string cyclic_reduce(const std::string& s) {
  std::mt19937 rng(7);
  std::string w = free_reduce(s, rng);
  while (w.size() >= 2 && w.back() == inv(w.front())) w = w.substr(1, w.size() - 2);
  return least_rotation(w);
}

/// {v}_w by scanning every start position of w over w repeated enough times.
inline std::size_t directed_count(const std::string& w, const std::string& v) {
  if (w.empty()) return 0;
  std::string ext = w;
  while (ext.size() < w.size() + v.size()) ext += w;
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (ext.compare(i, v.size(), v) == 0) ++count;
  return count;
}

/// (v)_w.
inline std::size_t count(const std::string& w, const std::string& v) {
  return directed_count(w, v) + directed_count(w, invert(v));
}

/// λ(w): scans w doubled, runs capped at |w|.
inline std::size_t longest_run(const std::string& w) {
  if (w.empty()) return 0;
  std::string d = w + w;
  std::size_t best = 1, run = 1;
  for (std::size_t i = 1; i < d.size(); ++i) {
    run = d[i] == d[i - 1] ? run + 1 : 1;
    best = std::max(best, std::min(run, w.size()));
  }
  return best;
}

/// Every canonical cyclically reduced string of length n, by filtering all
/// 4^n strings.
inline std::vector<std::string> all_cyclic_words(std::size_t n) {
  static const char letters[4] = {'a', 'b', 'A', 'B'};
  std::vector<std::string> out;
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    std::string s(n, 'a');
    std::size_t c = code;
    for (std::size_t k = 0; k < n; ++k, c /= 4) s[n - 1 - k] = letters[c % 4];
    if (cyclically_reduced(s) && least_rotation(s) == s) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), less);
  return out;
}

/// Image of a word under the substitution ({y}, x): y -> yx, ȳ -> x̄ȳ.
inline std::string one_letter_image(const std::string& w, char y, char x) {
  std::string out;
  for (char c : w) {
    if (c == y) {
      out += c;
      out += x;
    } else if (c == inv(y)) {
      out += inv(x);
      out += c;
    } else {
      out += c;
    }
  }
  return out;
}

inline std::string random_reduced(std::mt19937_64& rng, std::size_t len) {
  static const char letters[4] = {'a', 'b', 'A', 'B'};
  std::string s;
  while (s.size() < len) {
    char c = letters[rng() % 4];
    if (s.empty() || c != inv(s.back())) s += c;
  }
  return s;
}

}  // namespace oracle
