#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace f2 {

/// A letter of F2: a generator or its inverse.
///
/// The enumerator values fix the canonical letter order a < b < ā < b̄ used for
/// least-rotation canonical forms and lexicographic enumeration. Inversion is
/// `(x + 2) mod 4`.
enum class Letter : std::uint8_t { a = 0, b = 1, A = 2, B = 3 };

inline constexpr std::array<Letter, 4> kLetters = {Letter::a, Letter::b, Letter::A,
                                                  Letter::B};

constexpr Letter inverse(Letter x) noexcept {
  return static_cast<Letter>((static_cast<std::uint8_t>(x) + 2) & 3);
}

constexpr std::uint8_t index(Letter x) noexcept { return static_cast<std::uint8_t>(x); }

/// True when x and y are a generator and its inverse in some order, or equal.
constexpr bool same_generator(Letter x, Letter y) noexcept {
  return (index(x) & 1) == (index(y) & 1);
}

constexpr bool is_inverse_letter(Letter x) noexcept { return index(x) >= 2; }

/// ASCII encoding: a, b for generators, A, B for their inverses.
constexpr char to_char(Letter x) noexcept {
  constexpr char table[4] = {'a', 'b', 'A', 'B'};
  return table[index(x)];
}

constexpr std::optional<Letter> from_char(char c) noexcept {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    default: return std::nullopt;
  }
}

static_assert(inverse(inverse(Letter::a)) == Letter::a);
static_assert(inverse(Letter::b) == Letter::B);

}  // namespace f2
