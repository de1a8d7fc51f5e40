#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "letter.hpp"
#include "word.hpp"

namespace f2 {

/// Type I automorphism: a permutation of the four letters that commutes with
/// inversion. It is fixed by the images of a and b.
class Permutation {
 public:
  Permutation() : Permutation(Letter::a, Letter::b) {}

  Permutation(Letter image_of_a, Letter image_of_b) {
    if (same_generator(image_of_a, image_of_b))
      throw DomainError(std::string("permutation: a->") + to_char(image_of_a) +
                        ", b->" + to_char(image_of_b) + " is not a bijection");
    image_[index(Letter::a)] = image_of_a;
    image_[index(Letter::b)] = image_of_b;
    image_[index(Letter::A)] = inverse(image_of_a);
    image_[index(Letter::B)] = inverse(image_of_b);
  }

  /// Full table form; rejects non-bijections and maps that do not commute
  /// with inversion.
  static Permutation from_table(const std::array<Letter, 4>& image) {
    for (Letter y : kLetters)
      if (image[index(inverse(y))] != inverse(image[index(y)]))
        throw DomainError("permutation: table does not commute with inversion");
    return Permutation(image[index(Letter::a)], image[index(Letter::b)]);
  }

  Letter operator()(Letter y) const noexcept { return image_[index(y)]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::array<Letter, 4> image_{};
};

/// Type II automorphism (A, x): y ↦ x̄^[ȳ ∈ A] · y · x^[y ∈ A].
class WhiteheadAuto {
 public:
  WhiteheadAuto(std::initializer_list<Letter> marked, Letter multiplier)
      : multiplier_(multiplier) {
    for (Letter y : marked) marked_mask_ |= std::uint8_t(1u << index(y));
    validate();
  }

  Letter multiplier() const noexcept { return multiplier_; }
  bool marks(Letter y) const noexcept { return (marked_mask_ >> index(y)) & 1u; }
  std::vector<Letter> marked() const {
    std::vector<Letter> out;
    for (Letter y : kLetters)
      if (marks(y)) out.push_back(y);
    return out;
  }
  bool is_one_letter() const noexcept { return std::popcount(marked_mask_) == 1; }

  /// The marked letter of a one-letter automorphism ({y}, x).
  Letter marked_letter() const {
    if (!is_one_letter()) throw DomainError("marked_letter: not a one-letter automorphism");
    return static_cast<Letter>(std::countr_zero(marked_mask_));
  }

  /// Appends the image of one letter to `out`.
  void substitute(Letter y, std::vector<Letter>& out) const {
    if (marks(inverse(y))) out.push_back(inverse(multiplier_));
    out.push_back(y);
    if (marks(y)) out.push_back(multiplier_);
  }

  friend bool operator==(const WhiteheadAuto&, const WhiteheadAuto&) = default;

 private:
  void validate() const {
    if (marks(multiplier_) || marks(inverse(multiplier_)))
      throw DomainError(std::string("whitehead automorphism: multiplier ") +
                        to_char(multiplier_) + " or its inverse is marked");
    if (marked_mask_ == 0)
      throw DomainError("whitehead automorphism: empty marked set");
  }

  Letter multiplier_;
  std::uint8_t marked_mask_ = 0;
};

using Automorphism = std::variant<Permutation, WhiteheadAuto>;

/// All 8 Type I automorphisms. The identity comes first; images of a run over
/// a, b, A, B and then images of b in the same order.
inline std::vector<Permutation> all_permutations() {
  std::vector<Permutation> out;
  for (Letter ia : kLetters)
    for (Letter ib : kLetters)
      if (!same_generator(ia, ib)) out.emplace_back(ia, ib);
  return out;
}

/// ({a},b), ({a},B), ({b},a), ({b},A). Modulo inner automorphisms these are all
/// the one-letter automorphisms of F2, since ({y},x) = ({y,ȳ},x)·({ȳ},x̄).
inline const std::array<WhiteheadAuto, 4>& one_letter_representatives() {
  static const std::array<WhiteheadAuto, 4> reps = {
      WhiteheadAuto({Letter::a}, Letter::b), WhiteheadAuto({Letter::a}, Letter::B),
      WhiteheadAuto({Letter::b}, Letter::a), WhiteheadAuto({Letter::b}, Letter::A)};
  return reps;
}

/// Trace tokens: `perm:a->b,b->A` and `wh:{a}*b` / `wh:{a,A}*b`.
inline std::string token(const Permutation& p) {
  return std::string("perm:a->") + to_char(p(Letter::a)) + ",b->" + to_char(p(Letter::b));
}

inline std::string token(const WhiteheadAuto& s) {
  std::string out = "wh:{";
  bool first = true;
  for (Letter y : s.marked()) {
    if (!first) out.push_back(',');
    out.push_back(to_char(y));
    first = false;
  }
  out += "}*";
  out.push_back(to_char(s.multiplier()));
  return out;
}

inline std::string token(const Automorphism& s) {
  return std::visit([](const auto& x) { return token(x); }, s);
}

inline Word apply_permutation(const Permutation& p, const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (Letter y : w.letters()) raw.push_back(p(y));
  return free_reduce(raw);
}

inline CyclicWord apply_permutation(const Permutation& p, const CyclicWord& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (Letter y : w.letters()) raw.push_back(p(y));
  return canonical_rotation(raw);
}

/// Letterwise substitution followed by free reduction.
inline Word apply_whitehead(const WhiteheadAuto& s, const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(2 * w.size());
  for (Letter y : w.letters()) s.substitute(y, raw);
  return free_reduce(raw);
}

/// Image of a conjugacy class: substitute, then freely and cyclically reduce.
inline CyclicWord apply_whitehead(const WhiteheadAuto& s, const CyclicWord& w) {
  std::vector<Letter> raw;
  raw.reserve(2 * w.size());
  for (Letter y : w.letters()) s.substitute(y, raw);
  return cyclic_reduce(raw);
}

inline CyclicWord apply_automorphism(const Automorphism& s, const CyclicWord& w) {
  if (auto* p = std::get_if<Permutation>(&s)) return apply_permutation(*p, w);
  return apply_whitehead(std::get<WhiteheadAuto>(s), w);
}

inline Word apply_automorphism(const Automorphism& s, const Word& w) {
  if (auto* p = std::get_if<Permutation>(&s)) return apply_permutation(*p, w);
  return apply_whitehead(std::get<WhiteheadAuto>(s), w);
}

/// s is level on w when it preserves cyclic length.
inline bool is_level(const Automorphism& s, const CyclicWord& w) {
  return apply_automorphism(s, w).size() == w.size();
}

namespace detail {

inline void require_one_letter(const WhiteheadAuto& s, const char* what) {
  if (!s.is_one_letter())
    throw DomainError(std::string(what) + ": requires a one-letter automorphism, got " +
                      token(s));
}

inline std::size_t count3(const CyclicWord& w, Letter p, Letter q, Letter r) {
  const std::array<Letter, 3> pat = {p, q, r};
  return cyclic_count_both(w.letters(), pat);
}

}  // namespace detail

/// Level criterion for ({y},x) read off the counts of w: cancellations
/// (yx̄)_w equal additions (yx)_w + (yy)_w.
inline bool is_level_by_counts(const WhiteheadAuto& s, const CyclicWord& w) {
  detail::require_one_letter(s, "is_level_by_counts");
  const Letter y = s.marked_letter(), x = s.multiplier();
  return pair_count(w, y, inverse(x)) == pair_count(w, y, x) + pair_count(w, y, y);
}

/// Counts (yy), (yx), (yx̄), (xx) of a word relative to a one-letter
/// automorphism ({y}, x).
struct CountUpdate {
  std::size_t yy = 0;
  std::size_t yx = 0;
  std::size_t yX = 0;
  std::size_t xx = 0;

  friend bool operator==(const CountUpdate&, const CountUpdate&) = default;
};

/// The counts of v = S(w) for S = ({y},x), computed from two- and three-letter
/// counts of w alone:
///   (yy)_v = (yx̄y)_w
///   (yx)_v = (yx)_w + (yy)_w
///   (yx̄)_v = (yx̄)_w − (yx̄y)_w
///   (xx)_v = (yx)_w − (yxȳ)_w + (xx)_w − (yx̄x̄)_w
inline CountUpdate predict_profile(const WhiteheadAuto& s, const CyclicWord& w) {
  detail::require_one_letter(s, "predict_profile");
  const Letter y = s.marked_letter(), x = s.multiplier();
  const Letter X = inverse(x), Y = inverse(y);
  const std::size_t yXy = detail::count3(w, y, X, y);
  const std::size_t yxY = detail::count3(w, y, x, Y);
  const std::size_t yXX = detail::count3(w, y, X, X);
  const std::size_t yx = pair_count(w, y, x);
  const std::size_t yX = pair_count(w, y, X);
  CountUpdate out;
  out.yy = yXy;
  out.yx = yx + pair_count(w, y, y);
  out.yX = yX - yXy;
  out.xx = yx - yxY + pair_count(w, x, x) - yXX;
  return out;
}

/// The same four counts measured directly on a word.
inline CountUpdate measure_update_counts(const WhiteheadAuto& s, const CyclicWord& v) {
  detail::require_one_letter(s, "measure_update_counts");
  const Letter y = s.marked_letter(), x = s.multiplier();
  return {pair_count(v, y, y), pair_count(v, y, x), pair_count(v, y, inverse(x)),
          pair_count(v, x, x)};
}

/// One step of a Whitehead descent: the automorphism applied and its image.
struct TraceStep {
  Automorphism automorphism;
  CyclicWord result;
};

/// A Whitehead descent chain S1, ..., Sm. Lengths strictly decrease.
struct ReductionTrace {
  std::vector<TraceStep> steps;

  /// One line per step: `<token> -> <word> (len N)`.
  std::string format() const {
    std::string out;
    for (const auto& step : steps) {
      out += token(step.automorphism) + " -> " + to_string(step.result) + " (len " +
             std::to_string(step.result.size()) + ")\n";
    }
    return out;
  }
};

}  // namespace f2
