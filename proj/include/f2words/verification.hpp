#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "counting.hpp"
#include "enumeration.hpp"
#include "minimality.hpp"
#include "whitehead_search.hpp"
#include "word.hpp"

namespace f2 {

/// Outcome of one executable theorem check.
struct CheckResult {
  CheckResult(std::string name_, std::size_t bound_) : name(std::move(name_)), bound(bound_) {}

  std::string name;
  std::size_t bound = 0;   // longest word length covered exhaustively
  std::size_t corpus = 0;  // number of words examined
  bool passed = true;
  std::string counterexample;  // first failing word, if any

  void fail(const CyclicWord& w) {
    if (passed) counterexample = to_string(w);
    passed = false;
  }
};

struct VerificationReport {
  std::size_t max_len = 0;
  bool complete = true;
  std::vector<CheckResult> checks;

  bool passed() const {
    return complete && std::all_of(checks.begin(), checks.end(),
                                   [](const CheckResult& c) { return c.passed; });
  }
};

/// Default exhaustive bounds per family of checks.
struct VerificationBounds {
  std::size_t oracle = 12;       // oracle equivalence, root classes
  std::size_t counts = 10;       // count identities, level criterion, growth
  std::size_t powers = 8;        // w^2, w^3; parent/child duality
  std::size_t alternating = 14;  // alternating triad
  std::size_t random_samples = 10'000;
  std::size_t random_max_len = 40;
  std::uint64_t seed = 20090829;
  std::size_t enumeration_limit = kMaxEnumerationLength;
};

/// Uniformly random freely reduced word of length in [1, max_len], reduced to
/// its conjugacy class. Uses only `rng()` so the stream is the same on every
/// platform.
inline CyclicWord random_cyclic_word(std::mt19937_64& rng, std::size_t max_len) {
  const std::size_t len = 1 + rng() % max_len;
  std::vector<Letter> raw;
  raw.reserve(len);
  raw.push_back(kLetters[rng() % 4]);
  while (raw.size() < len) {
    Letter x = kLetters[rng() % 4];
    if (x != inverse(raw.back())) raw.push_back(x);
  }
  return cyclic_reduce(raw);
}

template <class F>
void for_each_cyclic_word_up_to(std::size_t max_len, F&& f) {
  for (std::size_t n = 1; n <= max_len; ++n) for_each_cyclic_word(n, f);
}

namespace checks {

inline CheckResult pair_balance(std::size_t bound, const std::vector<CyclicWord>& extra) {
  CheckResult r{"pair-balance", bound};
  auto check = [&](const CyclicWord& w) {
    ++r.corpus;
    for (Letter x : kLetters)
      for (Letter y : kLetters)
        if (!same_generator(x, y) && pair_count(w, x, y) != pair_count(w, y, x)) r.fail(w);
  };
  for_each_cyclic_word_up_to(bound, check);
  for (const auto& w : extra) check(w);
  return r;
}

inline CheckResult pair_counts_sum(std::size_t bound, const std::vector<CyclicWord>& extra) {
  CheckResult r{"pair-counts-sum", bound};
  auto check = [&](const CyclicWord& w) {
    ++r.corpus;
    PairCounts c = profile(w);
    if (c.aa + c.bb + 2 * c.ab + 2 * c.aB != w.size()) r.fail(w);
  };
  for_each_cyclic_word_up_to(bound, check);
  for (const auto& w : extra) check(w);
  return r;
}

inline CheckResult minimality_oracle(std::size_t bound) {
  CheckResult r{"minimality-oracle-equivalence", bound};
  for_each_cyclic_word_up_to(bound, [&](const CyclicWord& w) {
    ++r.corpus;
    if (is_minimal(w) != is_minimal_oracle(w)) r.fail(w);
  });
  return r;
}

inline CheckResult root_oracle(std::size_t bound) {
  CheckResult r{"root-oracle-equivalence", bound};
  for_each_cyclic_word_up_to(bound, [&](const CyclicWord& w) {
    ++r.corpus;
    if (is_root(w) != is_root_oracle(w)) r.fail(w);
  });
  return r;
}

/// Predicted counts of S(w) against measured ones, plus the difference
/// identity (yy)_v − (xx)_v = (yx̄)_w − (yx)_w − (xx)_w.
inline CheckResult count_update(std::size_t bound, const std::vector<CyclicWord>& extra) {
  CheckResult r{"cyclic-word-count-update", bound};
  auto check = [&](const CyclicWord& w) {
    ++r.corpus;
    for (const auto& s : one_letter_representatives()) {
      const CyclicWord v = apply_whitehead(s, w);
      const CountUpdate measured = measure_update_counts(s, v);
      if (predict_profile(s, w) != measured) r.fail(w);
      const Letter y = s.marked_letter(), x = s.multiplier();
      const auto lhs = static_cast<long long>(measured.yy) - static_cast<long long>(measured.xx);
      const auto rhs = static_cast<long long>(pair_count(w, y, inverse(x))) -
                       static_cast<long long>(pair_count(w, y, x)) -
                       static_cast<long long>(pair_count(w, x, x));
      if (lhs != rhs) r.fail(w);
    }
  };
  for_each_cyclic_word_up_to(bound, check);
  for (const auto& w : extra) check(w);
  return r;
}

inline CheckResult level_criterion(std::size_t bound) {
  CheckResult r{"level-criterion", bound};
  for_each_cyclic_word_up_to(bound, [&](const CyclicWord& w) {
    ++r.corpus;
    for (const auto& s : one_letter_representatives())
      if (is_level(s, w) != is_level_by_counts(s, w)) r.fail(w);
  });
  return r;
}

inline CheckResult children_minimal(std::size_t bound) {
  CheckResult r{"children-of-minimal-are-minimal", bound};
  for_each_cyclic_word_up_to(bound, [&](const CyclicWord& w) {
    if (!is_minimal(w)) return;
    ++r.corpus;
    for (const auto& c : children(w))
      if (!is_minimal(c)) r.fail(c);
  });
  return r;
}

inline CheckResult parent_child_duality(std::size_t bound) {
  CheckResult r{"parent-child-duality", bound};
  for_each_cyclic_word_up_to(bound, [&](const CyclicWord& w) {
    ++r.corpus;
    for (const auto& c : children(w))
      if (!parents(c).contains(w)) r.fail(w);
    for (const auto& p : parents(w))
      if (!children(p).contains(w)) r.fail(w);
  });
  return r;
}

inline CheckResult root_powers(std::size_t bound) {
  CheckResult r{"root-powers", bound};
  for_each_cyclic_word_up_to(bound, [&](const CyclicWord& w) {
    ++r.corpus;
    const bool root = is_root(w);
    if (is_root(power(w, 2)) != root || is_root(power(w, 3)) != root) r.fail(w);
  });
  return r;
}

/// Single letters are skipped: λ = 1 there, but the letter is its own cyclic
/// neighbour, so (xx)_w = 1 and the word is minimal without being a root.
inline CheckResult alternating_triad(std::size_t bound) {
  CheckResult r{"alternating-triad", bound};
  for_each_cyclic_word_up_to(bound, [&](const CyclicWord& w) {
    if (w.size() < 2 || !is_alternating(w)) return;
    ++r.corpus;
    const bool minimal = is_minimal(w);
    const bool root = is_root(w);
    const auto& reps = one_letter_representatives();
    const bool all_level = std::all_of(reps.begin(), reps.end(),
                                       [&](const WhiteheadAuto& s) { return is_level(s, w); });
    if (minimal != root || root != all_level) r.fail(w);
  });
  return r;
}

/// Every length not divisible by 4 has no roots; every multiple of 4 has one.
inline CheckResult divisibility(const std::vector<RootLevel>& levels) {
  CheckResult r{"divisibility-by-4", levels.empty() ? 0 : levels.back().length};
  for (const auto& level : levels) {
    r.corpus += level.words.size();
    if (level.length % 4 != 0 && !level.words.empty()) r.fail(level.words.front());
    if (level.length % 4 == 0 && level.words.empty()) {
      r.passed = false;
      if (r.counterexample.empty())
        r.counterexample = "no root of length " + std::to_string(level.length);
    }
  }
  return r;
}

inline CheckResult run_bound(const std::vector<RootLevel>& levels) {
  CheckResult r{"run-bound", levels.empty() ? 0 : levels.back().length};
  for (const auto& level : levels)
    for (const auto& w : level.words) {
      ++r.corpus;
      if (longest_run(w) > w.size() / 4 + 1) r.fail(w);
    }
  return r;
}

inline CheckResult root_letter_balance(const std::vector<RootLevel>& levels) {
  CheckResult r{"root-letter-balance", levels.empty() ? 0 : levels.back().length};
  for (const auto& level : levels)
    for (const auto& w : level.words) {
      ++r.corpus;
      if (letter_count(w, Letter::a) != letter_count(w, Letter::b)) r.fail(w);
    }
  return r;
}

/// a^(n+1) (ba)^(n-1) b^(n+1): a root of length 4n with λ = n + 1.
inline CyclicWord extremal_root(std::size_t n) {
  std::vector<Letter> raw(n + 1, Letter::a);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    raw.push_back(Letter::b);
    raw.push_back(Letter::a);
  }
  raw.insert(raw.end(), n + 1, Letter::b);
  return cyclic_reduce(raw);
}

inline CheckResult extremal_family(std::size_t max_len) {
  CheckResult r{"extremal-family", max_len};
  for (std::size_t n = 1; 4 * n <= max_len; ++n) {
    ++r.corpus;
    CyclicWord w = extremal_root(n);
    if (w.size() != 4 * n || !is_root(w) || longest_run(w) != n + 1) r.fail(w);
  }
  return r;
}

/// Root classes are uniformly root, and level one-letter images of roots are
/// roots.
inline std::array<CheckResult, 2> root_classes(const std::vector<RootLevel>& levels,
                                               std::size_t bound) {
  CheckResult uniform{"root-class-uniformity", bound};
  CheckResult level{"level-moves-preserve-roots", bound};
  for (const auto& lv : levels) {
    if (lv.length > bound) break;
    for (const auto& c : detail::partition_into_classes(lv.words)) {
      ++uniform.corpus;
      if (!verify_root_class(c) || !c.is_root_class) uniform.fail(c.members.front());
    }
    for (const auto& w : lv.words) {
      ++level.corpus;
      for (const auto& s : one_letter_representatives()) {
        CyclicWord v = apply_whitehead(s, w);
        if (v.size() == w.size() && !is_root(v)) level.fail(w);
      }
    }
  }
  return {uniform, level};
}

/// Every ordering of the four representatives drives greedy descent to the
/// same minimal length.
inline CheckResult greedy_confluence(std::size_t bound) {
  CheckResult r{"greedy-confluence", bound};
  std::array<WhiteheadAuto, 4> order = one_letter_representatives();
  std::array<std::size_t, 4> perm = {0, 1, 2, 3};
  std::vector<std::array<WhiteheadAuto, 4>> orders;
  do {
    orders.push_back({order[perm[0]], order[perm[1]], order[perm[2]], order[perm[3]]});
  } while (std::next_permutation(perm.begin(), perm.end()));
  for_each_cyclic_word_up_to(bound, [&](const CyclicWord& w) {
    if (is_minimal(w)) return;
    ++r.corpus;
    const std::size_t len = minimize(w).word.size();
    for (const auto& o : orders)
      if (minimize(w, o).word.size() != len) r.fail(w);
  });
  return r;
}

}  // namespace checks

/// Runs every theorem check. Exhaustive families use min(max_len, their default
/// bound); census-based checks use max_len itself. A max_len above
/// `b.enumeration_limit` is clamped to it and the report is marked incomplete.
inline VerificationReport run_verification(std::size_t max_len, std::size_t threads = 1,
                                           const VerificationBounds& b = {}) {
  VerificationReport report;
  report.max_len = max_len;
  if (max_len > b.enumeration_limit) {
    report.complete = false;
    max_len = b.enumeration_limit;
  }
  if (max_len == 0) throw DomainError("run_verification: max_len must be at least 1");

  std::mt19937_64 rng(b.seed);
  std::vector<CyclicWord> random_words;
  random_words.reserve(b.random_samples);
  while (random_words.size() < b.random_samples) {
    CyclicWord w = random_cyclic_word(rng, b.random_max_len);
    if (!w.empty()) random_words.push_back(std::move(w));
  }

  const auto cap = [max_len](std::size_t d) { return std::min(max_len, d); };
  const auto levels = enumerate_root_words(max_len, threads);

  auto& out = report.checks;
  out.push_back(checks::pair_balance(cap(b.counts), random_words));
  out.push_back(checks::pair_counts_sum(cap(b.counts), random_words));
  out.push_back(checks::minimality_oracle(cap(b.oracle)));
  out.push_back(checks::root_oracle(cap(b.oracle)));
  out.push_back(checks::count_update(cap(b.counts), random_words));
  out.push_back(checks::level_criterion(cap(b.counts)));
  out.push_back(checks::children_minimal(cap(b.counts)));
  out.push_back(checks::parent_child_duality(cap(b.powers)));
  out.push_back(checks::root_powers(cap(b.powers)));
  out.push_back(checks::greedy_confluence(cap(b.counts)));
  out.push_back(checks::alternating_triad(cap(b.alternating)));
  out.push_back(checks::divisibility(levels));
  out.push_back(checks::run_bound(levels));
  out.push_back(checks::root_letter_balance(levels));
  out.push_back(checks::extremal_family(max_len));
  for (auto& c : checks::root_classes(levels, cap(b.oracle))) out.push_back(std::move(c));
  return report;
}

}  // namespace f2
