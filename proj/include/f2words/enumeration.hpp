#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "minimality.hpp"
#include "whitehead_search.hpp"
#include "word.hpp"

namespace f2 {

/// Longest length any enumeration command will accept.
inline constexpr std::size_t kMaxEnumerationLength = 20;

namespace detail {

/// A node of the canonical-word search tree: a freely reduced prefix that is a
/// prefix of some least rotation, with `period` the length of its longest
/// Lyndon prefix.
struct Subtree {
  std::vector<Letter> prefix;
  std::size_t period = 1;
};

/// Depth-first search over prefixes in ascending letter order (FKM necklace
/// generation restricted to freely reduced strings). A letter smaller than
/// prefix[t - period] cannot extend to a least rotation and is pruned. A full
/// string is a least rotation iff its period divides n.
template <class Visit>
void walk(std::vector<Letter>& buf, std::size_t t, std::size_t period, std::size_t n,
          Visit& visit) {
  if (t == n) {
    if (n % period == 0 && (n < 2 || buf[n - 1] != inverse(buf[0])))
      visit(CyclicWord::from_canonical_unchecked(buf));
    return;
  }
  for (Letter x : kLetters) {
    if (t > 0) {
      if (x < buf[t - period]) continue;
      if (x == inverse(buf[t - 1])) continue;
    }
    buf[t] = x;
    std::size_t next_period = (t > 0 && x == buf[t - period]) ? period : t + 1;
    walk(buf, t + 1, next_period, n, visit);
  }
}

/// The search-tree nodes at depth min(n, depth), in lexicographic order.
inline std::vector<Subtree> split(std::size_t n, std::size_t depth) {
  depth = std::min(n, depth);
  std::vector<Subtree> out;
  std::vector<Letter> buf(depth);
  auto rec = [&](auto& self, std::size_t t, std::size_t period) -> void {
    if (t == depth) {
      out.push_back({buf, period});
      return;
    }
    for (Letter x : kLetters) {
      if (t > 0 && (x < buf[t - period] || x == inverse(buf[t - 1]))) continue;
      buf[t] = x;
      std::size_t next_period = (t > 0 && x == buf[t - period]) ? period : t + 1;
      self(self, t + 1, next_period);
    }
  };
  rec(rec, 0, 1);
  return out;
}

template <class Visit>
void walk_subtree(const Subtree& node, std::size_t n, Visit& visit) {
  std::vector<Letter> buf(n);
  std::copy(node.prefix.begin(), node.prefix.end(), buf.begin());
  walk(buf, node.prefix.size(), node.period, n, visit);
}

inline void check_max_len(std::size_t max_len) {
  if (max_len < 1) throw DomainError("max_len must be at least 1");
  if (max_len > kMaxEnumerationLength)
    throw ResourceLimitError("max_len " + std::to_string(max_len) + " exceeds the limit of " +
                             std::to_string(kMaxEnumerationLength));
}

}  // namespace detail

/// Calls visit(w) for every canonical cyclic word of length n, in increasing
/// order. n = 0 yields the empty word once.
template <class Visit>
void for_each_cyclic_word(std::size_t n, Visit&& visit) {
  if (n == 0) {
    visit(CyclicWord{});
    return;
  }
  std::vector<Letter> buf(n);
  detail::walk(buf, 0, 1, n, visit);
}

inline std::vector<CyclicWord> enumerate_cyclic_words(std::size_t n) {
  std::vector<CyclicWord> out;
  for_each_cyclic_word(n, [&](CyclicWord w) { out.push_back(std::move(w)); });
  return out;
}

/// Runs the enumeration of length n on `threads` workers. Each worker folds
/// words into its own Acc; the returned accumulators are in lexicographic
/// order of the subtrees they cover, so concatenating them reproduces the
/// single-threaded stream regardless of thread count.
template <class Acc, class Fold>
std::vector<Acc> fold_cyclic_words(std::size_t n, std::size_t threads, Fold fold) {
  if (n == 0) {
    std::vector<Acc> out(1);
    fold(out[0], CyclicWord{});
    return out;
  }
  const auto nodes = detail::split(n, 5);
  std::vector<Acc> out(nodes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < nodes.size(); i = next++) {
      auto visit = [&](const CyclicWord& w) { fold(out[i], w); };
      detail::walk_subtree(nodes[i], n, visit);
    }
  };
  threads = std::max<std::size_t>(1, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  return out;
}

struct RootLevel {
  std::size_t length = 0;
  std::vector<CyclicWord> words;  // sorted
};

/// One census line per length.
struct CensusRecord {
  std::size_t length = 0;
  std::size_t total_cyclic_words = 0;
  std::size_t minimal_count = 0;
  std::size_t root_count = 0;
  std::size_t root_class_count = 0;
  std::size_t max_run_over_roots = 0;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

namespace detail {

struct LevelTally {
  std::size_t total = 0;
  std::size_t minimal = 0;
  std::size_t max_run = 0;
  std::vector<CyclicWord> roots;
};

inline LevelTally tally_level(std::size_t n, std::size_t threads) {
  auto parts = fold_cyclic_words<LevelTally>(n, threads, [](LevelTally& t, const CyclicWord& w) {
    ++t.total;
    if (w.empty()) {
      ++t.minimal;
      return;
    }
    const PairCounts c = profile(w);
    if (!is_minimal(c)) return;
    ++t.minimal;
    if (is_root(c)) {
      t.roots.push_back(w);
      t.max_run = std::max(t.max_run, longest_run(w));
    }
  });
  LevelTally all;
  for (auto& p : parts) {
    all.total += p.total;
    all.minimal += p.minimal;
    all.max_run = std::max(all.max_run, p.max_run);
    all.roots.insert(all.roots.end(), std::make_move_iterator(p.roots.begin()),
                     std::make_move_iterator(p.roots.end()));
  }
  return all;
}

/// Partitions a sorted list of root words into minimal_class orbits.
inline std::vector<EquivalenceClass> partition_into_classes(const std::vector<CyclicWord>& roots) {
  std::vector<EquivalenceClass> out;
  std::unordered_set<CyclicWord> assigned;
  for (const auto& w : roots) {
    if (assigned.contains(w)) continue;
    EquivalenceClass c = minimal_class(w);
    for (const auto& m : c.members) assigned.insert(m);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

/// Root words of every length 1..max_len, found by sieving all canonical cyclic
/// words with the root equality.
inline std::vector<RootLevel> enumerate_root_words(std::size_t max_len, std::size_t threads = 1) {
  detail::check_max_len(max_len);
  std::vector<RootLevel> out;
  for (std::size_t n = 1; n <= max_len; ++n)
    out.push_back({n, detail::tally_level(n, threads).roots});
  return out;
}

/// Root words of lengths 1..max_len grouped into their equivalence classes,
/// ordered by length and then by least member.
inline std::vector<EquivalenceClass> enumerate_root_classes(std::size_t max_len,
                                                            std::size_t threads = 1) {
  std::vector<EquivalenceClass> out;
  for (auto& level : enumerate_root_words(max_len, threads)) {
    auto classes = detail::partition_into_classes(level.words);
    out.insert(out.end(), std::make_move_iterator(classes.begin()),
               std::make_move_iterator(classes.end()));
  }
  return out;
}

inline CensusRecord census_level(std::size_t n, std::size_t threads = 1) {
  detail::LevelTally t = detail::tally_level(n, threads);
  CensusRecord r;
  r.length = n;
  r.total_cyclic_words = t.total;
  r.minimal_count = t.minimal;
  r.root_count = t.roots.size();
  r.root_class_count = detail::partition_into_classes(t.roots).size();
  r.max_run_over_roots = t.max_run;
  return r;
}

inline std::vector<CensusRecord> census(std::size_t max_len, std::size_t threads = 1) {
  detail::check_max_len(max_len);
  std::vector<CensusRecord> out;
  for (std::size_t n = 1; n <= max_len; ++n) out.push_back(census_level(n, threads));
  return out;
}

}  // namespace f2
