#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "errors.hpp"
#include "minimality.hpp"
#include "word.hpp"

namespace f2 {

struct MinimizeResult {
  CyclicWord word;
  ReductionTrace trace;
};

/// Greedy Whitehead descent. While w is not minimal, apply the first
/// automorphism in `order` that strictly shortens it. With `order` covering all
/// one-letter representatives a non-minimal word always has such a move, so the
/// loop ends after at most |w| steps.
inline MinimizeResult minimize(const CyclicWord& w, std::span<const WhiteheadAuto> order) {
  MinimizeResult out{w, {}};
  while (!is_minimal(out.word)) {
    bool shortened = false;
    for (const auto& s : order) {
      CyclicWord image = apply_whitehead(s, out.word);
      if (image.size() < out.word.size()) {
        out.trace.steps.push_back({s, image});
        out.word = std::move(image);
        shortened = true;
        break;
      }
    }
    if (!shortened)
      throw std::logic_error("minimize: no one-letter automorphism shortens non-minimal word " +
                             to_string(out.word));
  }
  return out;
}

/// Greedy descent in one_letter_representatives() order.
inline MinimizeResult minimize(const CyclicWord& w) {
  return minimize(w, one_letter_representatives());
}

inline MinimizeResult minimize(const Word& w) { return minimize(cyclic_reduce(w)); }

/// The minimal-length words of one Aut(F2) orbit.
struct EquivalenceClass {
  std::size_t length = 0;
  std::vector<CyclicWord> members;  // sorted, distinct
  bool is_root_class = false;

  bool contains(const CyclicWord& w) const {
    return std::binary_search(members.begin(), members.end(), w);
  }
};

inline constexpr std::size_t kDefaultClassLimit = 1'000'000;

/// Breadth-first closure of minimize(w) under the 8 permutations and every
/// level application of the 4 one-letter representatives.
///
/// This move set reaches the whole minimal level. In F2 a Type II automorphism
/// (A, x) with x, x̄ ∉ A has A ⊆ {y, ȳ} for the other generator y, so it is
/// ({y},x), ({ȳ},x) or the inner automorphism ({y,ȳ},x). Inner automorphisms
/// fix conjugacy classes, and ({ȳ},x) acts on them like ({y},x̄), which is a
/// representative. Two minimal words of the same orbit are therefore joined by
/// a chain of permutations and level representatives.
inline EquivalenceClass minimal_class(const CyclicWord& w,
                                      std::size_t max_members = kDefaultClassLimit) {
  const CyclicWord start = minimize(w).word;
  static const std::vector<Permutation> perms = all_permutations();

  std::set<CyclicWord> seen{start};
  std::vector<CyclicWord> frontier{start};
  while (!frontier.empty()) {
    std::vector<CyclicWord> next;
    for (const auto& u : frontier) {
      auto visit = [&](CyclicWord v) {
        if (seen.insert(v).second) {
          if (seen.size() > max_members)
            throw ResourceLimitError("minimal_class: more than " +
                                     std::to_string(max_members) + " members");
          next.push_back(std::move(v));
        }
      };
      for (const auto& p : perms) visit(apply_permutation(p, u));
      for (const auto& s : one_letter_representatives()) {
        CyclicWord v = apply_whitehead(s, u);
        if (v.size() == u.size()) visit(std::move(v));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  EquivalenceClass out;
  out.length = start.size();
  out.members.assign(seen.begin(), seen.end());
  out.is_root_class = is_root(out.members.front());
  return out;
}

inline bool are_equivalent(const CyclicWord& u, const CyclicWord& v) {
  CyclicWord mu = minimize(u).word;
  CyclicWord mv = minimize(v).word;
  if (mu.size() != mv.size()) return false;
  if (mu == mv) return true;
  return minimal_class(mu).contains(mv);
}

inline bool are_equivalent(const Word& u, const Word& v) {
  return are_equivalent(cyclic_reduce(u), cyclic_reduce(v));
}

/// True iff is_root agrees on every member. False would contradict the
/// invariance of root words under level automorphisms, i.e. signal a bug.
inline bool verify_root_class(const EquivalenceClass& c) {
  if (c.members.empty()) return true;
  const bool first = is_root(c.members.front());
  return std::all_of(c.members.begin(), c.members.end(),
                     [first](const CyclicWord& m) { return is_root(m) == first; });
}

}  // namespace f2
