#include <gtest/gtest.h>

#include <random>
#include <string>

#include <f2words/enumeration.hpp>
#include <f2words/whitehead_search.hpp>

#include "oracles.hpp"

using namespace f2;

namespace {
CyclicWord cw(const std::string& s) { return parse_cyclic(s); }
}  // namespace

TEST(Minimize, OneStep) {
  const auto r = minimize(parse_word("bA"));
  EXPECT_EQ(to_string(r.word), "A");
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.format(), "wh:{a}*b -> A (len 1)\n");
}

TEST(Minimize, FixedPoint) {
  const auto r = minimize(cw("abAB"));
  EXPECT_EQ(r.word, cw("abAB"));
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST(Minimize, ConjugateOfCommutatorLikeWord) {
  const auto r = minimize(parse_word("ABaBabba"));
  EXPECT_EQ(r.word.size(), 4u);
  EXPECT_TRUE(is_minimal_oracle(r.word));
  EXPECT_TRUE(minimal_class(cw("abaB")).contains(r.word));
}

TEST(Minimize, TraceStrictlyDescendsToMinimal) {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const CyclicWord w = cw(oracle::random_reduced(gen, 1 + gen() % 30));
    const auto r = minimize(w);
    EXPECT_TRUE(is_minimal_oracle(r.word));
    EXPECT_LE(r.trace.steps.size(), w.size());
    std::size_t prev = w.size();
    CyclicWord cur = w;
    for (const auto& step : r.trace.steps) {
      EXPECT_LT(step.result.size(), prev);
      EXPECT_EQ(apply_automorphism(step.automorphism, cur), step.result);
      prev = step.result.size();
      cur = step.result;
    }
    EXPECT_EQ(cur, r.word);
  }
}

TEST(MinimalClass, SingleLetters) {
  const auto c = minimal_class(cw("A"));
  EXPECT_EQ(c.length, 1u);
  EXPECT_EQ(c.members, (std::vector<CyclicWord>{cw("a"), cw("b"), cw("A"), cw("B")}));
  EXPECT_FALSE(c.is_root_class);
  EXPECT_TRUE(verify_root_class(c));
}

TEST(MinimalClass, LengthFourRootClasses) {
  const auto commutator = minimal_class(cw("abAB"));
  EXPECT_EQ(commutator.members, (std::vector<CyclicWord>{cw("abAB"), cw("aBAb")}));
  EXPECT_TRUE(commutator.is_root_class);
  EXPECT_TRUE(verify_root_class(commutator));

  const auto c = minimal_class(cw("aabb"));
  EXPECT_EQ(c.members.size(), 8u);
  EXPECT_TRUE(c.contains(cw("abaB")));
  EXPECT_TRUE(c.is_root_class);
  for (const auto& m : c.members) EXPECT_TRUE(is_root(m));
}

TEST(MinimalClass, ImagesLandInSameClass) {
  std::mt19937_64 gen(47);
  const auto perms = all_permutations();
  const auto base = minimal_class(cw("aabb"));
  for (int trial = 0; trial < 50; ++trial) {
    Word w = parse_word("aabb");
    for (int k = 0; k < 6; ++k) {
      if (gen() % 3 == 0)
        w = apply_permutation(perms[gen() % 8], w);
      else
        w = apply_whitehead(one_letter_representatives()[gen() % 4], w);
    }
    const Word u = parse_word(oracle::random_reduced(gen, gen() % 4));
    const auto c = minimal_class(cyclic_reduce(u * w * inverse(u)));
    EXPECT_EQ(c.members, base.members);
  }
}

TEST(MinimalClass, ClosedUnderMoves) {
  for (const char* s : {"aabbAAbb", "aaabbb", "abAB", "aabAbb"}) {
    const auto c = minimal_class(cw(s));
    for (const auto& m : c.members) {
      for (const auto& p : all_permutations()) EXPECT_TRUE(c.contains(apply_permutation(p, m)));
      for (const auto& r : one_letter_representatives()) {
        CyclicWord v = apply_whitehead(r, m);
        if (v.size() == m.size()) {
          EXPECT_TRUE(c.contains(v));
        }
        EXPECT_GE(v.size(), m.size());
      }
    }
  }
}

TEST(MinimalClass, MemberCeiling) {
  EXPECT_THROW(minimal_class(cw("aabb"), 3), ResourceLimitError);
}

TEST(AreEquivalent, Examples) {
  EXPECT_TRUE(are_equivalent(parse_word("bA"), parse_word("a")));
  EXPECT_FALSE(are_equivalent(parse_word("aabb"), parse_word("abAB")));
  EXPECT_TRUE(are_equivalent(parse_word("aabb"), parse_word("abaB")));
  EXPECT_FALSE(are_equivalent(parse_word("a"), parse_word("aa")));
}

TEST(AreEquivalent, Conjugates) {
  std::mt19937_64 gen(53);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = parse_word(oracle::random_reduced(gen, 1 + gen() % 12));
    const Word u = parse_word(oracle::random_reduced(gen, gen() % 6));
    EXPECT_TRUE(are_equivalent(w, u * w * inverse(u)));
  }
}

TEST(GreedyConfluence, AllOrdersReachSameLength) {
  std::array<WhiteheadAuto, 4> order = one_letter_representatives();
  for (std::size_t n = 1; n <= 9; ++n)
    for_each_cyclic_word(n, [&](const CyclicWord& w) {
      if (is_minimal(w)) return;
      const std::size_t len = minimize(w).word.size();
      std::array<std::size_t, 4> idx = {0, 1, 2, 3};
      do {
        const std::array<WhiteheadAuto, 4> o = {order[idx[0]], order[idx[1]], order[idx[2]],
                                                order[idx[3]]};
        EXPECT_EQ(minimize(w, o).word.size(), len) << to_string(w);
      } while (std::next_permutation(idx.begin(), idx.end()));
    });
}
