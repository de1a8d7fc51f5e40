#include <gtest/gtest.h>

#include <string>

#include <f2words/enumeration.hpp>
#include <f2words/json_io.hpp>

#include "cli_runner.hpp"

TEST(Cli, Reduce) {
  EXPECT_EQ(run_cli("reduce ABaBabba").out, "abaB\n");
  EXPECT_EQ(run_cli("reduce --linear aAbaB").out, "baB\n");
  EXPECT_EQ(run_cli("reduce Bab").out, "a\n");
  EXPECT_EQ(run_cli("reduce ''").out, "\n");
  EXPECT_EQ(run_cli("reduce --json abA").out, "{\"word\":\"b\",\"length\":1}\n");
}

TEST(Cli, Minimize) {
  const auto r = run_cli("minimize bA");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "A\nwh:{a}*b -> A (len 1)\n");
  EXPECT_EQ(run_cli("--json minimize bA").out,
            "{\"word\":\"A\",\"length\":1,\"trace\":[{\"automorphism\":\"wh:{a}*b\","
            "\"word\":\"A\",\"length\":1}]}\n");
}

TEST(Cli, IsMinimal) {
  auto r = run_cli("is-minimal abb");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "false\n|(ab)-(aB)| = 1 > min((aa), (bb)) = min(0, 1)\n");
  r = run_cli("is-minimal aabb");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "true\n|(ab)-(aB)| = 1 <= min((aa), (bb)) = min(1, 1)\n");
}

TEST(Cli, IsRoot) {
  auto r = run_cli("is-root aabb");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "true\n|(ab)-(aB)| = 1, (aa) = 1, (bb) = 1\n");
  r = run_cli("is-root a");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.substr(0, 6), "false\n");
  r = run_cli("is-root --json abAB");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "{\"word\":\"abAB\",\"root\":true,\"imbalance\":0,"
            "\"counts\":{\"aa\":0,\"bb\":0,\"ab\":1,\"aB\":1}}\n");
}

TEST(Cli, Equivalent) {
  auto r = run_cli("equivalent aabb abAB");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "false\n");
  r = run_cli("equivalent bA a");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "true\n");
}

TEST(Cli, Class) {
  EXPECT_EQ(run_cli("class abAB").out,
            "{\"length\":4,\"is_root_class\":true,\"members\":[\"abAB\",\"aBAb\"]}\n");
}

TEST(Cli, RootsLengthFourBlock) {
  const auto r = run_cli("roots --max-len 8");
  EXPECT_EQ(r.status, 0);
  std::string expected;
  const auto levels = f2::enumerate_root_words(4);
  for (const auto& w : levels[3].words)
    expected += f2::root_line(w).dump() + "\n";
  EXPECT_EQ(expected,
            "{\"len\":4,\"word\":\"aabb\"}\n{\"len\":4,\"word\":\"aaBB\"}\n"
            "{\"len\":4,\"word\":\"abaB\"}\n{\"len\":4,\"word\":\"abAb\"}\n"
            "{\"len\":4,\"word\":\"abAB\"}\n{\"len\":4,\"word\":\"aBAb\"}\n"
            "{\"len\":4,\"word\":\"aBAB\"}\n{\"len\":4,\"word\":\"bbAA\"}\n"
            "{\"len\":4,\"word\":\"bABA\"}\n{\"len\":4,\"word\":\"AABB\"}\n");
  EXPECT_EQ(r.out.substr(0, expected.size()), expected);
  EXPECT_EQ(run_cli("roots --max-len 8 --threads 3").out, r.out);
}

TEST(Cli, Census) {
  const auto r = run_cli("census --max-len 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "{\"length\":1,\"total_cyclic_words\":4,\"minimal_count\":4,\"root_count\":0,"
            "\"root_class_count\":0,\"max_run_over_roots\":0}\n"
            "{\"length\":2,\"total_cyclic_words\":8,\"minimal_count\":4,\"root_count\":0,"
            "\"root_class_count\":0,\"max_run_over_roots\":0}\n"
            "{\"length\":3,\"total_cyclic_words\":12,\"minimal_count\":4,\"root_count\":0,"
            "\"root_class_count\":0,\"max_run_over_roots\":0}\n"
            "{\"length\":4,\"total_cyclic_words\":26,\"minimal_count\":14,\"root_count\":10,"
            "\"root_class_count\":2,\"max_run_over_roots\":2}\n");
}

TEST(Cli, Verify) {
  auto r = run_cli("verify --max-len 6");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("PASS divisibility-by-4"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  r = run_cli("verify --json --max-len 6");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["checks"]["cyclic-word-count-update"]["passed"].get<bool>());
}

TEST(Cli, ErrorsAndExitCodes) {
  auto r = run_cli("reduce axb", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("position 1"), std::string::npos);
  EXPECT_EQ(run_cli("").status, 2);
  EXPECT_EQ(run_cli("frobnicate").status, 2);
  EXPECT_EQ(run_cli("equivalent a").status, 2);
  EXPECT_EQ(run_cli("census --max-len 21").status, 3);
  EXPECT_EQ(run_cli("roots --max-len 0").status, 2);
  EXPECT_EQ(run_cli("census --threads 0").status, 2);
  EXPECT_EQ(run_cli("--help").status, 0);
}
