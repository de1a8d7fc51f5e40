// Command-line front end for the f2words library.
//
// Exit codes: 0 success or true verdict, 1 false verdict or failed check,
// 2 usage error, 3 resource guard.

#include <CLI11.hpp>

#include <cstddef>
#include <iostream>
#include <string>

#include <f2words/f2words.hpp>
#include <f2words/json_io.hpp>

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Options {
  bool json = false;
  bool linear = false;
  std::size_t max_len = 12;
  std::size_t threads = 1;
  std::string word;
  std::string other;
};

int verdict(bool v) { return v ? kTrue : kFalse; }

f2::PairCounts counts_or_zero(const f2::CyclicWord& w) {
  return w.empty() ? f2::PairCounts{} : f2::profile(w);
}

f2::ojson counts_json(const f2::PairCounts& c) {
  return f2::ojson{{"aa", c.aa}, {"bb", c.bb}, {"ab", c.ab}, {"aB", c.aB}};
}

int cmd_reduce(const Options& o) {
  const f2::Word w = f2::parse_word(o.word);
  const std::string out = o.linear ? f2::to_string(w) : f2::to_string(f2::cyclic_reduce(w));
  if (o.json)
    std::cout << f2::ojson{{"word", out}, {"length", out.size()}}.dump() << '\n';
  else
    std::cout << out << '\n';
  return kTrue;
}

int cmd_minimize(const Options& o) {
  const auto result = f2::minimize(f2::parse_word(o.word));
  if (o.json) {
    f2::ojson trace = f2::ojson::array();
    for (const auto& step : result.trace.steps)
      trace.push_back({{"automorphism", f2::token(step.automorphism)},
                       {"word", f2::to_string(step.result)},
                       {"length", step.result.size()}});
    std::cout << f2::ojson{{"word", f2::to_string(result.word)},
                           {"length", result.word.size()},
                           {"trace", trace}}
                     .dump()
              << '\n';
  } else {
    std::cout << f2::to_string(result.word) << '\n' << result.trace.format();
  }
  return kTrue;
}

int cmd_is_minimal(const Options& o) {
  const f2::CyclicWord w = f2::parse_cyclic(o.word);
  const f2::PairCounts c = counts_or_zero(w);
  const bool v = f2::is_minimal(w);
  if (o.json) {
    std::cout << f2::ojson{{"word", f2::to_string(w)},
                           {"minimal", v},
                           {"imbalance", f2::imbalance(c)},
                           {"counts", counts_json(c)}}
                     .dump()
              << '\n';
  } else {
    std::cout << (v ? "true" : "false") << '\n'
              << "|(ab)-(aB)| = " << f2::imbalance(c) << (v ? " <= " : " > ")
              << "min((aa), (bb)) = min(" << c.aa << ", " << c.bb << ")\n";
  }
  return verdict(v);
}

int cmd_is_root(const Options& o) {
  const f2::CyclicWord w = f2::parse_cyclic(o.word);
  const f2::PairCounts c = counts_or_zero(w);
  const bool v = f2::is_root(w);
  if (o.json) {
    std::cout << f2::ojson{{"word", f2::to_string(w)},
                           {"root", v},
                           {"imbalance", f2::imbalance(c)},
                           {"counts", counts_json(c)}}
                     .dump()
              << '\n';
  } else {
    std::cout << (v ? "true" : "false") << '\n'
              << "|(ab)-(aB)| = " << f2::imbalance(c) << ", (aa) = " << c.aa
              << ", (bb) = " << c.bb << '\n';
  }
  return verdict(v);
}

int cmd_equivalent(const Options& o) {
  const bool v = f2::are_equivalent(f2::parse_word(o.word), f2::parse_word(o.other));
  if (o.json)
    std::cout << f2::ojson{{"equivalent", v}}.dump() << '\n';
  else
    std::cout << (v ? "true" : "false") << '\n';
  return verdict(v);
}

int cmd_class(const Options& o) {
  const auto c = f2::minimal_class(f2::parse_cyclic(o.word));
  std::cout << f2::to_json(c).dump() << '\n';
  return kTrue;
}

int cmd_roots(const Options& o) {
  for (const auto& level : f2::enumerate_root_words(o.max_len, o.threads))
    for (const auto& w : level.words) std::cout << f2::root_line(w).dump() << '\n';
  return kTrue;
}

int cmd_census(const Options& o) {
  f2::detail::check_max_len(o.max_len);
  for (std::size_t n = 1; n <= o.max_len; ++n)
    std::cout << f2::to_json(f2::census_level(n, o.threads)).dump() << std::endl;
  return kTrue;
}

int cmd_verify(const Options& o) {
  const auto report = f2::run_verification(o.max_len, o.threads);
  if (o.json) {
    std::cout << f2::to_json(report).dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (bound " << c.bound
                << ", corpus " << c.corpus << ")";
      if (!c.counterexample.empty()) std::cout << " counterexample " << c.counterexample;
      std::cout << '\n';
    }
    if (!report.complete) std::cout << "INCOMPLETE max_len clamped to "
                                    << f2::kMaxEnumerationLength << '\n';
  }
  if (!report.complete) return kResource;
  return verdict(report.passed());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal and root words in the free group F2 = <a, b>.\n"
               "Words are strings over a, b, A, B (uppercase = inverse)."};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of human-readable text");

  auto word_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("word", o.word, "Word over a, b, A, B")->required();
    sub->add_flag("--json", o.json, "Emit JSON");
    return sub;
  };
  auto enum_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--max-len", o.max_len, "Longest word length (default 12, at most 20)");
    sub->add_option("--threads", o.threads, "Worker threads (output is identical for any count)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json, "Emit JSON");
    return sub;
  };

  auto* reduce = word_cmd("reduce", "Print the canonical cyclic form of a word");
  reduce->add_flag("--linear", o.linear, "Only freely reduce; keep the word linear");
  auto* minimize = word_cmd("minimize", "Whitehead-reduce a word and print the trace");
  auto* is_minimal = word_cmd("is-minimal", "Test minimality in the Aut(F2) orbit");
  auto* is_root = word_cmd("is-root", "Test whether a word is a root word");
  auto* cls = word_cmd("class", "Print the minimal-level equivalence class as JSON");
  auto* equivalent = word_cmd("equivalent", "Test automorphic equivalence of two words");
  equivalent->add_option("other", o.other, "Second word")->required();
  auto* roots = enum_cmd("roots", "List root words as JSONL {len, word}");
  auto* census = enum_cmd("census", "Per-length census as JSONL");
  auto* verify = enum_cmd("verify", "Run every theorem check and report pass/fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(o);
    if (minimize->parsed()) return cmd_minimize(o);
    if (is_minimal->parsed()) return cmd_is_minimal(o);
    if (is_root->parsed()) return cmd_is_root(o);
    if (cls->parsed()) return cmd_class(o);
    if (equivalent->parsed()) return cmd_equivalent(o);
    if (roots->parsed()) return cmd_roots(o);
    if (census->parsed()) return cmd_census(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const f2::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const f2::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const f2::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
