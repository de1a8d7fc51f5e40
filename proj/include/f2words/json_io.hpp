#pragma once

#include <json.hpp>

#include "enumeration.hpp"
#include "verification.hpp"
#include "whitehead_search.hpp"
#include "word.hpp"

namespace f2 {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const CensusRecord& r) {
  return ojson{{"length", r.length},
               {"total_cyclic_words", r.total_cyclic_words},
               {"minimal_count", r.minimal_count},
               {"root_count", r.root_count},
               {"root_class_count", r.root_class_count},
               {"max_run_over_roots", r.max_run_over_roots}};
}

/// `members` is listed in canonical word order (a < b < A < B).
inline ojson to_json(const EquivalenceClass& c) {
  ojson members = ojson::array();
  for (const auto& m : c.members) members.push_back(to_string(m));
  return ojson{{"length", c.length}, {"is_root_class", c.is_root_class}, {"members", members}};
}

inline ojson root_line(const CyclicWord& w) {
  return ojson{{"len", w.size()}, {"word", to_string(w)}};
}

inline ojson to_json(const VerificationReport& report) {
  ojson checks = ojson::object();
  for (const auto& c : report.checks) {
    ojson entry{{"bound", c.bound}, {"corpus", c.corpus}, {"passed", c.passed}};
    if (!c.counterexample.empty()) entry["counterexample"] = c.counterexample;
    checks[c.name] = entry;
  }
  return ojson{{"max_len", report.max_len},
               {"complete", report.complete},
               {"passed", report.passed()},
               {"checks", checks}};
}

}  // namespace f2
