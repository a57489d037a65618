// Copyright 2026 The gkat-learn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// -----------------------------------------------------------------------------
//
// Single learning runs with timing, and the CSV rows that record them.

#ifndef GKAT_BENCH_HPP_
#define GKAT_BENCH_HPP_

#include <chrono>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "gkat/constructions.hpp"
#include "gkat/glstar.hpp"
#include "gkat/lstar.hpp"
#include "gkat/parser.hpp"
#include "gkat/syntax.hpp"

namespace gkat {

struct RunRecord {
  std::string algorithm;
  std::size_t n_tests = 0;
  std::size_t membership_queries = 0;
  std::size_t zero_filled = 0;
  std::size_t equivalence_queries = 0;
  std::size_t hypothesis_states = 0;
  double wall_ms = 0;
};

inline const char* kRunCsvHeader =
    "algorithm,n_tests,membership_queries,zero_filled,equivalence_queries,"
    "hypothesis_states,wall_ms";

inline std::string to_csv_row(const RunRecord& r) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
  return r.algorithm + "," + std::to_string(r.n_tests) + "," +
         std::to_string(r.membership_queries) + "," +
         std::to_string(r.zero_filled) + "," +
         std::to_string(r.equivalence_queries) + "," +
         std::to_string(r.hypothesis_states) + "," + ms;
}

// Program families whose size grows only through the number of tests.
enum class Family { kIf, kWhile };

struct FamilySpec {
  std::string expression;
  std::vector<std::string> actions;
};

inline FamilySpec family_spec(Family family) {
  switch (family) {
    case Family::kIf:
      return {"if t1 then do p1 else do p2", {"p1", "p2", "p3"}};
    case Family::kWhile:
      return {"(while t1 do p1); do p2", {"p1", "p2"}};
  }
  throw InternalError("unknown family");
}

// t1, ..., tn.
inline std::vector<std::string> numbered_tests(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

struct GlStarRunOutput {
  RunRecord record;
  GlStarResult result;
};

struct LStarRunOutput {
  RunRecord record;
  LStarResult result;
};

// GL* against the normalized derivative automaton of `e`.
inline GlStarRunOutput run_glstar(const Exp& e, const Alphabet& alphabet,
                                  const LearnOptions& options = {},
                                  const GlObserver& observer = {},
                                  std::size_t state_limit = kDefaultStateLimit) {
  const auto start = std::chrono::steady_clock::now();
  auto teacher = teacher_from_gkat(normalize(gkat_automaton(e, alphabet, state_limit)));
  GlStarResult result = glstar(teacher, options, observer);
  const auto stop = std::chrono::steady_clock::now();
  RunRecord r;
  r.algorithm = "glstar";
  r.n_tests = alphabet.tests().size();
  r.membership_queries = result.stats.membership_to_L;
  r.zero_filled = result.stats.zero_filled;
  r.equivalence_queries = result.stats.equivalence;
  r.hypothesis_states = result.automaton.num_states();
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return {r, std::move(result)};
}

// L* against the KAT-derivative Moore automaton of the embedding of `e`.
inline LStarRunOutput run_lstar(const Exp& e, const Alphabet& alphabet,
                                const LearnOptions& options = {},
                                const LStarObserver& observer = {},
                                std::size_t state_limit = kDefaultStateLimit) {
  const auto start = std::chrono::steady_clock::now();
  auto teacher = teacher_from_moore(
      kat_moore_automaton(embed_kat(e), alphabet, state_limit));
  LStarResult result = lstar_moore(teacher, options, observer);
  const auto stop = std::chrono::steady_clock::now();
  RunRecord r;
  r.algorithm = "lstar";
  r.n_tests = alphabet.tests().size();
  r.membership_queries = result.stats.membership_to_L;
  r.zero_filled = 0;
  r.equivalence_queries = result.stats.equivalence;
  r.hypothesis_states = result.automaton.num_states();
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return {r, std::move(result)};
}

}  // namespace gkat

#endif  // GKAT_BENCH_HPP_
