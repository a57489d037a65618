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
// Learns "(while b do p); do q" with GL* and prints the trace, the final
// observation table and the learned automaton in DOT.

#include <iostream>

#include "gkat/gkat.hpp"

int main() {
  const gkat::Alphabet alphabet({"b"}, {"p", "q"});
  const gkat::Exp program = gkat::parse_exp("(while b do p); do q", alphabet);

  auto teacher = gkat::teacher_from_gkat(
      gkat::normalize(gkat::gkat_automaton(program, alphabet)));
  gkat::LearnOptions options;
  options.trace = [](const std::string& line) { std::cout << line << "\n"; };
  const gkat::GlStarResult result = gkat::glstar(teacher, options);

  std::cout << "\n" << result.table.to_csv() << "\n";
  std::cout << gkat::to_dot(result.automaton);
  std::cout << "\nqueries: " << result.stats.membership_to_L
            << ", deduced zeros: " << result.stats.zero_filled
            << ", equivalence: " << result.stats.equivalence << "\n";
  return 0;
}
