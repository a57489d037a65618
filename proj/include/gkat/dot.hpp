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
// Graphviz output. Negative literals are drawn with a combining overline
// (U+0305), so the atom !b&c shows up as b̄c.

#ifndef GKAT_DOT_HPP_
#define GKAT_DOT_HPP_

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gkat/automata.hpp"
#include "gkat/syntax.hpp"

namespace gkat {

inline std::string pretty_atom(const Alphabet& alphabet, Atom atom) {
  if (alphabet.tests().empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < alphabet.tests().size(); ++i) {
    out += alphabet.tests().name(i);
    if (!alphabet.holds(atom, i)) out += "̅";
  }
  return out;
}

namespace internal {

inline std::string Join(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace internal

// One node per state; an edge "a1, a2 | p" groups the atoms stepping with the
// same action to the same target; accepting atoms go in an external label
// "a1, a2 | 1". Rejection is left implicit.
inline std::string to_dot(const GkatAutomaton& a,
                          const std::vector<std::string>& names = {}) {
  const Alphabet& alphabet = a.alphabet();
  auto name = [&](std::size_t s) {
    return s < names.size() ? names[s] : "x" + std::to_string(s);
  };
  std::ostringstream out;
  out << "digraph gkat {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    std::vector<std::string> accepting;
    for (const Atom atom : alphabet.atoms()) {
      if (a.delta(s, atom).is_accept()) {
        accepting.push_back(pretty_atom(alphabet, atom));
      }
    }
    out << "  s" << s << " [shape=circle, label=" << internal::Quote(name(s));
    if (!accepting.empty()) {
      out << ", xlabel="
          << internal::Quote("⇒ " + internal::Join(accepting, ", ") + " | 1");
    }
    out << "];\n";
  }
  out << "  __start -> s" << a.initial() << ";\n";
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    std::map<std::pair<std::size_t, std::uint32_t>, std::vector<std::string>>
        edges;
    for (const Atom atom : alphabet.atoms()) {
      const Outcome& o = a.delta(s, atom);
      if (o.is_step()) {
        edges[{o.target, o.action.index}].push_back(pretty_atom(alphabet, atom));
      }
    }
    for (const auto& [key, atoms] : edges) {
      out << "  s" << s << " -> s" << key.first << " [label="
          << internal::Quote(internal::Join(atoms, ", ") + " | " +
                             alphabet.format_action(Action{key.second}))
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

// Node labels carry the output vector as "1b + 0b̄"; edges group the letters
// that lead to the same target.
inline std::string to_dot(const MooreAutomaton& m,
                          const std::vector<std::string>& names = {}) {
  const Alphabet& alphabet = m.alphabet();
  auto name = [&](std::size_t s) {
    return s < names.size() ? names[s] : "x" + std::to_string(s);
  };
  std::ostringstream out;
  out << "digraph moore {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    std::vector<std::string> terms;
    // Positive atoms first, as in the usual hand-drawn tables.
    const auto atoms = alphabet.atoms();
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
      terms.push_back(std::string(m.output(s, *it) ? "1" : "0") +
                      pretty_atom(alphabet, *it));
    }
    out << "  s" << s << " [shape=box, label="
        << internal::Quote(name(s) + "\n" + internal::Join(terms, " + "))
        << "];\n";
  }
  out << "  __start -> s" << m.initial() << ";\n";
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    std::map<std::size_t, std::vector<std::string>> edges;
    for (const Letter& l : alphabet.letters()) {
      edges[m.next(s, l)].push_back(pretty_atom(alphabet, l.atom) +
                                    alphabet.format_action(l.action));
    }
    for (const auto& [target, letters] : edges) {
      out << "  s" << s << " -> s" << target
          << " [label=" << internal::Quote(internal::Join(letters, ", "))
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gkat

#endif  // GKAT_DOT_HPP_
