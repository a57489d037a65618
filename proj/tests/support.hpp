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
// Fixtures and random generators shared by the tests.

#ifndef GKAT_TESTS_SUPPORT_HPP_
#define GKAT_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <random>
#include <string>
#include <vector>

#include "gkat/gkat.hpp"

namespace gkat::testing {

// T = {b}, Sigma = {p, q}. Atom 0 is !b, atom 1 is b.
inline Alphabet BpqAlphabet() { return Alphabet({"b"}, {"p", "q"}); }
inline constexpr Atom kNotB{0};
inline constexpr Atom kB{1};
inline constexpr Action kP{0};
inline constexpr Action kQ{1};

inline const char* kWhileProgram = "(while b do p); do q";

// Two states: the initial one loops on b|p and moves on !b|q to a state that
// accepts both atoms.
inline GkatAutomaton WhileTwoState() {
  return GkatAutomaton(BpqAlphabet(), 2,
                       {Outcome::Step(kQ, 1), Outcome::Step(kP, 0),
                        Outcome::Accept(), Outcome::Accept()},
                       0);
}

// The same without the b|p loop: b is rejected initially.
inline GkatAutomaton WhileFirstGuess() {
  return GkatAutomaton(BpqAlphabet(), 2,
                       {Outcome::Step(kQ, 1), Outcome::Reject(),
                        Outcome::Accept(), Outcome::Accept()},
                       0);
}

// Moore acceptor of the while program: initial state (outputs 0, 0), the
// accepting state after !b q (outputs 1, 1) and a sink.
inline MooreAutomaton WhileMoore() {
  const Alphabet alphabet = BpqAlphabet();
  // Letters in order: !b p, !b q, b p, b q.
  return MooreAutomaton(alphabet, 3,
                        {2, 1, 0, 2,   // initial
                         2, 2, 2, 2,   // after !b q
                         2, 2, 2, 2},  // sink
                        {false, false, true, true, false, false}, 0);
}

// Parses "b p !b q b" over BpqAlphabet().
inline GuardedString Gs(const std::string& text) {
  return parse_guarded_string(text, BpqAlphabet());
}
inline GuardedPrefix Word(const std::string& text) {
  return parse_guarded_prefix(text, BpqAlphabet());
}

// Every guarded string with at most `max_actions` actions, canonical order.
inline std::vector<GuardedString> AllWords(const Alphabet& alphabet,
                                           std::size_t max_actions) {
  std::vector<GuardedString> out;
  std::vector<GuardedPrefix> layer{GuardedPrefix{}};
  for (std::size_t k = 0; k <= max_actions; ++k) {
    for (const auto& w : layer) {
      for (const Atom a : alphabet.atoms()) out.push_back(GuardedString(w, a));
    }
    if (k == max_actions) break;
    std::vector<GuardedPrefix> next;
    for (const auto& w : layer) {
      for (const Letter& l : alphabet.letters()) next.push_back(w + l);
    }
    layer = std::move(next);
  }
  return out;
}

// The atoms i..j of w with the actions between them.
inline GuardedString Slice(const GuardedString& w, std::size_t i, std::size_t j) {
  GuardedString out;
  out.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(i),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(j));
  out.last = w.atom(j);
  return out;
}

// Membership decided straight from the inductive clauses by trying every
// split point. Exponential, but independent of the library's set-based
// semantics.
inline bool NaiveMember(const Alphabet& alphabet, const Exp& e,
                        const GuardedString& w) {
  const std::size_t n = w.num_actions();
  switch (e.kind()) {
    case Exp::Kind::kAction:
      return n == 1 && w.action(0) == e.action();
    case Exp::Kind::kAssert:
      return n == 0 && atom_satisfies(alphabet.tests(), w.last, e.guard());
    case Exp::Kind::kSeq:
      for (std::size_t i = 0; i <= n; ++i) {
        if (NaiveMember(alphabet, e.first(), Slice(w, 0, i)) &&
            NaiveMember(alphabet, e.second(), Slice(w, i, n))) {
          return true;
        }
      }
      return false;
    case Exp::Kind::kIf:
      return atom_satisfies(alphabet.tests(), w.first_atom(), e.guard())
                 ? NaiveMember(alphabet, e.then_branch(), w)
                 : NaiveMember(alphabet, e.else_branch(), w);
    case Exp::Kind::kWhile:
      if (!atom_satisfies(alphabet.tests(), w.first_atom(), e.guard())) return n == 0;
      // An iteration that performs no action leaves w unchanged, so only
      // splits after at least one action matter.
      for (std::size_t i = 1; i <= n; ++i) {
        if (NaiveMember(alphabet, e.body(), Slice(w, 0, i)) &&
            NaiveMember(alphabet, e, Slice(w, i, n))) {
          return true;
        }
      }
      return false;
  }
  return false;
}

// Do the two states accept the same words with at most `k` actions?
inline bool SameUpTo(const GkatAutomaton& a, std::size_t x,
                     const GkatAutomaton& b, std::size_t y, std::size_t k) {
  for (const auto& w : AllWords(a.alphabet(), k)) {
    if (accepts_gkat(a, x, w) != accepts_gkat(b, y, w)) return false;
  }
  return true;
}

// Is every word with at most `k` actions accepted by x also accepted by y?
inline bool IncludedUpTo(const GkatAutomaton& a, std::size_t x,
                         const GkatAutomaton& b, std::size_t y, std::size_t k) {
  for (const auto& w : AllWords(a.alphabet(), k)) {
    if (accepts_gkat(a, x, w) && !accepts_gkat(b, y, w)) return false;
  }
  return true;
}

// Bounded inclusion by dynamic programming over (x, y, remaining actions),
// written independently of the library's simulation and bisimulation
// checks.
class BoundedInclusion {
 public:
  BoundedInclusion(const GkatAutomaton& a, const GkatAutomaton& b) : a_(a), b_(b) {}

  // Does x accept a word with at most k actions?
  bool Nonempty(std::size_t x, std::size_t k) {
    auto key = std::make_pair(x, k);
    if (auto it = nonempty_.find(key); it != nonempty_.end()) return it->second;
    bool result = false;
    for (const Atom alpha : a_.alphabet().atoms()) {
      const Outcome& o = a_.delta(x, alpha);
      if (o.is_accept() || (o.is_step() && k > 0 && Nonempty(o.target, k - 1))) {
        result = true;
        break;
      }
    }
    nonempty_[key] = result;
    return result;
  }

  // Is every word of x with at most k actions accepted by y?
  bool Included(std::size_t x, std::size_t y, std::size_t k) {
    auto key = std::make_tuple(x, y, k);
    if (auto it = included_.find(key); it != included_.end()) return it->second;
    bool result = true;
    for (const Atom alpha : a_.alphabet().atoms()) {
      const Outcome& ox = a_.delta(x, alpha);
      const Outcome& oy = b_.delta(y, alpha);
      if (ox.is_accept()) {
        result = oy.is_accept();
      } else if (ox.is_step() && k > 0) {
        if (oy.is_step() && oy.action == ox.action) {
          result = Included(ox.target, oy.target, k - 1);
        } else {
          result = !Nonempty(ox.target, k - 1);
        }
      }
      if (!result) break;
    }
    included_[key] = result;
    return result;
  }

 private:
  const GkatAutomaton& a_;
  const GkatAutomaton& b_;
  std::map<std::pair<std::size_t, std::size_t>, bool> nonempty_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> included_;
};

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::size_t Below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  std::size_t Between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool Chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Alphabet RandomAlphabet(std::size_t max_tests, std::size_t max_actions) {
    const std::size_t nt = Between(1, max_tests);
    const std::size_t na = Between(1, max_actions);
    std::vector<std::string> tests, actions;
    for (std::size_t i = 0; i < nt; ++i) tests.push_back("t" + std::to_string(i + 1));
    for (std::size_t i = 0; i < na; ++i) actions.push_back("p" + std::to_string(i + 1));
    return Alphabet(tests, actions);
  }

  BExp RandomBExp(const Alphabet& alphabet, std::size_t depth) {
    const std::size_t nt = alphabet.tests().size();
    if (depth == 0 || Chance(0.4)) {
      const std::size_t pick = Below(nt + 2);
      if (pick == nt) return BExp::Zero();
      if (pick == nt + 1) return BExp::One();
      return BExp::Test(pick);
    }
    switch (Below(3)) {
      case 0:
        return BExp::Not(RandomBExp(alphabet, depth - 1));
      case 1:
        return BExp::And(RandomBExp(alphabet, depth - 1),
                         RandomBExp(alphabet, depth - 1));
      default:
        return BExp::Or(RandomBExp(alphabet, depth - 1),
                        RandomBExp(alphabet, depth - 1));
    }
  }

  Exp RandomExp(const Alphabet& alphabet, std::size_t depth) {
    if (depth == 0 || Chance(0.25)) {
      if (Chance(0.7)) {
        return Exp::Act(Action{static_cast<std::uint32_t>(Below(alphabet.num_actions()))});
      }
      return Exp::Assert(RandomBExp(alphabet, 2));
    }
    switch (Below(3)) {
      case 0:
        return Exp::Seq(RandomExp(alphabet, depth - 1),
                        RandomExp(alphabet, depth - 1));
      case 1:
        return Exp::If(RandomBExp(alphabet, 2), RandomExp(alphabet, depth - 1),
                       RandomExp(alphabet, depth - 1));
      default:
        return Exp::While(RandomBExp(alphabet, 2), RandomExp(alphabet, depth - 1));
    }
  }

  // Uniformly random transition table: each entry rejects, accepts or steps
  // (probability 1/4, 1/4, 1/2).
  GkatAutomaton RandomAutomaton(const Alphabet& alphabet, std::size_t states) {
    std::vector<Outcome> delta;
    for (std::size_t i = 0; i < states * alphabet.num_atoms(); ++i) {
      const std::size_t kind = Below(4);
      if (kind == 0) {
        delta.push_back(Outcome::Reject());
      } else if (kind == 1) {
        delta.push_back(Outcome::Accept());
      } else {
        delta.push_back(Outcome::Step(
            Action{static_cast<std::uint32_t>(Below(alphabet.num_actions()))},
            Below(states)));
      }
    }
    return GkatAutomaton(alphabet, states, std::move(delta), 0);
  }

  // A normal automaton with at most `max_states` states whose initial state
  // accepts something.
  GkatAutomaton RandomNormalAutomaton(const Alphabet& alphabet,
                                      std::size_t max_states) {
    while (true) {
      GkatAutomaton a =
          normalize(RandomAutomaton(alphabet, Between(1, max_states)));
      if (live_states(a)[a.initial()]) return a;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gkat::testing

#endif  // GKAT_TESTS_SUPPORT_HPP_
