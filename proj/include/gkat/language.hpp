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
// Brute-force guarded string semantics, truncated at a bound on the number of
// actions. This is deliberately independent of the automata code so that it
// can serve as the reference in tests.

#ifndef GKAT_LANGUAGE_HPP_
#define GKAT_LANGUAGE_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gkat/error.hpp"
#include "gkat/syntax.hpp"

namespace gkat {

inline constexpr std::size_t kDefaultLanguageLimit = std::size_t{1} << 21;

// { w in L : w has at most `bound` actions }, kept in canonical order.
struct BoundedLanguage {
  std::set<GuardedString> words;
  std::size_t bound = 0;

  bool contains(const GuardedString& w) const { return words.count(w) != 0; }
  std::size_t size() const { return words.size(); }
  friend bool operator==(const BoundedLanguage&, const BoundedLanguage&) = default;
};

namespace internal {

class Denoter {
 public:
  Denoter(const Alphabet& alphabet, std::size_t bound, std::size_t limit)
      : alphabet_(alphabet), bound_(bound), limit_(limit) {}

  std::set<GuardedString> Run(const Exp& e) {
    switch (e.kind()) {
      case Exp::Kind::kAction: {
        std::set<GuardedString> out;
        if (bound_ == 0) return out;
        for (const Atom a : alphabet_.atoms()) {
          for (const Atom b : alphabet_.atoms()) {
            GuardedString w(b);
            w.letters.push_back(Letter{a, e.action()});
            Insert(out, std::move(w));
          }
        }
        return out;
      }
      case Exp::Kind::kAssert:
        return Atoms(satisfying_atoms(alphabet_, e.guard()));
      case Exp::Kind::kSeq:
        return Fuse(Run(e.first()), Run(e.second()));
      case Exp::Kind::kIf: {
        const auto guard = satisfying_atoms(alphabet_, e.guard());
        auto out = Restrict(Run(e.then_branch()), guard, true);
        for (auto& w : Restrict(Run(e.else_branch()), guard, false)) {
          Insert(out, w);
        }
        return out;
      }
      case Exp::Kind::kWhile: {
        const auto guard = satisfying_atoms(alphabet_, e.guard());
        const auto step = Restrict(Run(e.body()), guard, true);
        std::vector<bool> all(alphabet_.num_atoms(), true);
        // Union of (B <> L)^n, grown until a power contributes nothing new.
        std::set<GuardedString> acc = Atoms(all);
        std::set<GuardedString> frontier = acc;
        while (!frontier.empty()) {
          std::set<GuardedString> next;
          for (const auto& w : Fuse(frontier, step)) {
            if (!acc.count(w)) next.insert(w);
          }
          for (const auto& w : next) Insert(acc, w);
          frontier = std::move(next);
        }
        std::set<GuardedString> out;
        for (const auto& w : acc) {
          if (!guard[w.last.index]) out.insert(w);
        }
        return out;
      }
    }
    throw InternalError("unhandled expression kind");
  }

 private:
  void Insert(std::set<GuardedString>& out, GuardedString w) {
    if (w.num_actions() > bound_) return;
    out.insert(std::move(w));
    if (out.size() > limit_) {
      throw CapacityError("bounded language exceeds " + std::to_string(limit_) +
                          " words");
    }
  }

  std::set<GuardedString> Atoms(const std::vector<bool>& which) {
    std::set<GuardedString> out;
    for (std::uint32_t a = 0; a < which.size(); ++a) {
      if (which[a]) out.insert(GuardedString(Atom{a}));
    }
    return out;
  }

  // B <> L when `positive`, !B <> L otherwise.
  static std::set<GuardedString> Restrict(const std::set<GuardedString>& words,
                                          const std::vector<bool>& guard,
                                          bool positive) {
    std::set<GuardedString> out;
    for (const auto& w : words) {
      if (guard[w.first_atom().index] == positive) out.insert(w);
    }
    return out;
  }

  std::set<GuardedString> Fuse(const std::set<GuardedString>& lhs,
                               const std::set<GuardedString>& rhs) {
    std::map<std::uint32_t, std::vector<const GuardedString*>> by_first;
    for (const auto& w : rhs) by_first[w.first_atom().index].push_back(&w);
    std::set<GuardedString> out;
    for (const auto& v : lhs) {
      auto it = by_first.find(v.last.index);
      if (it == by_first.end()) continue;
      for (const GuardedString* w : it->second) {
        if (v.num_actions() + w->num_actions() > bound_) continue;
        Insert(out, *fuse(v, *w));
      }
    }
    return out;
  }

  const Alphabet& alphabet_;
  std::size_t bound_;
  std::size_t limit_;
};

}  // namespace internal

// [[e]] restricted to words with at most `bound` actions.
inline BoundedLanguage denote(const Exp& e, const Alphabet& alphabet,
                              std::size_t bound,
                              std::size_t limit = kDefaultLanguageLimit) {
  BoundedLanguage out;
  out.bound = bound;
  out.words = internal::Denoter(alphabet, bound, limit).Run(e);
  return out;
}

inline bool member(const Exp& e, const Alphabet& alphabet,
                   const GuardedString& w) {
  return denote(e, alphabet, w.num_actions()).contains(w);
}

// Two words that agree on their first n atoms also agree on their first n
// actions, or both stop after n atoms.
inline bool is_deterministic(const BoundedLanguage& language) {
  // Maps "letters so far, current atom" to the action taken next, or to
  // kHalt when the word ends there.
  constexpr std::uint32_t kHalt = ~std::uint32_t{0};
  std::unordered_map<GuardedString, std::uint32_t, GuardedStringHash> next;
  for (const auto& w : language.words) {
    GuardedString key;
    for (std::size_t i = 0; i <= w.num_actions(); ++i) {
      key.last = w.atom(i);
      const std::uint32_t move =
          i < w.num_actions() ? w.action(i).index : kHalt;
      auto [it, inserted] = next.emplace(key, move);
      if (!inserted && it->second != move) return false;
      if (i < w.num_actions()) key.letters.push_back(w.letters[i]);
    }
  }
  return true;
}

}  // namespace gkat

#endif  // GKAT_LANGUAGE_HPP_
