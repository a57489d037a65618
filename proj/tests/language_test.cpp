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

#include <gtest/gtest.h>

#include <set>

#include "gkat/gkat.hpp"
#include "support.hpp"

namespace gkat {
namespace {

using testing::BpqAlphabet;
using testing::Gs;

std::set<GuardedString> Set(std::initializer_list<const char*> words) {
  std::set<GuardedString> out;
  for (const char* w : words) out.insert(Gs(w));
  return out;
}

TEST(Denote, WhileProgramUpToTwoActions) {
  const Alphabet alphabet = BpqAlphabet();
  const Exp e = parse_exp(testing::kWhileProgram, alphabet);
  const BoundedLanguage l = denote(e, alphabet, 2);
  EXPECT_EQ(l.bound, 2u);
  EXPECT_EQ(l.words, Set({"!b q b", "!b q !b", "b p !b q b", "b p !b q !b"}));
}

TEST(Denote, SingleAction) {
  const Alphabet alphabet = BpqAlphabet();
  EXPECT_EQ(denote(Exp::Act(Action{0}), alphabet, 1).words,
            Set({"b p b", "b p !b", "!b p b", "!b p !b"}));
}

TEST(Denote, ZeroIsEmpty) {
  const Alphabet alphabet = BpqAlphabet();
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(denote(Exp::Assert(BExp::Zero()), alphabet, k).size(), 0u);
  }
}

TEST(Denote, CapacityLimit) {
  const Alphabet alphabet({"a", "b"}, {"p", "q"});
  const Exp e = parse_exp("while 1 do (if a then do p else do q)", alphabet);
  EXPECT_NO_THROW(denote(Exp::Act(Action{0}), alphabet, 1, 16));
  const Exp star = parse_exp("while a do (if b then do p else do q)", alphabet);
  EXPECT_THROW(denote(star, alphabet, 6, 100), CapacityError);
  EXPECT_EQ(denote(e, alphabet, 5).size(), 0u);
}

TEST(Member, Examples) {
  const Alphabet alphabet = BpqAlphabet();
  const Exp e = parse_exp(testing::kWhileProgram, alphabet);
  EXPECT_TRUE(member(e, alphabet, Gs("!b q b")));
  EXPECT_FALSE(member(e, alphabet, Gs("b q b")));
  for (const Atom a : alphabet.atoms()) {
    EXPECT_TRUE(member(Exp::Assert(BExp::One()), alphabet, GuardedString(a)));
  }
}

// Pointwise agreement with membership decided directly from the clauses.
TEST(Denote, MatchesSplitOracle) {
  testing::Random rng(3);
  for (int round = 0; round < 150; ++round) {
    const Alphabet alphabet = rng.RandomAlphabet(2, 2);
    const Exp e = rng.RandomExp(alphabet, 4);
    const BoundedLanguage l = denote(e, alphabet, 3);
    for (const auto& w : testing::AllWords(alphabet, 3)) {
      ASSERT_EQ(l.contains(w), testing::NaiveMember(alphabet, e, w))
          << to_string(alphabet, e) << " on " << format_word(alphabet, w);
    }
  }
}

TEST(Denote, DeterministicAndMonotone) {
  testing::Random rng(5);
  for (int round = 0; round < 150; ++round) {
    const Alphabet alphabet = rng.RandomAlphabet(2, 2);
    const Exp e = rng.RandomExp(alphabet, 4);
    BoundedLanguage previous = denote(e, alphabet, 0);
    for (std::size_t k = 0; k <= 4; ++k) {
      const BoundedLanguage l = denote(e, alphabet, k);
      EXPECT_TRUE(is_deterministic(l)) << to_string(alphabet, e);
      for (const auto& w : previous.words) EXPECT_TRUE(l.contains(w));
      for (const auto& w : l.words) EXPECT_LE(w.num_actions(), k);
      previous = l;
    }
  }
}

TEST(IsDeterministic, DetectsDisagreement) {
  BoundedLanguage l;
  l.bound = 1;
  l.words = Set({"b p b", "b q !b"});
  EXPECT_FALSE(is_deterministic(l));
  l.words = Set({"b p b", "b"});
  EXPECT_FALSE(is_deterministic(l));
  l.words = Set({"b p b", "b p !b", "!b"});
  EXPECT_TRUE(is_deterministic(l));
}

}  // namespace
}  // namespace gkat
