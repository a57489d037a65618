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

#include <string>

#include "gkat/gkat.hpp"
#include "support.hpp"

namespace gkat {
namespace {

using testing::BpqAlphabet;

const Alphabet kNumbered({"t1", "t2"}, {"p1", "p2", "p3"});

TEST(ParseExp, WhileThenAction) {
  const Exp e = parse_exp("(while t1 do p1); do p2", kNumbered);
  EXPECT_EQ(e, Exp::Seq(Exp::While(BExp::Test(0), Exp::Act(Action{0})),
                        Exp::Act(Action{1})));
}

TEST(ParseExp, AssertOne) {
  EXPECT_EQ(parse_exp("assert 1", kNumbered), Exp::Assert(BExp::One()));
}

TEST(ParseExp, Conditional) {
  EXPECT_EQ(parse_exp("if t1 then do p1 else do p2", kNumbered),
            Exp::If(BExp::Test(0), Exp::Act(Action{0}), Exp::Act(Action{1})));
}

TEST(ParseExp, SequenceIsRightAssociative) {
  EXPECT_EQ(parse_exp("do p1; do p2; do p3", kNumbered),
            Exp::Seq(Exp::Act(Action{0}),
                     Exp::Seq(Exp::Act(Action{1}), Exp::Act(Action{2}))));
}

TEST(ParseExp, BooleanPrecedence) {
  // not > and > or
  const BExp b = parse_bexp("not t1 and t2 or t1", kNumbered);
  EXPECT_EQ(b, BExp::Or(BExp::And(BExp::Not(BExp::Test(0)), BExp::Test(1)),
                        BExp::Test(0)));
}

TEST(ParseExp, LoopBodyIsOneUnit) {
  // The loop takes a single unit as body; a following ';' sequences after it.
  EXPECT_EQ(parse_exp("while t1 do do p1; do p2", kNumbered),
            parse_exp("(while t1 do p1); do p2", kNumbered));
  EXPECT_EQ(parse_exp("while t1 do (do p1; do p2)", kNumbered),
            Exp::While(BExp::Test(0), Exp::Seq(Exp::Act(Action{0}),
                                               Exp::Act(Action{1}))));
}

TEST(ParseExp, SyntaxErrorsCarryPosition) {
  try {
    parse_exp("do p1;", kNumbered);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_exp("if t1 then do p1", kNumbered), ParseError);
  EXPECT_THROW(parse_exp("(do p1", kNumbered), ParseError);
  EXPECT_THROW(parse_exp("do p1 $", kNumbered), ParseError);
  EXPECT_THROW(parse_exp("", kNumbered), ParseError);
}

TEST(ParseExp, UnknownIdentifierNamesTheSymbol) {
  try {
    parse_exp("do p1; do zap", kNumbered);
    FAIL() << "expected an unknown identifier error";
  } catch (const UnknownIdentifierError& e) {
    EXPECT_EQ(e.symbol(), "zap");
    EXPECT_EQ(e.position(), 10u);
  }
  EXPECT_THROW(parse_exp("assert t9", kNumbered), UnknownIdentifierError);
}

TEST(ParseExp, WrongKindOfName) {
  EXPECT_THROW(parse_exp("do t1", kNumbered), ParseError);
  EXPECT_THROW(parse_exp("assert p1", kNumbered), ParseError);
}

TEST(ParseExp, PrintRoundTrips) {
  testing::Random rng(11);
  for (int round = 0; round < 500; ++round) {
    const Alphabet alphabet = rng.RandomAlphabet(3, 3);
    const Exp e = rng.RandomExp(alphabet, 5);
    const std::string text = to_string(alphabet, e);
    EXPECT_EQ(parse_exp(text, alphabet), e) << text;
  }
}

TEST(ParseExp, PrintedFormsOfKnownPrograms) {
  const Alphabet alphabet = BpqAlphabet();
  EXPECT_EQ(to_string(alphabet, parse_exp("(while b do p); do q", alphabet)),
            "while b do do p; do q");
  EXPECT_EQ(to_string(alphabet, parse_exp("if not b then do q else (do p; do q)",
                                          alphabet)),
            "if not b then do q else (do p; do q)");
}

TEST(ParseGuardedString, Atoms) {
  const Alphabet alphabet = kNumbered;
  const GuardedString w = parse_guarded_string("t1&!t2 p3 !t1&t2", alphabet);
  ASSERT_EQ(w.num_actions(), 1u);
  EXPECT_EQ(alphabet.format_atom(w.first_atom()), "t1&!t2");
  EXPECT_EQ(w.action(0), Action{2});
  EXPECT_EQ(alphabet.format_atom(w.last), "!t1&t2");
  EXPECT_THROW(parse_guarded_string("t1 p1 t1&t2", alphabet), ParseError);
  EXPECT_THROW(parse_guarded_string("t1&t2 p1", alphabet), ParseError);
  EXPECT_THROW(parse_guarded_string("t1&t2 p9 t1&t2", alphabet), ParseError);
}

TEST(ParseGuardedString, EmptyTestSet) {
  const Alphabet alphabet({}, {"p"});
  const GuardedString w = parse_guarded_string("1 p 1", alphabet);
  EXPECT_EQ(w.num_actions(), 1u);
  EXPECT_EQ(format_word(alphabet, w), "1 p 1");
}

TEST(ParseGuardedPrefix, Epsilon) {
  EXPECT_TRUE(parse_guarded_prefix("eps", BpqAlphabet()).empty());
  EXPECT_TRUE(parse_guarded_prefix("", BpqAlphabet()).empty());
  EXPECT_EQ(parse_guarded_prefix("!b q", BpqAlphabet()).size(), 1u);
}

}  // namespace
}  // namespace gkat
