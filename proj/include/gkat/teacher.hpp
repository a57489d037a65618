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
// Minimally adequate teachers. Both answer membership queries for single
// guarded strings and equivalence queries with the shortlex-least
// counterexample, and count every query they receive.

#ifndef GKAT_TEACHER_HPP_
#define GKAT_TEACHER_HPP_

#include <cstddef>
#include <optional>
#include <utility>

#include "gkat/automata.hpp"
#include "gkat/error.hpp"
#include "gkat/syntax.hpp"

namespace gkat {

struct TeacherCounters {
  std::size_t membership = 0;
  std::size_t equivalence = 0;
};

// Teacher for GL*: hypotheses are GKAT automata, counterexamples are guarded
// strings.
class GkatTeacher {
 public:
  virtual ~GkatTeacher() = default;

  virtual const Alphabet& alphabet() const = 0;
  // Is w in the target language?
  virtual bool membership(const GuardedString& w) = 0;
  // std::nullopt when the hypothesis accepts the target language.
  virtual std::optional<GuardedString> equivalence(
      const GkatAutomaton& hypothesis) = 0;
  // Upper bound on the number of states of any hypothesis.
  virtual std::size_t size_hint() const = 0;

  const TeacherCounters& counters() const { return counters_; }

 protected:
  TeacherCounters counters_;
};

// Teacher for L*: hypotheses are Moore automata, counterexamples are words
// in (At.Sigma)* whose output functions differ.
class MooreTeacher {
 public:
  virtual ~MooreTeacher() = default;

  virtual const Alphabet& alphabet() const = 0;
  virtual bool membership(const GuardedString& w) = 0;
  virtual std::optional<GuardedPrefix> equivalence(
      const MooreAutomaton& hypothesis) = 0;
  virtual std::size_t size_hint() const = 0;

  const TeacherCounters& counters() const { return counters_; }

 protected:
  TeacherCounters counters_;
};

// Answers from a normal GKAT automaton. Equivalence embeds both automata into
// Moore automata and searches their product; the distinguishing prefix is
// extended with the first atom on which the outputs differ.
class AutomatonGkatTeacher : public GkatTeacher {
 public:
  explicit AutomatonGkatTeacher(GkatAutomaton target)
      : target_(std::move(target)),
        target_moore_(embed_moore(target_)),
        size_hint_(0) {
    if (!is_normal(target_)) {
      throw PreconditionError("teacher target must be normal");
    }
    size_hint_ = minimize(target_).num_states();
  }

  const Alphabet& alphabet() const override { return target_.alphabet(); }

  bool membership(const GuardedString& w) override {
    ++counters_.membership;
    return accepts_gkat(target_, w);
  }

  std::optional<GuardedString> equivalence(
      const GkatAutomaton& hypothesis) override {
    ++counters_.equivalence;
    return moore_distinguishing_word(embed_moore(hypothesis),
                                     hypothesis.initial(), target_moore_,
                                     target_moore_.initial());
  }

  std::size_t size_hint() const override { return size_hint_; }

  const GkatAutomaton& target() const { return target_; }

 private:
  GkatAutomaton target_;
  MooreAutomaton target_moore_;
  std::size_t size_hint_;
};

class AutomatonMooreTeacher : public MooreTeacher {
 public:
  explicit AutomatonMooreTeacher(MooreAutomaton target)
      : target_(std::move(target)),
        size_hint_(minimize_moore(target_).num_states()) {}

  const Alphabet& alphabet() const override { return target_.alphabet(); }

  bool membership(const GuardedString& w) override {
    ++counters_.membership;
    return accepts_moore(target_, w);
  }

  std::optional<GuardedPrefix> equivalence(
      const MooreAutomaton& hypothesis) override {
    ++counters_.equivalence;
    auto w = moore_distinguishing_word(hypothesis, hypothesis.initial(),
                                       target_, target_.initial());
    if (!w) return std::nullopt;
    return w->prefix();
  }

  std::size_t size_hint() const override { return size_hint_; }

  const MooreAutomaton& target() const { return target_; }

 private:
  MooreAutomaton target_;
  std::size_t size_hint_;
};

inline AutomatonGkatTeacher teacher_from_gkat(GkatAutomaton target) {
  return AutomatonGkatTeacher(std::move(target));
}

inline AutomatonMooreTeacher teacher_from_moore(MooreAutomaton target) {
  return AutomatonMooreTeacher(std::move(target));
}

}  // namespace gkat

#endif  // GKAT_TEACHER_HPP_
