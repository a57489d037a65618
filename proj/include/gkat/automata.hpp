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
// GKAT automata (per atom: reject, accept, or emit an action and move) and
// Moore automata over the input alphabet At x Sigma with outputs in 2^At.
// Both are immutable values; every operation returns a fresh automaton.

#ifndef GKAT_AUTOMATA_HPP_
#define GKAT_AUTOMATA_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkat/error.hpp"
#include "gkat/syntax.hpp"

namespace gkat {

// One entry of the transition function: 0, 1, or (p, y).
struct Outcome {
  enum class Kind : std::uint8_t { kReject, kAccept, kStep };

  Kind kind = Kind::kReject;
  Action action;
  std::uint32_t target = 0;

  static Outcome Reject() { return Outcome{}; }
  static Outcome Accept() { return Outcome{Kind::kAccept, {}, 0}; }
  static Outcome Step(Action p, std::size_t target) {
    return Outcome{Kind::kStep, p, static_cast<std::uint32_t>(target)};
  }

  bool is_reject() const { return kind == Kind::kReject; }
  bool is_accept() const { return kind == Kind::kAccept; }
  bool is_step() const { return kind == Kind::kStep; }

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

class GkatAutomaton {
 public:
  // `delta[state * |At| + atom]`.
  GkatAutomaton(Alphabet alphabet, std::size_t num_states,
                std::vector<Outcome> delta, std::size_t initial)
      : alphabet_(std::move(alphabet)),
        num_states_(num_states),
        delta_(std::move(delta)),
        initial_(initial) {
    if (num_states_ == 0) throw PreconditionError("automaton has no states");
    if (initial_ >= num_states_) {
      throw PreconditionError("initial state out of range");
    }
    if (delta_.size() != num_states_ * alphabet_.num_atoms()) {
      throw PreconditionError("transition table is not total");
    }
    for (const Outcome& o : delta_) {
      if (!o.is_step()) {
        if (o != Outcome::Reject() && o != Outcome::Accept()) {
          throw PreconditionError("halting outcome carries a payload");
        }
        continue;
      }
      if (o.target >= num_states_) {
        throw PreconditionError("transition target out of range");
      }
      if (o.action.index >= alphabet_.num_actions()) {
        throw PreconditionError("transition action out of range");
      }
    }
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t initial() const { return initial_; }
  const Outcome& delta(std::size_t state, Atom atom) const {
    return delta_[state * alphabet_.num_atoms() + atom.index];
  }
  const std::vector<Outcome>& table() const { return delta_; }

  friend bool operator==(const GkatAutomaton&, const GkatAutomaton&) = default;

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  std::vector<Outcome> delta_;
  std::size_t initial_;
};

class MooreAutomaton {
 public:
  // `next[state * |At.Sigma| + letter_index]`, `output[state * |At| + atom]`.
  MooreAutomaton(Alphabet alphabet, std::size_t num_states,
                 std::vector<std::uint32_t> next, std::vector<bool> output,
                 std::size_t initial)
      : alphabet_(std::move(alphabet)),
        num_states_(num_states),
        next_(std::move(next)),
        output_(std::move(output)),
        initial_(initial) {
    if (num_states_ == 0) throw PreconditionError("automaton has no states");
    if (initial_ >= num_states_) {
      throw PreconditionError("initial state out of range");
    }
    if (next_.size() != num_states_ * alphabet_.num_letters()) {
      throw PreconditionError("transition table is not total");
    }
    if (output_.size() != num_states_ * alphabet_.num_atoms()) {
      throw PreconditionError("output table is not total");
    }
    for (std::uint32_t t : next_) {
      if (t >= num_states_) {
        throw PreconditionError("transition target out of range");
      }
    }
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t initial() const { return initial_; }
  std::size_t next(std::size_t state, Letter l) const {
    return next_[state * alphabet_.num_letters() + alphabet_.letter_index(l)];
  }
  bool output(std::size_t state, Atom atom) const {
    return output_[state * alphabet_.num_atoms() + atom.index];
  }
  const std::vector<std::uint32_t>& transitions() const { return next_; }
  const std::vector<bool>& outputs() const { return output_; }

  friend bool operator==(const MooreAutomaton&, const MooreAutomaton&) = default;

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  std::vector<std::uint32_t> next_;
  std::vector<bool> output_;
  std::size_t initial_;
};

// ---------------------------------------------------------------------------
// Acceptance.

inline bool accepts_gkat(const GkatAutomaton& a, std::size_t state,
                         const GuardedString& w) {
  for (const Letter& l : w.letters) {
    const Outcome& o = a.delta(state, l.atom);
    if (!o.is_step() || o.action != l.action) return false;
    state = o.target;
  }
  return a.delta(state, w.last).is_accept();
}

inline bool accepts_gkat(const GkatAutomaton& a, const GuardedString& w) {
  return accepts_gkat(a, a.initial(), w);
}

inline std::size_t run_moore(const MooreAutomaton& m, std::size_t state,
                             const GuardedPrefix& w) {
  for (const Letter& l : w.letters) state = m.next(state, l);
  return state;
}

inline bool accepts_moore(const MooreAutomaton& m, std::size_t state,
                          const GuardedString& w) {
  return m.output(run_moore(m, state, w.prefix()), w.last);
}

inline bool accepts_moore(const MooreAutomaton& m, const GuardedString& w) {
  return accepts_moore(m, m.initial(), w);
}

// ---------------------------------------------------------------------------
// Reachability.

struct ReachableGkat {
  GkatAutomaton automaton;
  // Index in the input automaton of each kept state.
  std::vector<std::size_t> original;
  // Shortlex-least word leading from the initial state to each kept state.
  std::vector<GuardedPrefix> witness;
};

// Restriction to the states reachable from the initial state, numbered in
// breadth-first order with atoms explored canonically.
inline ReachableGkat reachable(const GkatAutomaton& a) {
  const std::size_t num_atoms = a.alphabet().num_atoms();
  std::vector<std::size_t> renumber(a.num_states(), SIZE_MAX);
  std::vector<std::size_t> order{a.initial()};
  std::vector<GuardedPrefix> witness{GuardedPrefix{}};
  renumber[a.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::uint32_t atom = 0; atom < num_atoms; ++atom) {
      const Outcome& o = a.delta(order[i], Atom{atom});
      if (!o.is_step() || renumber[o.target] != SIZE_MAX) continue;
      renumber[o.target] = order.size();
      order.push_back(o.target);
      witness.push_back(witness[i] + Letter{Atom{atom}, o.action});
    }
  }
  std::vector<Outcome> delta;
  delta.reserve(order.size() * num_atoms);
  for (std::size_t s : order) {
    for (std::uint32_t atom = 0; atom < num_atoms; ++atom) {
      Outcome o = a.delta(s, Atom{atom});
      if (o.is_step()) o.target = static_cast<std::uint32_t>(renumber[o.target]);
      delta.push_back(o);
    }
  }
  return ReachableGkat{GkatAutomaton(a.alphabet(), order.size(), std::move(delta), 0),
                       std::move(order), std::move(witness)};
}

struct ReachableMoore {
  MooreAutomaton automaton;
  std::vector<std::size_t> original;
  std::vector<GuardedPrefix> witness;
};

inline ReachableMoore reachable(const MooreAutomaton& m) {
  const Alphabet& alphabet = m.alphabet();
  const auto letters = alphabet.letters();
  std::vector<std::size_t> renumber(m.num_states(), SIZE_MAX);
  std::vector<std::size_t> order{m.initial()};
  std::vector<GuardedPrefix> witness{GuardedPrefix{}};
  renumber[m.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Letter& l : letters) {
      const std::size_t t = m.next(order[i], l);
      if (renumber[t] != SIZE_MAX) continue;
      renumber[t] = order.size();
      order.push_back(t);
      witness.push_back(witness[i] + l);
    }
  }
  std::vector<std::uint32_t> next;
  std::vector<bool> output;
  for (std::size_t s : order) {
    for (const Letter& l : letters) {
      next.push_back(static_cast<std::uint32_t>(renumber[m.next(s, l)]));
    }
    for (std::uint32_t atom = 0; atom < alphabet.num_atoms(); ++atom) {
      output.push_back(m.output(s, Atom{atom}));
    }
  }
  return ReachableMoore{
      MooreAutomaton(alphabet, order.size(), std::move(next), std::move(output), 0),
      std::move(order), std::move(witness)};
}

// ---------------------------------------------------------------------------
// Liveness and normal form.

// Least fixpoint: a state is live if some atom accepts or steps to a live
// state, i.e. its language is nonempty.
inline std::vector<bool> live_states(const GkatAutomaton& a) {
  const std::size_t num_atoms = a.alphabet().num_atoms();
  std::vector<bool> live(a.num_states(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < a.num_states(); ++s) {
      if (live[s]) continue;
      for (std::uint32_t atom = 0; atom < num_atoms; ++atom) {
        const Outcome& o = a.delta(s, Atom{atom});
        if (o.is_accept() || (o.is_step() && live[o.target])) {
          live[s] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return live;
}

inline bool is_normal(const GkatAutomaton& a) {
  const auto live = live_states(a);
  for (const Outcome& o : a.table()) {
    if (o.is_step() && !live[o.target]) return false;
  }
  return true;
}

// Redirects every step into a dead state to Reject. Same states, same
// language.
inline GkatAutomaton normalize(const GkatAutomaton& a) {
  const auto live = live_states(a);
  std::vector<Outcome> delta = a.table();
  for (Outcome& o : delta) {
    if (o.is_step() && !live[o.target]) o = Outcome::Reject();
  }
  return GkatAutomaton(a.alphabet(), a.num_states(), std::move(delta),
                       a.initial());
}

// ---------------------------------------------------------------------------
// Embedding into Moore automata.

// Adds a sink as the last state. Steps become Moore transitions, everything
// else goes to the sink; a state outputs 1 at the atoms where it accepts.
inline MooreAutomaton embed_moore(const GkatAutomaton& a) {
  const Alphabet& alphabet = a.alphabet();
  const std::size_t n = a.num_states();
  const std::size_t sink = n;
  std::vector<std::uint32_t> next;
  std::vector<bool> output;
  next.reserve((n + 1) * alphabet.num_letters());
  for (std::size_t s = 0; s < n; ++s) {
    for (const Letter& l : alphabet.letters()) {
      const Outcome& o = a.delta(s, l.atom);
      next.push_back(static_cast<std::uint32_t>(
          o.is_step() && o.action == l.action ? o.target : sink));
    }
    for (std::uint32_t atom = 0; atom < alphabet.num_atoms(); ++atom) {
      output.push_back(a.delta(s, Atom{atom}).is_accept());
    }
  }
  next.insert(next.end(), alphabet.num_letters(), static_cast<std::uint32_t>(sink));
  output.insert(output.end(), alphabet.num_atoms(), false);
  return MooreAutomaton(alphabet, n + 1, std::move(next), std::move(output),
                        a.initial());
}

// Shortlex-least guarded string on which the two states disagree, found by a
// breadth-first search of the product; std::nullopt when the languages agree.
inline std::optional<GuardedString> moore_distinguishing_word(
    const MooreAutomaton& m1, std::size_t x1, const MooreAutomaton& m2,
    std::size_t x2) {
  if (!(m1.alphabet() == m2.alphabet())) {
    throw PreconditionError("automata over different alphabets");
  }
  const Alphabet& alphabet = m1.alphabet();
  const auto letters = alphabet.letters();
  const std::size_t n2 = m2.num_states();
  std::vector<bool> seen(m1.num_states() * n2, false);
  struct Item {
    std::size_t s1, s2;
    GuardedPrefix word;
  };
  std::deque<Item> queue;
  queue.push_back({x1, x2, {}});
  seen[x1 * n2 + x2] = true;
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    for (std::uint32_t atom = 0; atom < alphabet.num_atoms(); ++atom) {
      if (m1.output(item.s1, Atom{atom}) != m2.output(item.s2, Atom{atom})) {
        return GuardedString(item.word, Atom{atom});
      }
    }
    for (const Letter& l : letters) {
      const std::size_t t1 = m1.next(item.s1, l);
      const std::size_t t2 = m2.next(item.s2, l);
      if (seen[t1 * n2 + t2]) continue;
      seen[t1 * n2 + t2] = true;
      queue.push_back({t1, t2, item.word + l});
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bisimulation and simulation.

struct BisimulationResult {
  bool holds = false;
  // A guarded string accepted by exactly one side. Always present when the
  // languages differ, which for normal automata is exactly when `holds` is
  // false.
  std::optional<GuardedString> witness;

  explicit operator bool() const { return holds; }
};

namespace internal {

// Is there a bisimulation between `a` and `b` relating x and y?
inline bool BisimilarStates(const GkatAutomaton& a, std::size_t x,
                            const GkatAutomaton& b, std::size_t y) {
  const std::size_t num_atoms = a.alphabet().num_atoms();
  const std::size_t nb = b.num_states();
  std::vector<bool> related(a.num_states() * nb, false);
  std::vector<std::pair<std::size_t, std::size_t>> todo{{x, y}};
  related[x * nb + y] = true;
  while (!todo.empty()) {
    auto [s, t] = todo.back();
    todo.pop_back();
    for (std::uint32_t atom = 0; atom < num_atoms; ++atom) {
      const Outcome& o1 = a.delta(s, Atom{atom});
      const Outcome& o2 = b.delta(t, Atom{atom});
      if (o1.kind != o2.kind) return false;
      if (!o1.is_step()) continue;
      if (o1.action != o2.action) return false;
      if (!related[o1.target * nb + o2.target]) {
        related[o1.target * nb + o2.target] = true;
        todo.emplace_back(o1.target, o2.target);
      }
    }
  }
  return true;
}

}  // namespace internal

inline BisimulationResult bisimilar(const GkatAutomaton& a, std::size_t x,
                                    const GkatAutomaton& b, std::size_t y) {
  if (!(a.alphabet() == b.alphabet())) {
    throw PreconditionError("automata over different alphabets");
  }
  BisimulationResult out;
  out.holds = internal::BisimilarStates(a, x, b, y);
  if (!out.holds) {
    out.witness = moore_distinguishing_word(embed_moore(a), x, embed_moore(b), y);
  }
  return out;
}

inline BisimulationResult bisimilar(const GkatAutomaton& a,
                                    const GkatAutomaton& b) {
  return bisimilar(a, a.initial(), b, b.initial());
}

// Largest simulation between `a` and `b`, computed by deleting pairs that
// violate a clause until nothing changes; then checks (x, y).
inline bool similar(const GkatAutomaton& a, std::size_t x,
                    const GkatAutomaton& b, std::size_t y) {
  if (!(a.alphabet() == b.alphabet())) {
    throw PreconditionError("automata over different alphabets");
  }
  const std::size_t num_atoms = a.alphabet().num_atoms();
  const std::size_t na = a.num_states();
  const std::size_t nb = b.num_states();
  std::vector<bool> rel(na * nb, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < na; ++s) {
      for (std::size_t t = 0; t < nb; ++t) {
        if (!rel[s * nb + t]) continue;
        bool ok = true;
        for (std::uint32_t atom = 0; atom < num_atoms && ok; ++atom) {
          const Outcome& o1 = a.delta(s, Atom{atom});
          const Outcome& o2 = b.delta(t, Atom{atom});
          if (o1.is_accept()) {
            ok = o2.is_accept();
          } else if (o1.is_step()) {
            ok = o2.is_step() && o1.action == o2.action &&
                 rel[o1.target * nb + o2.target];
          }
        }
        if (!ok) {
          rel[s * nb + t] = false;
          changed = true;
        }
      }
    }
  }
  return rel[x * nb + y];
}

// ---------------------------------------------------------------------------
// Minimization.

namespace internal {

// Coarsest partition compatible with `initial_key` that is stable under the
// successor map: block ids are assigned in first-occurrence order.
inline std::vector<std::size_t> RefinePartition(
    std::size_t num_states, const std::vector<std::vector<std::size_t>>& key,
    const std::vector<std::vector<std::size_t>>& successors) {
  std::vector<std::size_t> block(num_states);
  {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    for (std::size_t s = 0; s < num_states; ++s) {
      block[s] = ids.emplace(key[s], ids.size()).first->second;
    }
  }
  std::size_t count = 0;
  for (std::size_t b : block) count = std::max(count, b + 1);
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> refined(num_states);
    for (std::size_t s = 0; s < num_states; ++s) {
      std::vector<std::size_t> signature{block[s]};
      for (std::size_t t : successors[s]) signature.push_back(block[t]);
      refined[s] = ids.emplace(std::move(signature), ids.size()).first->second;
    }
    const std::size_t refined_count = ids.size();
    block = std::move(refined);
    if (refined_count == count) break;
    count = refined_count;
  }
  // Renumber by first occurrence so block 0 holds state 0.
  std::vector<std::size_t> rename(num_states, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t& b : block) {
    if (rename[b] == SIZE_MAX) rename[b] = next++;
    b = rename[b];
  }
  return block;
}

// Bisimilarity classes of `a`: the initial key is the per-atom signature
// (halting polarity or emitted action), refined along step targets.
inline std::vector<std::size_t> BisimulationClasses(const GkatAutomaton& a) {
  const std::size_t num_atoms = a.alphabet().num_atoms();
  std::vector<std::vector<std::size_t>> key(a.num_states());
  std::vector<std::vector<std::size_t>> successors(a.num_states());
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    for (std::uint32_t atom = 0; atom < num_atoms; ++atom) {
      const Outcome& o = a.delta(s, Atom{atom});
      key[s].push_back(o.is_step() ? 2 + o.action.index
                                   : static_cast<std::size_t>(o.kind));
      // Halting entries point at the state itself, which leaves the
      // signature unaffected since the key already separates them.
      successors[s].push_back(o.is_step() ? o.target : s);
    }
  }
  return RefinePartition(a.num_states(), key, successors);
}

inline std::vector<std::size_t> MooreClasses(const MooreAutomaton& m) {
  const Alphabet& alphabet = m.alphabet();
  std::vector<std::vector<std::size_t>> key(m.num_states());
  std::vector<std::vector<std::size_t>> successors(m.num_states());
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    for (std::uint32_t atom = 0; atom < alphabet.num_atoms(); ++atom) {
      key[s].push_back(m.output(s, Atom{atom}) ? 1 : 0);
    }
    for (const Letter& l : alphabet.letters()) {
      successors[s].push_back(m.next(s, l));
    }
  }
  return RefinePartition(m.num_states(), key, successors);
}

inline std::size_t CountBlocks(const std::vector<std::size_t>& block) {
  std::size_t count = 0;
  for (std::size_t b : block) count = std::max(count, b + 1);
  return count;
}

}  // namespace internal

// The reachable part of `a` quotiented by bisimilarity, numbered in
// breadth-first order. Requires a normal automaton.
inline GkatAutomaton minimize(const GkatAutomaton& a) {
  if (!is_normal(a)) {
    throw NotNormalError("minimize requires a normal automaton");
  }
  const GkatAutomaton r = reachable(a).automaton;
  const auto block = internal::BisimulationClasses(r);
  const std::size_t count = internal::CountBlocks(block);
  const std::size_t num_atoms = r.alphabet().num_atoms();
  std::vector<Outcome> delta(count * num_atoms);
  std::vector<bool> done(count, false);
  for (std::size_t s = 0; s < r.num_states(); ++s) {
    if (done[block[s]]) continue;
    done[block[s]] = true;
    for (std::uint32_t atom = 0; atom < num_atoms; ++atom) {
      Outcome o = r.delta(s, Atom{atom});
      if (o.is_step()) o.target = static_cast<std::uint32_t>(block[o.target]);
      delta[block[s] * num_atoms + atom] = o;
    }
  }
  return reachable(GkatAutomaton(r.alphabet(), count, std::move(delta),
                                 block[r.initial()]))
      .automaton;
}

inline MooreAutomaton minimize_moore(const MooreAutomaton& m) {
  const MooreAutomaton r = reachable(m).automaton;
  const Alphabet& alphabet = r.alphabet();
  const auto block = internal::MooreClasses(r);
  const std::size_t count = internal::CountBlocks(block);
  std::vector<std::uint32_t> next(count * alphabet.num_letters());
  std::vector<bool> output(count * alphabet.num_atoms());
  std::vector<bool> done(count, false);
  const auto letters = alphabet.letters();
  for (std::size_t s = 0; s < r.num_states(); ++s) {
    if (done[block[s]]) continue;
    done[block[s]] = true;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      next[block[s] * letters.size() + i] =
          static_cast<std::uint32_t>(block[r.next(s, letters[i])]);
    }
    for (std::uint32_t atom = 0; atom < alphabet.num_atoms(); ++atom) {
      output[block[s] * alphabet.num_atoms() + atom] = r.output(s, Atom{atom});
    }
  }
  return reachable(MooreAutomaton(alphabet, count, std::move(next),
                                  std::move(output), block[r.initial()]))
      .automaton;
}

// ---------------------------------------------------------------------------
// Isomorphism.

struct IsomorphismResult {
  bool holds = false;
  // mapping[state of A] = state of B, filled when `holds`.
  std::vector<std::size_t> mapping;

  explicit operator bool() const { return holds; }
};

// Builds the only candidate map by walking both automata in lockstep from
// their initial states. Both inputs must be reachable and observable, as
// produced by minimize().
inline IsomorphismResult isomorphic(const GkatAutomaton& a,
                                    const GkatAutomaton& b) {
  for (const GkatAutomaton* m : {&a, &b}) {
    if (reachable(*m).automaton.num_states() != m->num_states()) {
      throw PreconditionError("isomorphic requires reachable automata");
    }
    if (!is_normal(*m) ||
        internal::CountBlocks(internal::BisimulationClasses(*m)) !=
            m->num_states()) {
      throw PreconditionError("isomorphic requires observable automata");
    }
  }
  IsomorphismResult out;
  if (!(a.alphabet() == b.alphabet()) || a.num_states() != b.num_states()) {
    return out;
  }
  const std::size_t num_atoms = a.alphabet().num_atoms();
  std::vector<std::size_t> map(a.num_states(), SIZE_MAX);
  std::vector<bool> used(b.num_states(), false);
  std::vector<std::size_t> todo{a.initial()};
  map[a.initial()] = b.initial();
  used[b.initial()] = true;
  while (!todo.empty()) {
    const std::size_t s = todo.back();
    todo.pop_back();
    for (std::uint32_t atom = 0; atom < num_atoms; ++atom) {
      const Outcome& o1 = a.delta(s, Atom{atom});
      const Outcome& o2 = b.delta(map[s], Atom{atom});
      if (o1.kind != o2.kind) return out;
      if (!o1.is_step()) continue;
      if (o1.action != o2.action) return out;
      if (map[o1.target] == SIZE_MAX) {
        if (used[o2.target]) return out;
        map[o1.target] = o2.target;
        used[o2.target] = true;
        todo.push_back(o1.target);
      } else if (map[o1.target] != o2.target) {
        return out;
      }
    }
  }
  out.holds = true;
  out.mapping = std::move(map);
  return out;
}

// Lockstep walk as above; both inputs must be reachable.
inline IsomorphismResult isomorphic_moore(const MooreAutomaton& a,
                                          const MooreAutomaton& b) {
  for (const MooreAutomaton* m : {&a, &b}) {
    if (reachable(*m).automaton.num_states() != m->num_states()) {
      throw PreconditionError("isomorphic_moore requires reachable automata");
    }
  }
  IsomorphismResult out;
  if (!(a.alphabet() == b.alphabet()) || a.num_states() != b.num_states()) {
    return out;
  }
  const Alphabet& alphabet = a.alphabet();
  const auto letters = alphabet.letters();
  std::vector<std::size_t> map(a.num_states(), SIZE_MAX);
  std::vector<bool> used(b.num_states(), false);
  std::vector<std::size_t> todo{a.initial()};
  map[a.initial()] = b.initial();
  used[b.initial()] = true;
  while (!todo.empty()) {
    const std::size_t s = todo.back();
    todo.pop_back();
    for (std::uint32_t atom = 0; atom < alphabet.num_atoms(); ++atom) {
      if (a.output(s, Atom{atom}) != b.output(map[s], Atom{atom})) return out;
    }
    for (const Letter& l : letters) {
      const std::size_t t1 = a.next(s, l);
      const std::size_t t2 = b.next(map[s], l);
      if (map[t1] == SIZE_MAX) {
        if (used[t2]) return out;
        map[t1] = t2;
        used[t2] = true;
        todo.push_back(t1);
      } else if (map[t1] != t2) {
        return out;
      }
    }
  }
  out.holds = true;
  out.mapping = std::move(map);
  return out;
}

// ---------------------------------------------------------------------------
// Well-nested constructors.

// Every Accept of a state in `subset` is replaced by h(alpha). The initial
// state is kept.
inline GkatAutomaton uniform_continuation(const GkatAutomaton& a,
                                          const std::vector<bool>& subset,
                                          const std::vector<Outcome>& h) {
  const std::size_t num_atoms = a.alphabet().num_atoms();
  if (subset.size() != a.num_states()) {
    throw PreconditionError("subset does not match the state count");
  }
  if (h.size() != num_atoms) {
    throw PreconditionError("continuation must give one outcome per atom");
  }
  std::vector<Outcome> delta = a.table();
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    if (!subset[s]) continue;
    for (std::size_t atom = 0; atom < num_atoms; ++atom) {
      if (delta[s * num_atoms + atom].is_accept()) {
        delta[s * num_atoms + atom] = h[atom];
      }
    }
  }
  return GkatAutomaton(a.alphabet(), a.num_states(), std::move(delta),
                       a.initial());
}

// Disjoint union: states of `a` first, then those of `b` shifted by
// |a|. The initial state is that of `a`.
inline GkatAutomaton coproduct(const GkatAutomaton& a, const GkatAutomaton& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw PreconditionError("automata over different alphabets");
  }
  std::vector<Outcome> delta = a.table();
  for (Outcome o : b.table()) {
    if (o.is_step()) o.target += static_cast<std::uint32_t>(a.num_states());
    delta.push_back(o);
  }
  return GkatAutomaton(a.alphabet(), a.num_states() + b.num_states(),
                       std::move(delta), a.initial());
}

}  // namespace gkat

#endif  // GKAT_AUTOMATA_HPP_
