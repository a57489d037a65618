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
// Expression to automaton constructions.
//
// gkat_automaton: states are GKAT residuals, normalized by 1;e = e;1 = e and
// right-associated sequencing.
//
// kat_moore_automaton: syntactic Brzozowski derivatives of KAT terms, with
// sums kept as sorted duplicate-free sets of interned subterms.

#ifndef GKAT_CONSTRUCTIONS_HPP_
#define GKAT_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gkat/automata.hpp"
#include "gkat/error.hpp"
#include "gkat/syntax.hpp"

namespace gkat {

inline constexpr std::size_t kDefaultStateLimit = 100000;

namespace internal {

inline bool IsUnit(const Exp& e) {
  return e.kind() == Exp::Kind::kAssert && e.guard().kind() == BExp::Kind::kOne;
}

// e;f with units dropped and the left operand flattened to the right.
inline Exp SeqNorm(const Exp& e, const Exp& f) {
  if (IsUnit(e)) return f;
  if (IsUnit(f)) return e;
  if (e.kind() == Exp::Kind::kSeq) {
    return SeqNorm(e.first(), SeqNorm(e.second(), f));
  }
  return Exp::Seq(e, f);
}

inline Exp Normalize(const Exp& e) {
  switch (e.kind()) {
    case Exp::Kind::kSeq:
      return SeqNorm(Normalize(e.first()), Normalize(e.second()));
    case Exp::Kind::kIf:
      return Exp::If(e.guard(), Normalize(e.then_branch()),
                     Normalize(e.else_branch()));
    case Exp::Kind::kWhile:
      return Exp::While(e.guard(), Normalize(e.body()));
    default:
      return e;
  }
}

struct Derivative {
  Outcome::Kind kind = Outcome::Kind::kReject;
  Action action;
  std::optional<Exp> residual;
};

inline Derivative Derive(const Alphabet& alphabet, const Exp& e, Atom atom) {
  switch (e.kind()) {
    case Exp::Kind::kAssert:
      return {atom_satisfies(alphabet.tests(), atom, e.guard())
                  ? Outcome::Kind::kAccept
                  : Outcome::Kind::kReject,
              {},
              std::nullopt};
    case Exp::Kind::kAction:
      return {Outcome::Kind::kStep, e.action(), Exp::Assert(BExp::One())};
    case Exp::Kind::kSeq: {
      Derivative d = Derive(alphabet, e.first(), atom);
      if (d.kind == Outcome::Kind::kAccept) {
        return Derive(alphabet, e.second(), atom);
      }
      if (d.kind == Outcome::Kind::kStep) {
        d.residual = SeqNorm(*d.residual, e.second());
      }
      return d;
    }
    case Exp::Kind::kIf:
      return atom_satisfies(alphabet.tests(), atom, e.guard())
                 ? Derive(alphabet, e.then_branch(), atom)
                 : Derive(alphabet, e.else_branch(), atom);
    case Exp::Kind::kWhile: {
      if (!atom_satisfies(alphabet.tests(), atom, e.guard())) {
        return {Outcome::Kind::kAccept, {}, std::nullopt};
      }
      Derivative d = Derive(alphabet, e.body(), atom);
      // A body that halts without acting makes no progress: the loop
      // produces no guarded string here.
      if (d.kind != Outcome::Kind::kStep) {
        return {Outcome::Kind::kReject, {}, std::nullopt};
      }
      d.residual = SeqNorm(*d.residual, e);
      return d;
    }
  }
  throw InternalError("unhandled expression kind");
}

}  // namespace internal

struct ExpAutomaton {
  GkatAutomaton automaton;
  // Residual expression of each state; state 0 is the (normalized) input.
  std::vector<Exp> residuals;
};

// Derivative automaton of `e`; states are explored breadth-first.
inline ExpAutomaton gkat_automaton_with_residuals(
    const Exp& e, const Alphabet& alphabet,
    std::size_t state_limit = kDefaultStateLimit) {
  std::map<std::string, std::size_t> index;
  std::vector<Exp> residuals;
  auto intern = [&](const Exp& r) {
    auto [it, inserted] =
        index.emplace(to_string(alphabet, r), residuals.size());
    if (inserted) {
      residuals.push_back(r);
      if (residuals.size() > state_limit) {
        throw CapacityError("derivative automaton exceeds " +
                            std::to_string(state_limit) + " states");
      }
    }
    return it->second;
  };
  intern(internal::Normalize(e));
  std::vector<Outcome> delta;
  for (std::size_t s = 0; s < residuals.size(); ++s) {
    for (const Atom atom : alphabet.atoms()) {
      // Copy: `residuals` may grow below.
      const Exp current = residuals[s];
      internal::Derivative d = internal::Derive(alphabet, current, atom);
      switch (d.kind) {
        case Outcome::Kind::kReject:
          delta.push_back(Outcome::Reject());
          break;
        case Outcome::Kind::kAccept:
          delta.push_back(Outcome::Accept());
          break;
        case Outcome::Kind::kStep:
          delta.push_back(Outcome::Step(d.action, intern(*d.residual)));
          break;
      }
    }
  }
  const std::size_t n = residuals.size();
  return ExpAutomaton{GkatAutomaton(alphabet, n, std::move(delta), 0),
                      std::move(residuals)};
}

inline GkatAutomaton gkat_automaton(const Exp& e, const Alphabet& alphabet,
                                    std::size_t state_limit = kDefaultStateLimit) {
  return gkat_automaton_with_residuals(e, alphabet, state_limit).automaton;
}

// ---------------------------------------------------------------------------
// KAT derivatives.

namespace internal {

// Hash-consed KAT terms. Tests are stored as their atom sets.
class KatTerms {
 public:
  enum class Kind { kZero, kOne, kTest, kAction, kSum, kSeq, kStar };
  using Id = std::size_t;

  explicit KatTerms(const Alphabet& alphabet) : alphabet_(alphabet) {
    zero_ = Intern({Kind::kZero, {}, {}, {}});
    one_ = Intern({Kind::kOne, {}, {}, {}});
  }

  Id zero() const { return zero_; }
  Id one() const { return one_; }

  Id Test(const std::vector<bool>& atoms) {
    if (std::none_of(atoms.begin(), atoms.end(), [](bool b) { return b; })) {
      return zero_;
    }
    if (std::all_of(atoms.begin(), atoms.end(), [](bool b) { return b; })) {
      return one_;
    }
    return Intern({Kind::kTest, atoms, 0, {}});
  }

  Id Action(gkat::Action p) { return Intern({Kind::kAction, {}, p.index, {}}); }

  Id Sum(const std::vector<Id>& parts) {
    std::vector<Id> flat;
    for (Id p : parts) {
      if (nodes_[p].kind == Kind::kSum) {
        flat.insert(flat.end(), nodes_[p].children.begin(),
                    nodes_[p].children.end());
      } else if (p != zero_) {
        flat.push_back(p);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return zero_;
    if (flat.size() == 1) return flat[0];
    return Intern({Kind::kSum, {}, 0, std::move(flat)});
  }

  Id Seq(Id a, Id b) {
    if (a == zero_ || b == zero_) return zero_;
    if (a == one_) return b;
    if (b == one_) return a;
    if (nodes_[a].kind == Kind::kSeq) {
      const Id head = nodes_[a].children[0];
      const Id tail = nodes_[a].children[1];
      return Seq(head, Seq(tail, b));
    }
    return Intern({Kind::kSeq, {}, 0, {a, b}});
  }

  Id Star(Id a) {
    if (a == zero_ || a == one_) return one_;
    return Intern({Kind::kStar, {}, 0, {a}});
  }

  Id FromExp(const KatExp& k) {
    switch (k.kind()) {
      case KatExp::Kind::kZero:
        return zero_;
      case KatExp::Kind::kOne:
        return one_;
      case KatExp::Kind::kTest:
        return Test(satisfying_atoms(alphabet_, k.test()));
      case KatExp::Kind::kAction:
        return Action(k.action());
      case KatExp::Kind::kPlus:
        return Sum({FromExp(k.lhs()), FromExp(k.rhs())});
      case KatExp::Kind::kSeq:
        return Seq(FromExp(k.lhs()), FromExp(k.rhs()));
      case KatExp::Kind::kStar:
        return Star(FromExp(k.operand()));
    }
    throw InternalError("unhandled KAT term kind");
  }

  // epsilon(k)(atom).
  bool Output(Id k, Atom atom) {
    const Node& n = nodes_[k];
    switch (n.kind) {
      case Kind::kZero:
      case Kind::kAction:
        return false;
      case Kind::kOne:
      case Kind::kStar:
        return true;
      case Kind::kTest:
        return n.atoms[atom.index];
      case Kind::kSum:
        for (Id c : n.children) {
          if (Output(c, atom)) return true;
        }
        return false;
      case Kind::kSeq:
        return Output(n.children[0], atom) && Output(n.children[1], atom);
    }
    return false;
  }

  // D_{atom p}(k).
  Id Derive(Id k, Letter l) {
    const auto key = std::make_pair(k, alphabet_.letter_index(l));
    if (auto it = derivative_cache_.find(key); it != derivative_cache_.end()) {
      return it->second;
    }
    const Node n = nodes_[k];
    Id out = zero_;
    switch (n.kind) {
      case Kind::kZero:
      case Kind::kOne:
      case Kind::kTest:
        break;
      case Kind::kAction:
        out = n.action == l.action.index ? one_ : zero_;
        break;
      case Kind::kSum: {
        std::vector<Id> parts;
        for (Id c : n.children) parts.push_back(Derive(c, l));
        out = Sum(parts);
        break;
      }
      case Kind::kSeq: {
        const Id head = n.children[0];
        const Id tail = n.children[1];
        const Id left = Seq(Derive(head, l), tail);
        out = Output(head, l.atom) ? Sum({left, Derive(tail, l)}) : left;
        break;
      }
      case Kind::kStar:
        out = Seq(Derive(n.children[0], l), k);
        break;
    }
    derivative_cache_.emplace(key, out);
    return out;
  }

  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Kind kind;
    std::vector<bool> atoms;
    std::uint32_t action;
    std::vector<Id> children;
  };

  Id Intern(Node n) {
    auto key = std::make_tuple(n.kind, n.atoms, n.action, n.children);
    auto [it, inserted] = index_.emplace(std::move(key), nodes_.size());
    if (inserted) nodes_.push_back(std::move(n));
    return it->second;
  }

  const Alphabet& alphabet_;
  std::vector<Node> nodes_;
  std::map<std::tuple<Kind, std::vector<bool>, std::uint32_t, std::vector<Id>>,
           Id>
      index_;
  std::map<std::pair<Id, std::size_t>, Id> derivative_cache_;
  Id zero_ = 0;
  Id one_ = 0;
};

}  // namespace internal

// Moore automaton of the KAT term `k` via Brzozowski derivatives.
inline MooreAutomaton kat_moore_automaton(
    const KatExp& k, const Alphabet& alphabet,
    std::size_t state_limit = kDefaultStateLimit) {
  internal::KatTerms terms(alphabet);
  std::map<internal::KatTerms::Id, std::size_t> index;
  std::vector<internal::KatTerms::Id> states;
  auto intern = [&](internal::KatTerms::Id t) {
    auto [it, inserted] = index.emplace(t, states.size());
    if (inserted) {
      states.push_back(t);
      if (states.size() > state_limit) {
        throw CapacityError("derivative automaton exceeds " +
                            std::to_string(state_limit) + " states");
      }
    }
    return it->second;
  };
  intern(terms.FromExp(k));
  const auto letters = alphabet.letters();
  std::vector<std::uint32_t> next;
  std::vector<bool> output;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto term = states[s];
    for (const Letter& l : letters) {
      next.push_back(static_cast<std::uint32_t>(intern(terms.Derive(term, l))));
    }
    for (const Atom atom : alphabet.atoms()) {
      output.push_back(terms.Output(term, atom));
    }
  }
  const std::size_t n = states.size();
  return MooreAutomaton(alphabet, n, std::move(next), std::move(output), 0);
}

// ---------------------------------------------------------------------------
// Fixtures.

// Thompson automaton of (while b do p); do q over T = {b}, Sigma = {p, q}:
// x and y step under b with p to y and under !b with q to z; z accepts
// everything. Normal but not observable (x and y are bisimilar).
inline GkatAutomaton thompson_while_fixture() {
  const Alphabet alphabet({"b"}, {"p", "q"});
  const Action p{0};
  const Action q{1};
  constexpr std::size_t y = 1, z = 2;
  // Atom 0 is !b, atom 1 is b.
  std::vector<Outcome> delta = {
      Outcome::Step(q, z), Outcome::Step(p, y),  // x
      Outcome::Step(q, z), Outcome::Step(p, y),  // y
      Outcome::Accept(),   Outcome::Accept(),    // z
  };
  return GkatAutomaton(alphabet, 3, std::move(delta), 0);
}

}  // namespace gkat

#endif  // GKAT_CONSTRUCTIONS_HPP_
