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
// Core vocabulary: tests, actions, atoms, guarded strings and the abstract
// syntax of Boolean, GKAT and KAT expressions.
//
// Atoms are truth assignments over the ordered test set. An atom is stored as
// an index in [0, 2^n) whose most significant bit is the first test, so the
// numeric order on indices is the canonical atom order: lexicographic in test
// order with the negative literal first. For T = {b} this gives [!b, b].

#ifndef GKAT_SYNTAX_HPP_
#define GKAT_SYNTAX_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gkat/error.hpp"

namespace gkat {

inline constexpr std::size_t kDefaultAtomLimit = std::size_t{1} << 20;

struct Atom {
  std::uint32_t index = 0;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct Action {
  std::uint32_t index = 0;
  friend auto operator<=>(const Action&, const Action&) = default;
};

// One input letter of the Moore view, an element of At x Sigma.
struct Letter {
  Atom atom;
  Action action;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

namespace internal {

inline bool IsKeyword(std::string_view s) {
  static constexpr std::string_view kKeywords[] = {
      "do", "assert", "if", "then", "else", "while", "not", "and", "or"};
  return std::find(std::begin(kKeywords), std::end(kKeywords), s) !=
         std::end(kKeywords);
}

inline bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_' || u == '\'';
  });
}

template <class Tag>
class SymbolSet {
 public:
  SymbolSet() = default;
  explicit SymbolSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) {
        throw PreconditionError(std::string(Tag::kWhat) + " name is empty");
      }
      if (!IsIdentifier(names_[i]) || IsKeyword(names_[i])) {
        throw PreconditionError(std::string(Tag::kWhat) + " name '" +
                                names_[i] + "' is not a valid identifier");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) {
          throw PreconditionError("duplicate " + std::string(Tag::kWhat) +
                                  " name '" + names_[i] + "'");
        }
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

 private:
  std::vector<std::string> names_;
};

struct TestTag {
  static constexpr const char* kWhat = "test";
};
struct ActionTag {
  static constexpr const char* kWhat = "action";
};

}  // namespace internal

using TestSet = internal::SymbolSet<internal::TestTag>;
using ActionSet = internal::SymbolSet<internal::ActionTag>;

// 2^|T|, or CapacityError when that exceeds `limit`.
inline std::size_t atom_count(const TestSet& tests,
                              std::size_t limit = kDefaultAtomLimit) {
  if (tests.size() >= 31 || (std::size_t{1} << tests.size()) > limit) {
    throw CapacityError("atom count 2^" + std::to_string(tests.size()) +
                        " exceeds the limit of " + std::to_string(limit));
  }
  return std::size_t{1} << tests.size();
}

// All 2^|T| atoms in canonical order.
inline std::vector<Atom> atoms(const TestSet& tests,
                               std::size_t limit = kDefaultAtomLimit) {
  std::vector<Atom> out(atom_count(tests, limit));
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Atom{i};
  return out;
}

// Truth value of test `test` (0-based position in the test set) in `atom`.
inline bool atom_holds(const TestSet& tests, Atom atom, std::size_t test) {
  const std::size_t shift = tests.size() - 1 - test;
  return ((atom.index >> shift) & 1u) != 0;
}

// Tests and actions over which every other object is built. Tests and actions
// must be disjoint.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(TestSet tests, ActionSet actions,
           std::size_t atom_limit = kDefaultAtomLimit)
      : tests_(std::move(tests)), actions_(std::move(actions)) {
    for (const auto& t : tests_.names()) {
      if (actions_.find(t)) {
        throw PreconditionError("'" + t + "' is both a test and an action");
      }
    }
    num_atoms_ = atom_count(tests_, atom_limit);
  }
  Alphabet(std::vector<std::string> tests, std::vector<std::string> actions,
           std::size_t atom_limit = kDefaultAtomLimit)
      : Alphabet(TestSet(std::move(tests)), ActionSet(std::move(actions)),
                 atom_limit) {}

  const TestSet& tests() const { return tests_; }
  const ActionSet& actions() const { return actions_; }
  std::size_t num_atoms() const { return num_atoms_; }
  std::size_t num_actions() const { return actions_.size(); }
  std::size_t num_letters() const { return num_atoms_ * actions_.size(); }

  std::vector<Atom> atoms() const {
    std::vector<Atom> out(num_atoms_);
    for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Atom{i};
    return out;
  }

  // All letters in canonical order: by atom, then by action.
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(num_letters());
    for (std::uint32_t a = 0; a < num_atoms_; ++a) {
      for (std::uint32_t p = 0; p < actions_.size(); ++p) {
        out.push_back(Letter{Atom{a}, Action{p}});
      }
    }
    return out;
  }

  std::size_t letter_index(Letter l) const {
    return l.atom.index * actions_.size() + l.action.index;
  }
  Letter letter_at(std::size_t index) const {
    return Letter{Atom{static_cast<std::uint32_t>(index / actions_.size())},
                  Action{static_cast<std::uint32_t>(index % actions_.size())}};
  }

  bool holds(Atom atom, std::size_t test) const {
    return atom_holds(tests_, atom, test);
  }

  // "b", "!b", "t1&!t2"; the atom over the empty test set prints as "1".
  std::string format_atom(Atom atom) const {
    if (tests_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < tests_.size(); ++i) {
      if (i > 0) out += '&';
      if (!holds(atom, i)) out += '!';
      out += tests_.name(i);
    }
    return out;
  }
  const std::string& format_action(Action action) const {
    return actions_.name(action.index);
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.tests_ == b.tests_ && a.actions_ == b.actions_;
  }

 private:
  TestSet tests_;
  ActionSet actions_;
  std::size_t num_atoms_ = 1;
};

// A word in (At . Sigma)*, the guarded strings without terminating atom.
struct GuardedPrefix {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  GuardedPrefix operator+(const GuardedPrefix& other) const {
    GuardedPrefix out = *this;
    out.letters.insert(out.letters.end(), other.letters.begin(),
                       other.letters.end());
    return out;
  }
  GuardedPrefix operator+(Letter l) const {
    GuardedPrefix out = *this;
    out.letters.push_back(l);
    return out;
  }

  friend bool operator==(const GuardedPrefix&, const GuardedPrefix&) = default;
  // Shortlex: shorter words first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const GuardedPrefix& a,
                                          const GuardedPrefix& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end());
  }
};

// alpha_0 p_1 alpha_1 ... p_n alpha_n, stored as the (alpha_i, p_{i+1})
// letters followed by the terminating atom, so alternation holds by
// construction.
struct GuardedString {
  std::vector<Letter> letters;
  Atom last;

  GuardedString() = default;
  explicit GuardedString(Atom atom) : last(atom) {}
  GuardedString(GuardedPrefix prefix, Atom atom)
      : letters(std::move(prefix.letters)), last(atom) {}

  std::size_t num_actions() const { return letters.size(); }
  std::size_t num_atoms() const { return letters.size() + 1; }
  Atom first_atom() const { return letters.empty() ? last : letters[0].atom; }
  Atom atom(std::size_t i) const {
    return i < letters.size() ? letters[i].atom : last;
  }
  Action action(std::size_t i) const { return letters.at(i).action; }
  GuardedPrefix prefix() const { return GuardedPrefix{letters}; }

  friend bool operator==(const GuardedString&, const GuardedString&) = default;
  // Canonical order: by action count, then lexicographic on symbols.
  friend std::strong_ordering operator<=>(const GuardedString& a,
                                          const GuardedString& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(
            a.letters.begin(), a.letters.end(), b.letters.begin(),
            b.letters.end());
        c != 0) {
      return c;
    }
    return a.last <=> b.last;
  }
};

struct GuardedPrefixHash {
  std::size_t operator()(const GuardedPrefix& w) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const Letter& l : w.letters) {
      h ^= (std::size_t{l.atom.index} << 16) ^ l.action.index;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

struct GuardedStringHash {
  std::size_t operator()(const GuardedString& w) const {
    return GuardedPrefixHash{}(w.prefix()) * 31 + w.last.index;
  }
};

// Fusion product: v alpha <> beta w = v alpha w when alpha == beta,
// std::nullopt otherwise.
inline std::optional<GuardedString> fuse(const GuardedString& v,
                                         const GuardedString& w) {
  if (v.last != w.first_atom()) return std::nullopt;
  GuardedString out = v;
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  out.last = w.last;
  return out;
}

// suf(w b) = { v b | v in suf(w) }: every suffix that keeps the terminating
// atom, longest first. Exactly one per atom of `z`.
inline std::vector<GuardedString> suffixes_gs(const GuardedString& z) {
  std::vector<GuardedString> out;
  out.reserve(z.num_atoms());
  for (std::size_t i = 0; i <= z.letters.size(); ++i) {
    GuardedString s;
    s.letters.assign(z.letters.begin() + static_cast<std::ptrdiff_t>(i),
                     z.letters.end());
    s.last = z.last;
    out.push_back(std::move(s));
  }
  return out;
}

// suf(eps) = {eps}, suf(a w) = {a w} u suf(w); longest first.
inline std::vector<GuardedPrefix> suffixes_word(const GuardedPrefix& z) {
  std::vector<GuardedPrefix> out;
  out.reserve(z.size() + 1);
  for (std::size_t i = 0; i <= z.size(); ++i) {
    out.push_back(GuardedPrefix{std::vector<Letter>(
        z.letters.begin() + static_cast<std::ptrdiff_t>(i), z.letters.end())});
  }
  return out;
}

inline std::string format_word(const Alphabet& alphabet,
                               const GuardedPrefix& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet.format_atom(w.letters[i].atom);
    out += ' ';
    out += alphabet.format_action(w.letters[i].action);
  }
  return out;
}

inline std::string format_word(const Alphabet& alphabet,
                               const GuardedString& w) {
  std::string out;
  for (const Letter& l : w.letters) {
    out += alphabet.format_atom(l.atom);
    out += ' ';
    out += alphabet.format_action(l.action);
    out += ' ';
  }
  out += alphabet.format_atom(w.last);
  return out;
}

// ---------------------------------------------------------------------------
// Boolean expressions.

class BExp {
 public:
  enum class Kind { kZero, kOne, kTest, kAnd, kOr, kNot };

  static BExp Zero() { return BExp(Kind::kZero, 0, {}); }
  static BExp One() { return BExp(Kind::kOne, 0, {}); }
  static BExp Test(std::size_t test) { return BExp(Kind::kTest, test, {}); }
  static BExp And(BExp a, BExp b) {
    return BExp(Kind::kAnd, 0, {std::move(a), std::move(b)});
  }
  static BExp Or(BExp a, BExp b) {
    return BExp(Kind::kOr, 0, {std::move(a), std::move(b)});
  }
  static BExp Not(BExp a) { return BExp(Kind::kNot, 0, {std::move(a)}); }

  Kind kind() const { return node_->kind; }
  std::size_t test() const { return node_->test; }
  const BExp& lhs() const { return node_->children[0]; }
  const BExp& rhs() const { return node_->children[1]; }
  const BExp& operand() const { return node_->children[0]; }

  friend bool operator==(const BExp& a, const BExp& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::kZero:
      case Kind::kOne:
        return true;
      case Kind::kTest:
        return a.test() == b.test();
      case Kind::kNot:
        return a.operand() == b.operand();
      case Kind::kAnd:
      case Kind::kOr:
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
  }

 private:
  struct Node {
    Kind kind;
    std::size_t test;
    std::vector<BExp> children;
  };

  BExp(Kind kind, std::size_t test, std::vector<BExp> children)
      : node_(std::make_shared<const Node>(
            Node{kind, test, std::move(children)})) {}

  std::shared_ptr<const Node> node_;
};

// Decides alpha <= b by evaluating b under the assignment alpha.
inline bool atom_satisfies(const TestSet& tests, Atom atom, const BExp& b) {
  switch (b.kind()) {
    case BExp::Kind::kZero:
      return false;
    case BExp::Kind::kOne:
      return true;
    case BExp::Kind::kTest:
      return atom_holds(tests, atom, b.test());
    case BExp::Kind::kAnd:
      return atom_satisfies(tests, atom, b.lhs()) &&
             atom_satisfies(tests, atom, b.rhs());
    case BExp::Kind::kOr:
      return atom_satisfies(tests, atom, b.lhs()) ||
             atom_satisfies(tests, atom, b.rhs());
    case BExp::Kind::kNot:
      return !atom_satisfies(tests, atom, b.operand());
  }
  return false;
}

// [[b]] as a bitmap over the atoms of `alphabet`.
inline std::vector<bool> satisfying_atoms(const Alphabet& alphabet,
                                          const BExp& b) {
  std::vector<bool> out(alphabet.num_atoms());
  for (std::uint32_t a = 0; a < out.size(); ++a) {
    out[a] = atom_satisfies(alphabet.tests(), Atom{a}, b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GKAT expressions: do p | assert b | e; f | if b then e else f |
// while b do e.

class Exp {
 public:
  enum class Kind { kAction, kAssert, kSeq, kIf, kWhile };

  static Exp Act(Action p) { return Exp(Kind::kAction, p, {}, {}); }
  static Exp Assert(BExp b) { return Exp(Kind::kAssert, {}, std::move(b), {}); }
  static Exp Seq(Exp e, Exp f) {
    return Exp(Kind::kSeq, {}, {}, {std::move(e), std::move(f)});
  }
  static Exp If(BExp b, Exp e, Exp f) {
    return Exp(Kind::kIf, {}, std::move(b), {std::move(e), std::move(f)});
  }
  static Exp While(BExp b, Exp e) {
    return Exp(Kind::kWhile, {}, std::move(b), {std::move(e)});
  }

  Kind kind() const { return node_->kind; }
  Action action() const { return node_->action; }
  const BExp& guard() const { return *node_->guard; }
  // Seq: first ; second. If: then/else. While: body.
  const Exp& first() const { return node_->children[0]; }
  const Exp& second() const { return node_->children[1]; }
  const Exp& then_branch() const { return node_->children[0]; }
  const Exp& else_branch() const { return node_->children[1]; }
  const Exp& body() const { return node_->children[0]; }

  // Cheap identity test, used by the derivative construction.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Exp& a, const Exp& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::kAction:
        return a.action() == b.action();
      case Kind::kAssert:
        return a.guard() == b.guard();
      case Kind::kSeq:
        return a.first() == b.first() && a.second() == b.second();
      case Kind::kIf:
        return a.guard() == b.guard() && a.then_branch() == b.then_branch() &&
               a.else_branch() == b.else_branch();
      case Kind::kWhile:
        return a.guard() == b.guard() && a.body() == b.body();
    }
    return false;
  }

 private:
  struct Node {
    Kind kind;
    Action action;
    std::optional<BExp> guard;
    std::vector<Exp> children;
  };

  Exp(Kind kind, Action action, std::optional<BExp> guard,
      std::vector<Exp> children)
      : node_(std::make_shared<const Node>(
            Node{kind, action, std::move(guard), std::move(children)})) {}

  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// KAT expressions, the target of the standard embedding.

class KatExp {
 public:
  enum class Kind { kZero, kOne, kTest, kAction, kPlus, kSeq, kStar };

  static KatExp Zero() { return KatExp(Kind::kZero, {}, {}, {}); }
  static KatExp One() { return KatExp(Kind::kOne, {}, {}, {}); }
  static KatExp Test(BExp b) { return KatExp(Kind::kTest, {}, std::move(b), {}); }
  static KatExp Act(Action p) { return KatExp(Kind::kAction, p, {}, {}); }
  static KatExp Plus(KatExp a, KatExp b) {
    return KatExp(Kind::kPlus, {}, {}, {std::move(a), std::move(b)});
  }
  static KatExp Seq(KatExp a, KatExp b) {
    return KatExp(Kind::kSeq, {}, {}, {std::move(a), std::move(b)});
  }
  static KatExp Star(KatExp a) {
    return KatExp(Kind::kStar, {}, {}, {std::move(a)});
  }

  Kind kind() const { return node_->kind; }
  Action action() const { return node_->action; }
  const BExp& test() const { return *node_->test; }
  const KatExp& lhs() const { return node_->children[0]; }
  const KatExp& rhs() const { return node_->children[1]; }
  const KatExp& operand() const { return node_->children[0]; }

  friend bool operator==(const KatExp& a, const KatExp& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::kZero:
      case Kind::kOne:
        return true;
      case Kind::kTest:
        return a.test() == b.test();
      case Kind::kAction:
        return a.action() == b.action();
      case Kind::kStar:
        return a.operand() == b.operand();
      case Kind::kPlus:
      case Kind::kSeq:
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
  }

 private:
  struct Node {
    Kind kind;
    Action action;
    std::optional<BExp> test;
    std::vector<KatExp> children;
  };

  KatExp(Kind kind, Action action, std::optional<BExp> test,
         std::vector<KatExp> children)
      : node_(std::make_shared<const Node>(
            Node{kind, action, std::move(test), std::move(children)})) {}

  std::shared_ptr<const Node> node_;
};

namespace internal {

inline KatExp EmbedTest(const BExp& b) {
  switch (b.kind()) {
    case BExp::Kind::kZero:
      return KatExp::Zero();
    case BExp::Kind::kOne:
      return KatExp::One();
    default:
      return KatExp::Test(b);
  }
}

}  // namespace internal

// The standard embedding: e +_b f |-> b e + !b f and e^(b) |-> (b e)* !b.
inline KatExp embed_kat(const Exp& e) {
  switch (e.kind()) {
    case Exp::Kind::kAction:
      return KatExp::Act(e.action());
    case Exp::Kind::kAssert:
      return internal::EmbedTest(e.guard());
    case Exp::Kind::kSeq:
      return KatExp::Seq(embed_kat(e.first()), embed_kat(e.second()));
    case Exp::Kind::kIf:
      return KatExp::Plus(
          KatExp::Seq(internal::EmbedTest(e.guard()), embed_kat(e.then_branch())),
          KatExp::Seq(KatExp::Test(BExp::Not(e.guard())),
                      embed_kat(e.else_branch())));
    case Exp::Kind::kWhile:
      return KatExp::Seq(
          KatExp::Star(KatExp::Seq(internal::EmbedTest(e.guard()),
                                   embed_kat(e.body()))),
          KatExp::Test(BExp::Not(e.guard())));
  }
  throw InternalError("unhandled expression kind");
}

// ---------------------------------------------------------------------------
// Pretty printing. The output of to_string(Exp) parses back to the same tree.

namespace internal {

inline int BExpPrecedence(const BExp& b) {
  switch (b.kind()) {
    case BExp::Kind::kOr:
      return 1;
    case BExp::Kind::kAnd:
      return 2;
    case BExp::Kind::kNot:
      return 3;
    default:
      return 4;
  }
}

inline void PrintBExp(const TestSet& tests, const BExp& b, std::string& out);

inline void PrintBExpOperand(const TestSet& tests, const BExp& b, int min_prec,
                             std::string& out) {
  if (BExpPrecedence(b) < min_prec) {
    out += '(';
    PrintBExp(tests, b, out);
    out += ')';
  } else {
    PrintBExp(tests, b, out);
  }
}

inline void PrintBExp(const TestSet& tests, const BExp& b, std::string& out) {
  switch (b.kind()) {
    case BExp::Kind::kZero:
      out += '0';
      return;
    case BExp::Kind::kOne:
      out += '1';
      return;
    case BExp::Kind::kTest:
      out += tests.name(b.test());
      return;
    case BExp::Kind::kNot:
      out += "not ";
      PrintBExpOperand(tests, b.operand(), 3, out);
      return;
    case BExp::Kind::kAnd:
    case BExp::Kind::kOr: {
      // Left associative: the right operand needs strictly higher precedence.
      const int prec = BExpPrecedence(b);
      PrintBExpOperand(tests, b.lhs(), prec, out);
      out += b.kind() == BExp::Kind::kAnd ? " and " : " or ";
      PrintBExpOperand(tests, b.rhs(), prec + 1, out);
      return;
    }
  }
}

inline void PrintExp(const Alphabet& alphabet, const Exp& e, std::string& out);

// Operands of if/while and the left operand of ';' must not be a sequence.
inline void PrintUnit(const Alphabet& alphabet, const Exp& e, std::string& out) {
  if (e.kind() == Exp::Kind::kSeq) {
    out += '(';
    PrintExp(alphabet, e, out);
    out += ')';
  } else {
    PrintExp(alphabet, e, out);
  }
}

inline void PrintExp(const Alphabet& alphabet, const Exp& e, std::string& out) {
  switch (e.kind()) {
    case Exp::Kind::kAction:
      out += "do ";
      out += alphabet.format_action(e.action());
      return;
    case Exp::Kind::kAssert:
      out += "assert ";
      PrintBExp(alphabet.tests(), e.guard(), out);
      return;
    case Exp::Kind::kSeq:
      PrintUnit(alphabet, e.first(), out);
      out += "; ";
      PrintExp(alphabet, e.second(), out);
      return;
    case Exp::Kind::kIf:
      out += "if ";
      PrintBExp(alphabet.tests(), e.guard(), out);
      out += " then ";
      PrintUnit(alphabet, e.then_branch(), out);
      out += " else ";
      PrintUnit(alphabet, e.else_branch(), out);
      return;
    case Exp::Kind::kWhile:
      out += "while ";
      PrintBExp(alphabet.tests(), e.guard(), out);
      out += " do ";
      PrintUnit(alphabet, e.body(), out);
      return;
  }
}

inline void PrintKat(const Alphabet& alphabet, const KatExp& k, int min_prec,
                     std::string& out) {
  auto prec = [](const KatExp& x) {
    switch (x.kind()) {
      case KatExp::Kind::kPlus:
        return 1;
      case KatExp::Kind::kSeq:
        return 2;
      case KatExp::Kind::kStar:
        return 3;
      default:
        return 4;
    }
  };
  const bool parens = prec(k) < min_prec;
  if (parens) out += '(';
  switch (k.kind()) {
    case KatExp::Kind::kZero:
      out += '0';
      break;
    case KatExp::Kind::kOne:
      out += '1';
      break;
    case KatExp::Kind::kTest:
      out += '[';
      PrintBExp(alphabet.tests(), k.test(), out);
      out += ']';
      break;
    case KatExp::Kind::kAction:
      out += alphabet.format_action(k.action());
      break;
    case KatExp::Kind::kPlus:
      PrintKat(alphabet, k.lhs(), 1, out);
      out += " + ";
      PrintKat(alphabet, k.rhs(), 2, out);
      break;
    case KatExp::Kind::kSeq:
      PrintKat(alphabet, k.lhs(), 2, out);
      out += " . ";
      PrintKat(alphabet, k.rhs(), 3, out);
      break;
    case KatExp::Kind::kStar:
      PrintKat(alphabet, k.operand(), 4, out);
      out += '*';
      break;
  }
  if (parens) out += ')';
}

}  // namespace internal

inline std::string to_string(const TestSet& tests, const BExp& b) {
  std::string out;
  internal::PrintBExp(tests, b, out);
  return out;
}

inline std::string to_string(const Alphabet& alphabet, const Exp& e) {
  std::string out;
  internal::PrintExp(alphabet, e, out);
  return out;
}

inline std::string to_string(const Alphabet& alphabet, const KatExp& k) {
  std::string out;
  internal::PrintKat(alphabet, k, 0, out);
  return out;
}

}  // namespace gkat

#endif  // GKAT_SYNTAX_HPP_
