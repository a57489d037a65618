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
// Recursive-descent parser for the imperative concrete syntax:
//
//   bexp := "0" | "1" | test | "not" bexp | bexp "and" bexp | bexp "or" bexp
//         | "(" bexp ")"
//   exp  := unit (";" exp)?
//   unit := "do" action | action | "assert" bexp
//         | "if" bexp "then" exp "else" unit | "while" bexp "do" unit
//         | "(" exp ")"
//
// Precedence is not > and > or, both binary Boolean operators associate to
// the left and ";" associates to the right. Loop bodies and else branches
// extend only over a single unit, so "while b do p; q" runs q after the loop.
// A bare action name is shorthand for "do action".

#ifndef GKAT_PARSER_HPP_
#define GKAT_PARSER_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gkat/error.hpp"
#include "gkat/syntax.hpp"

namespace gkat {
namespace internal {

struct Token {
  enum class Kind { kIdent, kZero, kOne, kLParen, kRParen, kSemi, kEnd };
  Kind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '(') {
      out.push_back({Token::Kind::kLParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Kind::kRParen, ")", start});
      ++i;
    } else if (c == ';') {
      out.push_back({Token::Kind::kSemi, ";", start});
      ++i;
    } else if (std::isalpha(c) || c == '_') {
      while (i < text.size()) {
        const auto d = static_cast<unsigned char>(text[i]);
        if (!(std::isalnum(d) || d == '_' || d == '\'')) break;
        ++i;
      }
      out.push_back(
          {Token::Kind::kIdent, std::string(text.substr(start, i - start)), start});
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      const std::string_view num = text.substr(start, i - start);
      if (num == "0") {
        out.push_back({Token::Kind::kZero, "0", start});
      } else if (num == "1") {
        out.push_back({Token::Kind::kOne, "1", start});
      } else {
        throw ParseError("unexpected number '" + std::string(num) + "'", start);
      }
    } else {
      throw ParseError(std::string("unexpected character '") + text[i] + "'",
                       start);
    }
  }
  out.push_back({Token::Kind::kEnd, "", text.size()});
  return out;
}

class ExpParser {
 public:
  ExpParser(std::string_view text, const Alphabet& alphabet)
      : tokens_(Tokenize(text)), alphabet_(alphabet) {}

  Exp ParseProgram() {
    Exp e = ParseExp();
    Expect(Token::Kind::kEnd, "end of input");
    return e;
  }

  BExp ParseBooleanOnly() {
    BExp b = ParseOr();
    Expect(Token::Kind::kEnd, "end of input");
    return b;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  bool PeekKeyword(std::string_view kw) const {
    return Peek().kind == Token::Kind::kIdent && Peek().text == kw;
  }

  void Expect(Token::Kind kind, std::string_view what) {
    if (Peek().kind != kind) Fail(what);
    ++pos_;
  }

  void ExpectKeyword(std::string_view kw) {
    if (!PeekKeyword(kw)) Fail("'" + std::string(kw) + "'");
    ++pos_;
  }

  [[noreturn]] void Fail(std::string_view expected) const {
    const Token& t = Peek();
    const std::string found =
        t.kind == Token::Kind::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError("expected " + std::string(expected) + " but found " + found,
                     t.pos);
  }

  Exp ParseExp() {
    Exp head = ParseUnit();
    if (Peek().kind == Token::Kind::kSemi) {
      ++pos_;
      return Exp::Seq(std::move(head), ParseExp());
    }
    return head;
  }

  Exp ParseUnit() {
    const Token& t = Peek();
    if (t.kind == Token::Kind::kLParen) {
      ++pos_;
      Exp e = ParseExp();
      Expect(Token::Kind::kRParen, "')'");
      return e;
    }
    if (t.kind != Token::Kind::kIdent) Fail("a program");
    if (t.text == "do") {
      ++pos_;
      return Exp::Act(ParseActionName());
    }
    if (t.text == "assert") {
      ++pos_;
      return Exp::Assert(ParseOr());
    }
    if (t.text == "if") {
      ++pos_;
      BExp guard = ParseOr();
      ExpectKeyword("then");
      Exp yes = ParseExp();
      ExpectKeyword("else");
      Exp no = ParseUnit();
      return Exp::If(std::move(guard), std::move(yes), std::move(no));
    }
    if (t.text == "while") {
      ++pos_;
      BExp guard = ParseOr();
      ExpectKeyword("do");
      Exp body = ParseUnit();
      return Exp::While(std::move(guard), std::move(body));
    }
    if (IsKeyword(t.text)) Fail("a program");
    return Exp::Act(ParseActionName());
  }

  Action ParseActionName() {
    const Token& t = Peek();
    if (t.kind != Token::Kind::kIdent || IsKeyword(t.text)) Fail("an action");
    if (auto idx = alphabet_.actions().find(t.text)) {
      ++pos_;
      return Action{static_cast<std::uint32_t>(*idx)};
    }
    if (alphabet_.tests().find(t.text)) {
      throw ParseError("'" + t.text + "' is a test, expected an action", t.pos);
    }
    throw UnknownIdentifierError(t.text, t.pos);
  }

  BExp ParseOr() {
    BExp lhs = ParseAnd();
    while (PeekKeyword("or")) {
      ++pos_;
      lhs = BExp::Or(std::move(lhs), ParseAnd());
    }
    return lhs;
  }

  BExp ParseAnd() {
    BExp lhs = ParseNot();
    while (PeekKeyword("and")) {
      ++pos_;
      lhs = BExp::And(std::move(lhs), ParseNot());
    }
    return lhs;
  }

  BExp ParseNot() {
    if (PeekKeyword("not")) {
      ++pos_;
      return BExp::Not(ParseNot());
    }
    return ParseBAtom();
  }

  BExp ParseBAtom() {
    const Token& t = Peek();
    switch (t.kind) {
      case Token::Kind::kZero:
        ++pos_;
        return BExp::Zero();
      case Token::Kind::kOne:
        ++pos_;
        return BExp::One();
      case Token::Kind::kLParen: {
        ++pos_;
        BExp b = ParseOr();
        Expect(Token::Kind::kRParen, "')'");
        return b;
      }
      case Token::Kind::kIdent: {
        if (IsKeyword(t.text)) Fail("a test");
        if (auto idx = alphabet_.tests().find(t.text)) {
          ++pos_;
          return BExp::Test(*idx);
        }
        if (alphabet_.actions().find(t.text)) {
          throw ParseError("'" + t.text + "' is an action, expected a test",
                           t.pos);
        }
        throw UnknownIdentifierError(t.text, t.pos);
      }
      default:
        Fail("a test");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Alphabet& alphabet_;
};

// Splits on whitespace, remembering offsets.
inline std::vector<std::pair<std::string, std::size_t>> SplitWords(
    std::string_view text) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(std::string(text.substr(start, i - start)), start);
  }
  return out;
}

inline Atom ParseAtomToken(const Alphabet& alphabet, const std::string& token,
                           std::size_t pos) {
  if (alphabet.tests().empty()) {
    if (token == "1") return Atom{0};
    throw ParseError("expected the atom '1' over the empty test set", pos);
  }
  std::vector<int> value(alphabet.tests().size(), -1);
  std::size_t i = 0;
  while (i <= token.size()) {
    std::size_t end = token.find('&', i);
    if (end == std::string::npos) end = token.size();
    std::string lit = token.substr(i, end - i);
    const bool negative = !lit.empty() && lit[0] == '!';
    if (negative) lit.erase(0, 1);
    auto idx = alphabet.tests().find(lit);
    if (!idx) throw UnknownIdentifierError(lit, pos + i);
    if (value[*idx] != -1) {
      throw ParseError("test '" + lit + "' assigned twice in atom", pos + i);
    }
    value[*idx] = negative ? 0 : 1;
    i = end + 1;
  }
  std::uint32_t index = 0;
  for (std::size_t t = 0; t < value.size(); ++t) {
    if (value[t] == -1) {
      throw ParseError("atom '" + token + "' does not assign test '" +
                           alphabet.tests().name(t) + "'",
                       pos);
    }
    index = (index << 1) | static_cast<std::uint32_t>(value[t]);
  }
  return Atom{index};
}

inline Action ParseActionToken(const Alphabet& alphabet, const std::string& token,
                               std::size_t pos) {
  auto idx = alphabet.actions().find(token);
  if (!idx) throw UnknownIdentifierError(token, pos);
  return Action{static_cast<std::uint32_t>(*idx)};
}

}  // namespace internal

// Parses a program in the concrete syntax above. Identifiers are resolved
// against `alphabet`.
inline Exp parse_exp(std::string_view text, const Alphabet& alphabet) {
  return internal::ExpParser(text, alphabet).ParseProgram();
}

inline BExp parse_bexp(std::string_view text, const Alphabet& alphabet) {
  return internal::ExpParser(text, alphabet).ParseBooleanOnly();
}

// Reads the format produced by format_word: whitespace separated atoms and
// actions, e.g. "b p !b q b". Atoms list every test, negated ones with '!',
// joined by '&'.
inline GuardedString parse_guarded_string(std::string_view text,
                                          const Alphabet& alphabet) {
  const auto words = internal::SplitWords(text);
  if (words.empty() || words.size() % 2 == 0) {
    throw ParseError("a guarded string alternates atoms and actions and ends "
                     "with an atom",
                     text.size());
  }
  GuardedString out;
  for (std::size_t i = 0; i + 1 < words.size(); i += 2) {
    out.letters.push_back(
        Letter{internal::ParseAtomToken(alphabet, words[i].first, words[i].second),
               internal::ParseActionToken(alphabet, words[i + 1].first,
                                          words[i + 1].second)});
  }
  out.last = internal::ParseAtomToken(alphabet, words.back().first,
                                      words.back().second);
  return out;
}

// "eps" or the empty string denote the empty word.
inline GuardedPrefix parse_guarded_prefix(std::string_view text,
                                          const Alphabet& alphabet) {
  auto words = internal::SplitWords(text);
  if (words.size() == 1 && words[0].first == "eps") words.clear();
  if (words.size() % 2 != 0) {
    throw ParseError("a word over At.Sigma has an even number of symbols",
                     text.size());
  }
  GuardedPrefix out;
  for (std::size_t i = 0; i < words.size(); i += 2) {
    out.letters.push_back(
        Letter{internal::ParseAtomToken(alphabet, words[i].first, words[i].second),
               internal::ParseActionToken(alphabet, words[i + 1].first,
                                          words[i + 1].second)});
  }
  return out;
}

}  // namespace gkat

#endif  // GKAT_PARSER_HPP_
