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

#ifndef GKAT_ERROR_HPP_
#define GKAT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkat {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed concrete syntax. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An identifier that is neither a declared test nor a declared action.
class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(const std::string& symbol, std::size_t position)
      : ParseError("unknown identifier '" + symbol + "'", position),
        symbol_(symbol) {}

  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

// A configured size limit (atoms, states, words) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// minimize() was handed an automaton with a transition into a dead state.
class NotNormalError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Something that the theory rules out happened anyway (teacher bug, broken
// table invariant, iteration cap reached).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gkat

#endif  // GKAT_ERROR_HPP_
