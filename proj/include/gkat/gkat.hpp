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

#ifndef GKAT_GKAT_HPP_
#define GKAT_GKAT_HPP_

#include "gkat/automata.hpp"
#include "gkat/bench.hpp"
#include "gkat/constructions.hpp"
#include "gkat/dot.hpp"
#include "gkat/error.hpp"
#include "gkat/glstar.hpp"
#include "gkat/language.hpp"
#include "gkat/learning.hpp"
#include "gkat/lstar.hpp"
#include "gkat/parser.hpp"
#include "gkat/syntax.hpp"
#include "gkat/teacher.hpp"

#endif  // GKAT_GKAT_HPP_
