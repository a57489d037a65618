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
// Options and statistics shared by both learners.

#ifndef GKAT_LEARNING_HPP_
#define GKAT_LEARNING_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gkat {

enum class CounterexampleMode {
  // Add every suffix of the counterexample as a column.
  kSuffix,
  // Add only the suffixes of the shortest suffix that still exposes a
  // defect (GL* only; L* ignores this setting).
  kOptimized,
};

struct QueryStats {
  // Membership queries actually sent to the teacher.
  std::size_t membership_to_L = 0;
  // Cells set to 0 from determinism alone, without a query.
  std::size_t zero_filled = 0;
  std::size_t equivalence = 0;
  std::vector<std::size_t> hypothesis_sizes;
  // Final number of columns, and how many counterexample handling added.
  std::size_t columns = 0;
  std::size_t columns_added = 0;
  std::size_t promotions = 0;
  // Occurrences of a counterexample whose extended table was closed without
  // promotion, and how many of them broke the expected row(eps) pattern.
  std::size_t progress_checks = 0;
  std::size_t progress_violations = 0;
  // Answers served from the optional memo instead of the teacher.
  std::size_t cache_hits = 0;

  // membership_to_L + zero_filled: the number of table cells that were
  // decided, whether by a query or by deduction.
  std::size_t cells() const { return membership_to_L + zero_filled; }
};

struct LearnOptions {
  CounterexampleMode cx = CounterexampleMode::kSuffix;
  // GL*: deduce zero cells from determinism instead of querying them.
  bool zero_fill = true;
  // Remember answers so a repeated word is asked only once.
  bool cache = false;
  // Check the table invariants after every mutation; a failure raises
  // InternalError.
  bool check_invariants = false;
  // One line per event (QUERY, PROMOTE, COLUMNS, HYPOTHESIS, EQUIV).
  std::function<void(const std::string&)> trace;
};

}  // namespace gkat

#endif  // GKAT_LEARNING_HPP_
