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
// L* for Moore automata with input alphabet At.Sigma and outputs in 2^At.
// Counterexamples are handled by adding all their suffixes as columns, so
// rows of S never coincide and no consistency check is needed. A cell is a
// function At -> 2 and costs one membership query per atom.

#ifndef GKAT_LSTAR_HPP_
#define GKAT_LSTAR_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gkat/automata.hpp"
#include "gkat/error.hpp"
#include "gkat/learning.hpp"
#include "gkat/syntax.hpp"
#include "gkat/teacher.hpp"

namespace gkat {

class LStarObservationTable {
 public:
  explicit LStarObservationTable(Alphabet alphabet)
      : alphabet_(std::move(alphabet)) {
    index_of_column_.emplace(GuardedPrefix{}, 0);
    columns_.push_back(GuardedPrefix{});
    upper_.push_back(GuardedPrefix{});
    AddRow(GuardedPrefix{});
    AddExtensions(GuardedPrefix{});
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<GuardedPrefix>& upper() const { return upper_; }
  const std::vector<GuardedPrefix>& lower() const { return lower_; }
  const std::vector<GuardedPrefix>& columns() const { return columns_; }
  bool has_row(const GuardedPrefix& t) const { return rows_.count(t) != 0; }

  // Output of cell (t, column) at `atom`; -1 while unknown.
  int cell(const GuardedPrefix& t, std::size_t column, Atom atom) const {
    return rows_.at(t).at(column * alphabet_.num_atoms() + atom.index);
  }
  const std::vector<std::int8_t>& row(const GuardedPrefix& t) const {
    return rows_.at(t);
  }
  std::size_t num_cells() const { return rows_.size() * columns_.size(); }

  std::vector<GuardedPrefix> add_columns(const std::vector<GuardedPrefix>& es) {
    std::vector<GuardedPrefix> added;
    for (const auto& e : es) {
      if (index_of_column_.count(e)) continue;
      index_of_column_.emplace(e, columns_.size());
      columns_.push_back(e);
      added.push_back(e);
      for (auto& [t, r] : rows_) r.insert(r.end(), alphabet_.num_atoms(), -1);
    }
    return added;
  }

  void promote(const GuardedPrefix& t) {
    auto it = std::find(lower_.begin(), lower_.end(), t);
    if (it == lower_.end()) {
      throw PreconditionError("only bottom rows can be promoted");
    }
    lower_.erase(it);
    upper_.push_back(t);
    AddExtensions(t);
  }

  // Queries t.e.a for every unknown cell (t, e) and every atom a.
  void fill(const std::function<bool(const GuardedString&)>& membership) {
    std::vector<GuardedPrefix> order = upper_;
    order.insert(order.end(), lower_.begin(), lower_.end());
    const std::size_t num_atoms = alphabet_.num_atoms();
    for (const auto& t : order) {
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (rows_.at(t)[j * num_atoms] != -1) continue;
        for (std::uint32_t a = 0; a < num_atoms; ++a) {
          const bool bit = membership(GuardedString(t + columns_[j], Atom{a}));
          rows_.at(t)[j * num_atoms + a] = bit ? 1 : 0;
        }
      }
    }
  }

  // First bottom row that equals no row of S.
  std::optional<GuardedPrefix> closedness_defect() const {
    for (const auto& t : lower_) {
      if (!FindUpper(row(t))) return t;
    }
    return std::nullopt;
  }
  bool is_closed() const { return !closedness_defect(); }

  // State i is upper()[i]; its output is the eps column.
  MooreAutomaton build_hypothesis() const {
    const auto letters = alphabet_.letters();
    const std::size_t num_atoms = alphabet_.num_atoms();
    std::vector<std::uint32_t> next;
    std::vector<bool> output;
    for (const auto& s : upper_) {
      for (const Letter& l : letters) {
        auto target = FindUpper(row(s + l));
        if (!target) throw PreconditionError("table is not closed");
        next.push_back(static_cast<std::uint32_t>(*target));
      }
      for (std::uint32_t a = 0; a < num_atoms; ++a) {
        const int bit = row(s)[a];
        if (bit < 0) throw PreconditionError("table has unknown cells");
        output.push_back(bit == 1);
      }
    }
    return MooreAutomaton(alphabet_, upper_.size(), std::move(next),
                          std::move(output), 0);
  }

  std::string to_csv() const {
    std::ostringstream out;
    out << "row,part";
    for (const auto& e : columns_) out << "," << format_word(alphabet_, e);
    out << "\n";
    const std::size_t num_atoms = alphabet_.num_atoms();
    auto emit = [&](const GuardedPrefix& t, const char* part) {
      out << format_word(alphabet_, t) << "," << part;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        // "1b + 0!b" style, positive atoms first.
        std::string value;
        for (std::size_t a = num_atoms; a-- > 0;) {
          if (!value.empty()) value += " + ";
          const int bit = row(t)[j * num_atoms + a];
          value += (bit < 0 ? "?" : std::to_string(bit)) +
                   alphabet_.format_atom(Atom{static_cast<std::uint32_t>(a)});
        }
        out << "," << value;
      }
      out << "\n";
    };
    for (const auto& s : upper_) emit(s, "S");
    for (const auto& t : lower_) emit(t, "SA");
    return out.str();
  }

 private:
  void AddRow(const GuardedPrefix& t) {
    rows_.emplace(t, std::vector<std::int8_t>(
                         columns_.size() * alphabet_.num_atoms(), -1));
  }

  void AddExtensions(const GuardedPrefix& s) {
    for (const Letter& l : alphabet_.letters()) {
      const GuardedPrefix t = s + l;
      if (rows_.count(t)) continue;
      AddRow(t);
      lower_.push_back(t);
    }
  }

  std::optional<std::size_t> FindUpper(const std::vector<std::int8_t>& cells) const {
    for (std::size_t i = 0; i < upper_.size(); ++i) {
      if (row(upper_[i]) == cells) return i;
    }
    return std::nullopt;
  }

  Alphabet alphabet_;
  std::vector<GuardedPrefix> upper_;
  std::vector<GuardedPrefix> lower_;
  std::vector<GuardedPrefix> columns_;
  std::map<GuardedPrefix, std::size_t> index_of_column_;
  std::map<GuardedPrefix, std::vector<std::int8_t>> rows_;
};

enum class LStarEvent { kFilled, kPromoted, kColumnsAdded, kHypothesis };

using LStarObserver =
    std::function<void(LStarEvent, const LStarObservationTable&)>;

struct LStarResult {
  MooreAutomaton automaton;
  QueryStats stats;
  LStarObservationTable table;
};

// Learns the minimal Moore automaton of the teacher's language.
inline LStarResult lstar_moore(MooreTeacher& teacher,
                               const LearnOptions& options = {},
                               const LStarObserver& observer = {}) {
  const Alphabet& alphabet = teacher.alphabet();
  LStarObservationTable table(alphabet);
  QueryStats stats;
  std::map<GuardedString, bool> memo;
  auto trace = [&](const std::string& line) {
    if (options.trace) options.trace(line);
  };
  auto notify = [&](LStarEvent event) {
    if (observer) observer(event, table);
  };
  auto query = [&](const GuardedString& w) {
    if (options.cache) {
      if (auto it = memo.find(w); it != memo.end()) {
        ++stats.cache_hits;
        return it->second;
      }
    }
    const bool bit = teacher.membership(w);
    ++stats.membership_to_L;
    if (options.cache) memo.emplace(w, bit);
    trace("QUERY " + format_word(alphabet, w) + " -> " + (bit ? "1" : "0"));
    return bit;
  };
  const std::size_t cap = 10 * (teacher.size_hint() + 1);
  std::size_t steps = 0;
  auto tick = [&] {
    if (++steps > cap) {
      throw InternalError("L* exceeded its iteration cap of " +
                          std::to_string(cap));
    }
  };

  table.fill(query);
  notify(LStarEvent::kFilled);
  while (true) {
    while (auto t = table.closedness_defect()) {
      tick();
      trace("PROMOTE " + format_word(alphabet, *t));
      table.promote(*t);
      ++stats.promotions;
      table.fill(query);
      notify(LStarEvent::kPromoted);
    }
    tick();
    MooreAutomaton hypothesis = table.build_hypothesis();
    stats.hypothesis_sizes.push_back(hypothesis.num_states());
    trace("HYPOTHESIS " + std::to_string(hypothesis.num_states()) + " states");
    notify(LStarEvent::kHypothesis);
    ++stats.equivalence;
    auto z = teacher.equivalence(hypothesis);
    if (!z) {
      trace("EQUIV -> Yes");
      stats.columns = table.columns().size();
      return LStarResult{std::move(hypothesis), stats, table};
    }
    trace("EQUIV -> No(" + format_word(alphabet, *z) + ")");
    const auto added = table.add_columns(suffixes_word(*z));
    stats.columns_added += added.size();
    std::string line = "COLUMNS {";
    for (std::size_t i = 0; i < added.size(); ++i) {
      if (i > 0) line += ", ";
      line += format_word(alphabet, added[i]);
    }
    trace(line + "}");
    table.fill(query);
    notify(LStarEvent::kColumnsAdded);
  }
}

}  // namespace gkat

#endif  // GKAT_LSTAR_HPP_
