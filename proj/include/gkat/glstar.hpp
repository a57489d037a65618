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
// GL*: active learning of GKAT automata with boolean observation tables.
//
// Rows are indexed by S (top) and S.At.Sigma (bottom), columns by E, a set of
// guarded strings that starts out as At. Cells are filled row by row in
// insertion order, columns in insertion order. With zero-filling enabled, a
// cell of row s.a.p is set to 0 without a query when row(s)(a) = 1 or when
// some sibling row s.a.q (q != p) already holds a 1; determinism of the
// target makes both deductions sound.

#ifndef GKAT_GLSTAR_HPP_
#define GKAT_GLSTAR_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gkat/automata.hpp"
#include "gkat/error.hpp"
#include "gkat/language.hpp"
#include "gkat/learning.hpp"
#include "gkat/syntax.hpp"
#include "gkat/teacher.hpp"

namespace gkat {

using MembershipFn = std::function<bool(const GuardedString&)>;

inline GuardedString concat(const GuardedPrefix& t, const GuardedString& e) {
  return GuardedString(t + e.prefix(), e.last);
}

class GlObservationTable {
 public:
  explicit GlObservationTable(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
    for (const Atom a : alphabet_.atoms()) {
      index_of_column_.emplace(GuardedString(a), columns_.size());
      columns_.push_back(GuardedString(a));
    }
    upper_.push_back(GuardedPrefix{});
    AddRow(GuardedPrefix{});
    AddExtensions(GuardedPrefix{});
  }

  const Alphabet& alphabet() const { return alphabet_; }
  // S, in insertion order. Hypothesis state i is upper()[i].
  const std::vector<GuardedPrefix>& upper() const { return upper_; }
  // S.At.Sigma minus S, in insertion order.
  const std::vector<GuardedPrefix>& lower() const { return lower_; }
  // E, in insertion order.
  const std::vector<GuardedString>& columns() const { return columns_; }

  bool in_upper(const GuardedPrefix& t) const {
    return std::find(upper_.begin(), upper_.end(), t) != upper_.end();
  }
  bool has_row(const GuardedPrefix& t) const { return rows_.count(t) != 0; }

  // -1 while unknown.
  int cell(const GuardedPrefix& t, std::size_t column) const {
    return rows_.at(t).cells.at(column);
  }
  bool deduced(const GuardedPrefix& t, std::size_t column) const {
    return rows_.at(t).deduced.at(column);
  }
  std::optional<std::size_t> column_index(const GuardedString& e) const {
    auto it = index_of_column_.find(e);
    if (it == index_of_column_.end()) return std::nullopt;
    return it->second;
  }
  const std::vector<std::int8_t>& row(const GuardedPrefix& t) const {
    return rows_.at(t).cells;
  }
  bool row_nonzero(const GuardedPrefix& t) const {
    const auto& cells = row(t);
    return std::find(cells.begin(), cells.end(), 1) != cells.end();
  }
  std::size_t num_cells() const { return rows_.size() * columns_.size(); }

  // Appends the columns of `es` that are not present yet; returns them.
  std::vector<GuardedString> add_columns(const std::vector<GuardedString>& es) {
    std::vector<GuardedString> added;
    for (const auto& e : es) {
      if (index_of_column_.count(e)) continue;
      index_of_column_.emplace(e, columns_.size());
      columns_.push_back(e);
      added.push_back(e);
      for (auto& [t, r] : rows_) {
        r.cells.push_back(-1);
        r.deduced.push_back(false);
      }
    }
    return added;
  }

  // Moves a bottom row into S and creates its one-letter extensions.
  void promote(const GuardedPrefix& t) {
    auto it = std::find(lower_.begin(), lower_.end(), t);
    if (it == lower_.end()) {
      throw PreconditionError("only bottom rows can be promoted");
    }
    lower_.erase(it);
    upper_.push_back(t);
    AddExtensions(t);
  }

  // Is cell (t, column) forced to 0 by a known 1 elsewhere?
  bool deducible(const GuardedPrefix& t) const {
    if (t.empty()) return false;
    GuardedPrefix parent{
        std::vector<Letter>(t.letters.begin(), t.letters.end() - 1)};
    const Letter last = t.letters.back();
    auto pit = rows_.find(parent);
    if (pit == rows_.end()) return false;
    if (pit->second.cells[last.atom.index] == 1) return true;
    for (std::uint32_t q = 0; q < alphabet_.num_actions(); ++q) {
      if (q == last.action.index) continue;
      auto sit = rows_.find(parent + Letter{last.atom, Action{q}});
      if (sit == rows_.end()) continue;
      const auto& cells = sit->second.cells;
      if (std::find(cells.begin(), cells.end(), 1) != cells.end()) return true;
    }
    return false;
  }

  // Sets every currently deducible unknown cell to 0; returns how many.
  std::size_t zero_fill() {
    std::size_t count = 0;
    for (const auto& t : FillOrder()) {
      Row& r = rows_.at(t);
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (r.cells[j] != -1 || !deducible(t)) continue;
        r.cells[j] = 0;
        r.deduced[j] = true;
        ++count;
      }
    }
    return count;
  }

  // Fills every unknown cell. With `zero_fill`, deducible cells are set to 0
  // as they are reached instead of being queried. Returns the number of
  // deduced cells.
  std::size_t fill(const MembershipFn& membership, bool zero_fill) {
    std::size_t count = 0;
    for (const auto& t : FillOrder()) {
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (rows_.at(t).cells[j] != -1) continue;
        if (zero_fill && deducible(t)) {
          rows_.at(t).cells[j] = 0;
          rows_.at(t).deduced[j] = true;
          ++count;
          continue;
        }
        const bool bit = membership(concat(t, columns_[j]));
        rows_.at(t).cells[j] = bit ? 1 : 0;
      }
    }
    return count;
  }

  bool complete() const {
    for (const auto& [t, r] : rows_) {
      if (std::find(r.cells.begin(), r.cells.end(), -1) != r.cells.end()) {
        return false;
      }
    }
    return true;
  }

  // First bottom row with a 1 that matches no row of S.
  std::optional<GuardedPrefix> closedness_defect() const {
    for (const auto& t : lower_) {
      if (!row_nonzero(t)) continue;
      if (!FindUpper(row(t))) return t;
    }
    return std::nullopt;
  }
  bool is_closed() const { return !closedness_defect(); }

  // m(T): one state per row of S (state i is upper()[i]), initial row(eps).
  GkatAutomaton build_hypothesis() const {
    if (!complete()) throw PreconditionError("table has unknown cells");
    const std::size_t num_atoms = alphabet_.num_atoms();
    std::vector<Outcome> delta;
    delta.reserve(upper_.size() * num_atoms);
    for (const auto& s : upper_) {
      for (std::uint32_t a = 0; a < num_atoms; ++a) {
        std::optional<Outcome> out;
        for (std::uint32_t p = 0; p < alphabet_.num_actions(); ++p) {
          const GuardedPrefix t = s + Letter{Atom{a}, Action{p}};
          if (!row_nonzero(t)) continue;
          auto target = FindUpper(row(t));
          if (!target) throw PreconditionError("table is not closed");
          if (out) throw InternalError("table is not deterministic");
          out = Outcome::Step(Action{p}, *target);
        }
        if (row(s)[a] == 1) {
          if (out) throw InternalError("table is not deterministic");
          out = Outcome::Accept();
        }
        delta.push_back(out.value_or(Outcome::Reject()));
      }
    }
    return GkatAutomaton(alphabet_, upper_.size(), std::move(delta), 0);
  }

  // First violated table invariant, if any.
  std::optional<std::string> check_invariants() const {
    if (upper_.empty() || !upper_[0].empty()) return "eps is not the first row of S";
    for (const Atom a : alphabet_.atoms()) {
      if (!index_of_column_.count(GuardedString(a))) return "E does not contain At";
    }
    for (const auto& e : columns_) {
      for (const auto& suffix : suffixes_gs(e)) {
        if (!index_of_column_.count(suffix)) return "E is not suffix-closed";
      }
    }
    for (const auto& s : upper_) {
      if (s.empty()) continue;
      GuardedPrefix parent{
          std::vector<Letter>(s.letters.begin(), s.letters.end() - 1)};
      if (!in_upper(parent)) return "S is not prefix-closed";
    }
    for (std::size_t i = 0; i < upper_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (row(upper_[i]) == row(upper_[j])) return "two rows of S coincide";
      }
      if (i > 0 && !row_nonzero(upper_[i])) return "a row of S besides eps is zero";
    }
    for (const auto& s : upper_) {
      for (const Letter& l : alphabet_.letters()) {
        const GuardedPrefix t = s + l;
        for (std::size_t j = 0; j < columns_.size(); ++j) {
          GuardedString longer = columns_[j];
          longer.letters.insert(longer.letters.begin(), l);
          auto k = column_index(longer);
          if (!k) continue;
          if (cell(t, j) != -1 && cell(s, *k) != -1 && cell(t, j) != cell(s, *k)) {
            return "row(s a p)(e) differs from row(s)(a p e)";
          }
        }
      }
    }
    for (const auto& [t, r] : rows_) {
      BoundedLanguage language;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (r.cells[j] == 1) {
          language.words.insert(columns_[j]);
          language.bound = std::max(language.bound, columns_[j].num_actions());
        }
      }
      if (!is_deterministic(language)) return "a row is not deterministic";
    }
    return std::nullopt;
  }

  std::string to_csv() const {
    std::ostringstream out;
    out << "row,part";
    for (const auto& e : columns_) out << "," << format_word(alphabet_, e);
    out << "\n";
    auto emit = [&](const GuardedPrefix& t, const char* part) {
      out << format_word(alphabet_, t) << "," << part;
      for (std::int8_t c : row(t)) out << "," << (c < 0 ? "?" : std::to_string(c));
      out << "\n";
    };
    for (const auto& s : upper_) emit(s, "S");
    for (const auto& t : lower_) emit(t, "SA");
    return out.str();
  }

 private:
  struct Row {
    std::vector<std::int8_t> cells;
    std::vector<bool> deduced;
  };

  void AddRow(const GuardedPrefix& t) {
    rows_.emplace(t, Row{std::vector<std::int8_t>(columns_.size(), -1),
                         std::vector<bool>(columns_.size(), false)});
  }

  void AddExtensions(const GuardedPrefix& s) {
    for (const Letter& l : alphabet_.letters()) {
      const GuardedPrefix t = s + l;
      if (rows_.count(t)) continue;
      AddRow(t);
      lower_.push_back(t);
    }
  }

  std::vector<GuardedPrefix> FillOrder() const {
    std::vector<GuardedPrefix> order = upper_;
    order.insert(order.end(), lower_.begin(), lower_.end());
    return order;
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
  std::vector<GuardedString> columns_;
  std::map<GuardedString, std::size_t> index_of_column_;
  std::map<GuardedPrefix, Row> rows_;
};

// Shortest suffix z' of z = v a p z' such that the hypothesis state reached
// by v, which stands for the S-row s_v, disagrees with the target on a p z'
// after s_v. Suffixes whose v cannot be traced through the hypothesis are
// skipped. A single-atom z is returned unchanged.
inline GuardedString optimized_counterexample(const GlObservationTable& table,
                                              const GuardedString& z,
                                              const GkatAutomaton& hypothesis,
                                              const MembershipFn& membership) {
  const std::size_t n = z.num_actions();
  if (n == 0) return z;
  for (std::size_t k = n; k-- > 0;) {
    std::size_t state = hypothesis.initial();
    bool traced = true;
    for (std::size_t i = 0; i < k && traced; ++i) {
      const Outcome& o = hypothesis.delta(state, z.letters[i].atom);
      traced = o.is_step() && o.action == z.letters[i].action;
      if (traced) state = o.target;
    }
    if (!traced) continue;
    GuardedString rest;
    rest.letters.assign(z.letters.begin() + static_cast<std::ptrdiff_t>(k),
                        z.letters.end());
    rest.last = z.last;
    const bool predicted = accepts_gkat(hypothesis, state, rest);
    const bool actual = membership(concat(table.upper().at(state), rest));
    if (predicted != actual) {
      GuardedString tail;
      tail.letters.assign(z.letters.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                          z.letters.end());
      tail.last = z.last;
      return tail;
    }
  }
  throw InternalError("no suffix of the counterexample exposes a defect");
}

enum class GlEvent { kFilled, kPromoted, kColumnsAdded, kHypothesis };

using GlObserver = std::function<void(GlEvent, const GlObservationTable&)>;

struct GlStarResult {
  GkatAutomaton automaton;
  QueryStats stats;
  GlObservationTable table;
};

namespace internal {

class GlStarRun {
 public:
  GlStarRun(GkatTeacher& teacher, const LearnOptions& options,
            const GlObserver& observer)
      : teacher_(teacher),
        options_(options),
        observer_(observer),
        table_(teacher.alphabet()) {}

  GlStarResult Run() {
    const Alphabet& alphabet = teacher_.alphabet();
    const std::size_t cap = 10 * (teacher_.size_hint() + 1);
    std::size_t steps = 0;
    auto tick = [&] {
      if (++steps > cap) {
        throw InternalError("GL* exceeded its iteration cap of " +
                            std::to_string(cap));
      }
    };
    Fill();
    Notify(GlEvent::kFilled);
    while (true) {
      while (auto t = table_.closedness_defect()) {
        tick();
        Trace("PROMOTE " + format_word(alphabet, *t));
        table_.promote(*t);
        ++stats_.promotions;
        Fill();
        Notify(GlEvent::kPromoted);
      }
      tick();
      GkatAutomaton hypothesis = table_.build_hypothesis();
      stats_.hypothesis_sizes.push_back(hypothesis.num_states());
      Trace("HYPOTHESIS " + std::to_string(hypothesis.num_states()) + " states");
      if (options_.check_invariants) CheckConsistency(hypothesis);
      Notify(GlEvent::kHypothesis);
      ++stats_.equivalence;
      auto z = teacher_.equivalence(hypothesis);
      if (!z) {
        Trace("EQUIV -> Yes");
        stats_.columns = table_.columns().size();
        return GlStarResult{std::move(hypothesis), stats_, table_};
      }
      Trace("EQUIV -> No(" + format_word(alphabet, *z) + ")");
      GuardedString used = *z;
      if (options_.cx == CounterexampleMode::kOptimized) {
        used = optimized_counterexample(
            table_, *z, hypothesis,
            [this](const GuardedString& w) { return Query(w); });
      }
      const std::size_t old_columns = table_.columns().size();
      const auto suffixes = suffixes_gs(used);
      const auto added = table_.add_columns(suffixes);
      stats_.columns_added += added.size();
      std::string line = "COLUMNS {";
      for (std::size_t i = 0; i < added.size(); ++i) {
        if (i > 0) line += ", ";
        line += format_word(alphabet, added[i]);
      }
      Trace(line + "}");
      Fill();
      Notify(GlEvent::kColumnsAdded);
      if (table_.is_closed()) CheckProgress(old_columns, suffixes);
    }
  }

 private:
  bool Query(const GuardedString& w) {
    if (options_.cache) {
      if (auto it = memo_.find(w); it != memo_.end()) {
        ++stats_.cache_hits;
        return it->second;
      }
    }
    const bool bit = teacher_.membership(w);
    ++stats_.membership_to_L;
    if (options_.cache) memo_.emplace(w, bit);
    Trace("QUERY " + format_word(teacher_.alphabet(), w) + " -> " +
          (bit ? "1" : "0"));
    return bit;
  }

  void Fill() {
    stats_.zero_filled += table_.fill(
        [this](const GuardedString& w) { return Query(w); }, options_.zero_fill);
    if (options_.check_invariants) {
      if (auto error = table_.check_invariants()) {
        throw InternalError("observation table invariant violated: " + *error);
      }
    }
  }

  // The hypothesis reproduces every cell of S.
  void CheckConsistency(const GkatAutomaton& hypothesis) const {
    for (std::size_t i = 0; i < table_.upper().size(); ++i) {
      for (std::size_t j = 0; j < table_.columns().size(); ++j) {
        const bool predicted = accepts_gkat(hypothesis, i, table_.columns()[j]);
        if (predicted != (table_.cell(table_.upper()[i], j) == 1)) {
          throw InternalError("hypothesis disagrees with its table");
        }
      }
    }
  }

  // The extended table closed without promotion: every old column of
  // row(eps) must be 0 and some suffix column 1.
  void CheckProgress(std::size_t old_columns,
                     const std::vector<GuardedString>& suffixes) {
    ++stats_.progress_checks;
    const GuardedPrefix eps;
    bool ok = true;
    for (std::size_t j = 0; j < old_columns; ++j) {
      if (table_.cell(eps, j) != 0) ok = false;
    }
    bool found = false;
    for (const auto& e : suffixes) {
      if (table_.cell(eps, *table_.column_index(e)) == 1) found = true;
    }
    if (!ok || !found) ++stats_.progress_violations;
  }

  void Trace(const std::string& line) const {
    if (options_.trace) options_.trace(line);
  }
  void Notify(GlEvent event) const {
    if (observer_) observer_(event, table_);
  }

  GkatTeacher& teacher_;
  const LearnOptions& options_;
  const GlObserver& observer_;
  GlObservationTable table_;
  QueryStats stats_;
  std::map<GuardedString, bool> memo_;
};

}  // namespace internal

// Learns the minimal GKAT automaton of the teacher's language.
inline GlStarResult glstar(GkatTeacher& teacher, const LearnOptions& options = {},
                           const GlObserver& observer = {}) {
  return internal::GlStarRun(teacher, options, observer).Run();
}

}  // namespace gkat

#endif  // GKAT_GLSTAR_HPP_
