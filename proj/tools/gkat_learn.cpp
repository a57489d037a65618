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
// gkat_learn: learn automata from programs, compare learners, decide program
// equivalence.
//
//   gkat_learn learn   --expr E --tests b --actions p,q [--algo both] ...
//   gkat_learn compare --family while --sweep 6 [--out-dir DIR]
//   gkat_learn equiv   --expr E --expr2 F --tests b --actions p,q
//   gkat_learn denote  --expr E --tests b --actions p,q --bound 2
//
// Exit codes: 0 ok or equivalent, 1 inequivalent, 2 bad input, 3 a size
// limit was hit, 4 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gkat/gkat.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInequivalent = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInternal = 4;

struct Config {
  std::string expr;
  std::string expr2;
  std::vector<std::string> tests;
  std::vector<std::string> actions;
  std::string algo = "both";
  std::string cx = "suffix";
  std::string family;
  std::size_t sweep = 6;
  std::size_t bound = 2;
  std::string out_dir;
  bool trace = false;
  bool no_zero_fill = false;
  bool cache = false;
  std::size_t max_states = gkat::kDefaultStateLimit;
  std::size_t max_atoms = gkat::kDefaultAtomLimit;
};

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw gkat::Error("cannot write " + path.string());
  out << text;
}

gkat::LearnOptions Options(const Config& c) {
  gkat::LearnOptions options;
  options.cx = c.cx == "optimized" ? gkat::CounterexampleMode::kOptimized
                                   : gkat::CounterexampleMode::kSuffix;
  options.zero_fill = !c.no_zero_fill;
  options.cache = c.cache;
  if (c.trace) {
    options.trace = [](const std::string& line) { std::cout << line << "\n"; };
  }
  return options;
}

int CmdLearn(const Config& c) {
  const gkat::Alphabet alphabet(c.tests, c.actions, c.max_atoms);
  const gkat::Exp e = gkat::parse_exp(c.expr, alphabet);
  const gkat::LearnOptions options = Options(c);
  const std::filesystem::path dir = c.out_dir;
  if (!c.out_dir.empty()) std::filesystem::create_directories(dir);
  std::vector<gkat::RunRecord> records;

  if (c.algo == "glstar" || c.algo == "both") {
    std::size_t round = 0;
    gkat::GlObserver observer;
    if (!c.out_dir.empty()) {
      observer = [&](gkat::GlEvent event, const gkat::GlObservationTable& t) {
        if (event != gkat::GlEvent::kHypothesis) return;
        WriteFile(dir / ("glstar_table_" + std::to_string(++round) + ".csv"),
                  t.to_csv());
      };
    }
    auto run = gkat::run_glstar(e, alphabet, options, observer, c.max_states);
    std::cout << "glstar: " << run.record.hypothesis_states << " states, "
              << run.record.membership_queries << " membership queries, "
              << run.record.zero_filled << " cells zero-filled, "
              << run.record.equivalence_queries << " equivalence queries\n";
    if (!c.out_dir.empty()) {
      std::vector<std::string> names;
      for (const auto& s : run.result.table.upper()) {
        names.push_back("row(" + gkat::format_word(alphabet, s) + ")");
      }
      WriteFile(dir / "glstar.dot", gkat::to_dot(run.result.automaton, names));
    } else {
      std::cout << gkat::to_dot(run.result.automaton);
    }
    records.push_back(run.record);
  }
  if (c.algo == "lstar" || c.algo == "both") {
    std::size_t round = 0;
    gkat::LStarObserver observer;
    if (!c.out_dir.empty()) {
      observer = [&](gkat::LStarEvent event, const gkat::LStarObservationTable& t) {
        if (event != gkat::LStarEvent::kHypothesis) return;
        WriteFile(dir / ("lstar_table_" + std::to_string(++round) + ".csv"),
                  t.to_csv());
      };
    }
    auto run = gkat::run_lstar(e, alphabet, options, observer, c.max_states);
    std::cout << "lstar: " << run.record.hypothesis_states << " states, "
              << run.record.membership_queries << " membership queries, "
              << run.record.equivalence_queries << " equivalence queries\n";
    if (!c.out_dir.empty()) {
      std::vector<std::string> names;
      for (const auto& s : run.result.table.upper()) {
        names.push_back("row(" + gkat::format_word(alphabet, s) + ")");
      }
      WriteFile(dir / "lstar.dot", gkat::to_dot(run.result.automaton, names));
    } else {
      std::cout << gkat::to_dot(run.result.automaton);
    }
    records.push_back(run.record);
  }
  if (!c.out_dir.empty()) {
    std::string csv = std::string(gkat::kRunCsvHeader) + "\n";
    for (const auto& r : records) csv += gkat::to_csv_row(r) + "\n";
    WriteFile(dir / "stats.csv", csv);
  }
  return kExitOk;
}

int CmdCompare(const Config& c) {
  std::string expr = c.expr;
  std::vector<std::string> actions = c.actions;
  if (!c.family.empty()) {
    const auto spec = gkat::family_spec(c.family == "if" ? gkat::Family::kIf
                                                          : gkat::Family::kWhile);
    expr = spec.expression;
    actions = spec.actions;
  }
  if (expr.empty()) throw gkat::PreconditionError("compare needs --family or --expr");
  const gkat::LearnOptions options = Options(c);
  std::string csv = std::string(gkat::kRunCsvHeader) + "\n";
  for (std::size_t n = 1; n <= c.sweep; ++n) {
    const gkat::Alphabet alphabet(gkat::numbered_tests(n), actions, c.max_atoms);
    const gkat::Exp e = gkat::parse_exp(expr, alphabet);
    if (c.algo == "glstar" || c.algo == "both") {
      csv += gkat::to_csv_row(
                 gkat::run_glstar(e, alphabet, options, {}, c.max_states).record) +
             "\n";
    }
    if (c.algo == "lstar" || c.algo == "both") {
      csv += gkat::to_csv_row(
                 gkat::run_lstar(e, alphabet, options, {}, c.max_states).record) +
             "\n";
    }
  }
  std::cout << csv;
  if (!c.out_dir.empty()) {
    std::filesystem::create_directories(c.out_dir);
    WriteFile(std::filesystem::path(c.out_dir) / "compare.csv", csv);
  }
  return kExitOk;
}

int CmdEquiv(const Config& c) {
  const gkat::Alphabet alphabet(c.tests, c.actions, c.max_atoms);
  const gkat::Exp e = gkat::parse_exp(c.expr, alphabet);
  const gkat::Exp f = gkat::parse_exp(c.expr2, alphabet);
  const auto m1 = gkat::minimize(
      gkat::normalize(gkat::gkat_automaton(e, alphabet, c.max_states)));
  const auto m2 = gkat::minimize(
      gkat::normalize(gkat::gkat_automaton(f, alphabet, c.max_states)));
  if (gkat::isomorphic(m1, m2)) {
    std::cout << "equivalent\n";
    return kExitOk;
  }
  const auto witness = gkat::bisimilar(m1, m2).witness;
  if (!witness) throw gkat::InternalError("minimal automata differ but agree");
  std::cout << "inequivalent: " << gkat::format_word(alphabet, *witness)
            << " is accepted by "
            << (gkat::accepts_gkat(m1, *witness) ? "--expr" : "--expr2")
            << " only\n";
  return kExitInequivalent;
}

int CmdDenote(const Config& c) {
  const gkat::Alphabet alphabet(c.tests, c.actions, c.max_atoms);
  const gkat::Exp e = gkat::parse_exp(c.expr, alphabet);
  for (const auto& w : gkat::denote(e, alphabet, c.bound).words) {
    std::cout << gkat::format_word(alphabet, w) << "\n";
  }
  return kExitOk;
}

void AddAlphabet(CLI::App* cmd, Config& c) {
  cmd->add_option("--tests", c.tests, "Primitive tests, comma separated")
      ->delimiter(',');
  cmd->add_option("--actions", c.actions, "Primitive actions, comma separated")
      ->delimiter(',');
  cmd->add_option("--max-states", c.max_states, "Limit on automaton states")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-atoms", c.max_atoms, "Limit on 2^|tests|")
      ->check(CLI::PositiveNumber);
}

void AddLearning(CLI::App* cmd, Config& c) {
  cmd->add_option("--algo", c.algo, "glstar, lstar or both")
      ->check(CLI::IsMember({"glstar", "lstar", "both"}));
  cmd->add_option("--cx", c.cx, "Counterexample handling: suffix or optimized")
      ->check(CLI::IsMember({"suffix", "optimized"}));
  cmd->add_option("--out-dir", c.out_dir, "Directory for DOT and CSV output");
  cmd->add_flag("--trace", c.trace, "Print one line per learner event");
  cmd->add_flag("--no-zero-fill", c.no_zero_fill,
                "Query cells that determinism would force to 0");
  cmd->add_flag("--cache", c.cache, "Ask each distinct word only once");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active learning of GKAT and Moore automata"};
  app.require_subcommand(1);
  Config c;

  auto* learn = app.add_subcommand("learn", "Learn the automaton of a program");
  learn->add_option("--expr", c.expr, "Program")->required();
  AddAlphabet(learn, c);
  AddLearning(learn, c);

  auto* compare = app.add_subcommand(
      "compare", "Membership queries of GL* and L* as the test count grows");
  compare->add_option("--family", c.family, "if or while")
      ->check(CLI::IsMember({"if", "while"}));
  compare->add_option("--expr", c.expr, "Program over t1..tn");
  compare->add_option("--actions", c.actions, "Actions for --expr")->delimiter(',');
  compare->add_option("--sweep", c.sweep, "Largest test count")
      ->check(CLI::PositiveNumber);
  compare->add_option("--max-states", c.max_states, "Limit on automaton states")
      ->check(CLI::PositiveNumber);
  compare->add_option("--max-atoms", c.max_atoms, "Limit on 2^|tests|")
      ->check(CLI::PositiveNumber);
  AddLearning(compare, c);

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two programs");
  equiv->add_option("--expr", c.expr, "First program")->required();
  equiv->add_option("--expr2", c.expr2, "Second program")->required();
  AddAlphabet(equiv, c);

  auto* denote = app.add_subcommand("denote", "List the guarded strings of a program");
  denote->add_option("--expr", c.expr, "Program")->required();
  denote->add_option("--bound", c.bound, "Maximal number of actions");
  AddAlphabet(denote, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*learn) return CmdLearn(c);
    if (*compare) return CmdCompare(c);
    if (*equiv) return CmdEquiv(c);
    if (*denote) return CmdDenote(c);
  } catch (const gkat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const gkat::PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const gkat::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
