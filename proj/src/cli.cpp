#include "ordaut/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "ordaut/condensation.hpp"
#include "ordaut/counting.hpp"
#include "ordaut/errors.hpp"
#include "ordaut/extract.hpp"
#include "ordaut/io.hpp"
#include "ordaut/search.hpp"
#include "ordaut/synthesis.hpp"

namespace ordaut::cli {

namespace {

// nullopt when the language is empty.
std::optional<Dfa> load_normalized(const std::string& path) {
  AutomatonFile file = read_automaton_file(path);
  try {
    return std::visit([](const auto& a) { return normalize(a); }, file);
  } catch (const EmptyLanguageError&) {
    return std::nullopt;
  }
}

Dfa require_ordinal(const std::optional<Dfa>& a) {
  if (!is_ordinal_automaton(*a)) throw PreconditionError("the language is not well-ordered");
  return *a;
}

Cnf ordinal_or_zero(const std::optional<Dfa>& a) {
  if (!a) return {};
  return ordinal_of(require_ordinal(a)).ordinal;
}

// Binary files that are already ordinal automata, ids as written.
Dfa load_ordinal_automaton(const std::string& path) {
  AutomatonFile file = read_automaton_file(path);
  const Dfa* a = std::get_if<Dfa>(&file);
  if (!a) throw PreconditionError("expected a binary automaton");
  if (!is_cpa(*a) || !is_ordinal_automaton(*a))
    throw PreconditionError("expected an ordinal automaton (run 'normalize' first)");
  return *a;
}

std::string word_or_dash(const std::optional<Word>& w) { return w ? *w : "-"; }

void print_trace(std::ostream& out, const ExtractionTrace& trace) {
  if (trace.initial_in_key_component) {
    out << "initial state lies in a nontrivial component or is final\n";
    return;
  }
  for (const DegreeStep& step : trace.steps) {
    out << "degree " << step.degree << ": total " << step.total << " threshold "
        << word_or_dash(step.threshold) << '\n';
    for (const ComponentCount& cc : step.bucket)
      out << "  component " << cc.component << ": count " << cc.count << " witness "
          << word_or_dash(cc.witness) << '\n';
  }
}

template <class Automaton>
void emit(const Automaton& a, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_automaton(out, a);
    return;
  }
  std::ofstream file(path);
  if (!file) throw PreconditionError("cannot write '" + path + "'");
  write_automaton(file, a);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinals of lexicographically ordered regular languages"};
  app.name("ordaut");
  app.require_subcommand(1);

  std::string file, file2, text, output, word;
  StateId state = 0;
  bool trace = false;
  std::size_t max_states = kDefaultSearchStates;

  auto* check = app.add_subcommand("check", "Classify the ordering: ordinal, scattered or neither");
  check->add_option("FILE", file)->required();

  auto* cnf = app.add_subcommand("cnf", "Cantor normal form of a well-ordered language");
  cnf->add_option("FILE", file)->required();
  cnf->add_flag("--trace", trace, "Print per-degree counts, thresholds and witnesses");

  auto* iso = app.add_subcommand("iso", "Decide whether two well-ordered languages are isomorphic");
  iso->add_option("FILE1", file)->required();
  iso->add_option("FILE2", file2)->required();

  auto* synth = app.add_subcommand("synth", "Build an ordinal automaton for an ordinal");
  synth->add_option("CNF", text)->required();
  synth->add_option("--output", output, "Destination file (default: standard output)");

  auto* minsize = app.add_subcommand("minsize", "Minimal and constructive automaton sizes");
  minsize->add_option("CNF", text)->required();
  minsize->add_option("--max-states", max_states, "Exhaustive search bound");

  auto* count = app.add_subcommand("count-greater", "Count words above a threshold ('-' for none)");
  count->add_option("FILE", file)->required();
  count->add_option("WORD", word)->required();

  auto* lexmax = app.add_subcommand("lexmax", "Greatest word leading to a state");
  lexmax->add_option("FILE", file)->required();
  lexmax->add_option("STATE", state)->required();

  auto* norm = app.add_subcommand("normalize", "Write the complete prefix automaton form");
  norm->add_option("FILE", file)->required();
  norm->add_option("--output", output, "Destination file (default: standard output)");

  auto* oracle = app.add_subcommand("oracle", "Ordinal by the bottom-up state evaluator");
  oracle->add_option("FILE", file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ordaut: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (check->parsed()) {
      auto a = load_normalized(file);
      if (!a || is_ordinal_automaton(*a)) {
        out << "ordinal\n";
        return kOk;
      }
      if (is_scattered_automaton(*a)) {
        out << "scattered\n";
        return kScattered;
      }
      out << "neither\n";
      return kNeither;
    }
    if (cnf->parsed()) {
      auto a = load_normalized(file);
      if (!a) {
        out << "0\n";
        return kOk;
      }
      Extraction x = ordinal_of(require_ordinal(a));
      out << to_string(x.ordinal) << '\n';
      if (trace) print_trace(out, x.trace);
      return kOk;
    }
    if (iso->parsed()) {
      Cnf left = ordinal_or_zero(load_normalized(file));
      Cnf right = ordinal_or_zero(load_normalized(file2));
      if (left == right) {
        out << "isomorphic\n";
        return kOk;
      }
      out << "not isomorphic\n";
      return kNotIsomorphic;
    }
    if (synth->parsed()) {
      emit(synthesize(Cnf::parse(text)), output, out);
      return kOk;
    }
    if (minsize->parsed()) {
      Cnf alpha = Cnf::parse(text);
      std::size_t bound = synthesis_size_bound(alpha);
      std::size_t minimum = min_size(alpha, max_states);
      out << "min_size " << minimum << "\nupper_bound " << bound << '\n';
      return kOk;
    }
    if (count->parsed()) {
      Dfa a = load_ordinal_automaton(file);
      DagAutomaton d = build_dag_view(a, condense(a));
      std::optional<Word> threshold;
      if (word != "-") threshold = word;
      auto sinks = d.sinks();
      out << count_accepted_greater(d, sinks, threshold) << '\n';
      return kOk;
    }
    if (lexmax->parsed()) {
      Dfa a = load_ordinal_automaton(file);
      if (state >= a.size()) throw PreconditionError("no such state");
      Condensation c = condense(a);
      DagAutomaton d = build_dag_view(a, c);
      std::size_t comp = c.component_of[state];
      StateId target = c.components[comp].nontrivial ? d.sink_of[comp] : d.view_of[state];
      out << lex_greatest_word_to(d, target) << '\n';
      return kOk;
    }
    if (norm->parsed()) {
      auto a = load_normalized(file);
      if (!a) throw PreconditionError("the language is empty");
      emit(*a, output, out);
      return kOk;
    }
    if (oracle->parsed()) {
      auto a = load_normalized(file);
      out << to_string(a ? ordinal_of_recursive(require_ordinal(a)) : Cnf{}) << '\n';
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "ordaut: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "ordaut: " << e.what() << '\n';
    return kPrecondition;
  }
  return kParseError;
}

}  // namespace ordaut::cli
