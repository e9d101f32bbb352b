#include "ordaut/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "ordaut/errors.hpp"

namespace ordaut {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

std::optional<std::size_t> to_number(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::size_t number_or_fail(const Line& line, const std::string& s) {
  auto v = to_number(s);
  if (!v) fail(line.number, "expected a state number, got '" + s + "'");
  return *v;
}

}  // namespace

AutomatonFile read_automaton(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  if (lines.empty()) throw ParseError("empty automaton file", 1);
  const Line& header = lines.front();
  if (header.tokens != std::vector<std::string>{"ordaut", "v1"})
    fail(header.number, "expected header 'ordaut v1'");

  std::optional<std::size_t> states, initial;
  std::optional<std::vector<std::size_t>> finals;
  std::optional<std::vector<std::string>> alphabet;
  std::vector<const Line*> transitions;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.tokens.front();
    if (to_number(key)) {
      if (line.tokens.size() != 3) fail(line.number, "transition needs 'FROM LETTER TO'");
      transitions.push_back(&line);
    } else if (key == "states" || key == "initial") {
      auto& slot = key == "states" ? states : initial;
      if (slot) fail(line.number, "duplicate '" + key + "'");
      if (line.tokens.size() != 2) fail(line.number, "'" + key + "' takes one number");
      slot = number_or_fail(line, line.tokens[1]);
    } else if (key == "final") {
      if (finals) fail(line.number, "duplicate 'final'");
      finals.emplace();
      for (std::size_t t = 1; t < line.tokens.size(); ++t)
        finals->push_back(number_or_fail(line, line.tokens[t]));
    } else if (key == "alphabet") {
      if (alphabet) fail(line.number, "duplicate 'alphabet'");
      if (line.tokens.size() < 2) fail(line.number, "alphabet must be nonempty");
      alphabet.emplace(line.tokens.begin() + 1, line.tokens.end());
      for (std::size_t a = 0; a < alphabet->size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
          if ((*alphabet)[a] == (*alphabet)[b])
            fail(line.number, "duplicate alphabet symbol '" + (*alphabet)[a] + "'");
    } else {
      fail(line.number, "unknown key '" + key + "'");
    }
  }
  if (!states) fail(header.number, "missing 'states'");
  if (*states == 0) fail(header.number, "an automaton needs at least one state");
  if (!initial) fail(header.number, "missing 'initial'");
  if (*initial >= *states) fail(header.number, "initial state out of range");

  const std::vector<std::string> symbols = alphabet ? *alphabet : std::vector<std::string>{"0", "1"};
  AlphaDfa a(symbols, *states, static_cast<StateId>(*initial));
  if (finals) {
    for (std::size_t f : *finals) {
      if (f >= *states) fail(header.number, "final state " + std::to_string(f) + " out of range");
      a.set_final(static_cast<StateId>(f));
    }
  }
  for (const Line* line : transitions) {
    std::size_t from = number_or_fail(*line, line->tokens[0]);
    std::size_t to = number_or_fail(*line, line->tokens[2]);
    if (from >= *states || to >= *states) fail(line->number, "state out of range");
    std::size_t symbol = a.rank_of(line->tokens[1]);
    if (symbol == a.symbol_count()) fail(line->number, "unknown letter '" + line->tokens[1] + "'");
    if (a.next(static_cast<StateId>(from), symbol) != kNoState)
      fail(line->number, "duplicate transition");
    a.set_transition(static_cast<StateId>(from), symbol, static_cast<StateId>(to));
  }
  if (alphabet) return a;

  Dfa d(a.size(), a.initial());
  for (StateId q = 0; q < a.size(); ++q) {
    d.set_final(q, a.is_final(q));
    for (Letter l : kLetters)
      if (StateId t = a.next(q, static_cast<std::size_t>(l)); t != kNoState) d.set_transition(q, l, t);
  }
  return d;
}

AutomatonFile read_automaton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_automaton(in);
}

void write_automaton(std::ostream& out, const Dfa& a) {
  out << "ordaut v1\nstates " << a.size() << "\ninitial " << a.initial() << "\nfinal";
  for (StateId f : a.finals()) out << ' ' << f;
  out << '\n';
  for (StateId q = 0; q < a.size(); ++q)
    for (Letter l : kLetters)
      if (StateId t = a.next(q, l); t != kNoState) out << q << ' ' << to_char(l) << ' ' << t << '\n';
}

void write_automaton(std::ostream& out, const AlphaDfa& a) {
  out << "ordaut v1\nalphabet";
  for (const auto& s : a.alphabet()) out << ' ' << s;
  out << "\nstates " << a.size() << "\ninitial " << a.initial() << "\nfinal";
  for (StateId q = 0; q < a.size(); ++q)
    if (a.is_final(q)) out << ' ' << q;
  out << '\n';
  for (StateId q = 0; q < a.size(); ++q)
    for (std::size_t s = 0; s < a.symbol_count(); ++s)
      if (StateId t = a.next(q, s); t != kNoState) out << q << ' ' << a.alphabet()[s] << ' ' << t << '\n';
}

}  // namespace ordaut
