#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "ordaut/automaton.hpp"

namespace ordaut {

// Contents of an "ordaut v1" file: a binary Dfa, or an AlphaDfa when the
// file carries an `alphabet` line.
using AutomatonFile = std::variant<Dfa, AlphaDfa>;

// Format, one item per line, '#' starts a comment:
//   ordaut v1
//   states N
//   initial I
//   final F1 F2 ...
//   alphabet a b c          (optional)
//   S L T                   (transition S --L--> T)
// Throws ParseError carrying the 1-based line number.
AutomatonFile read_automaton(std::istream& in);
AutomatonFile read_automaton_file(const std::string& path);

void write_automaton(std::ostream& out, const Dfa& a);
void write_automaton(std::ostream& out, const AlphaDfa& a);

}  // namespace ordaut
