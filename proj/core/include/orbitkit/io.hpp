#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "orbitkit/action.hpp"
#include "orbitkit/automaton.hpp"

namespace orbitkit {

/// Parse the line-based automaton format:
///
///   automaton <name>
///   alphabet <tok> <tok> ...
///   states <tok> <tok> ...
///   trans <state> <in> <out> <state>
///
/// '#' starts a comment.  Duplicate (state, in) pairs are a parse error.
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton_text(const std::string& text);
Automaton load_automaton(const std::string& path);

/// Inverse of parse_automaton: reproduces the input byte for byte, modulo
/// stripped comments and blank lines (declaration order is preserved).
std::string serialize_automaton(const Automaton& a);

/// Words accept two spellings: comma-separated letter tokens always work;
/// when every letter of the alphabet is a single character, a compact
/// unseparated string works too.  The empty string is the empty word.
Word parse_word(const Automaton& a, std::string_view text);

/// State sequences are comma-separated state names in application order
/// (the first entry acts first).  The empty string is the empty sequence.
StateSeq parse_state_seq(const Automaton& a, std::string_view text);

/// "<preperiod>|<period>", each side spelled like parse_word.
UPWord parse_upword(const Automaton& a, std::string_view text);

std::string render_word(const Automaton& a, const Word& w); // "ε" when empty
std::string render_upword(const Automaton& a, const UPWord& x);

/// Application order, comma separated: "q,id" means q acts first.
std::string render_seq(const Automaton& a, const StateSeq& s);

/// The conventional algebraic spelling, last-acting state leftmost.
/// Reports that use it say "(paper order)" next to it.
std::string render_seq_paper(const Automaton& a, const StateSeq& s);

} // namespace orbitkit
