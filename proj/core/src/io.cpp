#include "orbitkit/io.hpp"

#include <fstream>
#include <sstream>

namespace orbitkit {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break; // comment until end of line
    toks.push_back(t);
  }
  return toks;
}

} // namespace

Automaton parse_automaton(std::istream& in) {
  std::string name;
  std::vector<std::string> letters, states;
  struct RawTrans {
    std::string from, in_letter, out_letter, to;
    int line;
  };
  std::vector<RawTrans> raw;
  bool have_name = false, have_alphabet = false, have_states = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    auto rest = [&](std::size_t expected_min) {
      if (toks.size() < expected_min + 1)
        throw ParseError("line " + std::to_string(lineno) + ": '" + kw + "' needs arguments");
    };
    if (kw == "automaton") {
      rest(1);
      if (have_name) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
      name = toks[1];
      have_name = true;
    } else if (kw == "alphabet") {
      rest(1);
      if (have_alphabet)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate alphabet");
      letters.assign(toks.begin() + 1, toks.end());
      have_alphabet = true;
    } else if (kw == "states") {
      rest(1);
      if (have_states) throw ParseError("line " + std::to_string(lineno) + ": duplicate states");
      states.assign(toks.begin() + 1, toks.end());
      have_states = true;
    } else if (kw == "trans") {
      if (toks.size() != 5)
        throw ParseError("line " + std::to_string(lineno) +
                         ": trans needs <state> <in> <out> <state>");
      raw.push_back(RawTrans{toks[1], toks[2], toks[3], toks[4], lineno});
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  if (!have_name) throw ParseError("missing 'automaton <name>' header");
  if (!have_alphabet) throw ParseError("automaton '" + name + "': missing alphabet");
  if (!have_states) throw ParseError("automaton '" + name + "': missing states");

  Automaton a(name, std::move(letters), std::move(states));
  for (const RawTrans& t : raw) {
    try {
      a.add_transition(a.state(t.from), a.letter(t.in_letter), a.letter(t.out_letter),
                       a.state(t.to));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(t.line) + ": " + e.what());
    }
  }
  return a;
}

Automaton parse_automaton_text(const std::string& text) {
  std::istringstream in(text);
  return parse_automaton(in);
}

Automaton load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_automaton(in);
}

std::string serialize_automaton(const Automaton& a) {
  if (!a.is_finite())
    throw UnsupportedError("serialize_automaton: oracle-backed automata have no finite table");
  std::ostringstream out;
  out << "automaton " << a.name() << "\n";
  out << "alphabet";
  for (LetterId l = 0; l < a.alphabet_size(); ++l) out << " " << a.letter_name(l);
  out << "\nstates";
  for (StateId q = 0; q < a.state_count(); ++q) out << " " << a.state_name(q);
  out << "\n";
  for (const Transition& t : a.transitions())
    out << "trans " << a.state_name(t.from) << " " << a.letter_name(t.in) << " "
        << a.letter_name(t.out) << " " << a.state_name(t.to) << "\n";
  return out.str();
}

namespace {

bool single_char_alphabet(const Automaton& a) {
  for (LetterId l = 0; l < a.alphabet_size(); ++l)
    if (a.letter_name(l).size() != 1) return false;
  return true;
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      break;
    }
    parts.emplace_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

} // namespace

Word parse_word(const Automaton& a, std::string_view text) {
  Word w;
  if (text.empty() || text == "ε") return w;
  if (text.find(',') != std::string_view::npos) {
    for (const std::string& tok : split_commas(text)) {
      if (tok.empty()) throw ParseError("empty letter token in word");
      w.push_back(a.letter(tok));
    }
    return w;
  }
  if (single_char_alphabet(a)) {
    for (char c : text) w.push_back(a.letter(std::string(1, c)));
    return w;
  }
  // A single multi-character letter is still fine without commas.
  w.push_back(a.letter(text));
  return w;
}

StateSeq parse_state_seq(const Automaton& a, std::string_view text) {
  StateSeq s;
  if (text.empty() || text == "ε") return s;
  for (const std::string& tok : split_commas(text)) {
    if (tok.empty()) throw ParseError("empty state token in sequence");
    s.push_back(a.state(tok));
  }
  return s;
}

UPWord parse_upword(const Automaton& a, std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("ultimately periodic word must be written '<preperiod>|<period>'");
  Word pre = parse_word(a, text.substr(0, bar));
  Word period = parse_word(a, text.substr(bar + 1));
  if (period.empty()) throw ParseError("ultimately periodic word needs a non-empty period");
  return up_canonicalize(std::move(pre), std::move(period));
}

std::string render_word(const Automaton& a, const Word& w) {
  if (w.empty()) return "ε";
  const bool compact = single_char_alphabet(a);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !compact) out += ",";
    out += a.letter_name(w[i]);
  }
  return out;
}

std::string render_upword(const Automaton& a, const UPWord& x) {
  std::string pre = x.pre.empty() ? "" : render_word(a, x.pre);
  return pre + "(" + render_word(a, x.period) + ")^ω";
}

std::string render_seq(const Automaton& a, const StateSeq& s) {
  if (s.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += a.state_name(s[i]);
  }
  return out;
}

std::string render_seq_paper(const Automaton& a, const StateSeq& s) {
  if (s.empty()) return "ε";
  bool compact = true;
  for (StateId q : s) compact = compact && a.state_name(q).size() == 1;
  std::string out;
  for (std::size_t i = s.size(); i-- > 0;) {
    out += a.state_name(s[i]);
    if (i && !compact) out += "·";
  }
  return out;
}

} // namespace orbitkit
