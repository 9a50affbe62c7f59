#include "orbitkit/corpus.hpp"

#include <charconv>

namespace orbitkit {

namespace {

Automaton make(const std::string& name, std::vector<std::string> letters,
               std::vector<std::string> states,
               const std::vector<std::array<std::string, 4>>& trans) {
  Automaton a(name, std::move(letters), std::move(states));
  for (const auto& t : trans) a.add_transition(a.state(t[0]), a.letter(t[1]), a.letter(t[2]), a.state(t[3]));
  return a;
}

Automaton adding_machine() {
  return make("adding-machine", {"0", "1"}, {"q", "id"},
              {
                  {"q", "1", "0", "q"},
                  {"q", "0", "1", "id"},
                  {"id", "0", "0", "id"},
                  {"id", "1", "1", "id"},
              });
}

Automaton identity_automaton() {
  return make("identity", {"0", "1"}, {"id"},
              {
                  {"id", "0", "0", "id"},
                  {"id", "1", "1", "id"},
              });
}

Automaton grigorchuk() {
  return make("grigorchuk", {"0", "1"}, {"a", "b", "c", "d", "id"},
              {
                  {"a", "0", "1", "id"},
                  {"a", "1", "0", "id"},
                  {"b", "0", "0", "a"},
                  {"b", "1", "1", "c"},
                  {"c", "0", "0", "a"},
                  {"c", "1", "1", "d"},
                  {"d", "0", "0", "id"},
                  {"d", "1", "1", "b"},
                  {"id", "0", "0", "id"},
                  {"id", "1", "1", "id"},
              });
}

Automaton right_ideal() {
  return make("right-ideal", {"a", "b"}, {"q", "id", "p"},
              {
                  {"q", "a", "a", "q"},
                  {"q", "b", "a", "id"},
                  {"id", "a", "a", "id"},
                  {"id", "b", "b", "id"},
                  {"p", "a", "a", "p"},
              });
}

Automaton t1() {
  return make("t1", {"a", "b"}, {"q", "p"},
              {
                  {"q", "a", "b", "p"},
                  {"p", "a", "a", "q"},
                  {"p", "b", "b", "p"},
              });
}

Automaton non_invertible() {
  return make("non-invertible", {"a", "b"}, {"q", "p"},
              {
                  {"q", "a", "b", "p"},
                  {"q", "b", "b", "p"},
                  {"p", "a", "a", "q"},
                  {"p", "b", "a", "q"},
              });
}

Automaton mixed() {
  return make("mixed", {"0", "1", "0'", "1'"}, {"p", "id", "q"},
              {
                  {"p", "0", "1", "id"},
                  {"p", "1", "0", "p"},
                  {"p", "0'", "0'", "id"},
                  {"p", "1'", "1'", "id"},
                  {"q", "1'", "0'", "q"},
                  {"q", "0'", "1'", "id"},
                  {"q", "0", "0", "q"},
                  {"q", "1", "1", "q"},
                  {"id", "0", "0", "id"},
                  {"id", "1", "1", "id"},
                  {"id", "0'", "0'", "id"},
                  {"id", "1'", "1'", "id"},
              });
}

PropertyReport expected_report(const std::string& name) {
  // Transcribed flags; component order follows smallest state index.
  auto comp = [](std::vector<StateId> states, bool strong, bool birev) {
    ComponentInfo c;
    c.states = std::move(states);
    c.strongly_connected = strong;
    c.bi_reversible = birev;
    return c;
  };
  PropertyReport r;
  if (name == "adding-machine") {
    r.complete = true;
    r.invertible = true;
    r.components = {comp({0, 1}, false, false)};
  } else if (name == "identity") {
    r.complete = r.reversible = r.invertible = r.inverse_reversible = r.bi_reversible = true;
    r.components = {comp({0}, true, true)};
  } else if (name == "grigorchuk") {
    r.complete = true;
    r.invertible = true;
    r.components = {comp({0, 1, 2, 3, 4}, false, false)};
  } else if (name == "grigorchuk-dual") {
    r.complete = true;
    r.reversible = true;
    r.components = {comp({0, 1}, true, false)};
  } else if (name == "right-ideal") {
    r.components = {comp({0, 1}, false, false), comp({2}, true, true)};
  } else if (name == "t1") {
    r.reversible = true;
    r.invertible = true;
    r.components = {comp({0, 1}, true, false)};
  } else if (name == "non-invertible") {
    r.complete = true;
    r.reversible = true;
    r.components = {comp({0, 1}, true, false)};
  } else if (name == "mixed") {
    r.complete = true;
    r.invertible = true;
    r.components = {comp({0, 1, 2}, false, false)};
  }
  return r;
}

// ---- oracle families ----------------------------------------------------

bool parse_index(const std::string& text, std::size_t pos, long& value) {
  if (pos >= text.size()) return false;
  auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  return ec == std::errc() && p == text.data() + text.size() && value >= 0;
}

// Chain q_i --2/2--> q_{i-1}; q_0 flips 0/1 and everything else drops into
// the identity, so a state can change at most one letter of any word.
class Fig2Oracle final : public TransitionOracle {
public:
  std::string family() const override { return "fig2"; }
  std::vector<std::string> alphabet() const override { return {"0", "1", "2"}; }
  bool valid_state(const std::string& key) const override {
    long i;
    return key == "id" || (key.size() > 1 && key[0] == 'q' && parse_index(key, 1, i));
  }
  std::optional<std::pair<std::string, std::string>> step(const std::string& state,
                                                          const std::string& letter) const override {
    if (state == "id") return std::make_pair(letter, state);
    long i = 0;
    parse_index(state, 1, i);
    if (i == 0) {
      if (letter == "0") return std::make_pair(std::string("1"), std::string("id"));
      if (letter == "1") return std::make_pair(std::string("0"), std::string("id"));
      return std::make_pair(std::string("2"), std::string("id"));
    }
    if (letter == "2") return std::make_pair(std::string("2"), "q" + std::to_string(i - 1));
    return std::make_pair(letter, std::string("id"));
  }
};

// States q[i,j] for 1 <= j <= i^2 with q[i,0] = id.
class BartholdiOracle final : public TransitionOracle {
public:
  std::string family() const override { return "bartholdi"; }
  std::vector<std::string> alphabet() const override { return {"0", "1", "2"}; }
  bool valid_state(const std::string& key) const override {
    long i, j;
    return key == "id" || parse_ij(key, i, j);
  }
  std::optional<std::pair<std::string, std::string>> step(const std::string& state,
                                                          const std::string& letter) const override {
    if (state == "id") return std::make_pair(letter, state);
    long i = 0, j = 0;
    if (!parse_ij(state, i, j)) return std::nullopt;
    const bool boundary = (j % i) == (1 % i);
    const std::string down = j - 1 == 0 ? std::string("id")
                                        : "q[" + std::to_string(i) + "," + std::to_string(j - 1) + "]";
    if (letter == "0")
      return boundary ? std::make_pair(std::string("1"), down)
                      : std::make_pair(std::string("0"), std::string("id"));
    if (letter == "1")
      return boundary ? std::make_pair(std::string("0"), down)
                      : std::make_pair(std::string("1"), std::string("id"));
    return boundary ? std::make_pair(std::string("2"), std::string("id"))
                    : std::make_pair(std::string("2"), down);
  }

private:
  static bool parse_ij(const std::string& key, long& i, long& j) {
    if (key.size() < 6 || key.compare(0, 2, "q[") != 0 || key.back() != ']') return false;
    auto comma = key.find(',');
    if (comma == std::string::npos) return false;
    auto [p1, e1] = std::from_chars(key.data() + 2, key.data() + comma, i);
    auto [p2, e2] = std::from_chars(key.data() + comma + 1, key.data() + key.size() - 1, j);
    return e1 == std::errc() && e2 == std::errc() && p1 == key.data() + comma &&
           p2 == key.data() + key.size() - 1 && i >= 1 && j >= 1 && j <= i * i;
  }
};

// q0 walks down the 0-chain, turns into p_n at the first 1, and p_n is a
// width-n binary incrementer, so every orbit is finite although the powers
// of q0 are pairwise distinct.
class Q0FamilyOracle final : public TransitionOracle {
public:
  std::string family() const override { return "q0family"; }
  std::vector<std::string> alphabet() const override { return {"0", "1"}; }
  bool valid_state(const std::string& key) const override {
    long i;
    if (key == "id") return true;
    if (key.size() > 1 && key[0] == 'q' && parse_index(key, 1, i)) return true;
    return key.size() > 1 && key[0] == 'p' && parse_index(key, 1, i) && i >= 1;
  }
  std::optional<std::pair<std::string, std::string>> step(const std::string& state,
                                                          const std::string& letter) const override {
    if (state == "id") return std::make_pair(letter, state);
    long i = 0;
    parse_index(state, 1, i);
    if (state[0] == 'q') {
      if (letter == "0") return std::make_pair(std::string("0"), "q" + std::to_string(i + 1));
      return i == 0 ? std::make_pair(std::string("1"), std::string("id"))
                    : std::make_pair(std::string("1"), "p" + std::to_string(i));
    }
    // p_i: 1/0 descends the chain, 0/1 ends the carry
    if (letter == "1")
      return i == 1 ? std::make_pair(std::string("0"), std::string("id"))
                    : std::make_pair(std::string("0"), "p" + std::to_string(i - 1));
    return std::make_pair(std::string("1"), std::string("id"));
  }
};

} // namespace

std::vector<std::string> corpus_names() {
  return {"adding-machine", "identity",       "grigorchuk", "grigorchuk-dual",
          "right-ideal",    "t1",             "non-invertible", "mixed"};
}

CorpusEntry corpus_get(const std::string& name) {
  if (name == "adding-machine") return {adding_machine(), expected_report(name)};
  if (name == "identity") return {identity_automaton(), expected_report(name)};
  if (name == "grigorchuk") return {grigorchuk(), expected_report(name)};
  if (name == "grigorchuk-dual") {
    Automaton d = dual(grigorchuk());
    return {d, expected_report(name)};
  }
  if (name == "right-ideal") return {right_ideal(), expected_report(name)};
  if (name == "t1") return {t1(), expected_report(name)};
  if (name == "non-invertible") return {non_invertible(), expected_report(name)};
  if (name == "mixed") return {mixed(), expected_report(name)};
  throw ParseError("unknown corpus automaton '" + name + "'");
}

std::vector<std::string> oracle_families() { return {"fig2", "bartholdi", "q0family"}; }

Automaton oracle_get(const std::string& family, const std::map<std::string, std::string>& params) {
  std::size_t bound = 100000;
  for (const auto& [key, value] : params) {
    if (key == "bound") {
      long v;
      if (!parse_index(value, 0, v) || v <= 0)
        throw ParseError("oracle_get: bad bound '" + value + "'");
      bound = static_cast<std::size_t>(v);
    } else {
      throw ParseError("oracle_get: unknown param '" + key + "'");
    }
  }
  std::shared_ptr<const TransitionOracle> oracle;
  if (family == "fig2") oracle = std::make_shared<Fig2Oracle>();
  else if (family == "bartholdi") oracle = std::make_shared<BartholdiOracle>();
  else if (family == "q0family") oracle = std::make_shared<Q0FamilyOracle>();
  else throw ParseError("unknown oracle family '" + family + "'");
  return Automaton::with_oracle(family, std::move(oracle), bound);
}

} // namespace orbitkit
