#include "orbitkit/automaton.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace orbitkit {

struct Automaton::OracleRuntime {
  std::size_t bound = 0;
  mutable std::mutex mu;
  mutable std::deque<std::string> names;
  mutable std::unordered_map<std::string, StateId> index;
  mutable std::unordered_map<std::uint64_t, Step> memo;
};

Automaton::Automaton(std::string name, std::vector<std::string> letters,
                     std::vector<std::string> states)
    : name_(std::move(name)), letters_(std::move(letters)), states_(std::move(states)) {
  if (letters_.empty()) throw ParseError("automaton '" + name_ + "': empty alphabet");
  if (states_.empty()) throw ParseError("automaton '" + name_ + "': empty state set");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!letter_index_.emplace(letters_[i], static_cast<LetterId>(i)).second)
      throw ParseError("duplicate letter '" + letters_[i] + "'");
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!state_index_.emplace(states_[i], static_cast<StateId>(i)).second)
      throw ParseError("duplicate state '" + states_[i] + "'");
  }
  table_.assign(states_.size() * letters_.size(), Step{-1, -1});
}

Automaton Automaton::with_oracle(std::string name,
                                 std::shared_ptr<const TransitionOracle> oracle,
                                 std::size_t state_bound) {
  Automaton a(std::move(name), oracle->alphabet(), {"<oracle>"});
  a.states_.clear();
  a.state_index_.clear();
  a.table_.clear();
  a.oracle_ = std::move(oracle);
  a.rt_ = std::make_shared<OracleRuntime>();
  a.rt_->bound = state_bound;
  return a;
}

void Automaton::require_finite(const char* op) const {
  if (!is_finite())
    throw UnsupportedError(std::string(op) + ": not supported on oracle-backed automaton '" +
                           name_ + "'");
}

void Automaton::add_transition(StateId from, LetterId in, LetterId out, StateId to) {
  require_finite("add_transition");
  const auto ns = static_cast<StateId>(states_.size());
  const auto nl = static_cast<LetterId>(letters_.size());
  if (from < 0 || from >= ns || to < 0 || to >= ns || in < 0 || in >= nl || out < 0 || out >= nl)
    throw ParseError("transition references undeclared state or letter");
  Step& cell = table_[static_cast<std::size_t>(from) * letters_.size() + in];
  if (cell.next != -1)
    throw ParseError("duplicate transition on (" + states_[from] + ", " + letters_[in] +
                     "): determinism violated");
  cell = Step{out, to};
  decl_.push_back(Transition{from, in, out, to});
}

const std::string& Automaton::letter_name(LetterId a) const { return letters_.at(a); }

std::optional<LetterId> Automaton::find_letter(std::string_view name) const {
  auto it = letter_index_.find(std::string(name));
  if (it == letter_index_.end()) return std::nullopt;
  return it->second;
}

LetterId Automaton::letter(std::string_view name) const {
  auto id = find_letter(name);
  if (!id) throw ParseError("unknown letter '" + std::string(name) + "' in '" + name_ + "'");
  return *id;
}

int Automaton::state_count() const {
  if (is_finite()) return static_cast<int>(states_.size());
  std::lock_guard<std::mutex> lock(rt_->mu);
  return static_cast<int>(rt_->names.size());
}

std::string Automaton::state_name(StateId q) const {
  if (is_finite()) return states_.at(q);
  std::lock_guard<std::mutex> lock(rt_->mu);
  return rt_->names.at(q);
}

std::optional<StateId> Automaton::find_state(std::string_view name) const {
  if (is_finite()) {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
  }
  std::lock_guard<std::mutex> lock(rt_->mu);
  auto it = rt_->index.find(std::string(name));
  if (it == rt_->index.end()) return std::nullopt;
  return it->second;
}

StateId Automaton::state(std::string_view name) const {
  if (is_finite()) {
    auto id = find_state(name);
    if (!id) throw ParseError("unknown state '" + std::string(name) + "' in '" + name_ + "'");
    return *id;
  }
  std::string key(name);
  if (!oracle_->valid_state(key))
    throw ParseError("'" + key + "' is not a state of oracle family " + oracle_->family());
  std::lock_guard<std::mutex> lock(rt_->mu);
  auto it = rt_->index.find(key);
  if (it != rt_->index.end()) return it->second;
  if (rt_->names.size() >= rt_->bound)
    throw BudgetError("oracle '" + name_ + "': exploration bound of " +
                      std::to_string(rt_->bound) + " distinct states exceeded");
  auto id = static_cast<StateId>(rt_->names.size());
  rt_->names.push_back(key);
  rt_->index.emplace(std::move(key), id);
  return id;
}

std::optional<Step> Automaton::step(StateId q, LetterId a) const {
  if (is_finite()) {
    const Step& cell = table_.at(static_cast<std::size_t>(q) * letters_.size() + a);
    if (cell.next == -1) return std::nullopt;
    return cell;
  }
  const auto key = (static_cast<std::uint64_t>(q) << 16) | static_cast<std::uint32_t>(a);
  {
    std::lock_guard<std::mutex> lock(rt_->mu);
    auto it = rt_->memo.find(key);
    if (it != rt_->memo.end()) {
      if (it->second.next == -1) return std::nullopt;
      return it->second;
    }
  }
  const auto answer = oracle_->step(state_name(q), letters_.at(a));
  Step result{-1, -1};
  if (answer) {
    auto out = find_letter(answer->first);
    if (!out)
      throw InternalError("oracle " + oracle_->family() + " emitted unknown letter '" +
                          answer->first + "'");
    result = Step{*out, state(answer->second)};
  }
  std::lock_guard<std::mutex> lock(rt_->mu);
  rt_->memo.emplace(key, result);
  if (result.next == -1) return std::nullopt;
  return result;
}

const std::vector<Transition>& Automaton::transitions() const {
  require_finite("transitions");
  return decl_;
}

std::size_t Automaton::oracle_bound() const { return rt_ ? rt_->bound : 0; }

namespace {

// Union-find over state indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool component_strongly_connected(const Automaton& a, const std::vector<StateId>& comp) {
  if (comp.size() <= 1) {
    // A single state is strongly connected vacuously.
    return true;
  }
  std::set<StateId> in_comp(comp.begin(), comp.end());
  // forward reachability from comp[0], restricted to the component
  std::set<StateId> seen{comp[0]};
  std::queue<StateId> q;
  q.push(comp[0]);
  while (!q.empty()) {
    StateId cur = q.front();
    q.pop();
    for (LetterId l = 0; l < a.alphabet_size(); ++l) {
      auto s = a.step(cur, l);
      if (s && in_comp.count(s->next) && seen.insert(s->next).second) q.push(s->next);
    }
  }
  if (seen.size() != comp.size()) return false;
  // backward reachability
  std::set<StateId> rseen{comp[0]};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Transition& t : a.transitions()) {
      if (rseen.count(t.to) && in_comp.count(t.from) && rseen.insert(t.from).second) grew = true;
    }
  }
  return rseen.size() == comp.size();
}

bool transitions_bi_reversible(const std::vector<Transition>& ts) {
  std::set<std::pair<LetterId, StateId>> rev, inv_rev;
  for (const Transition& t : ts) {
    if (!rev.emplace(t.in, t.to).second) return false;
    if (!inv_rev.emplace(t.out, t.to).second) return false;
  }
  return true;
}

} // namespace

PropertyReport classify(const Automaton& a) {
  if (!a.is_finite())
    throw UnsupportedError("classify: whole-automaton analysis needs a finite backend");
  PropertyReport r;
  const int ns = a.state_count();
  const int nl = a.alphabet_size();

  r.complete = true;
  for (StateId q = 0; q < ns; ++q)
    for (LetterId l = 0; l < nl; ++l)
      if (!a.step(q, l)) r.complete = false;

  std::set<std::pair<LetterId, StateId>> rev_keys, inv_rev_keys;
  std::set<std::pair<StateId, LetterId>> inv_keys;
  r.reversible = r.invertible = r.inverse_reversible = true;
  for (const Transition& t : a.transitions()) {
    if (!rev_keys.emplace(t.in, t.to).second) r.reversible = false;
    if (!inv_keys.emplace(t.from, t.out).second) r.invertible = false;
    if (!inv_rev_keys.emplace(t.out, t.to).second) r.inverse_reversible = false;
  }
  r.bi_reversible = r.reversible && r.inverse_reversible;

  Dsu dsu(ns);
  for (const Transition& t : a.transitions()) dsu.unite(t.from, t.to);
  std::unordered_map<int, std::size_t> root_to_comp;
  for (StateId q = 0; q < ns; ++q) {
    int root = dsu.find(q);
    auto it = root_to_comp.find(root);
    if (it == root_to_comp.end()) {
      it = root_to_comp.emplace(root, r.components.size()).first;
      r.components.emplace_back();
    }
    r.components[it->second].states.push_back(q);
  }
  for (ComponentInfo& c : r.components) {
    std::vector<Transition> local;
    std::set<StateId> members(c.states.begin(), c.states.end());
    for (const Transition& t : a.transitions())
      if (members.count(t.from)) local.push_back(t);
    c.strongly_connected = component_strongly_connected(a, c.states);
    c.bi_reversible = transitions_bi_reversible(local);
  }
  return r;
}

Automaton dual(const Automaton& a) {
  if (!a.is_finite()) throw UnsupportedError("dual: needs a finite backend");
  std::vector<std::string> letters, states;
  for (StateId q = 0; q < a.state_count(); ++q) letters.push_back(a.state_name(q));
  for (LetterId l = 0; l < a.alphabet_size(); ++l) states.push_back(a.letter_name(l));
  Automaton d("dual(" + a.name() + ")", std::move(letters), std::move(states));
  for (const Transition& t : a.transitions()) {
    // q -a/b-> p  becomes  a -q/p-> b; determinism is inherited because the
    // (a, q) keys are exactly the (q, a) keys of the source map.
    d.add_transition(t.in, t.from, t.to, t.out);
  }
  return d;
}

namespace {

const std::string kInverseTag = "^-1";

std::string toggle_inverse_tag(const std::string& name) {
  if (name.size() > kInverseTag.size() &&
      name.compare(name.size() - kInverseTag.size(), kInverseTag.size(), kInverseTag) == 0)
    return name.substr(0, name.size() - kInverseTag.size());
  return name + kInverseTag;
}

} // namespace

Automaton inverse(const Automaton& a) {
  if (!a.is_finite()) throw UnsupportedError("inverse: needs a finite backend");
  std::unordered_map<std::uint64_t, Transition> seen;
  for (const Transition& t : a.transitions()) {
    auto key = (static_cast<std::uint64_t>(t.from) << 32) | static_cast<std::uint32_t>(t.out);
    auto [it, fresh] = seen.emplace(key, t);
    if (!fresh) {
      std::ostringstream msg;
      msg << "automaton '" << a.name() << "' is not invertible: transitions ("
          << a.state_name(t.from) << ": " << a.letter_name(it->second.in) << "/"
          << a.letter_name(it->second.out) << ") and (" << a.state_name(t.from) << ": "
          << a.letter_name(t.in) << "/" << a.letter_name(t.out)
          << ") share state and output letter";
      throw NotInvertibleError(msg.str(), it->second, t);
    }
  }
  std::vector<std::string> letters, states;
  for (LetterId l = 0; l < a.alphabet_size(); ++l) letters.push_back(a.letter_name(l));
  for (StateId q = 0; q < a.state_count(); ++q)
    states.push_back(toggle_inverse_tag(a.state_name(q)));
  Automaton inv("inverse(" + a.name() + ")", std::move(letters), std::move(states));
  for (const Transition& t : a.transitions()) inv.add_transition(t.from, t.out, t.in, t.to);
  return inv;
}

Automaton disjoint_union(const Automaton& a, const Automaton& b) {
  if (!a.is_finite() || !b.is_finite())
    throw UnsupportedError("disjoint_union: needs finite backends");
  std::vector<std::string> letters;
  for (LetterId l = 0; l < a.alphabet_size(); ++l) letters.push_back(a.letter_name(l));
  std::vector<LetterId> bl_map(b.alphabet_size());
  for (LetterId l = 0; l < b.alphabet_size(); ++l) {
    auto existing = a.find_letter(b.letter_name(l));
    if (existing) {
      bl_map[l] = *existing;
    } else {
      bl_map[l] = static_cast<LetterId>(letters.size());
      letters.push_back(b.letter_name(l));
    }
  }
  std::vector<std::string> states;
  std::set<std::string> used;
  for (StateId q = 0; q < a.state_count(); ++q) {
    states.push_back(a.state_name(q));
    used.insert(states.back());
  }
  std::vector<StateId> bs_map(b.state_count());
  for (StateId q = 0; q < b.state_count(); ++q) {
    std::string nm = b.state_name(q);
    while (used.count(nm)) nm += "'";
    used.insert(nm);
    bs_map[q] = static_cast<StateId>(states.size());
    states.push_back(std::move(nm));
  }
  Automaton u(a.name() + "+" + b.name(), std::move(letters), std::move(states));
  for (const Transition& t : a.transitions()) u.add_transition(t.from, t.in, t.out, t.to);
  for (const Transition& t : b.transitions())
    u.add_transition(bs_map[t.from], bl_map[t.in], bl_map[t.out], bs_map[t.to]);
  return u;
}

Automaton compose(const Automaton& a2, const Automaton& a1) {
  if (!a1.is_finite() || !a2.is_finite()) throw UnsupportedError("compose: needs finite backends");
  if (a1.alphabet_size() != a2.alphabet_size())
    throw PreconditionError("compose: alphabet mismatch between '" + a2.name() + "' and '" +
                            a1.name() + "'");
  for (LetterId l = 0; l < a1.alphabet_size(); ++l)
    if (a1.letter_name(l) != a2.letter_name(l))
      throw PreconditionError("compose: alphabet mismatch between '" + a2.name() + "' and '" +
                              a1.name() + "'");
  std::vector<std::string> letters;
  for (LetterId l = 0; l < a1.alphabet_size(); ++l) letters.push_back(a1.letter_name(l));
  // Product states q2∘q1, q1 varying fastest; the left factor acts last.
  std::vector<std::string> states;
  for (StateId q2 = 0; q2 < a2.state_count(); ++q2)
    for (StateId q1 = 0; q1 < a1.state_count(); ++q1)
      states.push_back(a2.state_name(q2) + "∘" + a1.state_name(q1));
  Automaton c(a2.name() + "∘" + a1.name(), std::move(letters), std::move(states));
  const int n1 = a1.state_count();
  for (StateId q2 = 0; q2 < a2.state_count(); ++q2) {
    for (StateId q1 = 0; q1 < n1; ++q1) {
      for (LetterId l = 0; l < a1.alphabet_size(); ++l) {
        auto s1 = a1.step(q1, l);
        if (!s1) continue;
        auto s2 = a2.step(q2, s1->out);
        if (!s2) continue;
        c.add_transition(q2 * n1 + q1, l, s2->out, s2->next * n1 + s1->next);
      }
    }
  }
  return c;
}

Automaton power(const Automaton& a, int k) {
  if (k < 1) throw PreconditionError("power: exponent must be positive");
  Automaton result = a;
  for (int i = 1; i < k; ++i) result = compose(a, result);
  return result;
}

Automaton trim_reachable(const Automaton& a, const std::vector<StateId>& seeds) {
  if (!a.is_finite()) throw UnsupportedError("trim_reachable: needs a finite backend");
  std::vector<bool> keep(a.state_count(), false);
  std::queue<StateId> q;
  for (StateId s : seeds)
    if (!keep.at(s)) {
      keep[s] = true;
      q.push(s);
    }
  while (!q.empty()) {
    StateId cur = q.front();
    q.pop();
    for (LetterId l = 0; l < a.alphabet_size(); ++l) {
      auto s = a.step(cur, l);
      if (s && !keep[s->next]) {
        keep[s->next] = true;
        q.push(s->next);
      }
    }
  }
  std::vector<std::string> letters, states;
  for (LetterId l = 0; l < a.alphabet_size(); ++l) letters.push_back(a.letter_name(l));
  std::vector<StateId> remap(a.state_count(), -1);
  for (StateId s = 0; s < a.state_count(); ++s)
    if (keep[s]) {
      remap[s] = static_cast<StateId>(states.size());
      states.push_back(a.state_name(s));
    }
  if (states.empty()) throw PreconditionError("trim_reachable: no seeds given");
  Automaton t(a.name(), std::move(letters), std::move(states));
  for (const Transition& tr : a.transitions())
    if (keep[tr.from]) t.add_transition(remap[tr.from], tr.in, tr.out, remap[tr.to]);
  return t;
}

} // namespace orbitkit
