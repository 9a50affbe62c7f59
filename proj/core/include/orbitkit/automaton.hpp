#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbitkit/errors.hpp"

namespace orbitkit {

using StateId = std::int32_t;
using LetterId = std::int32_t;

/// A finite input word, stored as letter indices.
using Word = std::vector<LetterId>;

/// A sequence of states in application order: element 0 acts first.
/// (The usual algebraic notation writes such sequences reversed, with the
/// first-acting state on the right; conversion happens only in rendering.)
using StateSeq = std::vector<StateId>;

struct Step {
  LetterId out;
  StateId next;
};

struct Transition {
  StateId from;
  LetterId in;
  LetterId out;
  StateId to;
};

/// Supplies transitions of an automaton with a state set too large (or
/// infinite) to tabulate.  Implementations must be pure: the same query
/// always gets the same answer.
class TransitionOracle {
public:
  virtual ~TransitionOracle() = default;

  virtual std::string family() const = 0;
  virtual std::vector<std::string> alphabet() const = 0;

  /// Does `key` name a state of this machine?
  virtual bool valid_state(const std::string& key) const = 0;

  /// The transition out of `state` on `letter`, or nullopt when undefined.
  virtual std::optional<std::pair<std::string, std::string>>
  step(const std::string& state, const std::string& letter) const = 0;
};

/// A partial deterministic letter-to-letter transducer.
///
/// Determinism holds by construction: transitions live in a map keyed by
/// (state, input letter) and duplicates are rejected.  States and letters
/// are interned strings with dense indices following declaration order.
///
/// Two backends exist.  The finite backend tabulates all transitions and
/// supports every operation.  The oracle backend discovers states on
/// demand, answers single-step queries only, and enforces a bound on the
/// number of distinct states it will intern.  Finite automata are
/// immutable after construction; oracle runtimes are internally
/// synchronized, so values of either kind may be shared across threads.
class Automaton {
public:
  Automaton(std::string name, std::vector<std::string> letters,
            std::vector<std::string> states);

  static Automaton with_oracle(std::string name,
                               std::shared_ptr<const TransitionOracle> oracle,
                               std::size_t state_bound);

  /// Finite backend only; throws on duplicate (from, in) or bad indices.
  void add_transition(StateId from, LetterId in, LetterId out, StateId to);

  const std::string& name() const { return name_; }
  bool is_finite() const { return oracle_ == nullptr; }

  int alphabet_size() const { return static_cast<int>(letters_.size()); }
  const std::string& letter_name(LetterId a) const;
  std::optional<LetterId> find_letter(std::string_view name) const;
  LetterId letter(std::string_view name) const; // throws ParseError if unknown

  /// Finite: the declared number of states.  Oracle: states seen so far.
  int state_count() const;
  std::string state_name(StateId q) const;
  std::optional<StateId> find_state(std::string_view name) const;

  /// Finite: lookup, throws ParseError if unknown.  Oracle: validates the
  /// key with the oracle and interns it.
  StateId state(std::string_view name) const;

  std::optional<Step> step(StateId q, LetterId a) const;

  /// Transitions in declaration order (finite backend only).
  const std::vector<Transition>& transitions() const;

  std::size_t oracle_bound() const;
  const TransitionOracle* oracle() const { return oracle_.get(); }

private:
  struct OracleRuntime;

  std::string name_;
  std::vector<std::string> letters_;
  std::unordered_map<std::string, LetterId> letter_index_;

  // finite backend
  std::vector<std::string> states_;
  std::unordered_map<std::string, StateId> state_index_;
  std::vector<Step> table_; // state * |alphabet| + letter, next == -1 when undefined
  std::vector<Transition> decl_;

  // oracle backend
  std::shared_ptr<const TransitionOracle> oracle_;
  std::shared_ptr<OracleRuntime> rt_;

  void require_finite(const char* op) const;
};

struct ComponentInfo {
  std::vector<StateId> states; // ascending
  bool strongly_connected = false;
  bool bi_reversible = false;

  bool operator==(const ComponentInfo&) const = default;
};

struct PropertyReport {
  bool complete = false;
  bool reversible = false;
  bool invertible = false;
  bool inverse_reversible = false;
  bool bi_reversible = false;
  std::vector<ComponentInfo> components;

  bool operator==(const PropertyReport&) const = default;
};

/// Structural flags plus connected components of the transition graph.
/// Components come from undirected reachability; each carries a strong
/// connectivity flag and the bi-reversibility of its own transitions.
PropertyReport classify(const Automaton& a);

/// Exchange the roles of letters and states: q -a/b-> p becomes a -q/p-> b.
/// dual(dual(a)) == a exactly, including declaration order.
Automaton dual(const Automaton& a);

/// Carries the two clashing transitions when inversion is impossible.
class NotInvertibleError : public PreconditionError {
public:
  NotInvertibleError(std::string msg, Transition first, Transition second)
      : PreconditionError(std::move(msg)), witness{first, second} {}
  std::pair<Transition, Transition> witness;
};

/// Swap input and output letters; states get tagged copies ("q" <-> "q^-1")
/// so that inverse(inverse(a)) == a.  Throws NotInvertibleError with a
/// witness pair when two transitions share (state, output letter).
Automaton inverse(const Automaton& a);

/// Tagged state union, alphabet union (shared letters merge).  Colliding
/// state names on the right get primed until fresh.
Automaton disjoint_union(const Automaton& a, const Automaton& b);

/// Product automaton whose state "q2∘q1" acts like q1 followed by q2.
/// Requires equal alphabets.  The full product is kept; trimming is
/// explicit via trim_reachable.
Automaton compose(const Automaton& a2, const Automaton& a1);

/// k-fold composition, k >= 1; power(a, 1) is a copy.
Automaton power(const Automaton& a, int k);

/// Restrict to states reachable from `seeds` along transitions.
Automaton trim_reachable(const Automaton& a, const std::vector<StateId>& seeds);

} // namespace orbitkit
