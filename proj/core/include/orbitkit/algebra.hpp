#pragma once

#include <cstdint>
#include <variant>

#include "orbitkit/automaton.hpp"
#include "orbitkit/orbit.hpp"

namespace orbitkit {

/// Canonical form of the partial function s∘ on Σ*: the reachable part of
/// the |s|-fold power automaton, minimized as a partial Mealy machine
/// (undefinedness is a distinguished behavior) and BFS-renumbered.  Two
/// state sequences induce the same partial function iff their canons are
/// structurally equal.
struct ElementCanon {
  std::int32_t n_states = 0;
  std::int32_t n_letters = 0;
  // n_states * n_letters cells of (out, next); -1/-1 when undefined.
  std::vector<std::int32_t> table;

  bool operator==(const ElementCanon&) const = default;
  bool is_identity() const;
  std::optional<Step> step(std::int32_t state, LetterId a) const {
    const std::int32_t out = table[(static_cast<std::size_t>(state) * n_letters + a) * 2];
    if (out < 0) return std::nullopt;
    return Step{out, table[(static_cast<std::size_t>(state) * n_letters + a) * 2 + 1]};
  }
};

struct ElementCanonHash {
  std::size_t operator()(const ElementCanon& e) const;
};

ElementCanon element_canon(const Automaton& a, const StateSeq& s);
ElementCanon identity_canon(int n_letters);

/// Canon of the composition "first, then second" (i.e. of the semigroup
/// product written second·first).
ElementCanon canon_compose(const ElementCanon& second, const ElementCanon& first);

/// Extensional equality of s1∘ and s2∘ via canon equality.
bool elements_equal(const Automaton& a, const StateSeq& s1, const StateSeq& s2);

struct FinitenessReport {
  enum class Verdict { FiniteWithOrder, NotClosedAtBudget };
  Verdict verdict = Verdict::NotClosedAtBudget;
  std::size_t order = 0;                  // set when finite
  std::vector<std::size_t> new_per_length; // distinct elements first seen at length 1, 2, ...
  // populated when keep_elements was requested
  std::vector<ElementCanon> elements;
  std::vector<StateSeq> reprs; // shortest product expression, application order
};

/// Breadth-first product closure of the generated subsemigroup over element
/// canons.  FiniteWithOrder(n) means the ball closed (no new elements at
/// some length) before the budgets ran out; the ball never contains the
/// identity unless some product induces it.
FinitenessReport enumerate_ball(const Automaton& a, const std::vector<StateSeq>& gens,
                                std::size_t max_len, std::size_t max_elems,
                                bool keep_elements = false);

struct TorsionVerdict {
  enum class Kind { Torsion, TorsionFreeCertified, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t i = 0, j = 0;        // Torsion: s^i∘ = s^j∘ with i < j, j minimal
  std::size_t prefix_len = 0;      // TorsionFreeCertified: dual-orbit growth witness
  std::size_t orbit_size = 0;
  std::size_t budget_spent = 0;
};

/// Direct route: incremental powers with canon-equality cycle detection.
TorsionVerdict torsion_check(const Automaton& a, const StateSeq& s, std::size_t max_exponent);

/// Dual route: s∘ has torsion iff the orbit of the reversed spelling of s,
/// repeated forever, is finite under the dual automaton.  A finite closure
/// yields a Torsion verdict re-verified through torsion_check; on complete
/// automata an exceeded budget falls through to a dual-orbit growth
/// certificate of torsion-freeness; otherwise Unknown.
TorsionVerdict torsion_check_dual(const Automaton& a, const StateSeq& s, std::size_t node_budget,
                                  std::size_t size_target);

struct OrderResult {
  bool finite = false;
  std::size_t order = 0;        // least k with s^k∘ = identity
  std::size_t budget_spent = 0;
};

/// Least k >= 1 with s^k inducing the identity on Σ*.
OrderResult order_check(const Automaton& a, const StateSeq& s, std::size_t max_exponent);

struct InverseSearch {
  bool found = false;
  StateSeq witness; // s with (s p)∘ = identity, application order
  std::size_t max_len = 0;
};

/// Search the length-bounded ball for an inverse of p∘.  Preconditions: the
/// automaton is reversible and invertible and p lies in a component that is
/// not bi-reversible; then no inverse can exist at any length.
InverseSearch no_inverse_in_ball(const Automaton& a, StateId p, std::size_t max_len);

struct CayleyGraph {
  std::vector<StateSeq> gens;
  std::vector<ElementCanon> elements;
  std::vector<StateSeq> reprs;
  // succ[node][gen] = index of gen·node, or -1 when outside the enumerated ball
  std::vector<std::vector<std::int32_t>> succ;
};

/// Left Cayley graph on the ball elements: x -g-> g·x.  An empty generator
/// set yields the single identity node.
CayleyGraph cayley_graph(const Automaton& a, const std::vector<StateSeq>& gens,
                         std::size_t max_len, std::size_t max_elems = kDefaultNodeBudget);

} // namespace orbitkit
