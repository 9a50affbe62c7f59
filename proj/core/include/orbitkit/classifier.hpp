#pragma once

#include <variant>

#include "orbitkit/algebra.hpp"
#include "orbitkit/orbit.hpp"

namespace orbitkit {

/// Letters of `a` that are states of a non-bi-reversible connected
/// component of the dual.  Applicable only when the dual is a reversible
/// G-automaton (complete, invertible, reversible); otherwise the failing
/// property is named and gamma is empty.
struct LetterClassification {
  bool applicable = false;
  std::string failing_property; // "complete" | "reversible" | "invertible"
  std::vector<LetterId> gamma;  // ascending
  PropertyReport dual_report;
};

LetterClassification classify_letters(const Automaton& a);

struct PeriodicPrediction {
  bool predict_infinite = false;
  LetterId reason = -1; // a gamma letter occurring in the period
};

/// Predicts an infinite orbit for u·v^ω whenever the period contains a
/// gamma letter (such letters occur infinitely often).  Throws
/// PreconditionError when classify_letters is inapplicable.
PeriodicPrediction predict_periodic_orbit(const Automaton& a, const UPWord& x);

struct Extraction {
  Word u, v;
  std::size_t cut = 0, cut_end = 0; // the chosen prefix lengths ℓ < ℓ'
  bool verified = false;            // orbit of u·v^ω re-checked finite
  bool covers_recurrent = false;    // v contains every letter occurring infinitely often in x
  bool refinement_applicable = false; // automaton complete and reversible
  bool refinement_verified = false;   // orbit of v^ω re-checked finite
};

/// From a finite orbit of x, extract u, v with Q*∘u·v^ω finite: search
/// prefix-length pairs ℓ < ℓ' such that on every orbit element every state's
/// dual image agrees at both cuts (or is undefined at both).  For complete
/// and reversible automata the plain period v^ω is finite as well and gets
/// verified too.  Throws PreconditionError when the orbit of x does not
/// close within node_budget.
std::variant<Extraction, NotFoundWithinBudget> extract_periodic_finite_orbit(
    const Automaton& a, const UPWord& x, std::size_t pair_budget = 0,
    std::size_t node_budget = kDefaultNodeBudget);

} // namespace orbitkit
