#pragma once

#include <array>

#include "orbitkit/action.hpp"
#include "orbitkit/automaton.hpp"

namespace orbitkit {

/// The order-problem reduction automaton R built around a source
/// G-automaton T with a marked state $.  R extends T with a driver state s,
/// a scanner t, an identity state, one checkpoint state per source state,
/// marker letters and a 0/1-tagged letter pair per source state; every
/// missing transition is completed into the identity state.  The alphabet
/// grows to |Σ| + 2|Q| + 2 letters and the state set to 2|Q| + 3 states,
/// and R is again complete and invertible.
struct GadgetBundle {
  Automaton source;
  StateId dollar; // marked source state

  Automaton r;
  LetterId star = -1, hash = -1;                  // marker letters of r
  std::vector<std::array<LetterId, 2>> a_letters; // per source state: tagged letters (·,0), (·,1)
  std::vector<LetterId> sigma_letters;            // source letter -> r letter
  StateId s_state = -1, t_state = -1, id_state = -1;
  std::vector<StateId> hash_states; // per source state: its checkpoint state
  std::vector<StateId> embedded;    // source state -> r state
};

/// The doubling expansion: lambda([]) = [], lambda(w + [q]) =
/// lambda(w) + [q] + lambda(w).  Output length is 2^|s| - 1; exceeding
/// max_output_len throws BudgetError.
StateSeq lambda_expand(const StateSeq& s, std::size_t max_output_len);

/// Requires a G-automaton source (complete and invertible).
GadgetBundle build_gadget(const Automaton& t, StateId dollar);

/// The word *(a_{s[0]},0) ... (a_{s[n-1]},0)# over R's alphabet.
Word encode_word(const GadgetBundle& bundle, const StateSeq& s);

struct DaggerOutcome {
  bool verified = false;
  std::size_t fail_pos = 0; // index into the residual/output where it broke
  std::string detail;
};

/// Check that k·|lambda(s)$| copies of the driver state fix encode_word(s)
/// and leave residual (lambda(s) $)^k, the combinatorial heart of the
/// reduction.  Residuals are compared in application order.
DaggerOutcome verify_dagger(const GadgetBundle& bundle, const StateSeq& s, std::size_t k,
                            std::size_t max_len);

} // namespace orbitkit
