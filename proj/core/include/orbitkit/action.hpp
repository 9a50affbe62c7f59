#pragma once

#include <variant>

#include "orbitkit/automaton.hpp"
#include "orbitkit/upword.hpp"

namespace orbitkit {

struct ActResult {
  Word output;       // s ∘ w, same length as the input
  StateSeq residual; // s · w in application order, same length as s
};

/// The first failing cell of the cross diagram, scanned row-major with the
/// first-applied state's row first.  `letter` is the cell's own input
/// letter, i.e. a letter of the previous row's output.
struct ActUndefined {
  std::size_t position;
  int stage; // index into the application-order sequence
  StateId state;
  LetterId letter;
};

/// Evaluate s ∘ w and the residual s · w.  States apply in sequence order:
/// s[0] first.  An empty sequence is the identity.
std::variant<ActResult, ActUndefined> act_finite(const Automaton& a, const StateSeq& s,
                                                 const Word& w);

/// The dual action s · w alone.
std::variant<StateSeq, ActUndefined> act_dual(const Automaton& a, const Word& w,
                                              const StateSeq& s);

struct UpUndefined {
  std::size_t prefix_len; // length of the shortest prefix on which s∘ fails
};

/// Act on an ultimately periodic ω-word, one state at a time.  Each stage
/// processes the preperiod and then pumps the period until its residual
/// state repeats, so the image is again ultimately periodic and is returned
/// canonicalized.  Works on oracle backends (subject to their exploration
/// bound).
std::variant<UPWord, UpUndefined> act_up(const Automaton& a, const StateSeq& s, const UPWord& x);

} // namespace orbitkit
