#pragma once

#include <map>

#include "orbitkit/automaton.hpp"

namespace orbitkit {

struct CorpusEntry {
  Automaton automaton;
  PropertyReport expected; // transcribed classification, for self-tests
};

/// Names: adding-machine, identity, grigorchuk, grigorchuk-dual,
/// right-ideal, t1, non-invertible, mixed.
std::vector<std::string> corpus_names();
CorpusEntry corpus_get(const std::string& name);

/// Oracle-backed families: fig2 (letter-flipping chain with orbits of size
/// at most two), bartholdi (unbounded yet finite orbits), q0family (an
/// infinite monogenic subsemigroup all of whose orbits are finite).
/// Recognized params: "bound" (distinct-state exploration bound, default
/// 100000).
std::vector<std::string> oracle_families();
Automaton oracle_get(const std::string& family,
                     const std::map<std::string, std::string>& params = {});

} // namespace orbitkit
