#pragma once

#include <string>

#include "orbitkit/algebra.hpp"
#include "orbitkit/orbit.hpp"

namespace orbitkit {

/// Graphviz rendering of an orbital transducer: nodes are orbit words,
/// edge labels are "block / output".
std::string orbit_to_dot(const Automaton& a, const OrbitalTransducer& t);

/// Left Cayley graph with nodes labeled by shortest representatives.
std::string cayley_to_dot(const Automaton& a, const CayleyGraph& g);

} // namespace orbitkit
