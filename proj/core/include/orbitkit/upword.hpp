#pragma once

#include <cstddef>
#include <cstdint>

#include "orbitkit/automaton.hpp"

namespace orbitkit {

/// Canonical ultimately periodic ω-word u·v^ω: the period is primitive and
/// the preperiod is shortest (its last letter differs from the period's
/// last letter, or it is empty).  Two UPWord values compare equal exactly
/// when they denote the same ω-word.
struct UPWord {
  Word pre;
  Word period;

  bool operator==(const UPWord&) const = default;
  std::size_t total_size() const { return pre.size() + period.size(); }
};

/// Canonicalize u·v^ω; throws PreconditionError when v is empty.
UPWord up_canonicalize(Word pre, Word period);

/// Letter at position i of the denoted ω-word.
LetterId up_at(const UPWord& x, std::size_t i);

/// The first n letters of the denoted ω-word.
Word up_prefix(const UPWord& x, std::size_t n);

struct UPWordHash {
  std::size_t operator()(const UPWord& x) const;
};

} // namespace orbitkit
