#pragma once

#include <cstdint>
#include <variant>

#include "orbitkit/action.hpp"
#include "orbitkit/automaton.hpp"

namespace orbitkit {

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;
inline constexpr std::size_t kDefaultDepthBudget = 12;
inline constexpr std::size_t kDefaultUpLetterBudget = 1 << 16;

/// Generator languages over which orbits are taken.  All three shapes are
/// suffix-closed over a finite block set F:
///  - FullStar:           every state sequence, F = the states (finite backend);
///  - FStar(F):           all products of the given blocks;
///  - PrincipalLeftIdeal: Q* p together with the empty sequence, F = {p} ∪ Q.
class GenLang {
public:
  enum class Kind { FullStar, FStar, PrincipalLeftIdeal };

  static GenLang full_star() { return GenLang(Kind::FullStar); }
  static GenLang f_star(std::vector<StateSeq> blocks);
  static GenLang principal_left_ideal(StateSeq p);

  Kind kind() const { return kind_; }
  bool is_ideal() const { return kind_ == Kind::PrincipalLeftIdeal; }
  const StateSeq& ideal_block() const { return ideal_; }

  /// Materialize F in index order.  For the ideal, block 0 is p and the
  /// remaining blocks are the single states.  FullStar and the ideal need a
  /// finite backend; oracle automata require explicit FStar generators.
  std::vector<StateSeq> blocks_for(const Automaton& a) const;

private:
  explicit GenLang(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<StateSeq> blocks_;
  StateSeq ideal_;
};

struct OrbitalEdge {
  StateSeq output; // the block's dual image at the source node
  std::int32_t target;
};

/// Rooted deterministic block-labeled graph on the orbit of the root word,
/// with output annotations.  Nodes are stored in BFS discovery order
/// (blocks visited in index order), which doubles as a canonical labeling.
struct OrbitalTransducer {
  Word root;
  std::vector<StateSeq> blocks;
  std::vector<Word> nodes; // nodes[0] == root
  std::vector<std::vector<std::optional<OrbitalEdge>>> edges; // [node][block]
  bool ideal_rooted = false; // root expands through block 0 only

  std::size_t size() const { return nodes.size(); }

  /// Complete isomorphism invariant: two transducers over the same block
  /// set are isomorphic as rooted labeled graphs iff encodings are equal.
  std::vector<std::int64_t> canonical_encoding() const;
};

/// BFS closure of u under the generator language.  The node set is exactly
/// the L-orbit of u.  Exceeding node_budget throws BudgetError (for finite
/// backends the orbit has at most |Σ|^|u| nodes).
OrbitalTransducer orbit_word(const Automaton& a, const GenLang& lang, const Word& u,
                             std::size_t node_budget = kDefaultNodeBudget);

struct IsoMap {
  std::vector<std::int32_t> node_map; // node of lhs -> node of rhs
};
struct NotIso {
  std::vector<std::int32_t> path; // shortest distinguishing block path from the roots
};

/// Rooted labeled graph isomorphism by synchronized traversal; edges are
/// deterministic per label, so one pass settles it.
std::variant<IsoMap, NotIso> orbital_transducer_iso(const OrbitalTransducer& lhs,
                                                    const OrbitalTransducer& rhs);

struct NotFoundWithinBudget {};

/// Shortest (then lexicographically least) extension x with a strictly
/// larger L-orbit: |L∘ux| > |L∘u|.  Extensions whose orbital transducer is
/// isomorphic to one already seen are pruned: isomorphic transducers have
/// isomorphic transducers at every further extension, hence equal orbit
/// sizes, so nothing new hides below them.
std::variant<Word, NotFoundWithinBudget> extend_orbit(const Automaton& a, const GenLang& lang,
                                                      const Word& u, std::size_t max_ext_len,
                                                      std::size_t node_budget = kDefaultNodeBudget);

struct GrowthLink {
  Word prefix;
  std::size_t orbit_size;
};
struct GrowthCertificate {
  std::vector<GrowthLink> chain; // strictly increasing sizes, extending prefixes
};
struct Stalled {
  Word at;
  std::size_t orbit_size;
};

/// Iterate extend_orbit from the empty word, building the strictly growing
/// prefix chain until the orbit size reaches target_size.
std::variant<GrowthCertificate, Stalled> witness_search(const Automaton& a, const GenLang& lang,
                                                        std::size_t target_size,
                                                        std::size_t max_ext_len = kDefaultDepthBudget,
                                                        std::size_t node_budget = kDefaultNodeBudget);

struct UpOrbit {
  std::vector<UPWord> elements; // BFS order; elements[0] is the root
};
struct ExceededBudget {
  std::size_t frontier;
};

/// BFS closure of an ultimately periodic word under single blocks of F.
/// Finite when closure is reached within node_budget; elements whose
/// canonical form outgrows max_letters also count as budget exhaustion.
std::variant<UpOrbit, ExceededBudget> orbit_up(const Automaton& a, const GenLang& lang,
                                               const UPWord& x,
                                               std::size_t node_budget = kDefaultNodeBudget,
                                               std::size_t max_letters = kDefaultUpLetterBudget);

struct CertifiedGrowth {
  std::size_t prefix_len;
  std::size_t orbit_size;
};
struct GrowthUnknown {};

/// Growth certificate for the full orbit of an ω-word over a complete
/// automaton: on complete automata every element of a prefix orbit extends
/// to an element of the ω-orbit, so prefix orbits bound the ω-orbit from
/// below.  Certified once some prefix orbit reaches size_target.
std::variant<CertifiedGrowth, GrowthUnknown> certify_infinite_up(
    const Automaton& a, const UPWord& x, std::size_t size_target, std::size_t prefix_budget);

struct OrbitPath {
  std::vector<Word> nodes;          // pairwise distinct; nodes[0] == u
  std::vector<std::int32_t> labels; // block indices, one per edge
};

/// Simple path of exactly `length` edges in the L-orbital graph, found by
/// DFS with blocks tried in index order (so the result is deterministic).
std::variant<OrbitPath, NotFoundWithinBudget> orbit_path_search(
    const Automaton& a, const GenLang& lang, const Word& u, std::size_t length,
    std::size_t node_budget = kDefaultNodeBudget);

} // namespace orbitkit
