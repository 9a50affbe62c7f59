#include "doctest.h"

#include <random>

#include "orbitkit/classifier.hpp"
#include "orbitkit/corpus.hpp"
#include "orbitkit/io.hpp"
#include "../support/test_support.hpp"

using namespace orbitkit;
namespace ts = orbitkit::testsupport;

namespace {

// Reversible, invertible, complete, but not inverse-reversible, with a
// letter (c) whose dual component is bi-reversible: the gamma set is {0, 1}
// and c stays outside.
Automaton mixed_gamma_example() {
  Automaton a("gamma-demo", {"0", "1", "c"}, {"x", "y"});
  a.add_transition(a.state("x"), a.letter("0"), a.letter("0"), a.state("x"));
  a.add_transition(a.state("x"), a.letter("1"), a.letter("1"), a.state("y"));
  a.add_transition(a.state("x"), a.letter("c"), a.letter("c"), a.state("x"));
  a.add_transition(a.state("y"), a.letter("0"), a.letter("1"), a.state("y"));
  a.add_transition(a.state("y"), a.letter("1"), a.letter("0"), a.state("x"));
  a.add_transition(a.state("y"), a.letter("c"), a.letter("c"), a.state("y"));
  return a;
}

Automaton random_reversible_non_birev_g(std::mt19937& rng, int n_states, int n_letters) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Automaton a = ts::random_reversible_g_automaton(rng, n_states, n_letters);
    auto rep = classify(a);
    if (!rep.bi_reversible) return a;
  }
  throw std::runtime_error("generator failed to produce a non-bi-reversible instance");
}

} // namespace

TEST_CASE("classify_letters is inapplicable when the dual is no reversible G-automaton") {
  auto cls = classify_letters(corpus_get("mixed").automaton);
  CHECK_FALSE(cls.applicable);
  // the mixed automaton is invertible and complete, so its dual is
  // reversible and complete; invertibility of the dual (= reversibility of
  // the source) is what fails
  CHECK(cls.failing_property == "invertible");
}

TEST_CASE("bi-reversible automata have empty gamma") {
  auto cls = classify_letters(corpus_get("identity").automaton);
  REQUIRE(cls.applicable);
  CHECK(cls.gamma.empty());
}

TEST_CASE("gamma letters come from non-bi-reversible dual components") {
  Automaton a = mixed_gamma_example();
  auto rep = classify(a);
  REQUIRE(rep.complete);
  REQUIRE(rep.reversible);
  REQUIRE(rep.invertible);
  REQUIRE_FALSE(rep.inverse_reversible);

  auto cls = classify_letters(a);
  REQUIRE(cls.applicable);
  CHECK(cls.gamma == std::vector<LetterId>{a.letter("0"), a.letter("1")});

  // period containing a gamma letter predicts an infinite orbit
  auto p1 = predict_periodic_orbit(a, parse_upword(a, "|c,0"));
  CHECK(p1.predict_infinite);
  CHECK(p1.reason == a.letter("0"));
  auto p2 = predict_periodic_orbit(a, parse_upword(a, "|c"));
  CHECK_FALSE(p2.predict_infinite);

  CHECK_THROWS_AS(predict_periodic_orbit(corpus_get("mixed").automaton,
                                         parse_upword(corpus_get("mixed").automaton, "|0")),
                  PreconditionError);
}

TEST_CASE("randomized reversible non-bi-reversible G-automata") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    Automaton a = random_reversible_non_birev_g(rng, 3, 3);
    auto cls = classify_letters(a);
    REQUIRE(cls.applicable);
    REQUIRE_FALSE(cls.gamma.empty());
    // every non-bi-reversible component of the dual has at least two states
    for (const ComponentInfo& c : cls.dual_report.components)
      if (!c.bi_reversible) CHECK(c.states.size() >= 2);
    CHECK(cls.gamma.size() >= 2);

    // periodic words over a gamma letter have infinite (never-closing)
    // orbits, and the growth certificate confirms it
    LetterId g = cls.gamma.front();
    UPWord x = up_canonicalize({}, {g});
    CHECK(predict_periodic_orbit(a, x).predict_infinite);
    auto orbit = orbit_up(a, GenLang::full_star(), x, 2000);
    CHECK(std::holds_alternative<ExceededBudget>(orbit));
    auto growth = certify_infinite_up(a, x, 32, 256);
    CHECK(std::holds_alternative<CertifiedGrowth>(growth));
  }
}

TEST_CASE("finite-orbit extraction on the mixed automaton") {
  Automaton m = corpus_get("mixed").automaton;
  auto r = extract_periodic_finite_orbit(m, parse_upword(m, "1'|0"));
  REQUIRE(std::holds_alternative<Extraction>(r));
  const auto& ex = std::get<Extraction>(r);
  CHECK(ex.u == parse_word(m, "1'"));
  CHECK(ex.v == parse_word(m, "0"));
  CHECK(ex.verified);
  CHECK(ex.covers_recurrent);
  // the automaton is not reversible, so the periodic refinement is off the
  // table; indeed no periodic word has a finite orbit here
  CHECK_FALSE(ex.refinement_applicable);
  auto periodic = orbit_up(m, GenLang::full_star(), up_canonicalize({}, ex.v), 512);
  CHECK(std::holds_alternative<ExceededBudget>(periodic));
}

TEST_CASE("extraction with the reversible refinement on the grigorchuk dual") {
  Automaton d = corpus_get("grigorchuk-dual").automaton;
  auto r = extract_periodic_finite_orbit(d, parse_upword(d, "|b"));
  REQUIRE(std::holds_alternative<Extraction>(r));
  const auto& ex = std::get<Extraction>(r);
  CHECK(ex.verified);
  CHECK(ex.refinement_applicable);
  CHECK(ex.refinement_verified);
}

TEST_CASE("extraction is trivial on the identity automaton") {
  Automaton id = corpus_get("identity").automaton;
  auto r = extract_periodic_finite_orbit(id, parse_upword(id, "|0"));
  REQUIRE(std::holds_alternative<Extraction>(r));
  const auto& ex = std::get<Extraction>(r);
  CHECK(ex.u.empty());
  CHECK(ex.v == parse_word(id, "0"));
  CHECK(ex.verified);
}

TEST_CASE("extraction demands a finite orbit") {
  Automaton a = corpus_get("adding-machine").automaton;
  CHECK_THROWS_AS(extract_periodic_finite_orbit(a, parse_upword(a, "|0"), 0, 128),
                  PreconditionError);
}
