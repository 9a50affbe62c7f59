#include "doctest.h"

#include <random>

#include "orbitkit/automaton.hpp"
#include "orbitkit/corpus.hpp"
#include "orbitkit/io.hpp"
#include "../support/test_support.hpp"

using namespace orbitkit;
namespace ts = orbitkit::testsupport;

namespace {

const char* kAddingText =
    "automaton adding-machine\n"
    "alphabet 0 1\n"
    "states q id\n"
    "trans q 1 0 q\n"
    "trans q 0 1 id\n"
    "trans id 0 0 id\n"
    "trans id 1 1 id\n";

} // namespace

TEST_CASE("parse and serialize round-trip byte for byte") {
  Automaton a = parse_automaton_text(kAddingText);
  CHECK(serialize_automaton(a) == kAddingText);
  // comments and blank lines are stripped, nothing else moves
  std::string commented = std::string("# header comment\n") + kAddingText + "\n# trailing\n";
  CHECK(serialize_automaton(parse_automaton_text(commented)) == kAddingText);
}

TEST_CASE("parser rejects duplicate transitions and degenerate sets") {
  CHECK_THROWS_AS(parse_automaton_text("automaton x\nalphabet 0\nstates q\n"
                                       "trans q 0 0 q\ntrans q 0 0 q\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_automaton_text("automaton x\nalphabet\nstates q\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton_text("automaton x\nalphabet 0\nstates\n"), ParseError);
  CHECK_THROWS_AS(parse_automaton_text("automaton x\nalphabet 0\nstates q\ntrans q 0 0 r\n"),
                  ParseError);
  // empty transition set is legal
  Automaton bare = parse_automaton_text("automaton x\nalphabet 0\nstates q\n");
  CHECK_FALSE(bare.step(0, 0));
}

TEST_CASE("classify: adding machine") {
  auto rep = classify(corpus_get("adding-machine").automaton);
  CHECK(rep.complete);
  CHECK(rep.invertible);
  CHECK_FALSE(rep.reversible);
  CHECK_FALSE(rep.inverse_reversible);
  CHECK_FALSE(rep.bi_reversible);
}

TEST_CASE("classify: t1 is reversible and invertible, not bi-reversible, not complete") {
  auto rep = classify(corpus_get("t1").automaton);
  CHECK(rep.reversible);
  CHECK(rep.invertible);
  CHECK_FALSE(rep.bi_reversible);
  CHECK_FALSE(rep.complete);
}

TEST_CASE("classify: one-state identity has every flag") {
  auto rep = classify(corpus_get("identity").automaton);
  CHECK(rep.complete);
  CHECK(rep.reversible);
  CHECK(rep.invertible);
  CHECK(rep.inverse_reversible);
  CHECK(rep.bi_reversible);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].strongly_connected);
}

TEST_CASE("dual swaps roles and is an involution") {
  Automaton adding = corpus_get("adding-machine").automaton;
  Automaton d = dual(adding);
  CHECK(d.state_count() == 2);     // old letters
  CHECK(d.alphabet_size() == 2);   // old states
  // q -0/1-> id dualizes to 0 -q/id-> 1
  auto s = d.step(d.state("0"), d.letter("q"));
  REQUIRE(s);
  CHECK(d.letter_name(s->out) == "id");
  CHECK(d.state_name(s->next) == "1");
  Automaton dd = dual(d);
  CHECK(serialize_automaton(dd) == serialize_automaton(adding));
}

TEST_CASE("dual of grigorchuk matches the two-state table") {
  Automaton d = corpus_get("grigorchuk-dual").automaton;
  REQUIRE(d.state_count() == 2);
  REQUIRE(d.alphabet_size() == 5);
  auto expect = [&](const char* from, const char* in, const char* out, const char* to) {
    auto s = d.step(d.state(from), d.letter(in));
    REQUIRE(s);
    CHECK(d.letter_name(s->out) == out);
    CHECK(d.state_name(s->next) == to);
  };
  expect("0", "b", "a", "0");
  expect("0", "c", "a", "0");
  expect("0", "d", "id", "0");
  expect("0", "a", "id", "1");
  expect("1", "b", "c", "1");
  expect("1", "c", "d", "1");
  expect("1", "d", "b", "1");
  expect("1", "a", "id", "0");
}

TEST_CASE("inverse inverts and is an involution up to tags") {
  Automaton adding = corpus_get("adding-machine").automaton;
  Automaton inv = inverse(adding);
  CHECK(inv.state_name(0) == "q^-1");
  // q ∘ 000 = 100, so q^-1 ∘ 100 = 000
  auto r = act_finite(inv, {inv.state("q^-1")}, parse_word(inv, "100"));
  CHECK(std::get<ActResult>(r).output == parse_word(inv, "000"));
  CHECK(serialize_automaton(inverse(inv)) == serialize_automaton(adding));
}

TEST_CASE("inverse of a non-invertible automaton reports a witness") {
  Automaton bad = corpus_get("non-invertible").automaton;
  try {
    inverse(bad);
    FAIL("expected NotInvertibleError");
  } catch (const NotInvertibleError& e) {
    CHECK(e.witness.first.from == e.witness.second.from);
    CHECK(e.witness.first.out == e.witness.second.out);
    CHECK(bad.state_name(e.witness.first.from) == "q");
    CHECK(bad.letter_name(e.witness.first.out) == "b");
  }
}

TEST_CASE("disjoint union tags colliding states and keeps flags") {
  Automaton adding = corpus_get("adding-machine").automaton;
  Automaton u = disjoint_union(adding, adding);
  CHECK(u.state_count() == 4);
  CHECK(u.alphabet_size() == 2);
  CHECK(u.find_state("q'"));
  auto rep = classify(u);
  auto base = classify(adding);
  CHECK(rep.complete == base.complete);
  CHECK(rep.reversible == base.reversible);
  CHECK(rep.invertible == base.invertible);

  // adding machine ⊔ its inverse: the group generators of the integers
  Automaton g = disjoint_union(adding, inverse(adding));
  CHECK(g.state_count() == 4);
  CHECK(classify(g).complete);
  auto back = act_finite(g, {g.state("q"), g.state("q^-1")}, parse_word(g, "0110"));
  CHECK(std::get<ActResult>(back).output == parse_word(g, "0110"));
}

TEST_CASE("union of complete automata over one alphabet is complete") {
  Automaton u = disjoint_union(corpus_get("adding-machine").automaton,
                               corpus_get("identity").automaton);
  CHECK(classify(u).complete);
}

TEST_CASE("compose chains outputs into inputs") {
  Automaton adding = corpus_get("adding-machine").automaton;
  Automaton sq = compose(adding, adding);
  CHECK(sq.state_count() == 4);
  // (q∘q) increments twice: 010 (two) -> 001 (four)
  auto r = act_finite(sq, {sq.state("q∘q")}, parse_word(sq, "010"));
  CHECK(std::get<ActResult>(r).output == parse_word(sq, "001"));

  Automaton idc = compose(corpus_get("identity").automaton, adding);
  for (const Word& w : ts::all_words(adding, 4)) {
    auto lhs = act_finite(idc, {idc.state("id∘q")}, w);
    auto rhs = act_finite(adding, {adding.state("q")}, w);
    CHECK(std::get<ActResult>(lhs).output == std::get<ActResult>(rhs).output);
  }
}

TEST_CASE("compose rejects alphabet mismatches") {
  CHECK_THROWS_AS(compose(corpus_get("adding-machine").automaton, corpus_get("t1").automaton),
                  PreconditionError);
}

TEST_CASE("composition of reversible automata is reversible") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Automaton a1 = ts::random_reversible(rng, 2 + trial % 3, 2 + trial % 2);
    Automaton a2 = ts::random_reversible(rng, 2 + (trial / 3) % 3, 2 + trial % 2);
    REQUIRE(classify(a1).reversible);
    REQUIRE(classify(a2).reversible);
    CHECK(classify(compose(a2, a1)).reversible);
  }
}

TEST_CASE("power is iterated composition") {
  Automaton adding = corpus_get("adding-machine").automaton;
  CHECK(serialize_automaton(power(adding, 2)) == serialize_automaton(compose(adding, adding)));
  CHECK(power(corpus_get("grigorchuk").automaton, 2).state_count() == 25);
  CHECK_THROWS_AS(power(adding, 0), PreconditionError);

  // the product state acts like the sequence
  Automaton sq = power(adding, 2);
  StateSeq qq{adding.state("q"), adding.state("q")};
  for (const Word& w : ts::all_words(adding, 4)) {
    auto lhs = act_finite(sq, {sq.state("q∘q")}, w);
    auto rhs = act_finite(adding, qq, w);
    CHECK(std::get<ActResult>(lhs).output == std::get<ActResult>(rhs).output);
  }
}

TEST_CASE("product states act like sequences on random automata") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    Automaton a1 = ts::random_automaton(rng, 2 + trial % 3, 2);
    Automaton a2 = ts::random_automaton(rng, 2 + (trial / 2) % 3, 2);
    Automaton c = compose(a2, a1);
    std::uniform_int_distribution<int> s1(0, a1.state_count() - 1), s2(0, a2.state_count() - 1);
    StateId q1 = s1(rng), q2 = s2(rng);
    StateId prod = c.state(a2.state_name(q2) + "∘" + a1.state_name(q1));
    for (const Word& w : ts::all_words(a1, 4)) {
      auto via_seq = [&]() -> std::optional<Word> {
        auto r1 = act_finite(a1, {q1}, w);
        if (!std::holds_alternative<ActResult>(r1)) return std::nullopt;
        auto r2 = act_finite(a2, {q2}, std::get<ActResult>(r1).output);
        if (!std::holds_alternative<ActResult>(r2)) return std::nullopt;
        return std::get<ActResult>(r2).output;
      }();
      auto direct = act_finite(c, {prod}, w);
      if (via_seq) {
        REQUIRE(std::holds_alternative<ActResult>(direct));
        CHECK(std::get<ActResult>(direct).output == *via_seq);
      } else {
        CHECK(std::holds_alternative<ActUndefined>(direct));
      }
    }
  }
}

TEST_CASE("dual action of a complete reversible automaton is a bijection") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Automaton a = ts::random_reversible(rng, 3, 2, 1.0); // density 1 = complete
    auto rep = classify(a);
    REQUIRE(rep.complete);
    REQUIRE(rep.reversible);
    for (const ComponentInfo& c : rep.components) CHECK(c.strongly_connected);
    for (const Word& u : ts::all_words(a, 4)) {
      // on Q
      std::set<StateId> images;
      for (StateId q = 0; q < a.state_count(); ++q) {
        auto r = act_dual(a, u, {q});
        REQUIRE(std::holds_alternative<StateSeq>(r));
        images.insert(std::get<StateSeq>(r)[0]);
      }
      CHECK(images.size() == static_cast<std::size_t>(a.state_count()));
      // on Q^2
      std::set<StateSeq> pair_images;
      for (StateId q1 = 0; q1 < a.state_count(); ++q1)
        for (StateId q2 = 0; q2 < a.state_count(); ++q2) {
          auto r = act_dual(a, u, {q1, q2});
          pair_images.insert(std::get<StateSeq>(r));
        }
      CHECK(pair_images.size() ==
            static_cast<std::size_t>(a.state_count()) * a.state_count());
    }
  }
}

TEST_CASE("trim_reachable keeps the reachable part") {
  Automaton g = corpus_get("grigorchuk").automaton;
  Automaton t = trim_reachable(g, {g.state("d")});
  // d reaches id and b, b reaches a and c
  CHECK(t.state_count() == 5);
  Automaton t2 = trim_reachable(g, {g.state("a")});
  CHECK(t2.state_count() == 2); // a and id
}

TEST_CASE("oracle-backed automata refuse whole-automaton analyses") {
  Automaton a = oracle_get("fig2");
  CHECK_THROWS_AS(classify(a), UnsupportedError);
  CHECK_THROWS_AS(dual(a), UnsupportedError);
  CHECK_THROWS_AS(serialize_automaton(a), UnsupportedError);
}
