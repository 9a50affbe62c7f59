#include "doctest.h"

#include <random>

#include "orbitkit/corpus.hpp"
#include "orbitkit/gadget.hpp"
#include "orbitkit/io.hpp"
#include "orbitkit/orbit.hpp"
#include "../support/test_support.hpp"

using namespace orbitkit;
namespace ts = orbitkit::testsupport;

TEST_CASE("lambda expansion doubles and interleaves") {
  CHECK(lambda_expand({}, 10).empty());
  CHECK(lambda_expand({7}, 10) == StateSeq{7});
  CHECK(lambda_expand({1, 2}, 10) == StateSeq{1, 2, 1});
  CHECK(lambda_expand({1, 2, 3}, 10) == StateSeq{1, 2, 1, 3, 1, 2, 1});
  for (int n = 0; n <= 10; ++n) {
    StateSeq s(n, 0);
    CHECK(lambda_expand(s, 1 << 12).size() == (std::size_t{1} << n) - 1);
  }
  CHECK_THROWS_AS(lambda_expand(StateSeq(5, 0), 16), BudgetError);
}

TEST_CASE("gadget construction around the adding machine") {
  Automaton t = corpus_get("adding-machine").automaton;
  GadgetBundle b = build_gadget(t, t.state("q"));
  CHECK(b.r.state_count() == 7);   // 2 + 3 + 2
  CHECK(b.r.alphabet_size() == 8); // 2 + 4 + 2
  auto rep = classify(b.r);
  CHECK(rep.complete);
  CHECK(rep.invertible);

  // the scanner decrements tagged letters in place
  for (StateId q = 0; q < t.state_count(); ++q) {
    auto s = b.r.step(b.t_state, b.a_letters[q][1]);
    REQUIRE(s);
    CHECK(s->out == b.a_letters[q][0]);
    CHECK(s->next == b.t_state);
  }
  // every state but the driver fixes the star into the identity
  for (StateId p = 0; p < b.r.state_count(); ++p) {
    if (p == b.s_state) continue;
    auto s = b.r.step(p, b.star);
    REQUIRE(s);
    CHECK(s->out == b.star);
    CHECK(s->next == b.id_state);
  }
  // and the driver starts the scanner
  auto s = b.r.step(b.s_state, b.star);
  REQUIRE(s);
  CHECK(s->next == b.t_state);

  // gadget output serializes and parses like any automaton
  Automaton back = parse_automaton_text(serialize_automaton(b.r));
  CHECK(serialize_automaton(back) == serialize_automaton(b.r));
}

TEST_CASE("gadget encoding") {
  Automaton t = corpus_get("adding-machine").automaton;
  GadgetBundle b = build_gadget(t, t.state("q"));
  CHECK(encode_word(b, {}) == Word{b.star, b.hash});
  CHECK(encode_word(b, {t.state("q")}) == Word{b.star, b.a_letters[t.state("q")][0], b.hash});
  CHECK(encode_word(b, {t.state("q"), t.state("id")}) ==
        Word{b.star, b.a_letters[t.state("q")][0], b.a_letters[t.state("id")][0], b.hash});
  CHECK_THROWS_AS(encode_word(b, {99}), PreconditionError);
}

TEST_CASE("the driver realizes the doubling pattern") {
  Automaton t = corpus_get("adding-machine").automaton;
  GadgetBundle b = build_gadget(t, t.state("q"));
  const StateId q = t.state("q");

  // k = 1, s = [q]: two driver copies fix the word leaving residual [q, $]
  auto direct = act_finite(b.r, StateSeq(2, b.s_state), encode_word(b, {q}));
  const auto& res = std::get<ActResult>(direct);
  CHECK(res.output == encode_word(b, {q}));
  CHECK(res.residual == StateSeq{b.embedded[q], b.embedded[t.state("q")]});

  for (std::size_t k = 0; k <= 4; ++k) {
    CHECK(verify_dagger(b, {q}, k, 1 << 12).verified);
    CHECK(verify_dagger(b, {q, t.state("id")}, k, 1 << 12).verified);
  }
}

TEST_CASE("the three-state cross diagram pattern") {
  std::mt19937 rng(99);
  Automaton t("source3", {"0", "1"}, {"q1", "q2", "q3"});
  {
    // a fixed three-state G-automaton: outputs permute per state
    Automaton r = ts::random_g_automaton(rng, 3, 2);
    t = Automaton("source3", {"0", "1"}, {"q1", "q2", "q3"});
    for (const Transition& tr : r.transitions()) t.add_transition(tr.from, tr.in, tr.out, tr.to);
  }
  REQUIRE(classify(t).complete);
  REQUIRE(classify(t).invertible);

  GadgetBundle b = build_gadget(t, t.state("q1"));
  const StateSeq s{t.state("q1"), t.state("q2"), t.state("q3")};
  // Λ(q1 q2 q3) $ = q1 q2 q1 q3 q1 q2 q1 $ in application order
  auto r = act_finite(b.r, StateSeq(8, b.s_state), encode_word(b, s));
  const auto& res = std::get<ActResult>(r);
  StateSeq expected;
  for (const char* nm : {"q1", "q2", "q1", "q3", "q1", "q2", "q1", "q1"})
    expected.push_back(b.embedded[t.state(nm)]);
  CHECK(res.residual == expected);
  CHECK(res.output == encode_word(b, s));

  for (std::size_t k = 0; k <= 4; ++k) CHECK(verify_dagger(b, s, k, 1 << 12).verified);
}

TEST_CASE("dagger verification across sources and sequence lengths") {
  std::mt19937 rng(123);
  std::vector<Automaton> sources{corpus_get("adding-machine").automaton,
                                 corpus_get("grigorchuk").automaton,
                                 ts::random_g_automaton(rng, 3, 2)};
  for (const Automaton& t : sources) {
    GadgetBundle b = build_gadget(t, 0);
    std::uniform_int_distribution<int> state(0, t.state_count() - 1);
    for (int len = 0; len <= 3; ++len) {
      StateSeq s;
      for (int i = 0; i < len; ++i) s.push_back(static_cast<StateId>(state(rng)));
      for (std::size_t k = 0; k <= 4; ++k) {
        auto out = verify_dagger(b, s, k, 1 << 12);
        CHECK(out.verified);
      }
    }
  }
}

TEST_CASE("only the driver moves words that start with the star") {
  Automaton t = corpus_get("adding-machine").automaton;
  GadgetBundle b = build_gadget(t, t.state("q"));
  const StateSeq s{t.state("q")};
  const Word u = encode_word(b, s);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(0, b.r.alphabet_size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    Word w = u;
    for (int i = trial % 6; i-- > 0;) w.push_back(static_cast<LetterId>(letter(rng)));
    // every non-driver state fixes the whole word
    for (StateId p = 0; p < b.r.state_count(); ++p) {
      if (p == b.s_state) continue;
      auto r = act_finite(b.r, {p}, w);
      CHECK(std::get<ActResult>(r).output == w);
    }
    // hence the full orbit equals the driver-only orbit
    auto full = orbit_word(b.r, GenLang::full_star(), w);
    auto driver = orbit_word(b.r, GenLang::f_star({{b.s_state}}), w);
    std::set<Word> fs(full.nodes.begin(), full.nodes.end());
    std::set<Word> ds(driver.nodes.begin(), driver.nodes.end());
    CHECK(fs == ds);
  }
}
