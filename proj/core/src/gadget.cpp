#include "orbitkit/gadget.hpp"

#include <set>
#include <sstream>

namespace orbitkit {

StateSeq lambda_expand(const StateSeq& s, std::size_t max_output_len) {
  if (s.size() >= 63 || ((std::size_t{1} << s.size()) - 1) > max_output_len)
    throw BudgetError("lambda_expand: output length 2^" + std::to_string(s.size()) +
                      "-1 exceeds budget of " + std::to_string(max_output_len));
  StateSeq out;
  for (StateId q : s) {
    StateSeq copy = out;
    out.push_back(q);
    out.insert(out.end(), copy.begin(), copy.end());
  }
  return out;
}

GadgetBundle build_gadget(const Automaton& t, StateId dollar) {
  const PropertyReport rep = classify(t);
  if (!rep.complete || !rep.invertible)
    throw PreconditionError("build_gadget: source must be a G-automaton (complete and invertible)");
  if (dollar < 0 || dollar >= t.state_count())
    throw PreconditionError("build_gadget: marked state out of range");

  GadgetBundle b{.source = t,
                 .dollar = dollar,
                 .r = t, // rebuilt below
                 .star = -1,
                 .hash = -1,
                 .a_letters = {},
                 .sigma_letters = {},
                 .s_state = -1,
                 .t_state = -1,
                 .id_state = -1,
                 .hash_states = {},
                 .embedded = {}};

  const int nq = t.state_count();
  const int nl = t.alphabet_size();

  std::vector<std::string> letters;
  b.sigma_letters.resize(nl);
  for (LetterId l = 0; l < nl; ++l) {
    b.sigma_letters[l] = static_cast<LetterId>(letters.size());
    letters.push_back(t.letter_name(l));
  }
  b.a_letters.resize(nq);
  for (StateId q = 0; q < nq; ++q)
    for (int bit = 0; bit < 2; ++bit) {
      b.a_letters[q][bit] = static_cast<LetterId>(letters.size());
      letters.push_back("aq:" + t.state_name(q) + ":" + std::to_string(bit));
    }
  b.star = static_cast<LetterId>(letters.size());
  letters.push_back("*");
  b.hash = static_cast<LetterId>(letters.size());
  letters.push_back("hash");

  std::set<std::string> used;
  std::vector<std::string> states;
  auto fresh = [&](std::string nm) {
    while (used.count(nm)) nm += "'";
    used.insert(nm);
    states.push_back(nm);
    return static_cast<StateId>(states.size() - 1);
  };
  b.embedded.resize(nq);
  for (StateId q = 0; q < nq; ++q) b.embedded[q] = fresh(t.state_name(q));
  b.s_state = fresh("s");
  b.t_state = fresh("t");
  b.id_state = fresh("id");
  b.hash_states.resize(nq);
  for (StateId q = 0; q < nq; ++q) b.hash_states[q] = fresh("hq:" + t.state_name(q));

  Automaton r("gadget(" + t.name() + ")", std::move(letters), std::move(states));

  // source transitions, embedded over the Σ letters
  for (const Transition& tr : t.transitions())
    r.add_transition(b.embedded[tr.from], b.sigma_letters[tr.in], b.sigma_letters[tr.out],
                     b.embedded[tr.to]);
  // driver and scanner
  r.add_transition(b.s_state, b.star, b.star, b.t_state);
  r.add_transition(b.t_state, b.hash, b.hash, b.embedded[dollar]);
  for (StateId q = 0; q < nq; ++q) {
    r.add_transition(b.t_state, b.a_letters[q][1], b.a_letters[q][0], b.t_state);
    r.add_transition(b.t_state, b.a_letters[q][0], b.a_letters[q][1], b.hash_states[q]);
  }
  // checkpoint states copy tagged letters and hand over at the hash marker
  for (StateId q = 0; q < nq; ++q) {
    for (StateId p = 0; p < nq; ++p)
      for (int bit = 0; bit < 2; ++bit)
        r.add_transition(b.hash_states[q], b.a_letters[p][bit], b.a_letters[p][bit],
                         b.hash_states[q]);
    r.add_transition(b.hash_states[q], b.hash, b.hash, b.embedded[q]);
  }
  // explicit identity
  for (LetterId l = 0; l < static_cast<LetterId>(r.alphabet_size()); ++l)
    r.add_transition(b.id_state, l, l, b.id_state);
  // completion: everything still missing copies the letter into the identity
  for (StateId q = 0; q < r.state_count(); ++q)
    for (LetterId l = 0; l < static_cast<LetterId>(r.alphabet_size()); ++l)
      if (!r.step(q, l)) r.add_transition(q, l, l, b.id_state);

  b.r = std::move(r);
  return b;
}

Word encode_word(const GadgetBundle& bundle, const StateSeq& s) {
  Word u;
  u.push_back(bundle.star);
  for (StateId q : s) {
    if (q < 0 || q >= static_cast<StateId>(bundle.a_letters.size()))
      throw PreconditionError("encode_word: state not in the source automaton");
    u.push_back(bundle.a_letters[q][0]);
  }
  u.push_back(bundle.hash);
  return u;
}

DaggerOutcome verify_dagger(const GadgetBundle& bundle, const StateSeq& s, std::size_t k,
                            std::size_t max_len) {
  const StateSeq lam = lambda_expand(s, max_len);
  const std::size_t block = lam.size() + 1; // |lambda(s) $|
  if (k > 0 && k * block > max_len)
    throw BudgetError("verify_dagger: k*|lambda(s)$| = " + std::to_string(k * block) +
                      " exceeds budget of " + std::to_string(max_len));

  StateSeq expected;
  for (std::size_t rep = 0; rep < k; ++rep) {
    for (StateId q : lam) expected.push_back(bundle.embedded[q]);
    expected.push_back(bundle.embedded[bundle.dollar]);
  }

  const Word u = encode_word(bundle, s);
  const StateSeq driver(k * block, bundle.s_state);
  auto r = act_finite(bundle.r, driver, u);
  if (auto* undef = std::get_if<ActUndefined>(&r)) {
    DaggerOutcome out;
    out.fail_pos = undef->position;
    out.detail = "action undefined (gadget automata are complete; this is a bug)";
    return out;
  }
  const ActResult& res = std::get<ActResult>(r);
  if (res.output != u) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (res.output[i] != u[i])
        return DaggerOutcome{false, i,
                             "output differs from the encoded word at position " +
                                 std::to_string(i)};
  }
  if (res.residual != expected) {
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (res.residual[i] != expected[i]) {
        std::ostringstream msg;
        msg << "residual differs at application step " << i << ": got "
            << bundle.r.state_name(res.residual[i]) << ", expected "
            << bundle.r.state_name(expected[i]);
        return DaggerOutcome{false, i, msg.str()};
      }
  }
  return DaggerOutcome{true, 0, ""};
}

} // namespace orbitkit
