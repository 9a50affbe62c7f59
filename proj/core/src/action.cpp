#include "orbitkit/action.hpp"

#include <map>

namespace orbitkit {

std::variant<ActResult, ActUndefined> act_finite(const Automaton& a, const StateSeq& s,
                                                 const Word& w) {
  ActResult r;
  r.output = w;
  r.residual.reserve(s.size());
  for (std::size_t stage = 0; stage < s.size(); ++stage) {
    StateId cur = s[stage];
    for (std::size_t pos = 0; pos < r.output.size(); ++pos) {
      auto st = a.step(cur, r.output[pos]);
      if (!st) return ActUndefined{pos, static_cast<int>(stage), cur, r.output[pos]};
      r.output[pos] = st->out;
      cur = st->next;
    }
    r.residual.push_back(cur);
  }
  return r;
}

std::variant<StateSeq, ActUndefined> act_dual(const Automaton& a, const Word& w,
                                              const StateSeq& s) {
  auto r = act_finite(a, s, w);
  if (auto* u = std::get_if<ActUndefined>(&r)) return *u;
  return std::get<ActResult>(std::move(r)).residual;
}

namespace {

struct SingleUp {
  bool defined;
  UPWord image;
  std::size_t fail_prefix; // valid when !defined
};

// One state over a canonical UPWord.  The sequence of residual states at
// period boundaries must eventually revisit a value; the outputs between
// two visits form the image's period.
SingleUp act_up_single(const Automaton& a, StateId q, const UPWord& x) {
  Word pre_out;
  StateId cur = q;
  for (std::size_t i = 0; i < x.pre.size(); ++i) {
    auto st = a.step(cur, x.pre[i]);
    if (!st) return {false, {}, i + 1};
    pre_out.push_back(st->out);
    cur = st->next;
  }
  std::map<StateId, std::size_t> seen;
  std::vector<Word> outs;
  for (std::size_t iter = 0;; ++iter) {
    auto hit = seen.find(cur);
    if (hit != seen.end()) {
      const std::size_t j = hit->second;
      for (std::size_t t = 0; t < j; ++t)
        pre_out.insert(pre_out.end(), outs[t].begin(), outs[t].end());
      Word period_out;
      for (std::size_t t = j; t < iter; ++t)
        period_out.insert(period_out.end(), outs[t].begin(), outs[t].end());
      return {true, up_canonicalize(std::move(pre_out), std::move(period_out)), 0};
    }
    seen.emplace(cur, iter);
    Word out;
    for (std::size_t i = 0; i < x.period.size(); ++i) {
      auto st = a.step(cur, x.period[i]);
      if (!st) return {false, {}, x.pre.size() + iter * x.period.size() + i + 1};
      out.push_back(st->out);
      cur = st->next;
    }
    outs.push_back(std::move(out));
  }
}

// All stages in lockstep over the first `bound` letters; returns the exact
// length of the shortest prefix some stage fails on.
std::size_t shortest_undefined_prefix(const Automaton& a, const StateSeq& s, const UPWord& x,
                                      std::size_t bound) {
  StateSeq st = s;
  for (std::size_t pos = 0; pos < bound; ++pos) {
    LetterId c = up_at(x, pos);
    for (std::size_t stage = 0; stage < st.size(); ++stage) {
      auto step = a.step(st[stage], c);
      if (!step) return pos + 1;
      c = step->out;
      st[stage] = step->next;
    }
  }
  throw InternalError("act_up: stagewise failure not reproduced in lockstep replay");
}

} // namespace

std::variant<UPWord, UpUndefined> act_up(const Automaton& a, const StateSeq& s, const UPWord& x) {
  UPWord cur = x;
  for (std::size_t stage = 0; stage < s.size(); ++stage) {
    SingleUp r = act_up_single(a, s[stage], cur);
    if (!r.defined) {
      // The failing position is in the intermediate word, but every stage
      // is length-preserving, so it bounds the failing prefix of x. Later
      // stages may fail earlier; replay all of them letterwise for the
      // exact answer.
      return UpUndefined{shortest_undefined_prefix(a, s, x, r.fail_prefix)};
    }
    cur = std::move(r.image);
  }
  return cur;
}

} // namespace orbitkit
