#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "orbitkit/action.hpp"
#include "orbitkit/automaton.hpp"
#include "orbitkit/upword.hpp"

namespace orbitkit::testsupport {

// Independent oracle for the binary incrementer: the reverse
// (least-significant-first) n-bit representation of value mod 2^n.
inline Word rev_binary(unsigned long value, int bits) {
  Word w;
  for (int i = 0; i < bits; ++i) w.push_back(static_cast<LetterId>((value >> i) & 1));
  return w;
}

// Naive stream expansion of u v^ω, for checking canonical forms.
inline Word expand_up(const Word& pre, const Word& period, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < pre.size() ? pre[i] : period[(i - pre.size()) % period.size()]);
  return out;
}

// Extensional comparison of s1∘ and s2∘ on every word of length <= max_len,
// including definedness patterns.
inline bool extensionally_equal(const Automaton& a, const StateSeq& s1, const StateSeq& s2,
                                int max_len) {
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      auto r1 = act_finite(a, s1, w);
      auto r2 = act_finite(a, s2, w);
      const bool d1 = std::holds_alternative<ActResult>(r1);
      const bool d2 = std::holds_alternative<ActResult>(r2);
      if (d1 != d2) return false;
      if (d1 && std::get<ActResult>(r1).output != std::get<ActResult>(r2).output) return false;
      if (len < max_len)
        for (LetterId l = 0; l < a.alphabet_size(); ++l) {
          Word e = w;
          e.push_back(l);
          next.push_back(std::move(e));
        }
    }
    layer.swap(next);
  }
  return true;
}

inline std::vector<Word> all_words(const Automaton& a, int len) {
  std::vector<Word> out{Word{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (LetterId l = 0; l < a.alphabet_size(); ++l) {
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    out.swap(next);
  }
  return out;
}

inline std::vector<std::string> numbered(const char* prefix, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// Random partial deterministic automaton.
inline Automaton random_automaton(std::mt19937& rng, int n_states, int n_letters,
                                  double density = 0.85) {
  Automaton a("rand", numbered("x", n_letters), numbered("s", n_states));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> state(0, n_states - 1);
  std::uniform_int_distribution<int> letter(0, n_letters - 1);
  for (StateId q = 0; q < n_states; ++q)
    for (LetterId l = 0; l < n_letters; ++l)
      if (coin(rng) < density) a.add_transition(q, l, letter(rng), state(rng));
  return a;
}

// Reversible: per letter, targets form a partial injection (built from a
// permutation with random holes); outputs arbitrary.
inline Automaton random_reversible(std::mt19937& rng, int n_states, int n_letters,
                                   double density = 0.9) {
  Automaton a("rand-rev", numbered("x", n_letters), numbered("s", n_states));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> letter(0, n_letters - 1);
  for (LetterId l = 0; l < n_letters; ++l) {
    std::vector<int> perm(n_states);
    for (int i = 0; i < n_states; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (StateId q = 0; q < n_states; ++q)
      if (coin(rng) < density) a.add_transition(q, l, letter(rng), perm[q]);
  }
  return a;
}

// Complete + invertible: per state the outputs form a permutation.
inline Automaton random_g_automaton(std::mt19937& rng, int n_states, int n_letters) {
  Automaton a("rand-g", numbered("x", n_letters), numbered("s", n_states));
  std::uniform_int_distribution<int> state(0, n_states - 1);
  for (StateId q = 0; q < n_states; ++q) {
    std::vector<int> out(n_letters);
    for (int i = 0; i < n_letters; ++i) out[i] = i;
    std::shuffle(out.begin(), out.end(), rng);
    for (LetterId l = 0; l < n_letters; ++l) a.add_transition(q, l, out[l], state(rng));
  }
  return a;
}

// Complete + invertible + reversible: per letter the targets form a
// permutation and per state the outputs form a permutation.
inline Automaton random_reversible_g_automaton(std::mt19937& rng, int n_states, int n_letters) {
  Automaton a("rand-rev-g", numbered("x", n_letters), numbered("s", n_states));
  std::vector<std::vector<int>> target(n_letters), out(n_states);
  for (LetterId l = 0; l < n_letters; ++l) {
    target[l].resize(n_states);
    for (int i = 0; i < n_states; ++i) target[l][i] = i;
    std::shuffle(target[l].begin(), target[l].end(), rng);
  }
  for (StateId q = 0; q < n_states; ++q) {
    out[q].resize(n_letters);
    for (int i = 0; i < n_letters; ++i) out[q][i] = i;
    std::shuffle(out[q].begin(), out[q].end(), rng);
  }
  for (StateId q = 0; q < n_states; ++q)
    for (LetterId l = 0; l < n_letters; ++l) a.add_transition(q, l, out[q][l], target[l][q]);
  return a;
}

} // namespace orbitkit::testsupport
