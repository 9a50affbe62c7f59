#include "orbitkit/classifier.hpp"

#include <algorithm>
#include <set>

namespace orbitkit {

LetterClassification classify_letters(const Automaton& a) {
  LetterClassification result;
  const Automaton d = dual(a);
  result.dual_report = classify(d);
  if (!result.dual_report.complete) {
    result.failing_property = "complete";
    return result;
  }
  if (!result.dual_report.reversible) {
    result.failing_property = "reversible";
    return result;
  }
  if (!result.dual_report.invertible) {
    result.failing_property = "invertible";
    return result;
  }
  result.applicable = true;
  for (const ComponentInfo& c : result.dual_report.components)
    if (!c.bi_reversible)
      result.gamma.insert(result.gamma.end(), c.states.begin(), c.states.end());
  std::sort(result.gamma.begin(), result.gamma.end());
  return result;
}

PeriodicPrediction predict_periodic_orbit(const Automaton& a, const UPWord& x) {
  LetterClassification cls = classify_letters(a);
  if (!cls.applicable)
    throw PreconditionError("predict_periodic_orbit: dual is not a reversible G-automaton (" +
                            cls.failing_property + " fails)");
  std::set<LetterId> gamma(cls.gamma.begin(), cls.gamma.end());
  for (LetterId l : x.period)
    if (gamma.count(l)) return PeriodicPrediction{true, l};
  return PeriodicPrediction{false, -1};
}

std::variant<Extraction, NotFoundWithinBudget> extract_periodic_finite_orbit(
    const Automaton& a, const UPWord& x, std::size_t pair_budget, std::size_t node_budget) {
  if (!a.is_finite())
    throw UnsupportedError("extract_periodic_finite_orbit: needs a finite backend");
  auto orbit = orbit_up(a, GenLang::full_star(), x, node_budget);
  if (!std::holds_alternative<UpOrbit>(orbit))
    throw PreconditionError(
        "extract_periodic_finite_orbit: the orbit of x did not close within the node budget");
  const std::vector<UPWord>& elems = std::get<UpOrbit>(orbit).elements;

  const std::size_t n_states = static_cast<std::size_t>(a.state_count());
  std::size_t cap = pair_budget;
  if (cap == 0) cap = n_states * elems.size() * x.period.size() * 8;
  cap = std::max<std::size_t>(cap, 2);

  // Trajectories: state of q along each orbit element's expansion;
  // traj[e][q][i] is the state after i letters, or -1 once undefined.
  std::vector<std::vector<std::vector<StateId>>> traj(elems.size());
  for (std::size_t e = 0; e < elems.size(); ++e) {
    Word prefix = up_prefix(elems[e], cap);
    traj[e].resize(n_states);
    for (std::size_t q = 0; q < n_states; ++q) {
      auto& row = traj[e][q];
      row.resize(cap + 1, -1);
      StateId cur = static_cast<StateId>(q);
      row[0] = cur;
      for (std::size_t i = 0; i < cap; ++i) {
        auto s = a.step(cur, prefix[i]);
        if (!s) break;
        cur = s->next;
        row[i + 1] = cur;
      }
    }
  }

  const PropertyReport rep = classify(a);
  for (std::size_t cut_end = 1; cut_end <= cap; ++cut_end) {
    for (std::size_t cut = 0; cut < cut_end; ++cut) {
      bool ok = true;
      for (std::size_t e = 0; e < elems.size() && ok; ++e)
        for (std::size_t q = 0; q < n_states && ok; ++q)
          ok = traj[e][q][cut] == traj[e][q][cut_end];
      if (!ok) continue;

      Extraction ex;
      ex.cut = cut;
      ex.cut_end = cut_end;
      ex.u = up_prefix(x, cut);
      Word full = up_prefix(x, cut_end);
      ex.v.assign(full.begin() + static_cast<std::ptrdiff_t>(cut), full.end());

      auto verify = orbit_up(a, GenLang::full_star(), up_canonicalize(ex.u, ex.v), node_budget);
      ex.verified = std::holds_alternative<UpOrbit>(verify);

      std::set<LetterId> recurrent(x.period.begin(), x.period.end());
      std::set<LetterId> in_v(ex.v.begin(), ex.v.end());
      ex.covers_recurrent =
          std::includes(in_v.begin(), in_v.end(), recurrent.begin(), recurrent.end());

      ex.refinement_applicable = rep.complete && rep.reversible;
      if (ex.refinement_applicable) {
        auto verify2 = orbit_up(a, GenLang::full_star(), up_canonicalize({}, ex.v), node_budget);
        ex.refinement_verified = std::holds_alternative<UpOrbit>(verify2);
      }
      return ex;
    }
  }
  return NotFoundWithinBudget{};
}

} // namespace orbitkit
