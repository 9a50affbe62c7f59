// orbitkit: computations with automaton semigroups and groups.
//
// Subcommands: act, orbit, orbit-up, witness, path, ball, torsion, order,
// cayley, classify, classify-letters, extract-finite, wang, gadget, corpus,
// dual, compose, power, inverse, union.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "orbitkit/algebra.hpp"
#include "orbitkit/classifier.hpp"
#include "orbitkit/corpus.hpp"
#include "orbitkit/dot.hpp"
#include "orbitkit/gadget.hpp"
#include "orbitkit/io.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/tiling.hpp"
#include "report.hpp"

namespace okc = orbitkit::cli;
using namespace orbitkit;
using okc::Json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Automaton references: a file path, "corpus:<name>", or
// "oracle:<family>[?bound=N]".
Automaton resolve_automaton(const std::string& ref, okc::RunReport& report) {
  if (ref.rfind("corpus:", 0) == 0) {
    report.add_input(ref, ref);
    return corpus_get(ref.substr(7)).automaton;
  }
  if (ref.rfind("oracle:", 0) == 0) {
    report.add_input(ref, ref);
    std::string spec = ref.substr(7);
    std::map<std::string, std::string> params;
    auto qmark = spec.find('?');
    if (qmark != std::string::npos) {
      std::string query = spec.substr(qmark + 1);
      spec = spec.substr(0, qmark);
      auto eq = query.find('=');
      if (eq == std::string::npos) throw ParseError("oracle params look like ?bound=N");
      params[query.substr(0, eq)] = query.substr(eq + 1);
    }
    return oracle_get(spec, params);
  }
  std::string bytes = slurp(ref);
  report.add_input(ref, bytes);
  return parse_automaton_text(bytes);
}

TileSet resolve_tileset(const std::string& ref, okc::RunReport& report) {
  std::string bytes = slurp(ref);
  report.add_input(ref, bytes);
  return parse_tileset_text(bytes);
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << bytes;
}

struct LangFlags {
  std::string gens;  // semicolon-separated blocks, each a comma-separated sequence
  std::string ideal; // single comma-separated sequence

  void attach(CLI::App* cmd) {
    cmd->add_option("--gens", gens,
                    "generator blocks 'q;p,q' (semicolon-separated sequences); default: all "
                    "single states");
    cmd->add_option("--ideal", ideal, "principal left ideal block (comma-separated sequence)");
  }

  GenLang resolve(const Automaton& a, okc::RunReport& report) const {
    if (!gens.empty() && !ideal.empty())
      throw ParseError("--gens and --ideal are mutually exclusive");
    if (!ideal.empty()) {
      report.set_arg("language", "principal-left-ideal");
      report.set_arg("ideal", ideal);
      return GenLang::principal_left_ideal(parse_state_seq(a, ideal));
    }
    if (!gens.empty()) {
      report.set_arg("language", "f-star");
      report.set_arg("gens", gens);
      std::vector<StateSeq> blocks;
      std::size_t start = 0;
      while (start <= gens.size()) {
        auto semi = gens.find(';', start);
        std::string part =
            semi == std::string::npos ? gens.substr(start) : gens.substr(start, semi - start);
        blocks.push_back(parse_state_seq(a, part));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      return GenLang::f_star(std::move(blocks));
    }
    report.set_arg("language", "full-star");
    return GenLang::full_star();
  }
};

int emit(const okc::RunReport& report, bool json, const std::string& text, int code) {
  if (json) {
    std::cout << report.build().dump(2) << "\n";
  } else if (!text.empty()) {
    std::cout << text;
    if (text.back() != '\n') std::cout << "\n";
  }
  return code;
}

std::vector<StateSeq> default_gens(const Automaton& a) {
  std::vector<StateSeq> gens;
  for (StateId q = 0; q < a.state_count(); ++q) gens.push_back({q});
  return gens;
}

std::vector<StateSeq> parse_gens_or_default(const Automaton& a, const std::string& gens) {
  if (gens.empty()) return default_gens(a);
  std::vector<StateSeq> blocks;
  std::size_t start = 0;
  while (start <= gens.size()) {
    auto semi = gens.find(';', start);
    std::string part =
        semi == std::string::npos ? gens.substr(start) : gens.substr(start, semi - start);
    blocks.push_back(parse_state_seq(a, part));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return blocks;
}

// ---------------------------------------------------------------- commands

int cmd_act(const std::string& ref, const std::string& seq, const std::string& word,
            const std::string& upword, bool json) {
  okc::RunReport report("act");
  Automaton a = resolve_automaton(ref, report);
  StateSeq s = parse_state_seq(a, seq);
  report.set_arg("seq", seq);
  std::ostringstream text;
  if (!word.empty() || upword.empty()) {
    Word w = parse_word(a, word);
    report.set_arg("word", word);
    auto r = act_finite(a, s, w);
    if (auto* res = std::get_if<ActResult>(&r)) {
      report.verdict()["defined"] = true;
      report.verdict()["output"] = okc::word_json(a, res->output);
      report.verdict()["residual"] = okc::seq_json(a, res->residual);
      text << render_word(a, res->output) << "\n";
      text << "residual: " << render_seq_paper(a, res->residual) << " (paper order)\n";
    } else {
      auto& u = std::get<ActUndefined>(r);
      report.verdict()["defined"] = false;
      report.verdict()["position"] = u.position;
      report.verdict()["stage"] = u.stage;
      report.verdict()["state"] = a.state_name(u.state);
      report.verdict()["letter"] = a.letter_name(u.letter);
      text << "undefined at position " << u.position << " (stage " << u.stage << ", state "
           << a.state_name(u.state) << ", letter " << a.letter_name(u.letter) << ")\n";
    }
  } else {
    UPWord x = parse_upword(a, upword);
    report.set_arg("upword", upword);
    auto r = act_up(a, s, x);
    if (auto* res = std::get_if<UPWord>(&r)) {
      report.verdict()["defined"] = true;
      report.verdict()["output"] = okc::upword_json(a, *res);
      text << render_upword(a, *res) << "\n";
    } else {
      report.verdict()["defined"] = false;
      report.verdict()["undefined_prefix_len"] = std::get<UpUndefined>(r).prefix_len;
      text << "undefined on the prefix of length " << std::get<UpUndefined>(r).prefix_len << "\n";
    }
  }
  return emit(report, json, text.str(), okc::kExitDefinite);
}

int cmd_orbit(const std::string& ref, const std::string& word, const LangFlags& lang,
              std::size_t nodes, const std::string& dot, bool json) {
  okc::RunReport report("orbit");
  Automaton a = resolve_automaton(ref, report);
  report.set_arg("word", word);
  report.set_budget("node_budget", nodes);
  GenLang l = lang.resolve(a, report);
  OrbitalTransducer t = orbit_word(a, l, parse_word(a, word), nodes);
  report.verdict()["orbit_size"] = t.size();
  Json members = Json::array();
  for (const Word& n : t.nodes) members.push_back(render_word(a, n));
  report.verdict()["orbit"] = members;
  if (!dot.empty()) write_output(dot, orbit_to_dot(a, t));
  std::ostringstream text;
  text << "orbit size " << t.size() << "\n";
  for (const Word& n : t.nodes) text << "  " << render_word(a, n) << "\n";
  return emit(report, json, text.str(), okc::kExitDefinite);
}

int cmd_orbit_up(const std::string& ref, const std::string& upword, const LangFlags& lang,
                 std::size_t nodes, std::size_t letters, bool json) {
  okc::RunReport report("orbit-up");
  Automaton a = resolve_automaton(ref, report);
  report.set_arg("upword", upword);
  report.set_budget("node_budget", nodes);
  report.set_budget("letter_budget", letters);
  GenLang l = lang.resolve(a, report);
  auto r = orbit_up(a, l, parse_upword(a, upword), nodes, letters);
  std::ostringstream text;
  if (auto* orbit = std::get_if<UpOrbit>(&r)) {
    report.verdict()["finite"] = true;
    report.verdict()["orbit_size"] = orbit->elements.size();
    Json members = Json::array();
    for (const UPWord& x : orbit->elements) members.push_back(render_upword(a, x));
    report.verdict()["orbit"] = members;
    text << "finite orbit of size " << orbit->elements.size() << "\n";
    for (const UPWord& x : orbit->elements) text << "  " << render_upword(a, x) << "\n";
    return emit(report, json, text.str(), okc::kExitDefinite);
  }
  report.verdict()["finite"] = false;
  report.verdict()["frontier"] = std::get<ExceededBudget>(r).frontier;
  text << "node budget exceeded (frontier " << std::get<ExceededBudget>(r).frontier
       << "); finiteness unknown\n";
  return emit(report, json, text.str(), okc::kExitUnknown);
}

int cmd_witness(const std::string& ref, std::size_t target, std::size_t depth, std::size_t nodes,
                const LangFlags& lang, bool json) {
  okc::RunReport report("witness");
  Automaton a = resolve_automaton(ref, report);
  report.set_arg("target", target);
  report.set_budget("extension_depth", depth);
  report.set_budget("node_budget", nodes);
  GenLang l = lang.resolve(a, report);
  auto r = witness_search(a, l, target, depth, nodes);
  std::ostringstream text;
  if (auto* cert = std::get_if<GrowthCertificate>(&r)) {
    report.verdict()["found"] = true;
    Json chain = Json::array();
    for (const GrowthLink& link : cert->chain)
      chain.push_back(Json{{"prefix", render_word(a, link.prefix)}, {"orbit_size", link.orbit_size}});
    report.verdict()["chain"] = chain;
    text << "growth certificate with " << cert->chain.size() << " links\n";
    for (const GrowthLink& link : cert->chain)
      text << "  " << render_word(a, link.prefix) << " -> orbit " << link.orbit_size << "\n";
    return emit(report, json, text.str(), okc::kExitDefinite);
  }
  const auto& stalled = std::get<Stalled>(r);
  report.verdict()["found"] = false;
  report.verdict()["stalled_at"] = render_word(a, stalled.at);
  report.verdict()["orbit_size"] = stalled.orbit_size;
  text << "stalled at " << render_word(a, stalled.at) << " with orbit " << stalled.orbit_size
       << "\n";
  return emit(report, json, text.str(), okc::kExitUnknown);
}

int cmd_path(const std::string& ref, const std::string& word, std::size_t length,
             std::size_t nodes, const LangFlags& lang, bool json) {
  okc::RunReport report("path");
  Automaton a = resolve_automaton(ref, report);
  report.set_arg("word", word);
  report.set_arg("length", length);
  report.set_budget("node_budget", nodes);
  GenLang l = lang.resolve(a, report);
  auto r = orbit_path_search(a, l, parse_word(a, word), length, nodes);
  std::ostringstream text;
  if (auto* path = std::get_if<OrbitPath>(&r)) {
    report.verdict()["found"] = true;
    Json nodes_json = Json::array();
    for (const Word& n : path->nodes) nodes_json.push_back(render_word(a, n));
    report.verdict()["nodes"] = nodes_json;
    text << "simple path of " << path->labels.size() << " edges\n";
    for (const Word& n : path->nodes) text << "  " << render_word(a, n) << "\n";
    return emit(report, json, text.str(), okc::kExitDefinite);
  }
  report.verdict()["found"] = false;
  return emit(report, json, "no simple path within budget\n", okc::kExitUnknown);
}

int cmd_ball(const std::string& ref, const std::string& gens, std::size_t max_len,
             std::size_t max_elems, bool json) {
  okc::RunReport report("ball");
  Automaton a = resolve_automaton(ref, report);
  report.set_arg("gens", gens.empty() ? "<all states>" : gens);
  report.set_budget("max_len", max_len);
  report.set_budget("max_elems", max_elems);
  auto r = enumerate_ball(a, parse_gens_or_default(a, gens), max_len, max_elems);
  Json sizes = Json::array();
  for (std::size_t n : r.new_per_length) sizes.push_back(n);
  report.verdict()["new_per_length"] = sizes;
  std::ostringstream text;
  if (r.verdict == FinitenessReport::Verdict::FiniteWithOrder) {
    report.verdict()["finite"] = true;
    report.verdict()["order"] = r.order;
    text << "finite with order " << r.order << "\n";
  } else {
    report.verdict()["finite"] = false;
    text << "not closed at budget\n";
  }
  text << "new elements per length:";
  for (std::size_t n : r.new_per_length) text << " " << n;
  text << "\n";
  return emit(report, json, text.str(),
              r.verdict == FinitenessReport::Verdict::FiniteWithOrder ? okc::kExitDefinite
                                                                      : okc::kExitUnknown);
}

int torsion_exit(const TorsionVerdict& v) {
  return v.kind == TorsionVerdict::Kind::Unknown ? okc::kExitUnknown : okc::kExitDefinite;
}

void torsion_json(okc::RunReport& report, const TorsionVerdict& v, std::ostringstream& text) {
  switch (v.kind) {
    case TorsionVerdict::Kind::Torsion:
      report.verdict()["kind"] = "torsion";
      report.verdict()["i"] = v.i;
      report.verdict()["j"] = v.j;
      text << "torsion: s^" << v.i << " = s^" << v.j << "\n";
      break;
    case TorsionVerdict::Kind::TorsionFreeCertified:
      report.verdict()["kind"] = "torsion-free-certified";
      report.verdict()["via"] = Json{{"dual_orbit_growth",
                                      Json{{"prefix_len", v.prefix_len}, {"orbit_size", v.orbit_size}}}};
      text << "torsion-free (dual orbit reached " << v.orbit_size << " elements at prefix "
           << v.prefix_len << ")\n";
      break;
    case TorsionVerdict::Kind::Unknown:
      report.verdict()["kind"] = "unknown";
      report.verdict()["budget_spent"] = v.budget_spent;
      text << "unknown within budget\n";
      break;
  }
}

int cmd_torsion(const std::string& ref, const std::string& seq, std::size_t budget,
                const std::string& route, std::size_t nodes, std::size_t target, bool json) {
  okc::RunReport report("torsion");
  Automaton a = resolve_automaton(ref, report);
  StateSeq s = parse_state_seq(a, seq);
  report.set_arg("seq", seq);
  report.set_arg("route", route);
  std::ostringstream text;
  TorsionVerdict v;
  if (route == "direct") {
    report.set_budget("max_exponent", budget);
    v = torsion_check(a, s, budget);
  } else if (route == "dual") {
    report.set_budget("node_budget", nodes);
    report.set_budget("size_target", target);
    v = torsion_check_dual(a, s, nodes, target);
  } else {
    throw ParseError("--route must be direct or dual");
  }
  torsion_json(report, v, text);
  return emit(report, json, text.str(), torsion_exit(v));
}

int cmd_order(const std::string& ref, const std::string& seq, std::size_t budget, bool json) {
  okc::RunReport report("order");
  Automaton a = resolve_automaton(ref, report);
  StateSeq s = parse_state_seq(a, seq);
  report.set_arg("seq", seq);
  report.set_budget("max_exponent", budget);
  OrderResult r = order_check(a, s, budget);
  std::ostringstream text;
  if (r.finite) {
    report.verdict()["finite_order"] = true;
    report.verdict()["order"] = r.order;
    text << "finite order " << r.order << "\n";
    return emit(report, json, text.str(), okc::kExitDefinite);
  }
  report.verdict()["finite_order"] = false;
  text << "no identity power within budget " << budget << "\n";
  return emit(report, json, text.str(), okc::kExitUnknown);
}

int cmd_cayley(const std::string& ref, const std::string& gens, std::size_t max_len,
               std::size_t max_elems, const std::string& dot, bool json) {
  okc::RunReport report("cayley");
  Automaton a = resolve_automaton(ref, report);
  report.set_arg("gens", gens.empty() ? "<all states>" : gens);
  report.set_budget("max_len", max_len);
  report.set_budget("max_elems", max_elems);
  CayleyGraph g = cayley_graph(a, parse_gens_or_default(a, gens), max_len, max_elems);
  report.verdict()["nodes"] = g.elements.size();
  Json nodes = Json::array();
  for (const StateSeq& r : g.reprs) nodes.push_back(render_seq_paper(a, r));
  report.verdict()["representatives"] = nodes;
  if (!dot.empty()) write_output(dot, cayley_to_dot(a, g));
  std::ostringstream text;
  text << "cayley graph with " << g.elements.size() << " nodes\n";
  return emit(report, json, text.str(), okc::kExitDefinite);
}

int cmd_classify(const std::string& ref, bool json) {
  okc::RunReport report("classify");
  Automaton a = resolve_automaton(ref, report);
  PropertyReport r = classify(a);
  report.verdict()["complete"] = r.complete;
  report.verdict()["reversible"] = r.reversible;
  report.verdict()["invertible"] = r.invertible;
  report.verdict()["inverse_reversible"] = r.inverse_reversible;
  report.verdict()["bi_reversible"] = r.bi_reversible;
  Json comps = Json::array();
  std::ostringstream text;
  text << "complete=" << r.complete << " reversible=" << r.reversible
       << " invertible=" << r.invertible << " inverse_reversible=" << r.inverse_reversible
       << " bi_reversible=" << r.bi_reversible << "\n";
  for (const ComponentInfo& c : r.components) {
    Json states = Json::array();
    text << "component {";
    for (std::size_t i = 0; i < c.states.size(); ++i) {
      states.push_back(a.state_name(c.states[i]));
      text << (i ? " " : "") << a.state_name(c.states[i]);
    }
    text << "} strongly_connected=" << c.strongly_connected
         << " bi_reversible=" << c.bi_reversible << "\n";
    comps.push_back(Json{{"states", states},
                         {"strongly_connected", c.strongly_connected},
                         {"bi_reversible", c.bi_reversible}});
  }
  report.verdict()["components"] = comps;
  return emit(report, json, text.str(), okc::kExitDefinite);
}

int cmd_classify_letters(const std::string& ref, bool json) {
  okc::RunReport report("classify-letters");
  Automaton a = resolve_automaton(ref, report);
  LetterClassification cls = classify_letters(a);
  std::ostringstream text;
  report.verdict()["applicable"] = cls.applicable;
  if (!cls.applicable) {
    report.verdict()["failing_property"] = cls.failing_property;
    text << "inapplicable: dual is not a reversible G-automaton (" << cls.failing_property
         << " fails)\n";
    return emit(report, json, text.str(), okc::kExitDefinite);
  }
  Json gamma = Json::array();
  text << "gamma:";
  for (LetterId l : cls.gamma) {
    gamma.push_back(a.letter_name(l));
    text << " " << a.letter_name(l);
  }
  report.verdict()["gamma"] = gamma;
  text << "\n";
  return emit(report, json, text.str(), okc::kExitDefinite);
}

int cmd_extract_finite(const std::string& ref, const std::string& upword, std::size_t pair_budget,
                       std::size_t nodes, bool json) {
  okc::RunReport report("extract-finite");
  Automaton a = resolve_automaton(ref, report);
  report.set_arg("upword", upword);
  report.set_budget("pair_budget", pair_budget);
  report.set_budget("node_budget", nodes);
  auto r = extract_periodic_finite_orbit(a, parse_upword(a, upword), pair_budget, nodes);
  std::ostringstream text;
  if (auto* ex = std::get_if<Extraction>(&r)) {
    report.verdict()["found"] = true;
    report.verdict()["u"] = render_word(a, ex->u);
    report.verdict()["v"] = render_word(a, ex->v);
    report.verdict()["verified"] = ex->verified;
    report.verdict()["covers_recurrent_letters"] = ex->covers_recurrent;
    report.verdict()["refinement_applicable"] = ex->refinement_applicable;
    report.verdict()["refinement_verified"] = ex->refinement_verified;
    text << "u = " << render_word(a, ex->u) << ", v = " << render_word(a, ex->v)
         << (ex->verified ? " (verified)" : " (NOT verified)") << "\n";
    if (ex->refinement_applicable)
      text << "periodic refinement v^ω " << (ex->refinement_verified ? "verified" : "NOT verified")
           << "\n";
    return emit(report, json, text.str(), okc::kExitDefinite);
  }
  report.verdict()["found"] = false;
  return emit(report, json, "no cut pair within budget\n", okc::kExitUnknown);
}

int cmd_wang_check(const std::string& ref, bool json) {
  okc::RunReport report("wang-check");
  TileSet ts = resolve_tileset(ref, report);
  auto conflict = ts.sw_conflict();
  report.verdict()["sw_deterministic"] = !conflict.has_value();
  std::ostringstream text;
  if (conflict) {
    report.verdict()["conflict"] = Json::array({conflict->first, conflict->second});
    text << "not SW-deterministic: tiles " << conflict->first << " and " << conflict->second
         << " share (south, west)\n";
  } else {
    text << "SW-deterministic (" << ts.tiles.size() << " tiles, " << ts.colors.size()
         << " colors)\n";
  }
  return emit(report, json, text.str(), okc::kExitDefinite);
}

int cmd_wang_to_automaton(const std::string& ref, const std::string& out) {
  okc::RunReport report("wang-to-automaton");
  TileSet ts = resolve_tileset(ref, report);
  write_output(out, serialize_automaton(tileset_to_automaton(ts)));
  return okc::kExitDefinite;
}

int cmd_wang_find(const std::string& ref, std::size_t height, std::size_t width,
                  std::size_t nodes, bool json) {
  okc::RunReport report("wang-find");
  TileSet ts = resolve_tileset(ref, report);
  report.set_arg("height", height);
  report.set_budget("width_budget", width);
  report.set_budget("node_budget", nodes);
  auto r = find_non_y_recurrent(ts, height, width, nodes);
  std::ostringstream text;
  if (auto* t = std::get_if<RectTiling>(&r)) {
    report.verdict()["found"] = true;
    report.verdict()["width"] = t->width;
    report.verdict()["height"] = t->height;
    Json rows = Json::array();
    for (const auto& row : t->rows) {
      std::string s;
      for (auto c : row) s += ts.colors[c] + (row.size() > 1 && ts.colors[c].size() > 1 ? " " : "");
      rows.push_back(s);
    }
    report.verdict()["rows"] = rows;
    text << render_tiling(ts, *t);
    return emit(report, json, text.str(), okc::kExitDefinite);
  }
  report.verdict()["found"] = false;
  return emit(report, json, "no non-y-recurrent rectangle within budget\n", okc::kExitUnknown);
}

int cmd_gadget_build(const std::string& ref, const std::string& dollar, const std::string& out,
                     bool json) {
  okc::RunReport report("gadget-build");
  Automaton a = resolve_automaton(ref, report);
  report.set_arg("dollar", dollar);
  GadgetBundle b = build_gadget(a, a.state(dollar));
  report.verdict()["states"] = b.r.state_count();
  report.verdict()["letters"] = b.r.alphabet_size();
  if (json) {
    std::cout << report.build().dump(2) << "\n";
    if (!out.empty()) write_output(out, serialize_automaton(b.r));
  } else {
    write_output(out, serialize_automaton(b.r));
  }
  return okc::kExitDefinite;
}

int cmd_gadget_verify(const std::string& ref, const std::string& dollar, const std::string& seq,
                      std::size_t k, std::size_t max_len, bool json) {
  okc::RunReport report("gadget-verify");
  Automaton a = resolve_automaton(ref, report);
  report.set_arg("dollar", dollar);
  report.set_arg("seq", seq);
  report.set_arg("k", k);
  report.set_budget("max_len", max_len);
  GadgetBundle b = build_gadget(a, a.state(dollar));
  DaggerOutcome r = verify_dagger(b, parse_state_seq(a, seq), k, max_len);
  report.verdict()["verified"] = r.verified;
  std::ostringstream text;
  if (r.verified) {
    text << "verified\n";
  } else {
    report.verdict()["fail_pos"] = r.fail_pos;
    report.verdict()["detail"] = r.detail;
    text << "FAILED at " << r.fail_pos << ": " << r.detail << "\n";
  }
  return emit(report, json, text.str(), r.verified ? okc::kExitDefinite : okc::kExitInternal);
}

int cmd_corpus_list(bool json) {
  okc::RunReport report("corpus-list");
  Json names = Json::array();
  std::ostringstream text;
  for (const auto& n : corpus_names()) {
    names.push_back(n);
    text << n << "\n";
  }
  for (const auto& n : oracle_families()) {
    names.push_back("oracle:" + n);
    text << "oracle:" << n << "\n";
  }
  report.verdict()["names"] = names;
  return emit(report, json, text.str(), okc::kExitDefinite);
}

int cmd_corpus_dump(const std::string& name, const std::string& out) {
  write_output(out, serialize_automaton(corpus_get(name).automaton));
  return okc::kExitDefinite;
}

int run(int argc, char** argv) {
  CLI::App app{"computations with automaton semigroups and groups"};
  app.require_subcommand(1);

  // shared option storage
  std::string ref, ref2, seq, word, upword, gens, ideal, dot, out, dollar, route = "direct",
                                                                           name;
  bool json = false;
  std::size_t nodes = kDefaultNodeBudget, depth = kDefaultDepthBudget, target = 8, budget = 64,
              max_len = 8, max_elems = 100000, length = 1, height = 1, width = 6, kpow = 1,
              letters = kDefaultUpLetterBudget, pair_budget = 0;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "machine-readable report"); };

  auto* act = app.add_subcommand("act", "evaluate the action of a state sequence");
  act->add_option("automaton", ref)->required();
  act->add_option("--seq", seq, "state sequence, application order (first listed acts first)");
  act->add_option("--word", word);
  act->add_option("--upword", upword, "'<preperiod>|<period>'");
  add_json(act);

  LangFlags orbit_lang, up_lang, witness_lang, path_lang;
  auto* orbit = app.add_subcommand("orbit", "orbit and orbital transducer of a finite word");
  orbit->add_option("automaton", ref)->required();
  orbit->add_option("--word", word)->required();
  orbit->add_option("--nodes", nodes, "node budget");
  orbit->add_option("--dot", dot, "write Graphviz DOT here");
  orbit_lang.attach(orbit);
  add_json(orbit);

  auto* orbit_up_cmd = app.add_subcommand("orbit-up", "orbit of an ultimately periodic ω-word");
  orbit_up_cmd->add_option("automaton", ref)->required();
  orbit_up_cmd->add_option("--upword", upword)->required();
  orbit_up_cmd->add_option("--nodes", nodes, "node budget");
  orbit_up_cmd->add_option("--letters", letters, "canonical-size budget per element");
  up_lang.attach(orbit_up_cmd);
  add_json(orbit_up_cmd);

  auto* witness = app.add_subcommand("witness", "search a strictly growing orbit chain");
  witness->add_option("automaton", ref)->required();
  witness->add_option("--target", target, "orbit size to reach")->required();
  witness->add_option("--depth", depth, "extension length budget per step");
  witness->add_option("--nodes", nodes, "node budget");
  witness_lang.attach(witness);
  add_json(witness);

  auto* path = app.add_subcommand("path", "simple path in the orbital graph");
  path->add_option("automaton", ref)->required();
  path->add_option("--word", word)->required();
  path->add_option("--length", length, "number of edges")->required();
  path->add_option("--nodes", nodes, "DFS step budget");
  path_lang.attach(path);
  add_json(path);

  auto* ball = app.add_subcommand("ball", "enumerate the semigroup ball");
  ball->add_option("automaton", ref)->required();
  ball->add_option("--gens", gens, "generator sequences 'q;p,q'; default all single states");
  ball->add_option("--max-len", max_len, "product length budget");
  ball->add_option("--max-elems", max_elems, "element budget");
  add_json(ball);

  auto* torsion = app.add_subcommand("torsion", "torsion semi-decision");
  torsion->add_option("automaton", ref)->required();
  torsion->add_option("--seq", seq)->required();
  torsion->add_option("--budget", budget, "exponent budget (direct route)");
  torsion->add_option("--route", route, "direct|dual");
  torsion->add_option("--nodes", nodes, "dual-orbit node budget");
  torsion->add_option("--target", target, "growth target (dual route)");
  add_json(torsion);

  auto* order = app.add_subcommand("order", "least identity power");
  order->add_option("automaton", ref)->required();
  order->add_option("--seq", seq);
  order->add_option("--budget", budget, "exponent budget");
  add_json(order);

  auto* cayley = app.add_subcommand("cayley", "left Cayley graph of the ball");
  cayley->add_option("automaton", ref)->required();
  cayley->add_option("--gens", gens, "generator sequences; default all single states");
  cayley->add_option("--max-len", max_len);
  cayley->add_option("--max-elems", max_elems);
  cayley->add_option("--dot", dot, "write Graphviz DOT here");
  add_json(cayley);

  auto* classify_cmd = app.add_subcommand("classify", "structural flags and components");
  classify_cmd->add_option("automaton", ref)->required();
  add_json(classify_cmd);

  auto* classify_letters_cmd =
      app.add_subcommand("classify-letters", "letters in non-bi-reversible dual components");
  classify_letters_cmd->add_option("automaton", ref)->required();
  add_json(classify_letters_cmd);

  auto* extract = app.add_subcommand("extract-finite",
                                     "extract u v^ω with finite orbit from a finite ω-orbit");
  extract->add_option("automaton", ref)->required();
  extract->add_option("--upword", upword)->required();
  extract->add_option("--pair-budget", pair_budget, "cut search budget (0 = derived default)");
  extract->add_option("--nodes", nodes, "orbit node budget");
  add_json(extract);

  auto* wang = app.add_subcommand("wang", "Wang tile bridge");
  wang->require_subcommand(1);
  auto* wang_check = wang->add_subcommand("check", "SW-determinism check");
  wang_check->add_option("tiles", ref)->required();
  add_json(wang_check);
  auto* wang_to = wang->add_subcommand("to-automaton", "tile set as a transducer");
  wang_to->add_option("tiles", ref)->required();
  wang_to->add_option("-o,--out", out, "output path (default stdout)");
  auto* wang_find = wang->add_subcommand("find", "non-y-recurrent rectangle search");
  wang_find->add_option("tiles", ref)->required();
  wang_find->add_option("--height", height, "Y (rows of tiles = Y+1)")->required();
  wang_find->add_option("--width", width, "bottom-row width budget");
  wang_find->add_option("--nodes", nodes, "search budget");
  add_json(wang_find);

  auto* gadget = app.add_subcommand("gadget", "order-problem reduction gadget");
  gadget->require_subcommand(1);
  auto* gbuild = gadget->add_subcommand("build", "build the extension automaton");
  gbuild->add_option("automaton", ref)->required();
  gbuild->add_option("--dollar", dollar, "marked source state")->required();
  gbuild->add_option("-o,--out", out, "output path (default stdout)");
  add_json(gbuild);
  auto* gverify = gadget->add_subcommand("verify", "check the driver power identity");
  gverify->add_option("automaton", ref)->required();
  gverify->add_option("--dollar", dollar)->required();
  gverify->add_option("--seq", seq)->required();
  gverify->add_option("--k", kpow, "number of repetitions");
  gverify->add_option("--max-len", max_len);
  add_json(gverify);

  auto* corpus = app.add_subcommand("corpus", "bundled automata");
  corpus->require_subcommand(1);
  auto* clist = corpus->add_subcommand("list", "names");
  add_json(clist);
  auto* cdump = corpus->add_subcommand("dump", "write an automaton file");
  cdump->add_option("name", name)->required();
  cdump->add_option("-o,--out", out, "output path (default stdout)");

  auto* dual_cmd = app.add_subcommand("dual", "exchange letters and states");
  dual_cmd->add_option("automaton", ref)->required();
  dual_cmd->add_option("-o,--out", out);
  auto* compose_cmd = app.add_subcommand("compose", "compose two automata (left acts last)");
  compose_cmd->add_option("outer", ref)->required();
  compose_cmd->add_option("inner", ref2)->required();
  compose_cmd->add_option("-o,--out", out);
  auto* power_cmd = app.add_subcommand("power", "k-fold composition");
  power_cmd->add_option("automaton", ref)->required();
  power_cmd->add_option("-k,--k", kpow)->required();
  power_cmd->add_option("-o,--out", out);
  auto* inverse_cmd = app.add_subcommand("inverse", "swap inputs and outputs");
  inverse_cmd->add_option("automaton", ref)->required();
  inverse_cmd->add_option("-o,--out", out);
  auto* union_cmd = app.add_subcommand("union", "disjoint union");
  union_cmd->add_option("left", ref)->required();
  union_cmd->add_option("right", ref2)->required();
  union_cmd->add_option("-o,--out", out);

  CLI11_PARSE(app, argc, argv);

  if (act->parsed()) {
    if (word.empty() && upword.empty()) {
      // an empty --word is a valid (empty) word only when given explicitly
      if (act->count("--word") == 0 && act->count("--upword") == 0)
        throw ParseError("act needs --word or --upword");
    }
    return cmd_act(ref, seq, word, upword, json);
  }
  if (orbit->parsed()) return cmd_orbit(ref, word, orbit_lang, nodes, dot, json);
  if (orbit_up_cmd->parsed()) return cmd_orbit_up(ref, upword, up_lang, nodes, letters, json);
  if (witness->parsed()) return cmd_witness(ref, target, depth, nodes, witness_lang, json);
  if (path->parsed()) return cmd_path(ref, word, length, nodes, path_lang, json);
  if (ball->parsed()) return cmd_ball(ref, gens, max_len, max_elems, json);
  if (torsion->parsed()) return cmd_torsion(ref, seq, budget, route, nodes, target, json);
  if (order->parsed()) return cmd_order(ref, seq, budget, json);
  if (cayley->parsed()) return cmd_cayley(ref, gens, max_len, max_elems, dot, json);
  if (classify_cmd->parsed()) return cmd_classify(ref, json);
  if (classify_letters_cmd->parsed()) return cmd_classify_letters(ref, json);
  if (extract->parsed()) return cmd_extract_finite(ref, upword, pair_budget, nodes, json);
  if (wang->parsed()) {
    if (wang_check->parsed()) return cmd_wang_check(ref, json);
    if (wang_to->parsed()) return cmd_wang_to_automaton(ref, out);
    if (wang_find->parsed()) return cmd_wang_find(ref, height, width, nodes, json);
  }
  if (gadget->parsed()) {
    if (gbuild->parsed()) return cmd_gadget_build(ref, dollar, out, json);
    if (gverify->parsed()) return cmd_gadget_verify(ref, dollar, seq, kpow, max_len, json);
  }
  if (corpus->parsed()) {
    if (clist->parsed()) return cmd_corpus_list(json);
    if (cdump->parsed()) return cmd_corpus_dump(name, out);
  }
  okc::RunReport unused("construction");
  if (dual_cmd->parsed()) {
    write_output(out, serialize_automaton(dual(resolve_automaton(ref, unused))));
    return okc::kExitDefinite;
  }
  if (compose_cmd->parsed()) {
    write_output(out, serialize_automaton(compose(resolve_automaton(ref, unused),
                                                  resolve_automaton(ref2, unused))));
    return okc::kExitDefinite;
  }
  if (power_cmd->parsed()) {
    write_output(out,
                 serialize_automaton(power(resolve_automaton(ref, unused), static_cast<int>(kpow))));
    return okc::kExitDefinite;
  }
  if (inverse_cmd->parsed()) {
    write_output(out, serialize_automaton(inverse(resolve_automaton(ref, unused))));
    return okc::kExitDefinite;
  }
  if (union_cmd->parsed()) {
    write_output(out, serialize_automaton(disjoint_union(resolve_automaton(ref, unused),
                                                         resolve_automaton(ref2, unused))));
    return okc::kExitDefinite;
  }
  return okc::kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return okc::kExitInternal;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return okc::kExitUnknown;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return okc::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return okc::kExitInternal;
  }
}
