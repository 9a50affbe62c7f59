#include "report.hpp"

namespace orbitkit::cli {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport::RunReport(std::string subcommand)
    : subcommand_(std::move(subcommand)), start_(std::chrono::steady_clock::now()) {}

void RunReport::add_input(const std::string& label, const std::string& bytes) {
  inputs_.push_back(Json{{"source", label}, {"digest", fnv1a_hex(bytes)}});
}

void RunReport::set_arg(const std::string& key, const Json& value) { args_[key] = value; }

void RunReport::set_budget(const std::string& key, std::uint64_t value) { budget_[key] = value; }

Json RunReport::build() const {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
  Json out;
  out["schema"] = "orbitkit.report/1";
  out["subcommand"] = subcommand_;
  out["inputs"] = inputs_;
  out["args"] = args_;
  out["verdict"] = verdict_;
  out["budget"] = budget_;
  out["wall_time_ms"] = ms;
  return out;
}

Json word_json(const Automaton& a, const Word& w) {
  Json tokens = Json::array();
  for (LetterId l : w) tokens.push_back(a.letter_name(l));
  return Json{{"text", render_word(a, w)}, {"letters", tokens}};
}

Json seq_json(const Automaton& a, const StateSeq& s) {
  Json tokens = Json::array();
  for (StateId q : s) tokens.push_back(a.state_name(q));
  return Json{{"application_order", tokens}, {"paper_order", render_seq_paper(a, s)}};
}

Json upword_json(const Automaton& a, const UPWord& x) {
  return Json{{"text", render_upword(a, x)},
              {"preperiod", word_json(a, x.pre)},
              {"period", word_json(a, x.period)}};
}

} // namespace orbitkit::cli
