#pragma once

#include <chrono>
#include <string>

#include "json.hpp"

#include "orbitkit/action.hpp"
#include "orbitkit/automaton.hpp"
#include "orbitkit/io.hpp"

namespace orbitkit::cli {

using Json = nlohmann::ordered_json;

// Exit codes: 0 definite verdict, 1 usage/parse error, 2 unknown or budget
// exhausted, 3 internal invariant failure.
inline constexpr int kExitDefinite = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitInternal = 3;

std::string fnv1a_hex(const std::string& bytes);

/// Machine-readable run report.  Field names are stable; identical
/// invocations produce identical JSON except for wall_time_ms.
class RunReport {
public:
  RunReport(std::string subcommand);

  void add_input(const std::string& label, const std::string& bytes);
  void set_arg(const std::string& key, const Json& value);
  void set_budget(const std::string& key, std::uint64_t value);
  Json& verdict() { return verdict_; }

  /// Assemble the final object (includes wall time since construction).
  Json build() const;

private:
  std::string subcommand_;
  Json inputs_ = Json::array();
  Json args_ = Json::object();
  Json budget_ = Json::object();
  Json verdict_ = Json::object();
  std::chrono::steady_clock::time_point start_;
};

Json word_json(const Automaton& a, const Word& w);
Json seq_json(const Automaton& a, const StateSeq& s);
Json upword_json(const Automaton& a, const UPWord& x);

} // namespace orbitkit::cli
