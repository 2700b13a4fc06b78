#pragma once

/* JSON forms of traces and verification reports. Partitions serialize as
 * plain arrays of integers; schemas are documented in the README.
 */

#include <string>

#include <json.hpp>

#include "bijection.hpp"
#include "verify.hpp"

namespace bressoud {

inline nlohmann::json to_json(const Partition& p) { return nlohmann::json(p.parts()); }

inline Partition partition_from_json(const nlohmann::json& j) {
  return Partition(j.get<std::vector<Part>>());
}

inline nlohmann::json to_json(const GroupedRows& g) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& grp : g.groups) groups.push_back({{"residue", grp.residue}, {"values", grp.values}});
  return groups;
}

inline nlohmann::json to_json(const StepTrace& t) {
  return nlohmann::json{
      {"direction", t.direction == Direction::forward ? "forward" : "inverse"},
      {"d", t.after_step2.d},
      {"input", to_json(t.input)},
      {"after_step1", {{"values", t.after_step1.values}, {"staircase", t.staircase}}},
      {"groups", to_json(t.after_step2)},
      {"after_step3", t.after_step3},
      {"output", to_json(t.output)},
  };
}

inline StepTrace trace_from_json(const nlohmann::json& j) {
  StepTrace t;
  t.direction = j.at("direction").get<std::string>() == "inverse" ? Direction::inverse
                                                                  : Direction::forward;
  t.input = partition_from_json(j.at("input"));
  t.after_step1.values = j.at("after_step1").at("values").get<std::vector<Part>>();
  t.staircase = j.at("after_step1").at("staircase").get<std::vector<Part>>();
  t.after_step2.d = j.at("d").get<int>();
  for (const auto& grp : j.at("groups")) {
    ResidueGroup g;
    g.residue = grp.at("residue").get<int>();
    g.values = grp.at("values").get<std::vector<Part>>();
    t.after_step2.groups.push_back(std::move(g));
  }
  t.after_step3 = j.at("after_step3").get<std::vector<Part>>();
  t.output = partition_from_json(j.at("output"));
  return t;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Partition& w : r.witnesses) witnesses.push_back(to_json(w));
  return nlohmann::json{
      {"n", r.n},
      {"d", r.d},
      {"pi", r.pi.images()},
      {"count_left", r.count_left},
      {"count_right", r.count_right},
      {"forward_total", r.forward_total},
      {"injective", r.injective},
      {"roundtrip_fwd_inv", r.roundtrip_fwd_inv},
      {"roundtrip_inv_fwd", r.roundtrip_inv_fwd},
      {"witnesses", witnesses},
      {"pass", r.passed()},
  };
}

/// Aggregate line emitted after the per-report stream.
inline nlohmann::json summary_to_json(const RangeSummary& s) {
  return nlohmann::json{
      {"n_max", s.n_max},         {"d_max", s.d_max},
      {"reports", s.reports.size()}, {"failures", s.failures},
      {"all_pass", s.all_passed()},  {"wall_seconds", s.wall_seconds},
  };
}

}  // namespace bressoud
