#include "forkred/reports.hpp"

#include "forkred/io.hpp"

namespace forkred {

namespace {

nlohmann::json witness_to_json(const BulletWitness& w) {
  return {{"bullet", w.bullet}, {"i", w.i}, {"j", w.j}, {"detail", w.detail}};
}

}  // namespace

nlohmann::json to_json(const StructureClass& cls) {
  nlohmann::json out;
  out["kind"] = to_string(cls.kind);
  if (!cls.ordering.empty()) out["ordering"] = cls.ordering;
  if (cls.fork) out["fork"] = fork_certificate_to_json(*cls.fork);
  if (cls.rank3_mutation_cyclic)
    out["rank3_mutation_cyclic"] = *cls.rank3_mutation_cyclic;
  return out;
}

nlohmann::json to_json(const ReddeningResult& res) {
  nlohmann::json out;
  out["sequence"] = res.sequence.entries();
  out["length"] = res.sequence.size();
  out["length_bound"] = res.length_bound;
  out["red_count"] = res.red_count;
  out["green_vertices"] = res.green_vertices;
  out["final"] = quiver_to_json(res.final_quiver);
  return out;
}

nlohmann::json to_json(const URedReport& report) {
  nlohmann::json out;
  out["n"] = report.n;
  out["exact"] = report.exact;
  out["ured"] = report.ured_value;
  out["lower_bound"] = report.lower_bound;
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& comp : report.components) {
    nlohmann::json c;
    c["vertices"] = comp.vertices;
    c["status"] = to_string(comp.status);
    c["reason"] = comp.reason;
    if (comp.status == ReddeningStatus::Yes)
      c["witness"] = comp.witness.entries();
    if (comp.depth_searched > 0) c["depth_searched"] = comp.depth_searched;
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);
  return out;
}

nlohmann::json to_json(const BaseConditionReport& report) {
  nlohmann::json out;
  out["v"] = report.v;
  out["conditions"] = {report.bullets[0], report.bullets[1], report.bullets[2],
                       report.bullets[3]};
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : report.witnesses) ws.push_back(witness_to_json(w));
  out["witnesses"] = std::move(ws);
  return out;
}

nlohmann::json to_json(const TrajectoryStep& step) {
  nlohmann::json out;
  out["prefix_len"] = step.prefix_len;
  out["r"] = step.r;
  nlohmann::json signs = nlohmann::json::array();
  for (auto s : step.signs) signs.push_back(to_string(s));
  out["signs"] = std::move(signs);
  out["conditions"] = {step.bullets[0], step.bullets[1], step.bullets[2],
                       step.bullets[3]};
  out["return_sign_ok"] = step.return_sign_ok;
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : step.violations) vs.push_back(witness_to_json(v));
  out["violations"] = std::move(vs);
  return out;
}

nlohmann::json to_json(const TrajectoryReport& report) {
  nlohmann::json out;
  switch (report.mode) {
    case TrajectoryMode::Fork: out["mode"] = "fork"; break;
    case TrajectoryMode::AbundantAcyclic: out["mode"] = "acyclic"; break;
    case TrajectoryMode::Rank3Cyclic: out["mode"] = "rank3"; break;
  }
  out["ok"] = report.ok;
  out["readings_diverged"] = report.readings_diverged;
  out["base"] = to_json(report.base);
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : report.steps) steps.push_back(to_json(s));
  out["steps"] = std::move(steps);
  return out;
}

nlohmann::json to_json(const CoherenceVerdict& verdict) {
  nlohmann::json out;
  out["verdict"] = to_string(verdict.kind);
  out["depth"] = verdict.depth;
  out["exhausted"] = verdict.exhausted;
  out["nodes"] = verdict.nodes;
  if (verdict.kind == CoherenceKind::Violated) {
    out["witness"] = verdict.witness.entries();
    out["witness_vertex"] = verdict.witness_vertex;
  }
  return out;
}

nlohmann::json to_json(const NoAllRedVerdict& verdict) {
  nlohmann::json out;
  out["verdict"] = verdict.all_red_found ? "all-red-found" : "no-all-red-found";
  out["depth"] = verdict.depth;
  out["nodes"] = verdict.nodes;
  if (verdict.all_red_found) out["witness"] = verdict.witness.entries();
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& [seq, wit] : verdict.assertion_failures) {
    nlohmann::json f = witness_to_json(wit);
    f["seq"] = seq;
    fails.push_back(std::move(f));
  }
  out["assertion_failures"] = std::move(fails);
  return out;
}

nlohmann::json to_json(const ExploreStats& stats) {
  nlohmann::json out;
  out["nodes"] = stats.nodes;
  out["edges"] = stats.edges;
  out["depth_limit"] = stats.depth_limit;
  out["depth_reached"] = stats.depth_reached;
  out["exhausted"] = stats.exhausted;
  out["per_depth"] = stats.per_depth;
  if (stats.max_red >= 0) {
    out["max_red"] = stats.max_red;
    out["max_red_seq"] = stats.max_red_seq.entries();
    out["all_red_found"] = stats.all_red_found;
    if (stats.all_red_found) out["all_red_seq"] = stats.all_red_seq.entries();
    out["zero_row_found"] = stats.zero_row_found;
    out["mixed_found"] = stats.mixed_found;
    if (stats.mixed_found) {
      out["mixed_seq"] = stats.mixed_seq.entries();
      out["mixed_vertex"] = stats.mixed_vertex;
    }
  }
  return out;
}

std::vector<std::string> trajectory_jsonl(const TrajectoryReport& report) {
  std::vector<std::string> lines;
  lines.reserve(report.steps.size());
  for (const auto& step : report.steps) lines.push_back(to_json(step).dump());
  return lines;
}

}  // namespace forkred
