#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "forkred/dynamics.hpp"
#include "forkred/explore.hpp"
#include "forkred/gen.hpp"
#include "forkred/io.hpp"
#include "forkred/quiver.hpp"
#include "forkred/reddening.hpp"
#include "forkred/reports.hpp"
#include "forkred/structure.hpp"
#include "forkred/verify.hpp"

namespace {

using namespace forkred;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_seq(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    out.push_back(std::stoi(tok));
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') flush();
    else tok.push_back(ch);
  }
  flush();
  return out;
}

std::pair<int, int> parse_weights(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    throw ParseError("weight range must look like LO..HI");
  return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

int depth_or_default(std::optional<int> given, int fallback) {
  if (given) return *given;
  if (const char* env = std::getenv("FORKRED_DEPTH_DEFAULT"))
    return std::stoi(env);
  return fallback;
}

void print_quiver(const ExtendedQuiver& q, const std::string& format) {
  if (format == "text") std::cout << quiver_to_text(q);
  else if (format == "dot") std::cout << to_dot(q);
  else std::cout << quiver_to_json(q).dump(2) << "\n";
}

const char* color_name(const ExtendedQuiver& q, int v) {
  switch (c_row_sign(q, v)) {
    case RowSign::Positive: return "green";
    case RowSign::Negative: return "red";
    case RowSign::Zero: return "blue";
    case RowSign::Mixed: return "mixed";
  }
  return "?";
}

nlohmann::json colors_json(const ExtendedQuiver& q) {
  nlohmann::json out = nlohmann::json::array();
  for (int v = 1; v <= q.n; ++v) out.push_back(color_name(q, v));
  return out;
}

std::vector<int> random_reduced_seq(int first, int n, int len, Rng& rng) {
  std::vector<int> seq{first};
  for (int s = 1; s < len; ++s) {
    int k = rng.uniform(1, n);
    while (k == seq.back()) k = rng.uniform(1, n);
    seq.push_back(k);
  }
  return seq;
}

struct Options {
  std::string input;
  std::string seq;
  std::optional<int> depth;
  unsigned long long seed = 0;
  std::string weights = "2..5";
  std::string mode = "fork";
  std::string format = "json";
  std::string snapshot;
  std::string resume;
  std::string check = "trajectory";
  int size = 4;
  int walk = 0;
  int runs = 100;
  long long budget = 10000;
};

int cmd_mutate(const Options& opt) {
  ExtendedQuiver q = load_quiver(opt.input);
  MutationSequence w(parse_seq(opt.seq));
  ExtendedQuiver out = mutate_seq(q, w);
  if (opt.format == "text") {
    std::cout << quiver_to_text(out);
    std::cout << "# colors:";
    for (int v = 1; v <= out.n; ++v) std::cout << ' ' << color_name(out, v);
    std::cout << "\n";
  } else {
    nlohmann::json j;
    j["quiver"] = quiver_to_json(out);
    j["colors"] = colors_json(out);
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  ExtendedQuiver q = load_quiver(opt.input);
  StructureClass cls = classify(mutable_part(q));
  std::cout << to_json(cls).dump(2) << "\n";
  return kExitOk;
}

int cmd_find_fork(const Options& opt) {
  ExtendedQuiver q = load_quiver(opt.input);
  auto outcome = find_fork(mutable_part(q), opt.budget, opt.seed);
  nlohmann::json j;
  j["found"] = outcome.found;
  j["steps_used"] = outcome.steps_used;
  if (outcome.found) {
    j["sequence"] = outcome.seq.entries();
    j["certificate"] = fork_certificate_to_json(*outcome.cert);
  }
  std::cout << j.dump(2) << "\n";
  return outcome.found ? kExitOk : kExitViolation;
}

int cmd_redden(const Options& opt) {
  ExtendedQuiver q = load_quiver(opt.input);
  const QuiverMatrix part = mutable_part(q);
  if (detect_fork(part)) {
    ExtendedQuiver input = q.m > 0 ? q : frame(part);
    ReddeningResult res = general_reddening_fork(input);
    std::cout << to_json(res).dump(2) << "\n";
    return kExitOk;
  }
  URedReport report = compute_ured(part, depth_or_default(opt.depth, 12));
  std::cout << to_json(report).dump(2) << "\n";
  return kExitOk;
}

int cmd_ured(const Options& opt) {
  ExtendedQuiver q = load_quiver(opt.input);
  URedReport report =
      compute_ured(mutable_part(q), depth_or_default(opt.depth, 12));
  std::cout << to_json(report).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  ExtendedQuiver raw = load_quiver(opt.input);
  ExtendedQuiver q = raw.m > 0 ? raw : frame(mutable_part(raw));

  if (opt.check == "coherence") {
    CoherenceVerdict verdict =
        bfs_sign_coherence(q, depth_or_default(opt.depth, 6));
    std::cout << to_json(verdict).dump(2) << "\n";
    return verdict.kind == CoherenceKind::Violated ? kExitViolation : kExitOk;
  }
  if (opt.check == "no-all-red") {
    NoAllRedVerdict verdict =
        check_no_all_red(mutable_part(raw), depth_or_default(opt.depth, 10));
    std::cout << to_json(verdict).dump(2) << "\n";
    return verdict.all_red_found || !verdict.assertion_failures.empty()
               ? kExitViolation
               : kExitOk;
  }

  TrajectoryMode mode = TrajectoryMode::Fork;
  if (opt.mode == "acyclic") mode = TrajectoryMode::AbundantAcyclic;
  else if (opt.mode == "rank3") mode = TrajectoryMode::Rank3Cyclic;

  if (!opt.seq.empty()) {
    MutationSequence w(parse_seq(opt.seq));
    if (w.empty()) throw ParseError("empty sequence");
    TrajectoryReport report = verify_trajectory(q, *w.begin(), w, mode);
    if (opt.format == "jsonl") {
      for (const auto& line : trajectory_jsonl(report))
        std::cout << line << "\n";
    } else {
      std::cout << to_json(report).dump(2) << "\n";
    }
    return report.ok ? kExitOk : kExitViolation;
  }

  // Seeded random trajectories of the requested length.
  const QuiverMatrix part = mutable_part(q);
  int start = 0;
  switch (mode) {
    case TrajectoryMode::Fork: {
      auto cert = detect_fork(part);
      if (!cert) throw QuiverError("input is not a fork");
      start = cert->ordering.front();
      break;
    }
    case TrajectoryMode::AbundantAcyclic:
      start = acyclic_ordering(part).front();
      break;
    case TrajectoryMode::Rank3Cyclic:
      start = 1;
      break;
  }
  Rng rng(opt.seed);
  const int len = depth_or_default(opt.depth, 10);
  int violations = 0;
  nlohmann::json failed = nlohmann::json::array();
  for (int run = 0; run < opt.runs; ++run) {
    auto seq = random_reduced_seq(start, q.n, len, rng);
    TrajectoryReport report =
        verify_trajectory(q, start, MutationSequence(seq), mode);
    if (!report.ok) {
      ++violations;
      failed.push_back(seq);
    }
  }
  nlohmann::json j;
  j["runs"] = opt.runs;
  j["length"] = len;
  j["violations"] = violations;
  if (violations > 0) j["failed_sequences"] = failed;
  std::cout << j.dump(2) << "\n";
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_explore(const Options& opt) {
  ExtendedQuiver raw = load_quiver(opt.input);
  ExtendedQuiver q = raw.m > 0 ? raw : frame(mutable_part(raw));
  ExploreOptions opts;
  opts.depth = depth_or_default(opt.depth, 6);
  opts.snapshot_out = opt.snapshot;
  opts.resume_in = opt.resume;
  ExploreStats stats = explore_class(q, opts);
  std::cout << to_json(stats).dump(2) << "\n";
  return stats.mixed_found ? kExitViolation : kExitOk;
}

int cmd_dot(const Options& opt) {
  std::cout << to_dot(load_quiver(opt.input));
  return kExitOk;
}

int cmd_gen(const Options& opt) {
  auto [wlo, whi] = parse_weights(opt.weights);
  Rng rng(opt.seed);
  QuiverMatrix q;
  if (opt.mode == "rank3") {
    q = random_rank3_cyclic(wlo, whi, rng);
  } else if (opt.mode == "fork") {
    q = random_fork(opt.size, wlo, whi, opt.walk, rng).fork;
  } else {
    q = random_abundant_acyclic(opt.size, wlo, whi, rng);
  }
  print_quiver(ExtendedQuiver(q, IntMatrix(q.n, 0)), opt.format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forkred: exact quiver mutation, fork search, reddening "
               "construction, and sign-coherence verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    auto* in = cmd->add_option("--input", opt.input,
                               "quiver file (JSON or text), inline JSON, or "
                               "- for stdin");
    if (needs_input) in->required();
    cmd->add_option("--format", opt.format, "json | text | dot | jsonl");
  };

  auto* mutate_cmd = app.add_subcommand("mutate", "apply a mutation sequence");
  add_common(mutate_cmd, true);
  mutate_cmd->add_option("--seq", opt.seq, "mutation sequence, e.g. 1,2,1")
      ->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "structural class of the mutable part");
  add_common(classify_cmd, true);

  auto* findfork_cmd =
      app.add_subcommand("find-fork", "search for a fork in the mutation class");
  add_common(findfork_cmd, true);
  findfork_cmd->add_option("--budget", opt.budget, "mutation step budget");
  findfork_cmd->add_option("--seed", opt.seed, "restart seed");

  auto* redden_cmd = app.add_subcommand(
      "redden", "general reddening sequence for forks, per-component "
                "unrestricted red size otherwise");
  add_common(redden_cmd, true);
  redden_cmd->add_option("--depth", opt.depth, "component search depth");

  auto* ured_cmd =
      app.add_subcommand("ured", "unrestricted red size per component");
  add_common(ured_cmd, true);
  ured_cmd->add_option("--depth", opt.depth, "component search depth");

  auto* verify_cmd = app.add_subcommand(
      "verify", "sign-condition trajectories, class coherence, or the "
                "rank-3 no-all-red check");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--check", opt.check,
                         "trajectory | coherence | no-all-red");
  verify_cmd->add_option("--mode", opt.mode, "fork | acyclic | rank3");
  verify_cmd->add_option("--seq", opt.seq, "explicit trajectory");
  verify_cmd->add_option("--depth", opt.depth,
                         "exploration depth / trajectory length");
  verify_cmd->add_option("--seed", opt.seed, "random trajectory seed");
  verify_cmd->add_option("--runs", opt.runs, "number of random trajectories");

  auto* explore_cmd =
      app.add_subcommand("explore", "enumerate the labelled mutation class");
  add_common(explore_cmd, true);
  explore_cmd->add_option("--depth", opt.depth, "exploration depth");
  explore_cmd->add_option("--snapshot", opt.snapshot,
                          "write visited nodes to a JSONL snapshot");
  explore_cmd->add_option("--resume", opt.resume,
                          "resume from a JSONL snapshot");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  add_common(dot_cmd, true);

  auto* gen_cmd = app.add_subcommand("gen", "seeded random quiver generator");
  add_common(gen_cmd, false);
  gen_cmd->add_option("--mode", opt.mode, "acyclic | fork | rank3");
  gen_cmd->add_option("-n,--size", opt.size, "vertex count");
  gen_cmd->add_option("--weights", opt.weights, "weight range LO..HI");
  gen_cmd->add_option("--seed", opt.seed, "generator seed");
  gen_cmd->add_option("--walk", opt.walk, "extra fork-preserving mutations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(mutate_cmd)) return cmd_mutate(opt);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(opt);
    if (app.got_subcommand(findfork_cmd)) return cmd_find_fork(opt);
    if (app.got_subcommand(redden_cmd)) return cmd_redden(opt);
    if (app.got_subcommand(ured_cmd)) return cmd_ured(opt);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(opt);
    if (app.got_subcommand(explore_cmd)) return cmd_explore(opt);
    if (app.got_subcommand(dot_cmd)) return cmd_dot(opt);
    if (app.got_subcommand(gen_cmd)) return cmd_gen(opt);
  } catch (const MixedSignsError& e) {
    std::cerr << "sign-coherence violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const QuiverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
