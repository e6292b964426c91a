#include "forkred/explore.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "forkred/io.hpp"

namespace forkred {

std::string state_key(const ExtendedQuiver& q) {
  std::ostringstream out;
  out << q.n << ',' << q.m << ';';
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) out << q.b.at(i, j).get_str() << ',';
  out << ';';
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.m; ++j) out << q.c.at(i, j).get_str() << ',';
  return out.str();
}

namespace {

struct StoredNode {
  ExtendedQuiver q;
  int depth;
  MutationSequence seq;
};

std::string node_key(const ExtendedQuiver& q, int last, bool dedup_on_last) {
  std::string key = state_key(q);
  if (dedup_on_last) {
    key += '|';
    key += std::to_string(last);
  }
  return key;
}

void update_color_stats(const ExtendedQuiver& q, const MutationSequence& seq,
                        ExploreStats* stats) {
  int red = 0;
  for (int v = 1; v <= q.n; ++v) {
    switch (c_row_sign(q, v)) {
      case RowSign::Negative:
        ++red;
        break;
      case RowSign::Zero:
        stats->zero_row_found = true;
        break;
      case RowSign::Mixed:
        if (!stats->mixed_found) {
          stats->mixed_found = true;
          stats->mixed_seq = seq;
          stats->mixed_vertex = v;
        }
        break;
      case RowSign::Positive:
        break;
    }
  }
  if (red > stats->max_red) {
    stats->max_red = red;
    stats->max_red_seq = seq;
  }
  if (red == q.n && !stats->all_red_found) {
    stats->all_red_found = true;
    stats->all_red_seq = seq;
  }
}

void write_snapshot(const std::string& path, const ExtendedQuiver& root,
                    int depth, const std::deque<StoredNode>& nodes) {
  std::ofstream out(path);
  if (!out) throw QuiverError("cannot write snapshot " + path);
  nlohmann::json header;
  header["format"] = "forkred-explore";
  header["version"] = 1;
  header["depth"] = depth;
  header["root"] = quiver_to_json(root);
  out << header.dump() << '\n';
  for (const auto& node : nodes) {
    nlohmann::json line;
    line["d"] = node.depth;
    line["seq"] = node.seq.entries();
    line["b"] = quiver_to_json(node.q)["b"];
    line["c"] = quiver_to_json(node.q)["c"];
    out << line.dump() << '\n';
  }
}

struct Snapshot {
  ExtendedQuiver root;
  int depth = 0;
  std::deque<StoredNode> nodes;
};

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QuiverError("cannot read snapshot " + path);
  std::string line;
  if (!std::getline(in, line)) throw QuiverError("empty snapshot " + path);
  nlohmann::json header = nlohmann::json::parse(line);
  if (header.value("format", "") != "forkred-explore")
    throw QuiverError("not an exploration snapshot: " + path);
  Snapshot snap;
  snap.root = quiver_from_json(header["root"]);
  snap.depth = header["depth"].get<int>();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    StoredNode node;
    node.depth = j["d"].get<int>();
    node.seq = MutationSequence(j["seq"].get<std::vector<int>>());
    nlohmann::json qj;
    qj["n"] = snap.root.n;
    qj["m"] = snap.root.m;
    qj["b"] = j["b"];
    qj["c"] = j["c"];
    node.q = quiver_from_json(qj);
    snap.nodes.push_back(std::move(node));
  }
  return snap;
}

}  // namespace

ExploreStats explore_class(const ExtendedQuiver& root,
                           const ExploreOptions& opts,
                           const NodeVisitor& visit) {
  ExploreStats stats;
  stats.depth_limit = opts.depth;
  stats.per_depth.assign(static_cast<size_t>(opts.depth) + 1, 0);

  std::deque<StoredNode> nodes;
  std::unordered_set<std::string> visited;
  size_t scan = 0;  // queue position; everything before it is processed

  if (!opts.resume_in.empty()) {
    Snapshot snap = read_snapshot(opts.resume_in);
    if (state_key(snap.root) != state_key(root))
      throw QuiverError("snapshot root does not match input quiver");
    if (snap.depth > opts.depth)
      throw QuiverError("snapshot depth exceeds requested depth");
    nodes = std::move(snap.nodes);
    for (const auto& node : nodes) {
      const int last = node.seq.empty() ? 0 : node.seq.back();
      visited.insert(node_key(node.q, last, opts.dedup_on_last));
      if (static_cast<size_t>(node.depth) < stats.per_depth.size())
        ++stats.per_depth[node.depth];
      // Layers strictly below the snapshot depth were fully expanded.
      if (node.depth < snap.depth) ++scan;
    }
  } else {
    nodes.push_back({root, 0, MutationSequence{}});
    visited.insert(node_key(root, 0, opts.dedup_on_last));
    stats.per_depth[0] = 1;
  }

  bool track_colors = root.m > 0;
  bool aborted = false;
  for (size_t processed = 0; processed < nodes.size(); ++processed) {
    // Visit every node exactly once, including resumed ones below scan.
    const StoredNode& node = nodes[processed];
    const int last = node.seq.empty() ? 0 : node.seq.back();
    if (node.depth > stats.depth_reached) stats.depth_reached = node.depth;
    if (track_colors) update_color_stats(node.q, node.seq, &stats);
    if (visit && !visit({node.q, node.depth, node.seq, last})) {
      aborted = true;
      break;
    }
    if (processed < scan) continue;  // children already known from snapshot
    if (node.depth >= opts.depth) continue;
    for (int k = 1; k <= root.n; ++k) {
      if (k == last) continue;
      ++stats.edges;
      ExtendedQuiver child = mutate(node.q, k);
      std::string key = node_key(child, k, opts.dedup_on_last);
      if (!visited.insert(std::move(key)).second) continue;
      MutationSequence seq = node.seq;
      seq.push_back(k);
      ++stats.per_depth[node.depth + 1];
      nodes.push_back({std::move(child), node.depth + 1, std::move(seq)});
    }
  }

  stats.nodes = static_cast<long long>(nodes.size());
  stats.stopped_early = aborted;
  int deepest_new = 0;
  for (int d = 0; d <= opts.depth; ++d)
    if (stats.per_depth[d] > 0) deepest_new = d;
  stats.exhausted = !aborted && deepest_new < opts.depth;

  if (!opts.snapshot_out.empty() && !aborted)
    write_snapshot(opts.snapshot_out, root, opts.depth, nodes);
  return stats;
}

}  // namespace forkred
