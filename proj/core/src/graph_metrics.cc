#include "sydra/graph_metrics.h"

#include <algorithm>
#include <array>
#include <utility>

#include "sydra/error.h"
#include "sydra/version.h"

namespace sydra {
namespace {

void CheckTags(const FileGraph& graph, std::span<const SubsystemId> tags) {
  if (tags.size() < graph.nodes.size()) {
    const std::string& missing = graph.nodes[tags.size()].path;
    throw Error(Stage::kLift, missing, "file has no subsystem tag");
  }
}

}  // namespace

SubsystemGraph LiftToSubsystemGraph(const FileGraph& graph,
                                    std::span<const SubsystemId> tags,
                                    const LiftOptions& options) {
  CheckTags(graph, tags);
  auto kept = [&](SubsystemId t) {
    return t != SubsystemId::kUNK || options.include_unmapped;
  };

  std::array<bool, kSubsystemCount> present{};
  for (const SourceFile& f : graph.nodes) present[Index(tags[f.id])] = true;

  SubsystemGraph out;
  for (SubsystemId id : AllSubsystems()) {
    if (present[Index(id)] && kept(id)) out.nodes.push_back(id);
  }

  std::map<std::pair<SubsystemId, SubsystemId>, std::size_t> weights;
  for (const FileEdge& e : graph.edges) {
    if (e.from >= graph.nodes.size() || e.to >= graph.nodes.size()) {
      throw Error(Stage::kLift, "file graph", "edge endpoint out of range");
    }
    const SubsystemId a = tags[e.from];
    const SubsystemId b = tags[e.to];
    if (a == b || !kept(a) || !kept(b)) continue;
    ++weights[{a, b}];
  }
  out.edges.reserve(weights.size());
  for (const auto& [pair, w] : weights) {
    out.edges.push_back(SubsystemEdge{pair.first, pair.second, w});
  }
  return out;
}

std::map<SubsystemId, NodeDegree> DegreeMetrics(const SubsystemGraph& graph) {
  std::map<SubsystemId, NodeDegree> degrees;
  for (SubsystemId id : graph.nodes) degrees[id];
  for (const SubsystemEdge& e : graph.edges) {
    ++degrees[e.from].out_degree;
    ++degrees[e.to].in_degree;
  }
  return degrees;
}

const NodeMetrics* MetricsReport::Find(SubsystemId id) const {
  auto it = std::find_if(nodes.begin(), nodes.end(),
                         [id](const NodeMetrics& m) { return m.node == id; });
  return it == nodes.end() ? nullptr : &*it;
}

MetricsReport ComputeMetrics(const SubsystemGraph& graph, unsigned workers) {
  std::array<Digraph::Node, kSubsystemCount> position{};
  std::array<bool, kSubsystemCount> known{};
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    position[Index(graph.nodes[i])] = static_cast<Digraph::Node>(i);
    known[Index(graph.nodes[i])] = true;
  }
  Digraph digraph(graph.nodes.size());
  for (const SubsystemEdge& e : graph.edges) {
    if (!known[Index(e.from)] || !known[Index(e.to)]) {
      throw Error(Stage::kMetrics, std::string(Code(e.from)) + "->" +
                                       std::string(Code(e.to)),
                  "edge endpoint is not a graph node");
    }
    digraph.AddEdge(position[Index(e.from)], position[Index(e.to)]);
  }
  const BetweennessScores bc = Betweenness(digraph, workers);
  const auto degrees = DegreeMetrics(graph);

  MetricsReport report;
  report.node_count = graph.nodes.size();
  report.edge_count = graph.edges.size();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const NodeDegree& d = degrees.at(graph.nodes[i]);
    report.nodes.push_back(NodeMetrics{graph.nodes[i], d.in_degree,
                                       d.out_degree, bc.raw[i],
                                       bc.normalized[i]});
  }
  return report;
}

std::vector<FileMetrics> ComputeFileMetrics(const FileGraph& graph,
                                            bool with_betweenness,
                                            unsigned workers) {
  std::vector<FileMetrics> out(graph.nodes.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].file = static_cast<FileId>(i);
  }
  Digraph digraph(graph.nodes.size());
  for (const FileEdge& e : graph.edges) {
    ++out.at(e.from).out_degree;
    ++out.at(e.to).in_degree;
    if (with_betweenness) digraph.AddEdge(e.from, e.to);
  }
  if (with_betweenness) {
    const BetweennessScores bc = Betweenness(digraph, workers);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].betweenness_raw = bc.raw[i];
      out[i].betweenness_normalized = bc.normalized[i];
    }
  }
  return out;
}

ArchModel BuildModel(std::string engine_name, std::string commit_ref,
                     const FileGraph& graph, std::span<const SubsystemId> tags,
                     const ModelOptions& options) {
  CheckTags(graph, tags);
  ArchModel model;
  model.engine_name = std::move(engine_name);
  model.commit_ref = std::move(commit_ref);
  model.tool_version = std::string(ToolVersion());
  model.rules_digest = options.rules_digest;
  model.include_unmapped = options.include_unmapped;

  model.files.reserve(graph.nodes.size());
  for (const SourceFile& f : graph.nodes) {
    model.files.push_back(TaggedFile{f.id, f.path, f.kind, tags[f.id]});
  }
  model.file_edges = graph.edges;
  std::sort(model.file_edges.begin(), model.file_edges.end());

  model.subsystem_graph = LiftToSubsystemGraph(
      graph, tags, LiftOptions{.include_unmapped = options.include_unmapped});
  model.metrics = ComputeMetrics(model.subsystem_graph, options.workers);
  model.file_metrics =
      ComputeFileMetrics(graph, options.file_betweenness, options.workers);
  return model;
}

std::vector<SubsystemId> PresentSubsystems(const ArchModel& model) {
  std::array<bool, kSubsystemCount> present{};
  for (const TaggedFile& f : model.files) present[Index(f.tag)] = true;
  std::vector<SubsystemId> out;
  for (SubsystemId id : ReferenceSubsystems()) {
    if (present[Index(id)]) out.push_back(id);
  }
  return out;
}

}  // namespace sydra
