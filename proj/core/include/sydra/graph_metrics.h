#ifndef SYDRA_GRAPH_METRICS_H_
#define SYDRA_GRAPH_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sydra/betweenness.h"
#include "sydra/emergent_architecture.h"
#include "sydra/include_extractor.h"
#include "sydra/taxonomy.h"

namespace sydra {

struct SubsystemEdge {
  SubsystemId from = SubsystemId::kUNK;
  SubsystemId to = SubsystemId::kUNK;
  std::size_t weight = 0;  // distinct file edges crossing the pair

  friend bool operator==(const SubsystemEdge&, const SubsystemEdge&) = default;
};

struct SubsystemGraph {
  std::vector<SubsystemId> nodes;    // taxonomy order
  std::vector<SubsystemEdge> edges;  // sorted by (from, to)

  friend bool operator==(const SubsystemGraph&, const SubsystemGraph&) = default;
};

struct LiftOptions {
  // Keep UNK as a pseudo-subsystem instead of dropping UNK-incident edges.
  bool include_unmapped = false;
};

// Aggregates file edges by (tag(from), tag(to)). Intra-subsystem edges are
// dropped. `tags` is indexed by FileId and must cover every node; a short
// vector throws Error(kLift).
SubsystemGraph LiftToSubsystemGraph(const FileGraph& graph,
                                    std::span<const SubsystemId> tags,
                                    const LiftOptions& options = {});

struct NodeDegree {
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;

  friend bool operator==(const NodeDegree&, const NodeDegree&) = default;
};

// Degrees count distinct neighbouring subsystems; weights are ignored.
std::map<SubsystemId, NodeDegree> DegreeMetrics(const SubsystemGraph& graph);

struct NodeMetrics {
  SubsystemId node = SubsystemId::kUNK;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  double betweenness_raw = 0.0;
  double betweenness_normalized = 0.0;

  friend bool operator==(const NodeMetrics&, const NodeMetrics&) = default;
};

struct MetricsReport {
  std::vector<NodeMetrics> nodes;  // same order as SubsystemGraph::nodes
  std::size_t node_count = 0;
  std::size_t edge_count = 0;

  const NodeMetrics* Find(SubsystemId id) const;
  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

MetricsReport ComputeMetrics(const SubsystemGraph& graph, unsigned workers = 1);

struct FileMetrics {
  FileId file = 0;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  double betweenness_raw = 0.0;
  double betweenness_normalized = 0.0;

  friend bool operator==(const FileMetrics&, const FileMetrics&) = default;
};

// One record per file, in id order. Betweenness is skipped (left at zero)
// when `with_betweenness` is false.
std::vector<FileMetrics> ComputeFileMetrics(const FileGraph& graph,
                                            bool with_betweenness = true,
                                            unsigned workers = 1);

struct TaggedFile {
  FileId id = 0;
  std::string path;
  FileKind kind = FileKind::kOther;
  SubsystemId tag = SubsystemId::kUNK;

  friend bool operator==(const TaggedFile&, const TaggedFile&) = default;
};

// Per-engine architectural model.
struct ArchModel {
  std::string engine_name;
  std::string commit_ref;
  std::string tool_version;
  std::string rules_digest;
  bool include_unmapped = false;
  std::vector<TaggedFile> files;
  std::vector<FileEdge> file_edges;
  SubsystemGraph subsystem_graph;
  MetricsReport metrics;
  std::vector<FileMetrics> file_metrics;
  std::optional<EmergentArchitecture> emergent;

  friend bool operator==(const ArchModel&, const ArchModel&) = default;
};

struct ModelOptions {
  bool include_unmapped = false;
  bool file_betweenness = true;
  unsigned workers = 1;
  std::string rules_digest;
};

ArchModel BuildModel(std::string engine_name, std::string commit_ref,
                     const FileGraph& graph, std::span<const SubsystemId> tags,
                     const ModelOptions& options = {});

// Subsystems with at least one file, excluding UNK.
std::vector<SubsystemId> PresentSubsystems(const ArchModel& model);

}  // namespace sydra

#endif  // SYDRA_GRAPH_METRICS_H_
