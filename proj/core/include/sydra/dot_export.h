#ifndef SYDRA_DOT_EXPORT_H_
#define SYDRA_DOT_EXPORT_H_

#include <string>

#include "sydra/graph_metrics.h"
#include "sydra/include_extractor.h"

namespace sydra {

// Plain file-level include graph; node labels are paths.
std::string ExportDot(const FileGraph& graph);

// Subsystem graph; edges are labelled with their weights. When `metrics` is
// given, node labels also carry the betweenness selected by `normalized`.
std::string ExportDot(const SubsystemGraph& graph,
                      const MetricsReport* metrics = nullptr,
                      bool normalized = true);

// File-level graph of a model with one cluster per subsystem.
std::string ExportClusteredDot(const ArchModel& model);

}  // namespace sydra

#endif  // SYDRA_DOT_EXPORT_H_
