#include "sydra/dot_export.h"

#include <map>
#include <sstream>

#include "sydra/csv_reports.h"

namespace sydra {
namespace {

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string ExportDot(const FileGraph& graph) {
  std::ostringstream os;
  os << "digraph \"include_graph\" {\n";
  os << "  node [shape=box];\n";
  for (const SourceFile& f : graph.nodes) {
    os << "  n" << f.id << " [label=" << Quote(f.path) << "];\n";
  }
  for (const FileEdge& e : graph.edges) {
    os << "  n" << e.from << " -> n" << e.to << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string ExportDot(const SubsystemGraph& graph, const MetricsReport* metrics,
                      bool normalized) {
  std::ostringstream os;
  os << "digraph \"subsystem_graph\" {\n";
  os << "  node [shape=box];\n";
  for (SubsystemId id : graph.nodes) {
    std::string label(Code(id));
    if (metrics != nullptr) {
      if (const NodeMetrics* m = metrics->Find(id)) {
        label += "\\nbc=";
        label += FormatDouble(normalized ? m->betweenness_normalized
                                         : m->betweenness_raw);
      }
    }
    // `label` already holds DOT escapes.
    os << "  " << Code(id) << " [label=\"" << label << "\"];\n";
  }
  for (const SubsystemEdge& e : graph.edges) {
    os << "  " << Code(e.from) << " -> " << Code(e.to) << " [label=\""
       << e.weight << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string ExportClusteredDot(const ArchModel& model) {
  std::map<SubsystemId, std::vector<const TaggedFile*>> clusters;
  for (const TaggedFile& f : model.files) clusters[f.tag].push_back(&f);

  std::ostringstream os;
  os << "digraph " << Quote(model.engine_name) << " {\n";
  os << "  node [shape=box];\n";
  for (const auto& [tag, files] : clusters) {
    os << "  subgraph \"cluster_" << Code(tag) << "\" {\n";
    os << "    label=" << Quote(Describe(tag).name) << ";\n";
    for (const TaggedFile* f : files) {
      os << "    n" << f->id << " [label=" << Quote(f->path) << "];\n";
    }
    os << "  }\n";
  }
  for (const FileEdge& e : model.file_edges) {
    os << "  n" << e.from << " -> n" << e.to << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sydra
