#include "sydra/csv_reports.h"

#include <charconv>
#include <sstream>

#include "sydra/path_util.h"

namespace sydra {

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

std::string CsvField(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

void MetricsRow(std::ostream& os, std::string_view node, std::size_t in,
                std::size_t out, double raw, double normalized) {
  os << CsvField(node) << ',' << in << ',' << out << ',' << FormatDouble(raw)
     << ',' << FormatDouble(normalized) << '\n';
}

constexpr std::string_view kMetricsHeader =
    "node,in_degree,out_degree,betweenness_raw,betweenness_normalized\n";

}  // namespace

std::string MetricsCsv(const MetricsReport& metrics) {
  std::ostringstream os;
  os << kMetricsHeader;
  for (const NodeMetrics& n : metrics.nodes) {
    MetricsRow(os, Code(n.node), n.in_degree, n.out_degree, n.betweenness_raw,
               n.betweenness_normalized);
  }
  return os.str();
}

std::string FileMetricsCsv(const ArchModel& model) {
  std::ostringstream os;
  os << kMetricsHeader;
  for (const FileMetrics& f : model.file_metrics) {
    MetricsRow(os, model.files.at(f.file).path, f.in_degree, f.out_degree,
               f.betweenness_raw, f.betweenness_normalized);
  }
  return os.str();
}

std::string CoverageCsv(const MappingCoverage& coverage) {
  std::ostringstream os;
  os << "subsystem,file_count\n";
  for (SubsystemId id : ReferenceSubsystems()) {
    auto it = coverage.per_subsystem.find(id);
    os << Code(id) << ',' << (it == coverage.per_subsystem.end() ? 0 : it->second)
       << '\n';
  }
  os << Code(SubsystemId::kUNK) << ',' << coverage.unmapped_paths.size() << '\n';
  return os.str();
}

std::string UnmappedListing(const MappingCoverage& coverage) {
  std::ostringstream os;
  for (const auto& p : coverage.unmapped_paths) os << p << '\n';
  return os.str();
}

std::string PresenceCsv(const PresenceMatrix& presence) {
  std::ostringstream os;
  os << "engine";
  for (SubsystemId id : ReferenceSubsystems()) os << ',' << Code(id);
  os << ",detected\n";
  for (std::size_t e = 0; e < presence.engines.size(); ++e) {
    os << CsvField(presence.engines[e]);
    for (SubsystemId id : ReferenceSubsystems()) {
      os << ',' << (presence.Has(e, id) ? 1 : 0);
    }
    os << ',' << presence.detected[e] << '\n';
  }
  return os.str();
}

std::string FrequencyCsv(std::span<const PairCount> pairs) {
  std::ostringstream os;
  os << "from,to,count\n";
  for (const PairCount& p : pairs) {
    os << Code(p.from) << ',' << Code(p.to) << ',' << p.count << '\n';
  }
  return os.str();
}

std::string CohesionFoldersCsv(const CohesionReport& report) {
  std::ostringstream os;
  os << "folder,depth,direct_files,recursive_files,children\n";
  for (const FolderStats& s : report.folders) {
    os << CsvField(s.folder.empty() ? "." : s.folder) << ',' << s.depth << ','
       << s.direct_files << ',' << s.recursive_files << ',' << s.children
       << '\n';
  }
  return os.str();
}

std::string CohesionSummary(const CohesionReport& report) {
  std::ostringstream os;
  os << "max_depth: " << report.max_depth << '\n';
  os << "top_level_folders: " << report.top_level_count << '\n';
  os << "concentration: " << FormatDouble(report.concentration) << '\n';
  os << "covering_set:";
  for (const auto& f : report.covering_set) os << ' ' << f;
  os << '\n';
  os << "dispersion:\n";
  for (const auto& [tag, count] : report.dispersion) {
    os << "  " << Code(tag) << ' ' << count << ':';
    for (const auto& h : report.hosts.at(tag)) os << ' ' << h;
    os << '\n';
  }
  os << "repeated_name_nesting: " << report.repeated_names.size() << '\n';
  for (const RepeatedNameFlag& flag : report.repeated_names) {
    os << "  " << flag.child << " (inside " << flag.parent << ", "
       << flag.files.size() << " files)\n";
    for (const auto& f : flag.files) os << "    " << f << '\n';
  }
  return os.str();
}

std::string DiagnosticsText(std::span<const Diagnostic> diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) {
    out += d.Format();
    out += '\n';
  }
  return out;
}

}  // namespace sydra
