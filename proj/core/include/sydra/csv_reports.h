#ifndef SYDRA_CSV_REPORTS_H_
#define SYDRA_CSV_REPORTS_H_

#include <span>
#include <string>

#include "sydra/cohesion_analyzer.h"
#include "sydra/corpus_aggregator.h"
#include "sydra/graph_metrics.h"
#include "sydra/include_extractor.h"
#include "sydra/subsystem_mapper.h"

namespace sydra {

// node,in_degree,out_degree,betweenness_raw,betweenness_normalized
std::string MetricsCsv(const MetricsReport& metrics);
std::string FileMetricsCsv(const ArchModel& model);

// subsystem,file_count (reference subsystems in taxonomy order, then UNK).
std::string CoverageCsv(const MappingCoverage& coverage);
std::string UnmappedListing(const MappingCoverage& coverage);

// engine,AUD,...,VFX,detected
std::string PresenceCsv(const PresenceMatrix& presence);
// from,to,count
std::string FrequencyCsv(std::span<const PairCount> pairs);

// folder,depth,direct_files,recursive_files,children
std::string CohesionFoldersCsv(const CohesionReport& report);
std::string CohesionSummary(const CohesionReport& report);

std::string DiagnosticsText(std::span<const Diagnostic> diagnostics);

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double value);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string CsvField(std::string_view text);

}  // namespace sydra

#endif  // SYDRA_CSV_REPORTS_H_
