#ifndef SYDRA_PIPELINE_H_
#define SYDRA_PIPELINE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "sydra/cohesion_analyzer.h"
#include "sydra/error.h"
#include "sydra/graph_metrics.h"
#include "sydra/include_extractor.h"
#include "sydra/subsystem_mapper.h"

namespace sydra {

struct RunConfig {
  std::filesystem::path root;
  std::filesystem::path rules_path;
  // Relative entries are taken relative to `root`; absolute entries must lie
  // inside it.
  std::vector<std::string> include_paths;
  std::vector<std::string> excludes;
  std::string engine_name;  // defaults to the root directory name
  std::string commit_ref;
  std::filesystem::path output_dir;
  bool include_unmapped = false;
  // Selects the betweenness shown in the subsystem DOT labels.
  bool normalize_betweenness = true;
  bool file_betweenness = true;
  unsigned workers = 0;  // 0 = hardware concurrency
  CohesionOptions cohesion;
};

struct PipelineResult {
  ArchModel model;
  MappingCoverage coverage;
  CohesionReport cohesion;
  std::vector<Diagnostic> diagnostics;
  std::vector<std::filesystem::path> written;
};

// Scan -> parse/resolve -> map -> lift -> metrics -> export. Writes into
// output_dir:
//   <engine>.sydra.json, metrics.csv, file_metrics.csv, coverage.csv,
//   unmapped.txt, cohesion.csv, cohesion.txt, subsystem_graph.dot,
//   diagnostics.txt
// Fatal problems throw sydra::Error naming the stage and the input.
PipelineResult RunPipeline(const RunConfig& config);

// Converts user-supplied include paths to tree-relative form.
std::vector<std::string> TreeRelativeIncludePaths(
    const std::filesystem::path& root, const std::vector<std::string>& raw);

// Reads and parses a rules file; Error(kConfig) when it cannot be read.
RuleSet LoadRules(const std::filesystem::path& rules_path);

// File-name-safe version of an engine name.
std::string ModelFileName(std::string_view engine_name);

std::string ReadTextFile(const std::filesystem::path& path, Stage stage);

}  // namespace sydra

#endif  // SYDRA_PIPELINE_H_
