#include "sydra/pipeline.h"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "sydra/csv_reports.h"
#include "sydra/dot_export.h"
#include "sydra/model_io.h"
#include "sydra/path_util.h"

namespace sydra {
namespace fs = std::filesystem;

std::string ReadTextFile(const fs::path& path, Stage stage) {
  auto bytes = ReadFileBytes(path);
  if (!bytes) throw Error(stage, path.string(), "cannot read file");
  return std::move(*bytes);
}

RuleSet LoadRules(const fs::path& rules_path) {
  std::error_code ec;
  if (!fs::is_regular_file(rules_path, ec)) {
    throw Error(Stage::kConfig, rules_path.string(), "rules file not found");
  }
  const std::string text = ReadTextFile(rules_path, Stage::kConfig);
  try {
    return ParseRules(text);
  } catch (const Error& e) {
    throw Error(Stage::kRules, rules_path.string(), e.what());
  }
}

std::vector<std::string> TreeRelativeIncludePaths(
    const fs::path& root, const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  const fs::path canonical_root = fs::weakly_canonical(root);
  for (const std::string& entry : raw) {
    fs::path p(entry);
    std::string relative;
    if (p.is_absolute()) {
      const fs::path rel = fs::weakly_canonical(p).lexically_relative(canonical_root);
      if (rel.empty() || *rel.begin() == "..") {
        throw Error(Stage::kConfig, entry, "include path lies outside the root");
      }
      relative = rel.generic_string();
    } else {
      relative = p.generic_string();
    }
    auto normalized = NormalizeRelative(relative);
    if (!normalized) {
      throw Error(Stage::kConfig, entry, "include path lies outside the root");
    }
    out.push_back(std::move(*normalized));
  }
  return out;
}

std::string ModelFileName(std::string_view engine_name) {
  std::string out;
  for (char c : engine_name) {
    const bool safe = std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
                      c == '_' || c == '.';
    out += safe ? c : '_';
  }
  if (out.empty()) out = "model";
  return out + std::string(kModelFileExtension);
}

PipelineResult RunPipeline(const RunConfig& config) {
  std::error_code ec;
  if (!fs::is_directory(config.root, ec)) {
    throw Error(Stage::kConfig, config.root.string(),
                "root does not exist or is not a directory");
  }
  RuleSet rules = LoadRules(config.rules_path);
  if (config.output_dir.empty()) {
    throw Error(Stage::kConfig, "--out", "output directory is required");
  }

  std::string engine = config.engine_name;
  if (engine.empty()) {
    engine = fs::weakly_canonical(config.root).filename().string();
  }

  PipelineResult result;

  ScanResult scan = ScanTree(config.root, ScanOptions{.excludes = config.excludes});
  std::move(scan.warnings.begin(), scan.warnings.end(),
            std::back_inserter(result.diagnostics));
  for (const RuleWarning& w : rules.warnings()) {
    result.diagnostics.push_back(Diagnostic{config.rules_path.generic_string(),
                                            w.line, "duplicate-rule", w.message});
  }

  BuildOptions build{TreeRelativeIncludePaths(config.root, config.include_paths),
                     config.workers};
  BuildResult built = BuildFileGraph(config.root, std::move(scan.files), build);
  std::move(built.diagnostics.begin(), built.diagnostics.end(),
            std::back_inserter(result.diagnostics));

  const std::vector<SubsystemId> tags = MapFiles(built.graph.nodes, rules);
  result.coverage = ComputeCoverage(built.graph.nodes, tags);

  ModelOptions model_options;
  model_options.include_unmapped = config.include_unmapped;
  model_options.file_betweenness = config.file_betweenness;
  model_options.workers = config.workers;
  model_options.rules_digest = rules.source_digest();
  result.model = BuildModel(engine, config.commit_ref, built.graph, tags,
                            model_options);
  result.cohesion = AnalyzeCohesion(built.graph.nodes, tags, config.cohesion);

  fs::create_directories(config.output_dir, ec);
  if (ec) {
    throw Error(Stage::kExport, config.output_dir.string(),
                "cannot create output directory: " + ec.message());
  }
  auto emit = [&](const std::string& name, const std::string& text) {
    const fs::path path = config.output_dir / name;
    WriteTextFile(path, text);
    result.written.push_back(path);
  };
  emit(ModelFileName(engine), ExportModelJson(result.model));
  emit("metrics.csv", MetricsCsv(result.model.metrics));
  emit("file_metrics.csv", FileMetricsCsv(result.model));
  emit("coverage.csv", CoverageCsv(result.coverage));
  emit("unmapped.txt", UnmappedListing(result.coverage));
  emit("cohesion.csv", CohesionFoldersCsv(result.cohesion));
  emit("cohesion.txt", CohesionSummary(result.cohesion));
  emit("subsystem_graph.dot",
       ExportDot(result.model.subsystem_graph, &result.model.metrics,
                 config.normalize_betweenness));
  emit("diagnostics.txt", DiagnosticsText(result.diagnostics));
  return result;
}

}  // namespace sydra
