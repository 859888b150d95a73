// Command-line front end: one subcommand per pipeline step.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "sydra/cohesion_analyzer.h"
#include "sydra/corpus_aggregator.h"
#include "sydra/csv_reports.h"
#include "sydra/dot_export.h"
#include "sydra/error.h"
#include "sydra/include_extractor.h"
#include "sydra/model_io.h"
#include "sydra/pipeline.h"
#include "sydra/subsystem_mapper.h"
#include "sydra/version.h"

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
  std::string root;
  std::string rules;
  std::vector<std::string> include_paths;
  std::vector<std::string> excludes;
  std::string out;
  unsigned jobs = 0;
};

void ConfigureLogging() {
  auto logger = spdlog::stderr_color_st("sydra");
  logger->set_pattern("sydra: %l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("SYDRA_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

void LogDiagnostics(const std::vector<sydra::Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) spdlog::debug("{}", d.Format());
  if (!diagnostics.empty()) {
    spdlog::info("{} diagnostics", diagnostics.size());
  }
}

fs::path EnsureOutDir(const std::string& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) {
    throw sydra::Error(sydra::Stage::kExport, out,
                       "cannot create output directory: " + ec.message());
  }
  return fs::path(out);
}

sydra::ScanResult Scan(const CommonOptions& o) {
  return sydra::ScanTree(o.root, sydra::ScanOptions{.excludes = o.excludes});
}

void AddRootOptions(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--root", o.root, "Source tree to analyze")->required();
  cmd->add_option("--exclude", o.excludes, "Glob of files to skip (repeatable)");
}

int RunExtract(const CommonOptions& o) {
  sydra::ScanResult scan = Scan(o);
  sydra::BuildOptions build{sydra::TreeRelativeIncludePaths(o.root, o.include_paths),
                            o.jobs};
  sydra::BuildResult built = sydra::BuildFileGraph(o.root, std::move(scan.files), build);
  std::vector<sydra::Diagnostic> diagnostics = std::move(scan.warnings);
  diagnostics.insert(diagnostics.end(), built.diagnostics.begin(),
                     built.diagnostics.end());

  const fs::path out = EnsureOutDir(o.out);
  sydra::WriteTextFile(out / "include_graph.dot", sydra::ExportDot(built.graph));
  std::string externals;
  for (const auto& e : built.graph.external_refs) externals += e + "\n";
  sydra::WriteTextFile(out / "external_refs.txt", externals);
  sydra::WriteTextFile(out / "diagnostics.txt", sydra::DiagnosticsText(diagnostics));
  LogDiagnostics(diagnostics);
  std::cout << built.graph.nodes.size() << " files, " << built.graph.edges.size()
            << " edges, " << built.graph.external_refs.size()
            << " external references\n";
  return 0;
}

int RunMap(const CommonOptions& o, bool suggest, const std::string& keywords_path) {
  sydra::ScanResult scan = Scan(o);
  const fs::path out = EnsureOutDir(o.out);
  if (!o.rules.empty()) {
    const sydra::RuleSet rules = sydra::LoadRules(o.rules);
    for (const auto& w : rules.warnings()) {
      spdlog::warn("{}:{}: {}", o.rules, w.line, w.message);
    }
    const sydra::MappingCoverage coverage = sydra::ComputeCoverage(scan.files, rules);
    sydra::WriteTextFile(out / "coverage.csv", sydra::CoverageCsv(coverage));
    sydra::WriteTextFile(out / "unmapped.txt", sydra::UnmappedListing(coverage));
    std::cout << coverage.mapped << " of " << coverage.total << " files mapped, "
              << coverage.detected() << " of " << sydra::kReferenceSubsystemCount
              << " subsystems detected\n";
  } else if (!suggest) {
    throw sydra::Error(sydra::Stage::kConfig, "--rules",
                       "map needs --rules, --suggest, or both");
  }
  if (suggest) {
    const sydra::KeywordTable keywords =
        keywords_path.empty()
            ? sydra::DefaultKeywordTable()
            : sydra::ParseKeywordTable(
                  sydra::ReadTextFile(keywords_path, sydra::Stage::kConfig));
    const auto suggestions = sydra::SuggestRules(scan.files, keywords);
    sydra::WriteTextFile(out / "suggested.rules",
                         "# Suggested rules; review before use.\n" +
                             sydra::FormatRules(suggestions));
    std::cout << suggestions.size() << " rule suggestions written\n";
  }
  return 0;
}

int RunCohesion(const CommonOptions& o, const sydra::CohesionOptions& options) {
  sydra::ScanResult scan = Scan(o);
  std::vector<sydra::SubsystemId> tags(scan.files.size(), sydra::SubsystemId::kUNK);
  if (!o.rules.empty()) tags = sydra::MapFiles(scan.files, sydra::LoadRules(o.rules));
  const sydra::CohesionReport report = sydra::AnalyzeCohesion(scan.files, tags, options);
  const fs::path out = EnsureOutDir(o.out);
  sydra::WriteTextFile(out / "cohesion.csv", sydra::CohesionFoldersCsv(report));
  sydra::WriteTextFile(out / "cohesion.txt", sydra::CohesionSummary(report));
  std::cout << sydra::CohesionSummary(report);
  return 0;
}

int RunAggregate(const std::string& manifest, const std::string& out_dir,
                 const sydra::EmergentOptions& options) {
  std::vector<sydra::ArchModel> models;
  for (const fs::path& p : sydra::ReadCorpusManifest(manifest)) {
    models.push_back(sydra::LoadModelFile(p));
  }
  const sydra::PresenceMatrix presence = sydra::SubsystemPresence(models);
  const auto frequency = sydra::CouplingFrequency(models);
  const sydra::EmergentResult emergent = sydra::EmergentTiers(models, options);
  for (const auto& w : emergent.warnings) spdlog::warn("{}", w);

  const fs::path out = EnsureOutDir(out_dir);
  sydra::WriteTextFile(out / "presence.csv", sydra::PresenceCsv(presence));
  sydra::WriteTextFile(out / "frequency.csv", sydra::FrequencyCsv(frequency));
  sydra::WriteTextFile(out / "emergent.json",
                       sydra::ExportEmergentJson(emergent.architecture));
  const fs::path model_dir = out / "models";
  fs::create_directories(model_dir);
  for (sydra::ArchModel& m : models) {
    m.emergent = emergent.architecture;
    sydra::WriteTextFile(model_dir / sydra::ModelFileName(m.engine_name),
                         sydra::ExportModelJson(m));
  }
  const std::size_t min_detected = sydra::TaxonomyCoverageCount(0.75);
  std::cout << models.size() << " models; "
            << sydra::FormatDouble(100.0 * presence.ShareAtLeast(min_detected))
            << "% detect at least " << min_detected << " subsystems\n";
  return 0;
}

int RunExport(const std::string& model_path, const std::string& out_dir,
              const std::string& level) {
  const sydra::ArchModel model = sydra::LoadModelFile(model_path);
  const fs::path out = EnsureOutDir(out_dir);
  if (level == "subsystem") {
    sydra::WriteTextFile(out / "subsystem_graph.dot",
                         sydra::ExportDot(model.subsystem_graph, &model.metrics));
  } else if (level == "clustered") {
    sydra::WriteTextFile(out / "clustered_graph.dot", sydra::ExportClusteredDot(model));
  } else {
    sydra::FileGraph graph;
    for (const auto& f : model.files) graph.nodes.push_back({f.id, f.path, f.kind});
    graph.edges = model.file_edges;
    sydra::WriteTextFile(out / "include_graph.dot", sydra::ExportDot(graph));
  }
  return 0;
}

int RunServe(const std::string& dir, const std::string& host, int port) {
  if (!fs::is_directory(dir)) {
    throw sydra::Error(sydra::Stage::kConfig, dir, "not a directory");
  }
  httplib::Server server;
  server.set_file_extension_and_mimetype_mapping("json", "application/json");
  if (!server.set_mount_point("/", dir)) {
    throw sydra::Error(sydra::Stage::kConfig, dir, "cannot serve directory");
  }
  std::cout << "serving " << dir << " on http://" << host << ':' << port << "/\n"
            << std::flush;
  if (!server.listen(host, port)) {
    throw sydra::Error(sydra::Stage::kConfig, host + ":" + std::to_string(port),
                       "cannot listen");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  ConfigureLogging();

  CLI::App app{"Recover subsystem-level architecture from C/C++ source trees"};
  app.set_version_flag("--version", std::string(sydra::ToolVersion()));
  app.require_subcommand(1);

  CommonOptions common;

  auto* extract = app.add_subcommand("extract", "Build the file include graph");
  AddRootOptions(extract, common);
  extract->add_option("--include-path", common.include_paths,
                      "Include search directory (repeatable)");
  extract->add_option("--out", common.out, "Output directory")->required();
  extract->add_option("--jobs", common.jobs, "Worker threads (0 = all cores)");

  bool suggest = false;
  std::string keywords_path;
  auto* map = app.add_subcommand("map", "Map files to subsystems, report coverage");
  AddRootOptions(map, common);
  map->add_option("--rules", common.rules, "Rules file");
  map->add_option("--out", common.out, "Output directory")->required();
  map->add_flag("--suggest", suggest, "Write keyword-based rule suggestions");
  map->add_option("--keywords", keywords_path, "Keyword table for --suggest");

  sydra::RunConfig run;
  auto* analyze = app.add_subcommand("analyze", "Run the whole pipeline for one engine");
  AddRootOptions(analyze, common);
  analyze->add_option("--rules", common.rules, "Rules file")->required();
  analyze->add_option("--include-path", common.include_paths,
                      "Include search directory (repeatable)");
  analyze->add_option("--engine-name", run.engine_name, "Engine name in the model");
  analyze->add_option("--commit", run.commit_ref, "Commit the tree was taken from");
  analyze->add_option("--out", common.out, "Output directory")->required();
  analyze->add_flag("--include-unmapped", run.include_unmapped,
                    "Keep UNK as a pseudo-subsystem");
  analyze->add_option("--jobs", common.jobs, "Worker threads (0 = all cores)");
  bool raw_betweenness = false;
  analyze->add_flag("--raw-betweenness", raw_betweenness,
                    "Label the subsystem DOT with raw instead of normalized betweenness");
  bool no_file_betweenness = false;
  analyze->add_flag("--no-file-betweenness", no_file_betweenness,
                    "Skip file-level betweenness");

  sydra::CohesionOptions cohesion_options;
  analyze->add_option("--host-depth", cohesion_options.host_depth,
                      "Leading folders that identify a dispersion host");
  analyze->add_option("--dispersion-exclude", cohesion_options.dispersion_excludes,
                      "Glob of files ignored by dispersion (repeatable)");

  auto* cohesion = app.add_subcommand("cohesion", "Folder structure cohesion report");
  AddRootOptions(cohesion, common);
  cohesion->add_option("--rules", common.rules, "Rules file");
  cohesion->add_option("--out", common.out, "Output directory")->required();
  cohesion->add_option("--host-depth", cohesion_options.host_depth,
                       "Leading folders that identify a dispersion host");
  cohesion->add_option("--dispersion-exclude", cohesion_options.dispersion_excludes,
                       "Glob of files ignored by dispersion (repeatable)");

  std::string corpus;
  sydra::EmergentOptions emergent_options;
  std::optional<std::size_t> threshold;
  std::optional<std::size_t> max_edges;
  auto* aggregate = app.add_subcommand("aggregate", "Combine models into corpus statistics");
  aggregate->add_option("--corpus", corpus, "Manifest listing model files")->required();
  aggregate->add_option("--out", common.out, "Output directory")->required();
  aggregate->add_option("--k-inner", emergent_options.k_inner, "Inner core size")
      ->check(CLI::PositiveNumber);
  aggregate->add_option("--threshold", threshold,
                        "Minimum engine count for a frequent pair");
  aggregate->add_option("--max-edges", max_edges, "Cap on selected frequent pairs");

  std::string model_path;
  std::string level = "subsystem";
  auto* exporter = app.add_subcommand("export", "Render a model as Graphviz DOT");
  exporter->add_option("--model", model_path, "Model file (.sydra.json)")->required();
  exporter->add_option("--out", common.out, "Output directory")->required();
  exporter->add_option("--level", level, "file, subsystem or clustered")
      ->check(CLI::IsMember({"file", "subsystem", "clustered"}));

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Serve an output directory over HTTP");
  serve->add_option("--out", common.out, "Directory to serve")->required();
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port");

  CLI11_PARSE(app, argc, argv);

  try {
    if (extract->parsed()) return RunExtract(common);
    if (map->parsed()) return RunMap(common, suggest, keywords_path);
    if (cohesion->parsed()) return RunCohesion(common, cohesion_options);
    if (aggregate->parsed()) {
      emergent_options.threshold = threshold;
      emergent_options.max_edges = max_edges;
      return RunAggregate(corpus, common.out, emergent_options);
    }
    if (exporter->parsed()) return RunExport(model_path, common.out, level);
    if (serve->parsed()) return RunServe(common.out, host, port);
    if (analyze->parsed()) {
      run.root = common.root;
      run.rules_path = common.rules;
      run.include_paths = common.include_paths;
      run.excludes = common.excludes;
      run.output_dir = common.out;
      run.workers = common.jobs;
      run.normalize_betweenness = !raw_betweenness;
      run.file_betweenness = !no_file_betweenness;
      run.cohesion = cohesion_options;
      const sydra::PipelineResult result = sydra::RunPipeline(run);
      LogDiagnostics(result.diagnostics);
      for (const auto& p : result.written) std::cout << p.generic_string() << '\n';
      return 0;
    }
  } catch (const sydra::Error& e) {
    spdlog::error("{}", e.what());
    return 1;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
