#ifndef SYDRA_COHESION_ANALYZER_H_
#define SYDRA_COHESION_ANALYZER_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sydra/include_extractor.h"
#include "sydra/taxonomy.h"

namespace sydra {

struct FolderStats {
  std::string folder;  // "" is the scanned root
  std::size_t direct_files = 0;
  std::size_t recursive_files = 0;
  std::size_t depth = 0;
  std::size_t children = 0;  // direct subfolders

  friend bool operator==(const FolderStats&, const FolderStats&) = default;
};

// One record per distinct directory on any path, root included, sorted by
// folder path.
std::vector<FolderStats> ComputeFolderStats(std::span<const SourceFile> files);

// A folder whose child folder carries the same name, e.g. AzCore/AzCore.
struct RepeatedNameFlag {
  std::string parent;
  std::string child;
  std::vector<std::string> files;  // everything under `child`

  friend bool operator==(const RepeatedNameFlag&,
                         const RepeatedNameFlag&) = default;
};

struct CohesionOptions {
  // Number of leading directory segments that name a file's host folder for
  // dispersion. 1 means top-level directories.
  std::size_t host_depth = 1;
  // Files matching any of these globs do not count towards dispersion.
  std::vector<std::string> dispersion_excludes;
};

struct CohesionReport {
  std::size_t max_depth = 0;
  // |covering set| / |top-level subtrees|, where the covering set is the
  // fewest top-level subtrees (largest first) holding >= 50% of the files.
  double concentration = 1.0;
  std::vector<std::string> covering_set;
  std::size_t top_level_count = 0;
  // Distinct host folders holding files of each present subsystem (UNK
  // excluded).
  std::map<SubsystemId, std::size_t> dispersion;
  std::map<SubsystemId, std::vector<std::string>> hosts;
  std::vector<RepeatedNameFlag> repeated_names;
  std::vector<FolderStats> folders;
};

// `tags` is indexed by FileId and must cover every file.
CohesionReport AnalyzeCohesion(std::span<const SourceFile> files,
                               std::span<const SubsystemId> tags,
                               const CohesionOptions& options = {});

}  // namespace sydra

#endif  // SYDRA_COHESION_ANALYZER_H_
