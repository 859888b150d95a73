#include "sydra/cohesion_analyzer.h"

#include <algorithm>
#include <set>
#include <string_view>

#include "sydra/error.h"
#include "sydra/glob.h"
#include "sydra/path_util.h"

namespace sydra {
namespace {

constexpr std::string_view kRootBucket = ".";

std::size_t Depth(std::string_view folder) {
  return folder.empty() ? 0 : SplitSegments(folder).size();
}

// Top-level subtree of a file; files at the root form their own bucket.
std::string TopLevel(std::string_view path) {
  const auto slash = path.find('/');
  if (slash == std::string_view::npos) return std::string(kRootBucket);
  return std::string(path.substr(0, slash));
}

std::string Host(std::string_view path, std::size_t depth) {
  const auto segments = SplitSegments(DirName(path));
  if (segments.empty()) return std::string(kRootBucket);
  std::string host;
  for (std::size_t i = 0; i < std::min(depth, segments.size()); ++i) {
    if (!host.empty()) host += '/';
    host += segments[i];
  }
  return host;
}

}  // namespace

std::vector<FolderStats> ComputeFolderStats(std::span<const SourceFile> files) {
  std::map<std::string, FolderStats> by_folder;
  auto touch = [&](std::string_view folder) -> FolderStats& {
    auto [it, inserted] = by_folder.try_emplace(std::string(folder));
    if (inserted) {
      it->second.folder = std::string(folder);
      it->second.depth = Depth(folder);
    }
    return it->second;
  };

  for (const SourceFile& f : files) {
    std::string_view dir = DirName(f.path);
    ++touch(dir).direct_files;
    for (;;) {
      ++touch(dir).recursive_files;
      if (dir.empty()) break;
      dir = DirName(dir);
    }
  }
  for (auto& [folder, stats] : by_folder) {
    if (folder.empty()) continue;
    ++by_folder.at(std::string(DirName(folder))).children;
  }
  std::vector<FolderStats> out;
  out.reserve(by_folder.size());
  for (auto& [_, stats] : by_folder) out.push_back(std::move(stats));
  return out;
}

CohesionReport AnalyzeCohesion(std::span<const SourceFile> files,
                               std::span<const SubsystemId> tags,
                               const CohesionOptions& options) {
  if (tags.size() < files.size()) {
    throw Error(Stage::kCohesion, "tags", "tag count does not match file count");
  }
  if (options.host_depth < 1) {
    throw Error(Stage::kCohesion, "host_depth", "must be at least 1");
  }

  CohesionReport report;
  report.folders = ComputeFolderStats(files);
  for (const FolderStats& s : report.folders) {
    report.max_depth = std::max(report.max_depth, s.depth);
  }

  // Concentration over disjoint top-level subtrees.
  std::map<std::string, std::size_t> top_level;
  for (const SourceFile& f : files) ++top_level[TopLevel(f.path)];
  report.top_level_count = top_level.size();
  if (!files.empty()) {
    std::vector<std::pair<std::string, std::size_t>> ranked(top_level.begin(),
                                                            top_level.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::size_t covered = 0;
    for (const auto& [name, count] : ranked) {
      if (2 * covered >= files.size()) break;
      report.covering_set.push_back(name);
      covered += count;
    }
    report.concentration = static_cast<double>(report.covering_set.size()) /
                           static_cast<double>(report.top_level_count);
  }

  // Dispersion.
  std::vector<Glob> excludes;
  for (const auto& p : options.dispersion_excludes) excludes.emplace_back(p);
  std::map<SubsystemId, std::set<std::string>> hosts;
  for (const SourceFile& f : files) {
    const SubsystemId tag = tags[f.id];
    if (tag == SubsystemId::kUNK) continue;
    if (std::any_of(excludes.begin(), excludes.end(),
                    [&](const Glob& g) { return g.Matches(f.path); })) {
      continue;
    }
    hosts[tag].insert(Host(f.path, options.host_depth));
  }
  for (auto& [tag, set] : hosts) {
    report.dispersion[tag] = set.size();
    report.hosts[tag].assign(set.begin(), set.end());
  }

  // Repeated-name nesting.
  for (const FolderStats& s : report.folders) {
    if (s.folder.empty()) continue;
    const std::string_view parent = DirName(s.folder);
    if (parent.empty() || BaseName(parent) != BaseName(s.folder)) continue;
    RepeatedNameFlag flag{std::string(parent), s.folder, {}};
    const std::string prefix = s.folder + "/";
    for (const SourceFile& f : files) {
      if (f.path.starts_with(prefix)) flag.files.push_back(f.path);
    }
    std::sort(flag.files.begin(), flag.files.end());
    report.repeated_names.push_back(std::move(flag));
  }
  return report;
}

}  // namespace sydra
