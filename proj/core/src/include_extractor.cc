#include "sydra/include_extractor.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>

#include "sydra/error.h"
#include "sydra/glob.h"
#include "sydra/path_util.h"

namespace sydra {
namespace fs = std::filesystem;

namespace {

constexpr std::string_view kHeaderExtensions[] = {"h",   "hh",  "hpp", "hxx",
                                                  "h++", "inl", "ipp", "tpp"};
constexpr std::string_view kImplementationExtensions[] = {
    "c", "cc", "cpp", "cxx", "c++", "m", "mm"};

std::string_view ExtensionOf(std::string_view path) {
  const std::string_view base = BaseName(path);
  const auto dot = base.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return {};
  return base.substr(dot + 1);
}

class FileFilter {
 public:
  explicit FileFilter(const ScanOptions& options) {
    for (const auto& ext : options.extensions) {
      std::string_view e = ext;
      if (e.starts_with('.')) e.remove_prefix(1);
      extensions_.insert(AsciiLower(e));
    }
    excludes_.reserve(options.excludes.size());
    for (const auto& pattern : options.excludes) excludes_.emplace_back(pattern);
  }

  bool Accepts(std::string_view relative_path) const {
    if (!extensions_.contains(AsciiLower(ExtensionOf(relative_path)))) {
      return false;
    }
    return std::none_of(excludes_.begin(), excludes_.end(),
                        [&](const Glob& g) { return g.Matches(relative_path); });
  }

 private:
  std::set<std::string, std::less<>> extensions_;
  std::vector<Glob> excludes_;
};

std::vector<SourceFile> Finalize(std::vector<std::string> paths) {
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  std::vector<SourceFile> files;
  files.reserve(paths.size());
  for (auto& path : paths) {
    const FileKind kind = ClassifyExtension(ExtensionOf(path));
    files.push_back(SourceFile{static_cast<FileId>(files.size()),
                               std::move(path), kind});
  }
  return files;
}

void Walk(const fs::path& root, const fs::path& dir, const FileFilter& filter,
          std::vector<std::string>& accepted,
          std::vector<Diagnostic>& warnings) {
  std::error_code ec;
  fs::directory_iterator it(dir, ec);
  if (ec) {
    if (dir == root) {
      throw Error(Stage::kScan, root.string(),
                  "cannot read directory: " + ec.message());
    }
    warnings.push_back(Diagnostic{
        fs::relative(dir, root).generic_string(), 0, "unreadable-directory",
        ec.message()});
    return;
  }
  for (; it != fs::directory_iterator(); it.increment(ec)) {
    if (ec) break;
    const fs::directory_entry& entry = *it;
    std::error_code status_ec;
    const fs::file_status status = entry.symlink_status(status_ec);
    if (status_ec || fs::is_symlink(status)) continue;
    if (fs::is_directory(status)) {
      Walk(root, entry.path(), filter, accepted, warnings);
      continue;
    }
    if (!fs::is_regular_file(status)) continue;
    const std::string relative =
        fs::relative(entry.path(), root).generic_string();
    if (!filter.Accepts(relative)) continue;
    std::ifstream probe(entry.path(), std::ios::binary);
    if (!probe) {
      warnings.push_back(
          Diagnostic{relative, 0, "unreadable-file", "file skipped"});
      continue;
    }
    accepted.push_back(relative);
  }
  if (ec) {
    warnings.push_back(Diagnostic{fs::relative(dir, root).generic_string(), 0,
                                  "unreadable-directory", ec.message()});
  }
}

std::vector<std::string> NormalizeIncludePaths(
    std::span<const std::string> include_paths) {
  std::vector<std::string> out;
  out.reserve(include_paths.size());
  for (const auto& p : include_paths) {
    auto normalized = NormalizeRelative(p);
    if (!normalized) {
      throw Error(Stage::kConfig, p,
                  "include path must be relative to the scanned root");
    }
    out.push_back(std::move(*normalized));
  }
  return out;
}

struct FileOutcome {
  std::vector<FileId> targets;
  std::vector<std::string> externals;
  std::vector<Diagnostic> diagnostics;
};

FileOutcome ProcessFile(const SourceFile& file, const ContentLoader& load,
                        std::span<const std::string> include_paths,
                        const PathIndex& index) {
  FileOutcome out;
  const std::optional<std::string> content = load(file);
  if (!content) {
    out.diagnostics.push_back(
        Diagnostic{file.path, 0, "unreadable-file", "file skipped"});
    return out;
  }
  ParseResult parsed = ParseIncludes(*content);
  for (auto& issue : parsed.issues) {
    out.diagnostics.push_back(Diagnostic{file.path, issue.line,
                                         std::move(issue.code),
                                         std::move(issue.message)});
  }
  for (const IncludeDirective& directive : parsed.directives) {
    ResolutionResult r = ResolveInclude(directive, file, include_paths, index);
    switch (r.status) {
      case ResolutionStatus::kExternal:
        out.externals.push_back(r.external_name());
        break;
      case ResolutionStatus::kAmbiguous: {
        std::string message = "\"" + directive.spelled_path + "\" matches";
        for (FileId c : r.candidates) message += " " + index.file(c).path;
        message += "; chose " + index.file(r.file()).path;
        out.diagnostics.push_back(Diagnostic{file.path, directive.line,
                                             "ambiguous-include", message});
        out.targets.push_back(r.file());
        break;
      }
      case ResolutionStatus::kResolved:
        if (r.via_suffix) {
          out.diagnostics.push_back(Diagnostic{
              file.path, directive.line, "suffix-include",
              "\"" + directive.spelled_path + "\" resolved by suffix to " +
                  index.file(r.file()).path});
        }
        out.targets.push_back(r.file());
        break;
    }
  }
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
  return out;
}

}  // namespace

std::string_view FileKindName(FileKind kind) {
  switch (kind) {
    case FileKind::kHeader:
      return "header";
    case FileKind::kImplementation:
      return "implementation";
    case FileKind::kOther:
      break;
  }
  return "other";
}

std::optional<FileKind> ParseFileKind(std::string_view name) {
  if (name == "header") return FileKind::kHeader;
  if (name == "implementation") return FileKind::kImplementation;
  if (name == "other") return FileKind::kOther;
  return std::nullopt;
}

FileKind ClassifyExtension(std::string_view extension) {
  const std::string lower = AsciiLower(extension);
  for (std::string_view e : kHeaderExtensions) {
    if (lower == e) return FileKind::kHeader;
  }
  for (std::string_view e : kImplementationExtensions) {
    if (lower == e) return FileKind::kImplementation;
  }
  return FileKind::kOther;
}

std::string Diagnostic::Format() const {
  std::ostringstream os;
  os << path << ':' << line << ": " << code << ' ' << message;
  return os.str();
}

ScanResult ScanTree(const fs::path& root, const ScanOptions& options) {
  std::error_code ec;
  const fs::file_status status = fs::status(root, ec);
  if (ec || !fs::is_directory(status)) {
    throw Error(Stage::kScan, root.string(),
                "root does not exist or is not a directory");
  }
  FileFilter filter(options);
  std::vector<std::string> accepted;
  ScanResult result;
  Walk(root, root, filter, accepted, result.warnings);
  std::sort(result.warnings.begin(), result.warnings.end(),
            [](const Diagnostic& a, const Diagnostic& b) {
              return a.path < b.path;
            });
  result.files = Finalize(std::move(accepted));
  return result;
}

std::vector<SourceFile> MakeSourceFiles(std::span<const std::string> paths,
                                        const ScanOptions& options) {
  FileFilter filter(options);
  std::vector<std::string> accepted;
  for (const auto& raw : paths) {
    auto normalized = NormalizeRelative(raw);
    if (!normalized || normalized->empty()) {
      throw Error(Stage::kScan, raw, "not a tree-relative file path");
    }
    if (filter.Accepts(*normalized)) accepted.push_back(std::move(*normalized));
  }
  return Finalize(std::move(accepted));
}

PathIndex::PathIndex(std::span<const SourceFile> files) : files_(files) {
  by_path_.reserve(files.size());
  for (const SourceFile& f : files) {
    by_path_.emplace(f.path, f.id);
    by_basename_[BaseName(f.path)].push_back(f.id);
  }
}

std::optional<FileId> PathIndex::Find(std::string_view path) const {
  auto it = by_path_.find(path);
  if (it == by_path_.end()) return std::nullopt;
  return it->second;
}

std::vector<FileId> PathIndex::SuffixMatches(std::string_view suffix) const {
  std::vector<FileId> out;
  auto it = by_basename_.find(BaseName(suffix));
  if (it == by_basename_.end()) return out;
  for (FileId id : it->second) {
    if (HasPathSuffix(files_[id].path, suffix)) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ResolutionResult ResolveInclude(const IncludeDirective& directive,
                                const SourceFile& from,
                                std::span<const std::string> include_paths,
                                const PathIndex& index) {
  auto try_dir = [&](std::string_view dir) -> std::optional<FileId> {
    auto candidate = NormalizeRelative(JoinPath(dir, directive.spelled_path));
    if (!candidate) return std::nullopt;
    return index.Find(*candidate);
  };

  if (directive.style == IncludeStyle::kQuoted) {
    if (auto hit = try_dir(DirName(from.path))) {
      return ResolutionResult{ResolutionStatus::kResolved, *hit, false, {}};
    }
  }
  for (const std::string& dir : include_paths) {
    if (auto hit = try_dir(dir)) {
      return ResolutionResult{ResolutionStatus::kResolved, *hit, false, {}};
    }
  }

  // Fallback: match the spelled path against path tails. Leading "./" and
  // "../" segments carry no information once search-order lookup failed.
  std::string_view tail = directive.spelled_path;
  while (tail.starts_with("./") || tail.starts_with("../")) {
    tail.remove_prefix(tail.find('/') + 1);
  }
  std::vector<FileId> matches;
  if (auto normalized = NormalizeRelative(tail); normalized && !normalized->empty()) {
    matches = index.SuffixMatches(*normalized);
  }
  if (matches.empty()) {
    return ResolutionResult{ResolutionStatus::kExternal,
                            directive.spelled_path, false, {}};
  }
  if (matches.size() == 1) {
    return ResolutionResult{ResolutionStatus::kResolved, matches.front(), true,
                            {}};
  }
  // Ids follow lexicographic path order, so the smallest id is the
  // lexicographically smallest path.
  const FileId chosen = matches.front();
  return ResolutionResult{ResolutionStatus::kAmbiguous, chosen, true,
                          std::move(matches)};
}

BuildResult BuildFileGraph(std::vector<SourceFile> files,
                           const ContentLoader& load,
                           const BuildOptions& options) {
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (files[i].id != i) {
      throw Error(Stage::kParse, files[i].path,
                  "file ids must be contiguous from 0 in path order");
    }
  }
  const std::vector<std::string> include_paths =
      NormalizeIncludePaths(options.include_paths);
  const PathIndex index(files);

  std::vector<FileOutcome> outcomes(files.size());
  unsigned workers = options.workers != 0
                         ? options.workers
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(files.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      outcomes[i] = ProcessFile(files[i], load, include_paths, index);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Single-threaded merge in file id order.
  BuildResult result;
  std::set<FileEdge> edges;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    FileOutcome& o = outcomes[i];
    for (FileId target : o.targets) {
      if (target != i) edges.insert(FileEdge{static_cast<FileId>(i), target});
    }
    std::move(o.externals.begin(), o.externals.end(),
              std::back_inserter(result.graph.external_refs));
    std::move(o.diagnostics.begin(), o.diagnostics.end(),
              std::back_inserter(result.diagnostics));
  }
  result.graph.edges.assign(edges.begin(), edges.end());
  std::sort(result.graph.external_refs.begin(),
            result.graph.external_refs.end());
  result.graph.nodes = std::move(files);
  return result;
}

BuildResult BuildFileGraph(const fs::path& root, std::vector<SourceFile> files,
                           const BuildOptions& options) {
  ContentLoader load = [&root](const SourceFile& f) {
    return ReadFileBytes(root / fs::path(f.path));
  };
  return BuildFileGraph(std::move(files), load, options);
}

std::optional<std::string> ReadFileBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return std::move(buffer).str();
}

}  // namespace sydra
