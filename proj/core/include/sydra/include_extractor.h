#ifndef SYDRA_INCLUDE_EXTRACTOR_H_
#define SYDRA_INCLUDE_EXTRACTOR_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace sydra {

using FileId = std::uint32_t;

enum class FileKind { kHeader, kImplementation, kOther };

std::string_view FileKindName(FileKind kind);
std::optional<FileKind> ParseFileKind(std::string_view name);

// Classifies by extension (without the dot, case-insensitive).
FileKind ClassifyExtension(std::string_view extension);

struct SourceFile {
  FileId id = 0;
  std::string path;  // tree-relative, '/'-separated
  FileKind kind = FileKind::kOther;

  friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

// One `path:line: code message` record. Line 0 means "whole file".
struct Diagnostic {
  std::string path;
  std::size_t line = 0;
  std::string code;
  std::string message;

  std::string Format() const;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// ---------------------------------------------------------------------------
// Scanning

inline constexpr std::string_view kDefaultExtensions[] = {
    "h", "hpp", "hh", "hxx", "inl", "c", "cc", "cpp", "cxx", "mm"};

struct ScanOptions {
  std::vector<std::string> excludes;  // globs over tree-relative paths
  std::vector<std::string> extensions{std::begin(kDefaultExtensions),
                                      std::end(kDefaultExtensions)};
};

struct ScanResult {
  std::vector<SourceFile> files;  // ids contiguous from 0, lexicographic
  std::vector<Diagnostic> warnings;
};

// Walks `root` without following symbolic links. Throws Error(kScan) when the
// root is missing or unreadable; unreadable files are skipped with a warning.
ScanResult ScanTree(const std::filesystem::path& root,
                    const ScanOptions& options = {});

// Builds the SourceFile set for already-known relative paths (tests, tools
// that list files themselves). Paths are normalized, filtered and sorted the
// same way ScanTree does.
std::vector<SourceFile> MakeSourceFiles(std::span<const std::string> paths,
                                        const ScanOptions& options = {});

// ---------------------------------------------------------------------------
// Parsing

enum class IncludeStyle { kQuoted, kAngled };

struct IncludeDirective {
  std::string spelled_path;
  IncludeStyle style = IncludeStyle::kQuoted;
  std::size_t line = 0;  // 1-based

  friend bool operator==(const IncludeDirective&,
                         const IncludeDirective&) = default;
};

struct ParseIssue {
  std::size_t line = 0;
  std::string code;  // "unterminated-include", "computed-include", ...
  std::string message;

  friend bool operator==(const ParseIssue&, const ParseIssue&) = default;
};

struct ParseResult {
  std::vector<IncludeDirective> directives;
  std::vector<ParseIssue> issues;
};

// Extracts #include directives from C/C++ source text. Directives inside
// comments are ignored; directives in every preprocessor branch are kept.
ParseResult ParseIncludes(std::string_view content);

// ---------------------------------------------------------------------------
// Resolution

enum class ResolutionStatus { kResolved, kExternal, kAmbiguous };

struct ResolutionResult {
  ResolutionStatus status = ResolutionStatus::kExternal;
  // FileId for kResolved/kAmbiguous; the spelled path for kExternal.
  std::variant<FileId, std::string> target;
  // True when the target was found only through suffix matching.
  bool via_suffix = false;
  // Suffix candidates considered (only populated for kAmbiguous).
  std::vector<FileId> candidates;

  bool has_file() const { return std::holds_alternative<FileId>(target); }
  FileId file() const { return std::get<FileId>(target); }
  const std::string& external_name() const {
    return std::get<std::string>(target);
  }
};

// Path lookup over one scan.
class PathIndex {
 public:
  explicit PathIndex(std::span<const SourceFile> files);

  std::optional<FileId> Find(std::string_view path) const;

  // Files whose path equals `suffix` or ends with "/" + suffix, ascending.
  std::vector<FileId> SuffixMatches(std::string_view suffix) const;

  const SourceFile& file(FileId id) const { return files_[id]; }

 private:
  std::span<const SourceFile> files_;
  std::unordered_map<std::string_view, FileId> by_path_;
  std::unordered_map<std::string_view, std::vector<FileId>> by_basename_;
};

// Quoted includes search the including file's directory, then
// `include_paths` in order; angled includes search `include_paths` only.
// Suffix matching over the whole tree is the fallback when both fail.
// `include_paths` are tree-relative directories ("" is the root).
ResolutionResult ResolveInclude(const IncludeDirective& directive,
                                const SourceFile& from,
                                std::span<const std::string> include_paths,
                                const PathIndex& index);

// ---------------------------------------------------------------------------
// File graph

struct FileEdge {
  FileId from = 0;
  FileId to = 0;

  friend auto operator<=>(const FileEdge&, const FileEdge&) = default;
};

struct FileGraph {
  std::vector<SourceFile> nodes;
  std::vector<FileEdge> edges;              // sorted, unique, no self-loops
  std::vector<std::string> external_refs;   // sorted multiset

  friend bool operator==(const FileGraph&, const FileGraph&) = default;
};

struct BuildOptions {
  std::vector<std::string> include_paths;
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct BuildResult {
  FileGraph graph;
  std::vector<Diagnostic> diagnostics;
};

// Returns file content, or nullopt when the file cannot be read.
using ContentLoader =
    std::function<std::optional<std::string>(const SourceFile&)>;

BuildResult BuildFileGraph(std::vector<SourceFile> files,
                           const ContentLoader& load,
                           const BuildOptions& options = {});

BuildResult BuildFileGraph(const std::filesystem::path& root,
                           std::vector<SourceFile> files,
                           const BuildOptions& options = {});

std::optional<std::string> ReadFileBytes(const std::filesystem::path& path);

}  // namespace sydra

#endif  // SYDRA_INCLUDE_EXTRACTOR_H_
