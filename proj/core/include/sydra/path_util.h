#ifndef SYDRA_PATH_UTIL_H_
#define SYDRA_PATH_UTIL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sydra {

// Lexically normalizes a tree-relative path: backslashes become '/', empty
// and "." segments are dropped, ".." pops a segment. Returns nullopt when the
// path is absolute or ".." escapes the root.
std::optional<std::string> NormalizeRelative(std::string_view path);

// "a/b/c.h" -> "a/b"; "c.h" -> "".
std::string_view DirName(std::string_view path);

// "a/b/c.h" -> "c.h".
std::string_view BaseName(std::string_view path);

// Joins two tree-relative fragments; either may be empty.
std::string JoinPath(std::string_view dir, std::string_view rest);

std::vector<std::string_view> SplitSegments(std::string_view path);

std::string AsciiLower(std::string_view text);

// True when `path` equals `suffix` or ends with "/" + suffix.
bool HasPathSuffix(std::string_view path, std::string_view suffix);

// Replaces invalid UTF-8 sequences with U+FFFD.
std::string SanitizeUtf8(std::string_view bytes);

}  // namespace sydra

#endif  // SYDRA_PATH_UTIL_H_
