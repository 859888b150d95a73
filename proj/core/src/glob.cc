#include "sydra/glob.h"

#include <vector>

namespace sydra {
namespace {

// Memoized matcher over (pattern index, path index). Patterns and paths are
// short, so the quadratic table is fine and keeps "**" from going exponential.
class Matcher {
 public:
  Matcher(std::string_view pattern, std::string_view path)
      : pattern_(pattern),
        path_(path),
        memo_((pattern.size() + 1) * (path.size() + 1), kUnknown) {}

  bool Run() { return Match(0, 0); }

 private:
  static constexpr signed char kUnknown = -1;

  bool Match(std::size_t p, std::size_t s) {
    signed char& slot = memo_[p * (path_.size() + 1) + s];
    if (slot == kUnknown) slot = Compute(p, s) ? 1 : 0;
    return slot == 1;
  }

  bool Compute(std::size_t p, std::size_t s) {
    if (p == pattern_.size()) return s == path_.size();
    const char c = pattern_[p];
    if (c == '*') {
      const bool double_star = p + 1 < pattern_.size() && pattern_[p + 1] == '*';
      if (double_star) {
        std::size_t next = p + 2;
        // "**/" may stand for zero directories.
        if (next < pattern_.size() && pattern_[next] == '/' &&
            (p == 0 || pattern_[p - 1] == '/') && Match(next + 1, s)) {
          return true;
        }
        for (std::size_t k = s; k <= path_.size(); ++k) {
          if (Match(next, k)) return true;
        }
        return false;
      }
      for (std::size_t k = s; k <= path_.size(); ++k) {
        if (Match(p + 1, k)) return true;
        if (k < path_.size() && path_[k] == '/') break;
      }
      return false;
    }
    if (s == path_.size()) return false;
    if (c == '?') return path_[s] != '/' && Match(p + 1, s + 1);
    return c == path_[s] && Match(p + 1, s + 1);
  }

  std::string_view pattern_;
  std::string_view path_;
  std::vector<signed char> memo_;
};

std::size_t LiteralPrefixLength(std::string_view pattern) {
  const auto pos = pattern.find_first_of("*?");
  return pos == std::string_view::npos ? pattern.size() : pos;
}

}  // namespace

Glob::Glob(std::string pattern)
    : pattern_(std::move(pattern)),
      literal_prefix_len_(LiteralPrefixLength(pattern_)) {}

bool Glob::Matches(std::string_view path) const {
  return GlobMatch(pattern_, path);
}

bool GlobMatch(std::string_view pattern, std::string_view path) {
  return Matcher(pattern, path).Run();
}

}  // namespace sydra
