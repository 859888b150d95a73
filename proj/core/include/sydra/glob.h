#ifndef SYDRA_GLOB_H_
#define SYDRA_GLOB_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace sydra {

// Path glob over `/`-separated tree-relative paths.
//
//   ?    one character other than '/'
//   *    any run of characters other than '/'
//   **   any run of characters including '/'; "**/" may also match nothing,
//        so "a/**/b.h" matches "a/b.h"
//
// Every other character matches itself. Matching is case-sensitive and
// anchored at both ends.
class Glob {
 public:
  explicit Glob(std::string pattern);

  bool Matches(std::string_view path) const;

  const std::string& pattern() const { return pattern_; }

  // Number of characters before the first wildcard.
  std::size_t literal_prefix_len() const { return literal_prefix_len_; }

 private:
  std::string pattern_;
  std::size_t literal_prefix_len_;
};

bool GlobMatch(std::string_view pattern, std::string_view path);

}  // namespace sydra

#endif  // SYDRA_GLOB_H_
