#ifndef SYDRA_ERROR_H_
#define SYDRA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sydra {

// Pipeline stage that raised a fatal error. Shown as the first token of the
// error message so CLI users can tell which step failed.
enum class Stage {
  kConfig,
  kScan,
  kParse,
  kRules,
  kMap,
  kLift,
  kMetrics,
  kAggregate,
  kCohesion,
  kExport,
  kImport,
};

std::string_view StageName(Stage stage);

// Fatal error. Recoverable per-file problems are reported as diagnostics
// instead and never throw.
class Error : public std::runtime_error {
 public:
  Error(Stage stage, std::string input, const std::string& message);

  Stage stage() const { return stage_; }
  const std::string& input() const { return input_; }

 private:
  Stage stage_;
  std::string input_;
};

}  // namespace sydra

#endif  // SYDRA_ERROR_H_
