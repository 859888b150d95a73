#include "sydra/error.h"

namespace sydra {

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kConfig:
      return "config";
    case Stage::kScan:
      return "scan";
    case Stage::kParse:
      return "parse";
    case Stage::kRules:
      return "rules";
    case Stage::kMap:
      return "map";
    case Stage::kLift:
      return "lift";
    case Stage::kMetrics:
      return "metrics";
    case Stage::kAggregate:
      return "aggregate";
    case Stage::kCohesion:
      return "cohesion";
    case Stage::kExport:
      return "export";
    case Stage::kImport:
      return "import";
  }
  return "unknown";
}

Error::Error(Stage stage, std::string input, const std::string& message)
    : std::runtime_error(std::string(StageName(stage)) + ": " + input + ": " +
                         message),
      stage_(stage),
      input_(std::move(input)) {}

}  // namespace sydra
