#ifndef SYDRA_MODEL_IO_H_
#define SYDRA_MODEL_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "sydra/emergent_architecture.h"
#include "sydra/graph_metrics.h"

namespace sydra {

inline constexpr std::string_view kModelSchemaVersion = "1";
inline constexpr std::string_view kModelFileExtension = ".sydra.json";

// Canonical UTF-8 model document. Keys appear in a fixed order (see
// docs/model-format.md), arrays are sorted, and the output ends with a
// newline, so equal models always serialize to identical bytes.
std::string ExportModelJson(const ArchModel& model);

// Inverse of ExportModelJson. Throws Error(kImport) naming the offending
// field when the document is malformed or internally inconsistent.
ArchModel ImportModelJson(std::string_view document);

ArchModel LoadModelFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

std::string ExportEmergentJson(const EmergentArchitecture& architecture);

}  // namespace sydra

#endif  // SYDRA_MODEL_IO_H_
