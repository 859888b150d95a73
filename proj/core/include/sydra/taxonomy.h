#ifndef SYDRA_TAXONOMY_H_
#define SYDRA_TAXONOMY_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace sydra {

// The 16 runtime game engine subsystems plus UNK for files no rule maps.
// Enumerator order is the canonical order used in every serialized output.
enum class SubsystemId : unsigned char {
  kAUD,
  kCOR,
  kDEB,
  kEDI,
  kFES,
  kGMP,
  kHID,
  kLLR,
  kOMP,
  kPHY,
  kPLA,
  kRES,
  kSDK,
  kSKA,
  kSGC,
  kVFX,
  kUNK,
};

inline constexpr std::size_t kSubsystemCount = 17;
inline constexpr std::size_t kReferenceSubsystemCount = 16;

struct SubsystemInfo {
  SubsystemId id;
  std::string_view code;
  std::string_view name;
  std::string_view description;
};

const SubsystemInfo& Describe(SubsystemId id);

inline std::string_view Code(SubsystemId id) { return Describe(id).code; }

// Accepts the three-letter code, e.g. "AUD". Case-sensitive.
std::optional<SubsystemId> ParseSubsystemId(std::string_view code);

inline constexpr std::size_t Index(SubsystemId id) {
  return static_cast<std::size_t>(id);
}

// All 17 values, UNK last.
const std::array<SubsystemId, kSubsystemCount>& AllSubsystems();

// The 16 reference subsystems (UNK excluded).
const std::array<SubsystemId, kReferenceSubsystemCount>& ReferenceSubsystems();

}  // namespace sydra

#endif  // SYDRA_TAXONOMY_H_
