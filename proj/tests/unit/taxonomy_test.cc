#include "sydra/taxonomy.h"

#include <gtest/gtest.h>

#include <set>
#include <string>

namespace sydra {
namespace {

TEST(TaxonomyTest, SixteenReferenceCodesPlusUnmapped) {
  const std::set<std::string> expected{"AUD", "COR", "DEB", "EDI", "FES", "GMP",
                                       "HID", "LLR", "OMP", "PHY", "PLA", "RES",
                                       "SDK", "SKA", "SGC", "VFX"};
  std::set<std::string> codes;
  for (SubsystemId id : ReferenceSubsystems()) codes.emplace(Code(id));
  EXPECT_EQ(codes, expected);
  EXPECT_EQ(AllSubsystems().back(), SubsystemId::kUNK);
  EXPECT_EQ(Code(SubsystemId::kUNK), "UNK");
}

TEST(TaxonomyTest, NamesFollowTheReferenceTable) {
  EXPECT_EQ(Describe(SubsystemId::kAUD).name, "Audio");
  EXPECT_EQ(Describe(SubsystemId::kLLR).name, "Low-Level Renderer");
  EXPECT_EQ(Describe(SubsystemId::kSKA).name, "Skeletal Animation");
  EXPECT_EQ(Describe(SubsystemId::kSKA).description,
            "Manages animation state tree, inverse kinematics (IK), and mesh "
            "rendering.");
}

TEST(TaxonomyTest, ParseRoundTripsEveryCode) {
  for (SubsystemId id : AllSubsystems()) {
    EXPECT_EQ(ParseSubsystemId(Code(id)), id);
  }
  EXPECT_FALSE(ParseSubsystemId("XYZ"));
  EXPECT_FALSE(ParseSubsystemId("aud"));
  EXPECT_FALSE(ParseSubsystemId(""));
}

TEST(TaxonomyTest, IndexIsDense) {
  for (std::size_t i = 0; i < kSubsystemCount; ++i) {
    EXPECT_EQ(Index(AllSubsystems()[i]), i);
  }
}

}  // namespace
}  // namespace sydra
