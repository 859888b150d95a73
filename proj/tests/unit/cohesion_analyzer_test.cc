#include "sydra/cohesion_analyzer.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "sydra/subsystem_mapper.h"

namespace sydra {
namespace {

using S = SubsystemId;

struct Fixture {
  std::vector<SourceFile> files;
  std::vector<S> tags;
};

Fixture LoadFixture(const std::string& name) {
  Fixture f;
  f.files = ScanTree(std::string(SYDRA_FIXTURE_DIR) + "/" + name).files;
  f.tags = MapFiles(f.files, ParseRules(testing::ReadFile(
                                 std::string(SYDRA_FIXTURE_DIR) + "/" + name + ".rules")));
  return f;
}

const FolderStats* FindFolder(const std::vector<FolderStats>& v, std::string_view name) {
  for (const auto& f : v) {
    if (f.folder == name) return &f;
  }
  return nullptr;
}

TEST(FolderStatsTest, NestedCounts) {
  const auto files = MakeSourceFiles(std::vector<std::string>{"a/b/x.h", "a/y.h"});
  const auto stats = ComputeFolderStats(files);
  const FolderStats* a = FindFolder(stats, "a");
  const FolderStats* ab = FindFolder(stats, "a/b");
  ASSERT_TRUE(a && ab);
  EXPECT_EQ(a->direct_files, 1u);
  EXPECT_EQ(a->recursive_files, 2u);
  EXPECT_EQ(a->children, 1u);
  EXPECT_EQ(ab->direct_files, 1u);
  EXPECT_EQ(ab->recursive_files, 1u);
  EXPECT_EQ(ab->depth, 2u);
}

TEST(FolderStatsTest, FlatTree) {
  const auto files = MakeSourceFiles(std::vector<std::string>{"a.h", "b.h", "c.cpp"});
  const std::vector<S> tags(3, S::kUNK);
  const CohesionReport r = AnalyzeCohesion(files, tags);
  const FolderStats* root = FindFolder(r.folders, "");
  ASSERT_NE(root, nullptr);
  EXPECT_EQ(root->direct_files, 3u);
  EXPECT_EQ(root->recursive_files, 3u);
  EXPECT_EQ(r.max_depth, 0u);
}

TEST(CohesionTest, RepeatedNameFlagOnO3dePattern) {
  const Fixture f = LoadFixture("o3de_pattern");
  const CohesionReport r = AnalyzeCohesion(f.files, f.tags);
  std::vector<std::string> children;
  for (const auto& flag : r.repeated_names) children.push_back(flag.child);
  EXPECT_EQ(children, (std::vector<std::string>{
                          "Code/Framework/AzCore/AzCore",
                          "Code/Framework/AzFramework/AzFramework",
                          "Code/Framework/AzNetworking/AzNetworking",
                          "Code/Framework/AzQtComponents/AzQtComponents",
                          "Code/Framework/AzToolsFramework/AzToolsFramework",
                      }));
  EXPECT_EQ(r.repeated_names[0].parent, "Code/Framework/AzCore");
  EXPECT_EQ(r.repeated_names[0].files.size(), 3u);
}

TEST(CohesionTest, FrontEndSpansTwoHostsOnO3dePattern) {
  const Fixture f = LoadFixture("o3de_pattern");
  const CohesionReport r = AnalyzeCohesion(f.files, f.tags, {.host_depth = 3});
  // Designed hosts under Code/Framework: FES lives in AzQtComponents and
  // AzToolsFramework; every other subsystem sits in a single project folder.
  const std::map<S, std::size_t> expected{
      {S::kCOR, 1}, {S::kEDI, 1}, {S::kFES, 2}, {S::kHID, 1},
      {S::kLLR, 1}, {S::kOMP, 1}, {S::kPHY, 1}, {S::kPLA, 1}};
  EXPECT_EQ(r.dispersion, expected);
  EXPECT_EQ(r.hosts.at(S::kFES), (std::vector<std::string>{
                                     "Code/Framework/AzQtComponents",
                                     "Code/Framework/AzToolsFramework"}));
  EXPECT_EQ(r.max_depth, 6u);
}

TEST(CohesionTest, HostDepthOneCollapsesEverythingUnderCode) {
  const Fixture f = LoadFixture("o3de_pattern");
  const CohesionReport r = AnalyzeCohesion(f.files, f.tags);
  for (const auto& [id, n] : r.dispersion) EXPECT_EQ(n, 1u) << Code(id);
  EXPECT_EQ(r.top_level_count, 1u);
  EXPECT_EQ(r.concentration, 1.0);
}

TEST(CohesionTest, DispersionExcludesSkipFiles) {
  const Fixture f = LoadFixture("o3de_pattern");
  const CohesionReport r = AnalyzeCohesion(
      f.files, f.tags, {.host_depth = 3, .dispersion_excludes = {"**/Platform/**"}});
  EXPECT_FALSE(r.dispersion.contains(S::kPLA));
  EXPECT_EQ(r.dispersion.at(S::kFES), 2u);
}

TEST(CohesionTest, FlatFixtureHasDispersionOne) {
  const Fixture f = LoadFixture("flat");
  const CohesionReport r = AnalyzeCohesion(f.files, f.tags);
  EXPECT_EQ(r.dispersion, (std::map<S, std::size_t>{{S::kAUD, 1}, {S::kLLR, 1}, {S::kPHY, 1}}));
  EXPECT_EQ(r.max_depth, 0u);
  EXPECT_TRUE(r.repeated_names.empty());
}

TEST(CohesionTest, OneFolderPerSubsystem) {
  const Fixture f = LoadFixture("mini_engine");
  const CohesionReport r = AnalyzeCohesion(f.files, f.tags);
  EXPECT_EQ(r.dispersion.size(), kReferenceSubsystemCount);
  for (const auto& [id, n] : r.dispersion) EXPECT_EQ(n, 1u) << Code(id);
}

TEST(CohesionTest, TwoOfTwentyFoldersHoldSixtyPercent) {
  // 50 files: f00 and f01 hold 15 each (60%), f02..f17 one each, f18 and f19
  // two each. Greedy covering: 15 (30%) then 15 (60%) -> 2 of 20 folders.
  std::vector<std::string> paths;
  auto add = [&](int folder, int count) {
    char name[8];
    std::snprintf(name, sizeof(name), "f%02d", folder);
    for (int i = 0; i < count; ++i) {
      paths.push_back(std::string(name) + "/file" + std::to_string(i) + ".h");
    }
  };
  add(0, 15);
  add(1, 15);
  for (int k = 2; k < 18; ++k) add(k, 1);
  add(18, 2);
  add(19, 2);
  ASSERT_EQ(paths.size(), 50u);
  const auto files = MakeSourceFiles(paths);
  const std::vector<S> tags(files.size(), S::kUNK);
  const CohesionReport r = AnalyzeCohesion(files, tags);
  EXPECT_EQ(r.top_level_count, 20u);
  EXPECT_EQ(r.covering_set, (std::vector<std::string>{"f00", "f01"}));
  EXPECT_DOUBLE_EQ(r.concentration, 0.1);
}

TEST(CohesionTest, EmptyInput) {
  const CohesionReport r = AnalyzeCohesion({}, {});
  EXPECT_EQ(r.concentration, 1.0);
  EXPECT_TRUE(r.dispersion.empty());
}

}  // namespace
}  // namespace sydra
