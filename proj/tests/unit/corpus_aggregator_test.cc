#include "sydra/corpus_aggregator.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "oracles.h"
#include "sydra/error.h"

namespace sydra {
namespace {

using S = SubsystemId;
using testing::ModelFromPairs;

std::vector<S> FirstN(std::size_t n) {
  return {ReferenceSubsystems().begin(), ReferenceSubsystems().begin() + n};
}

TEST(PresenceTest, DesignTable) {
  const std::vector<ArchModel> models{
      ModelFromPairs("a", {S::kAUD, S::kCOR}, {}),
      ModelFromPairs("b", {S::kCOR, S::kLLR, S::kPHY}, {}),
      ModelFromPairs("c", {}, {{S::kVFX, S::kAUD}}),
  };
  const PresenceMatrix p = SubsystemPresence(models);
  EXPECT_EQ(p.engines, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(p.detected, (std::vector<std::size_t>{2, 3, 2}));
  for (S id : ReferenceSubsystems()) {
    EXPECT_EQ(p.Has(0, id), id == S::kAUD || id == S::kCOR);
    EXPECT_EQ(p.Has(1, id), id == S::kCOR || id == S::kLLR || id == S::kPHY);
    EXPECT_EQ(p.Has(2, id), id == S::kAUD || id == S::kVFX);
  }
}

TEST(PresenceTest, NineOfTenDetectAtLeastTwelve) {
  std::vector<ArchModel> models;
  for (int i = 0; i < 9; ++i) {
    models.push_back(ModelFromPairs("e" + std::to_string(i), FirstN(12 + i % 5), {}));
  }
  models.push_back(ModelFromPairs("small", FirstN(11), {}));
  const PresenceMatrix p = SubsystemPresence(models);
  EXPECT_EQ(TaxonomyCoverageCount(0.75), 12u);
  EXPECT_DOUBLE_EQ(p.ShareAtLeast(TaxonomyCoverageCount(0.75)), 0.9);
}

TEST(PresenceTest, SingleEmptyModel) {
  const std::vector<ArchModel> models{ModelFromPairs("empty", {}, {})};
  const PresenceMatrix p = SubsystemPresence(models);
  EXPECT_EQ(p.detected, (std::vector<std::size_t>{0}));
  for (S id : ReferenceSubsystems()) EXPECT_FALSE(p.Has(0, id));
}

TEST(PresenceTest, DuplicateNamesAndEmptyCorpusAreFatal) {
  const std::vector<ArchModel> dup{ModelFromPairs("x", {}, {}), ModelFromPairs("x", {}, {})};
  EXPECT_THROW(SubsystemPresence(dup), Error);
  EXPECT_THROW(SubsystemPresence(std::vector<ArchModel>{}), Error);
}

TEST(CouplingTest, AllPresent) {
  std::vector<ArchModel> models;
  for (const char* n : {"a", "b", "c"}) {
    models.push_back(ModelFromPairs(n, {}, {{S::kGMP, S::kCOR}}));
  }
  EXPECT_EQ(CouplingFrequency(models), (std::vector<PairCount>{{S::kGMP, S::kCOR, 3}}));
}

TEST(CouplingTest, MixedEdgesMatchHandTally) {
  const std::vector<ArchModel> models{
      ModelFromPairs("a", {}, {{S::kCOR, S::kLLR}, {S::kLLR, S::kCOR}, {S::kAUD, S::kCOR}}),
      ModelFromPairs("b", {}, {{S::kCOR, S::kLLR}, {S::kRES, S::kCOR}}),
      ModelFromPairs("c", {}, {{S::kCOR, S::kLLR}, {S::kLLR, S::kCOR}, {S::kRES, S::kCOR}}),
  };
  // Tally: COR->LLR 3, LLR->COR 2, RES->COR 2, AUD->COR 1.
  EXPECT_EQ(CouplingFrequency(models), (std::vector<PairCount>{
                                           {S::kCOR, S::kLLR, 3},
                                           {S::kLLR, S::kCOR, 2},
                                           {S::kRES, S::kCOR, 2},
                                           {S::kAUD, S::kCOR, 1},
                                       }));
}

TEST(EmergentTest, DefaultThresholdIsEightOfTen) {
  EXPECT_EQ(DefaultFrequencyThreshold(10), 8u);
  EXPECT_EQ(DefaultFrequencyThreshold(3), 3u);
  EXPECT_EQ(DefaultFrequencyThreshold(1), 1u);
  EXPECT_EQ(DefaultFrequencyThreshold(5), 4u);
}

TEST(EmergentTest, SingleModelInnerCoreIsTopBetweenness) {
  // AUD->COR->LLR: COR is the only intermediate.
  const std::vector<ArchModel> models{
      ModelFromPairs("one", {}, {{S::kAUD, S::kCOR}, {S::kCOR, S::kLLR}})};
  const EmergentResult r = EmergentTiers(models, {.k_inner = 1});
  EXPECT_EQ(r.architecture.inner_core, (std::vector<S>{S::kCOR}));
  EXPECT_EQ(r.architecture.outer_core, (std::vector<S>{S::kAUD, S::kLLR}));
  EXPECT_TRUE(r.architecture.periphery.empty());
  EXPECT_TRUE(r.warnings.empty());
}

TEST(EmergentTest, OversizedInnerCoreWarns) {
  const std::vector<ArchModel> models{ModelFromPairs("one", {}, {{S::kAUD, S::kCOR}})};
  const EmergentResult r = EmergentTiers(models, {.k_inner = 5});
  EXPECT_EQ(r.architecture.inner_core, (std::vector<S>{S::kAUD, S::kCOR}));
  EXPECT_EQ(r.warnings.size(), 1u);
}

std::vector<ArchModel> TieCorpus() {
  const std::vector<std::pair<S, S>> base{
      {S::kAUD, S::kCOR}, {S::kCOR, S::kLLR}, {S::kPHY, S::kRES}};
  auto with_deb = base;
  with_deb.emplace_back(S::kDEB, S::kAUD);
  return {ModelFromPairs("alpha", {}, base), ModelFromPairs("beta", {}, base),
          ModelFromPairs("gamma", {}, with_deb)};
}

TEST(EmergentTest, TieBreakByEndpointBetweennessSum) {
  const auto models = TieCorpus();
  // Hand computation. alpha/beta: 5 nodes, COR on AUD->LLR only: 1/12.
  // gamma: 6 nodes; AUD on DEB->COR, DEB->LLR; COR on AUD->LLR, DEB->LLR:
  // both 2/20. Means: COR (1/12 + 1/12 + 1/10) / 3 = 4/45, AUD 1/30, rest 0.
  // All three pairs have count 3. Endpoint sums: AUD->COR 11/90,
  // COR->LLR 8/90, PHY->RES 0.
  const EmergentResult r = EmergentTiers(models, {.k_inner = 1, .max_edges = 1});
  const auto& a = r.architecture;
  EXPECT_EQ(a.threshold, 3u);
  EXPECT_EQ(a.edges, (std::vector<PairCount>{{S::kAUD, S::kCOR, 3}}));
  auto mean = [&](S id) {
    for (const TierScore& t : a.centrality) {
      if (t.subsystem == id) return t.mean_betweenness;
    }
    return -1.0;
  };
  EXPECT_NEAR(mean(S::kCOR), 4.0 / 45.0, 1e-15);
  EXPECT_NEAR(mean(S::kAUD), 1.0 / 30.0, 1e-15);
  EXPECT_EQ(mean(S::kDEB), 0.0);

  const auto two = EmergentTiers(models, {.k_inner = 1, .max_edges = 2});
  EXPECT_EQ(two.architecture.edges, (std::vector<PairCount>{
                                        {S::kAUD, S::kCOR, 3}, {S::kCOR, S::kLLR, 3}}));

  EXPECT_EQ(a.inner_core, (std::vector<S>{S::kCOR}));
  EXPECT_EQ(a.outer_core, (std::vector<S>{S::kAUD, S::kLLR, S::kPHY, S::kRES}));
  EXPECT_EQ(a.periphery, (std::vector<S>{S::kDEB}));
}

TEST(EmergentTest, TiersPartitionObservedSubsystems) {
  const auto models = TieCorpus();
  const auto a = EmergentTiers(models, {.k_inner = 2}).architecture;
  std::vector<S> all = a.inner_core;
  all.insert(all.end(), a.outer_core.begin(), a.outer_core.end());
  all.insert(all.end(), a.periphery.begin(), a.periphery.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, (std::vector<S>{S::kAUD, S::kCOR, S::kDEB, S::kLLR, S::kPHY, S::kRES}));
}

TEST(ManifestTest, RelativePathsAndComments) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sydra_manifest_test";
  fs::create_directories(dir);
  std::ofstream(dir / "corpus.txt") << "# corpus\n\na.sydra.json\n  /abs/b.sydra.json  \n";
  const auto paths = ReadCorpusManifest(dir / "corpus.txt");
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0], dir / "a.sydra.json");
  EXPECT_EQ(paths[1], fs::path("/abs/b.sydra.json"));
  fs::remove_all(dir);
  EXPECT_THROW(ReadCorpusManifest(dir / "corpus.txt"), Error);
}

}  // namespace
}  // namespace sydra
