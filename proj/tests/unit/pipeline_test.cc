#include "sydra/pipeline.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "oracles.h"
#include "sydra/model_io.h"

namespace sydra {
namespace {

namespace fs = std::filesystem;

RunConfig FixtureConfig(const std::string& out) {
  RunConfig c;
  c.root = fs::path(SYDRA_FIXTURE_DIR) / "mini_engine";
  c.rules_path = fs::path(SYDRA_FIXTURE_DIR) / "mini_engine.rules";
  c.include_paths = {"."};
  c.engine_name = "mini_engine";
  c.commit_ref = "fixture";
  c.output_dir = fs::temp_directory_path() / out;
  c.workers = 1;
  return c;
}

TEST(PipelineTest, WritesEveryArtifact) {
  const RunConfig c = FixtureConfig("sydra_pipeline_artifacts");
  fs::remove_all(c.output_dir);
  const PipelineResult r = RunPipeline(c);
  for (const char* name :
       {"mini_engine.sydra.json", "metrics.csv", "file_metrics.csv", "coverage.csv",
        "unmapped.txt", "cohesion.csv", "cohesion.txt", "subsystem_graph.dot",
        "diagnostics.txt"}) {
    EXPECT_TRUE(fs::is_regular_file(c.output_dir / name)) << name;
  }
  EXPECT_EQ(r.written.size(), 9u);
  EXPECT_EQ(r.coverage.detected(), 16u);
  EXPECT_EQ(r.coverage.unmapped_paths, (std::vector<std::string>{"misc/zzz_unique.h"}));
  EXPECT_EQ(testing::ReadFile((c.output_dir / "unmapped.txt").string()), "misc/zzz_unique.h\n");
  fs::remove_all(c.output_dir);
}

TEST(PipelineTest, MatchesCommittedGoldenModel) {
  const RunConfig c = FixtureConfig("sydra_pipeline_golden");
  const PipelineResult r = RunPipeline(c);
  EXPECT_EQ(ExportModelJson(r.model),
            testing::ReadFile(SYDRA_FIXTURE_DIR "/mini_engine.sydra.json.golden"));
  fs::remove_all(c.output_dir);
}

TEST(PipelineTest, RerunAndWorkerCountsAreByteIdentical) {
  RunConfig c = FixtureConfig("sydra_pipeline_rerun");
  const std::string first = ExportModelJson(RunPipeline(c).model);
  EXPECT_EQ(ExportModelJson(RunPipeline(c).model), first);
  c.workers = 4;
  EXPECT_EQ(ExportModelJson(RunPipeline(c).model), first);
  fs::remove_all(c.output_dir);
}

TEST(PipelineTest, MissingRulesFileNamesThePath) {
  RunConfig c = FixtureConfig("sydra_pipeline_missing");
  c.rules_path = "/definitely/not/here.rules";
  try {
    RunPipeline(c);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), Stage::kConfig);
    EXPECT_NE(std::string(e.what()).find("/definitely/not/here.rules"), std::string::npos);
  }
  EXPECT_FALSE(fs::exists(c.output_dir));
}

TEST(PipelineTest, MissingRootIsFatal) {
  RunConfig c = FixtureConfig("sydra_pipeline_noroot");
  c.root = "/definitely/not/a/root";
  EXPECT_THROW(RunPipeline(c), Error);
}

TEST(PipelineTest, IncludePathsMustStayInsideTheRoot) {
  EXPECT_EQ(TreeRelativeIncludePaths("/tmp", {".", "a/b"}), (std::vector<std::string>{"", "a/b"}));
  EXPECT_THROW(TreeRelativeIncludePaths("/tmp", {"../x"}), Error);
}

TEST(PipelineTest, ModelFileNameIsSanitized) {
  EXPECT_EQ(ModelFileName("Unreal Engine 5"), "Unreal_Engine_5.sydra.json");
  EXPECT_EQ(ModelFileName(""), "model.sydra.json");
}

}  // namespace
}  // namespace sydra
