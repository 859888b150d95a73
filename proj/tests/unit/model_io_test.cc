#include "sydra/model_io.h"

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "oracles.h"
#include "sydra/corpus_aggregator.h"
#include "sydra/error.h"

namespace sydra {
namespace {

using S = SubsystemId;
using Json = nlohmann::ordered_json;

ArchModel RandomModel(std::mt19937_64& rng, int index) {
  const std::size_t n = rng() % 12;
  FileGraph g;
  std::vector<S> tags;
  for (std::size_t i = 0; i < n; ++i) {
    g.nodes.push_back(SourceFile{static_cast<FileId>(i),
                                 "dir" + std::to_string(rng() % 3) + "/f" + std::to_string(i) +
                                     (rng() % 2 ? ".h" : ".cpp"),
                                 rng() % 2 ? FileKind::kHeader : FileKind::kImplementation});
    tags.push_back(AllSubsystems()[rng() % kSubsystemCount]);
  }
  std::sort(g.nodes.begin(), g.nodes.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
  for (std::size_t i = 0; i < n; ++i) g.nodes[i].id = static_cast<FileId>(i);
  for (std::size_t k = 0; n > 1 && k < 2 * n; ++k) {
    const auto a = static_cast<FileId>(rng() % n);
    const auto b = static_cast<FileId>(rng() % n);
    if (a != b) g.edges.push_back(FileEdge{a, b});
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  ModelOptions options;
  options.include_unmapped = rng() % 2;
  options.file_betweenness = rng() % 2;
  options.rules_digest = "sha256:" + std::string(64, 'a');
  ArchModel m = BuildModel("engine" + std::to_string(index), "c" + std::to_string(index), g,
                           tags, options);
  if (rng() % 2 && !PresentSubsystems(m).empty()) {
    const std::vector<ArchModel> corpus{m};
    m.emergent = EmergentTiers(corpus, {.k_inner = 2, .max_edges = 3}).architecture;
  }
  return m;
}

TEST(ModelIoTest, EmptyModelIsMinimal) {
  const ArchModel m = BuildModel("empty", "", FileGraph{}, std::vector<S>{});
  const Json j = Json::parse(ExportModelJson(m));
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_TRUE(j["files"].empty());
  EXPECT_TRUE(j["file_edges"].empty());
  EXPECT_TRUE(j["subsystem_graph"]["nodes"].empty());
  EXPECT_TRUE(j["subsystem_graph"]["edges"].empty());
  EXPECT_TRUE(j["metrics"]["nodes"].empty());
  EXPECT_EQ(j["taxonomy"].size(), kSubsystemCount);
  EXPECT_FALSE(j.contains("emergent"));
}

TEST(ModelIoTest, KeyOrderIsFixed) {
  const ArchModel m = BuildModel("e", "", FileGraph{}, std::vector<S>{});
  const Json j = Json::parse(ExportModelJson(m));
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "schema_version", "engine_name", "commit_ref", "tool_version",
                      "rules_digest", "include_unmapped", "taxonomy", "files", "file_edges",
                      "subsystem_graph", "metrics", "file_metrics"}));
  EXPECT_EQ(ExportModelJson(m).back(), '\n');
}

TEST(ModelIoTest, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const ArchModel m = RandomModel(rng, i);
    const std::string text = ExportModelJson(m);
    const ArchModel back = ImportModelJson(text);
    ASSERT_EQ(back, m) << text;
    ASSERT_EQ(ExportModelJson(back), text);
  }
}

TEST(ModelIoTest, InvalidUtf8PathIsReplaced) {
  FileGraph g;
  g.nodes.push_back(SourceFile{0, "bad\xFFname.h", FileKind::kHeader});
  const std::vector<S> tags{S::kAUD};
  const std::string text = ExportModelJson(BuildModel("e", "", g, tags));
  EXPECT_NE(text.find("bad\xEF\xBF\xBDname.h"), std::string::npos);
  EXPECT_NO_THROW(Json::parse(text));
}

std::string ImportError(const std::string& text) {
  try {
    ImportModelJson(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), Stage::kImport);
    return e.what();
  }
  return "";
}

TEST(ModelIoTest, ImportNamesTheFailingField) {
  FileGraph g;
  g.nodes = {SourceFile{0, "a.h", FileKind::kHeader}, SourceFile{1, "b.h", FileKind::kHeader}};
  g.edges = {FileEdge{0, 1}};
  const std::vector<S> tags{S::kAUD, S::kCOR};
  Json good = Json::parse(ExportModelJson(BuildModel("e", "", g, tags)));

  Json bad = good;
  bad["files"][1]["tag"] = "XYZ";
  EXPECT_NE(ImportError(bad.dump()).find("$.files[1].tag"), std::string::npos);

  bad = good;
  bad["schema_version"] = "2";
  EXPECT_NE(ImportError(bad.dump()).find("schema_version"), std::string::npos);

  bad = good;
  bad["file_edges"][0][1] = 7;
  EXPECT_NE(ImportError(bad.dump()).find("file_edges"), std::string::npos);

  bad = good;
  bad["surprise"] = 1;
  EXPECT_NE(ImportError(bad.dump()).find("surprise"), std::string::npos);

  bad = good;
  bad.erase("metrics");
  EXPECT_NE(ImportError(bad.dump()).find("metrics"), std::string::npos);

  EXPECT_FALSE(ImportError("{not json").empty());
}

TEST(ModelIoTest, EmergentSectionRoundTrips) {
  const std::vector<ArchModel> corpus{
      testing::ModelFromPairs("a", {}, {{S::kAUD, S::kCOR}, {S::kCOR, S::kLLR}}),
      testing::ModelFromPairs("b", {}, {{S::kAUD, S::kCOR}})};
  ArchModel m = corpus[0];
  m.emergent = EmergentTiers(corpus, {.k_inner = 1}).architecture;
  const std::string text = ExportModelJson(m);
  const Json j = Json::parse(text);
  ASSERT_TRUE(j.contains("emergent"));
  EXPECT_EQ(j["emergent"]["inner_core"], Json::array({"COR"}));
  EXPECT_TRUE(j["emergent"]["max_edges"].is_null());
  EXPECT_EQ(ImportModelJson(text), m);
}

}  // namespace
}  // namespace sydra
