#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "sydra/glob.h"
#include "sydra/subsystem_mapper.h"

namespace {

const std::vector<std::string>& Paths() {
  static const std::vector<std::string> paths = [] {
    const char* dirs[] = {"core/math", "servers/rendering/renderer_rd", "scene/3d",
                          "platform/linuxbsd", "thirdparty/zlib", "editor/plugins"};
    std::vector<std::string> out;
    for (int i = 0; i < 600; ++i) {
      out.push_back(std::string(dirs[i % 6]) + "/file_" + std::to_string(i) + ".cpp");
    }
    return out;
  }();
  return paths;
}

void BM_GlobMatch(benchmark::State& state) {
  const auto& paths = Paths();
  for (auto _ : state) {
    int hits = 0;
    for (const auto& p : paths) hits += sydra::GlobMatch("servers/**/renderer_*/*.cpp", p);
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * paths.size()));
}
BENCHMARK(BM_GlobMatch);

void BM_MapPath(benchmark::State& state) {
  const auto rules = sydra::ParseRules(
      "COR core/**\nLLR servers/rendering/**\nSGC servers/rendering/renderer_rd/*_cull*\n"
      "GMP scene/**\nPLA platform/**\nSDK thirdparty/**\nEDI editor/**\n");
  const auto& paths = Paths();
  for (auto _ : state) {
    for (const auto& p : paths) benchmark::DoNotOptimize(sydra::MapPath(p, rules));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * paths.size()));
}
BENCHMARK(BM_MapPath);

}  // namespace
