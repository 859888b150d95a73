#include "sydra/corpus_aggregator.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <string_view>

#include "sydra/error.h"

namespace sydra {
namespace fs = std::filesystem;

namespace {

void RequireCorpus(std::span<const ArchModel> models) {
  if (models.empty()) {
    throw Error(Stage::kAggregate, "corpus", "at least one model is required");
  }
}

bool PairLess(SubsystemId a_from, SubsystemId a_to, SubsystemId b_from,
              SubsystemId b_to) {
  if (Code(a_from) != Code(b_from)) return Code(a_from) < Code(b_from);
  return Code(a_to) < Code(b_to);
}

// Mean normalized betweenness per reference subsystem across the corpus;
// a model without the subsystem contributes zero.
std::array<double, kReferenceSubsystemCount> MeanBetweenness(
    std::span<const ArchModel> models) {
  std::array<double, kReferenceSubsystemCount> sum{};
  for (const ArchModel& m : models) {
    for (const NodeMetrics& n : m.metrics.nodes) {
      if (n.node == SubsystemId::kUNK) continue;
      sum[Index(n.node)] += n.betweenness_normalized;
    }
  }
  for (double& s : sum) s /= static_cast<double>(models.size());
  return sum;
}

}  // namespace

double PresenceMatrix::ShareAtLeast(std::size_t min_detected) const {
  if (detected.empty()) return 0.0;
  const auto hits = std::count_if(detected.begin(), detected.end(),
                                  [&](std::size_t d) { return d >= min_detected; });
  return static_cast<double>(hits) / static_cast<double>(detected.size());
}

PresenceMatrix SubsystemPresence(std::span<const ArchModel> models) {
  RequireCorpus(models);
  PresenceMatrix matrix;
  std::set<std::string_view> seen;
  for (const ArchModel& m : models) {
    if (!seen.insert(m.engine_name).second) {
      throw Error(Stage::kAggregate, m.engine_name, "duplicate engine name");
    }
    std::array<bool, kReferenceSubsystemCount> row{};
    std::size_t count = 0;
    for (SubsystemId id : PresentSubsystems(m)) {
      row[Index(id)] = true;
      ++count;
    }
    matrix.engines.push_back(m.engine_name);
    matrix.presence.push_back(row);
    matrix.detected.push_back(count);
  }
  return matrix;
}

std::size_t TaxonomyCoverageCount(double fraction) {
  return static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(kReferenceSubsystemCount) - 1e-9));
}

std::vector<PairCount> CouplingFrequency(std::span<const ArchModel> models) {
  RequireCorpus(models);
  std::map<std::pair<SubsystemId, SubsystemId>, std::size_t> counts;
  for (const ArchModel& m : models) {
    std::set<std::pair<SubsystemId, SubsystemId>> pairs;
    for (const SubsystemEdge& e : m.subsystem_graph.edges) {
      if (e.from == SubsystemId::kUNK || e.to == SubsystemId::kUNK) continue;
      pairs.emplace(e.from, e.to);
    }
    for (const auto& p : pairs) ++counts[p];
  }
  std::vector<PairCount> out;
  out.reserve(counts.size());
  for (const auto& [p, c] : counts) out.push_back(PairCount{p.first, p.second, c});
  std::sort(out.begin(), out.end(), [](const PairCount& a, const PairCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return PairLess(a.from, a.to, b.from, b.to);
  });
  return out;
}

std::size_t DefaultFrequencyThreshold(std::size_t corpus_size) {
  return std::max<std::size_t>(1, (corpus_size * 8 + 9) / 10);
}

EmergentResult EmergentTiers(std::span<const ArchModel> models,
                             const EmergentOptions& options) {
  RequireCorpus(models);
  if (options.k_inner < 1) {
    throw Error(Stage::kAggregate, "k_inner", "must be at least 1");
  }
  const std::size_t threshold =
      options.threshold.value_or(DefaultFrequencyThreshold(models.size()));
  if (threshold < 1) {
    throw Error(Stage::kAggregate, "threshold", "must be at least 1");
  }

  EmergentResult result;
  EmergentArchitecture& arch = result.architecture;
  arch.k_inner = options.k_inner;
  arch.threshold = threshold;
  arch.max_edges = options.max_edges;
  arch.corpus_size = models.size();

  const PresenceMatrix presence = SubsystemPresence(models);
  std::vector<SubsystemId> observed;
  for (SubsystemId id : ReferenceSubsystems()) {
    for (std::size_t e = 0; e < presence.engines.size(); ++e) {
      if (presence.Has(e, id)) {
        observed.push_back(id);
        break;
      }
    }
  }

  const auto mean = MeanBetweenness(models);
  for (SubsystemId id : observed) {
    arch.centrality.push_back(TierScore{id, mean[Index(id)]});
  }
  std::vector<SubsystemId> ranked = observed;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](SubsystemId a, SubsystemId b) {
                     if (mean[Index(a)] != mean[Index(b)]) {
                       return mean[Index(a)] > mean[Index(b)];
                     }
                     return Code(a) < Code(b);
                   });
  if (options.k_inner > ranked.size()) {
    result.warnings.push_back(
        "k_inner " + std::to_string(options.k_inner) + " exceeds the " +
        std::to_string(ranked.size()) +
        " observed subsystems; every subsystem is inner core");
  }
  const std::size_t inner_size = std::min(options.k_inner, ranked.size());
  std::array<bool, kReferenceSubsystemCount> inner{};
  for (std::size_t i = 0; i < inner_size; ++i) inner[Index(ranked[i])] = true;

  std::vector<PairCount> frequent;
  for (const PairCount& p : CouplingFrequency(models)) {
    if (p.count >= threshold) frequent.push_back(p);
  }
  std::array<bool, kReferenceSubsystemCount> on_frequent_pair{};
  for (const PairCount& p : frequent) {
    on_frequent_pair[Index(p.from)] = true;
    on_frequent_pair[Index(p.to)] = true;
  }
  for (SubsystemId id : observed) {
    if (inner[Index(id)]) {
      arch.inner_core.push_back(id);
    } else if (on_frequent_pair[Index(id)]) {
      arch.outer_core.push_back(id);
    } else {
      arch.periphery.push_back(id);
    }
  }

  auto endpoint_sum = [&](const PairCount& p) {
    return mean[Index(p.from)] + mean[Index(p.to)];
  };
  std::stable_sort(frequent.begin(), frequent.end(),
                   [&](const PairCount& a, const PairCount& b) {
                     if (a.count != b.count) return a.count > b.count;
                     const double sa = endpoint_sum(a);
                     const double sb = endpoint_sum(b);
                     if (sa != sb) return sa > sb;
                     return PairLess(a.from, a.to, b.from, b.to);
                   });
  if (options.max_edges && frequent.size() > *options.max_edges) {
    frequent.resize(*options.max_edges);
  }
  arch.edges = std::move(frequent);
  return result;
}

std::vector<fs::path> ReadCorpusManifest(const fs::path& manifest) {
  std::ifstream in(manifest);
  if (!in) {
    throw Error(Stage::kAggregate, manifest.string(),
                "cannot read corpus manifest");
  }
  const fs::path base = manifest.parent_path();
  std::vector<fs::path> paths;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v = line;
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) {
      v.remove_prefix(1);
    }
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) {
      v.remove_suffix(1);
    }
    if (v.empty() || v.front() == '#') continue;
    fs::path p{std::string(v)};
    paths.push_back(p.is_absolute() ? p : base / p);
  }
  return paths;
}

}  // namespace sydra
