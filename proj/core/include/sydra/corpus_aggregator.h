#ifndef SYDRA_CORPUS_AGGREGATOR_H_
#define SYDRA_CORPUS_AGGREGATOR_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sydra/emergent_architecture.h"
#include "sydra/graph_metrics.h"
#include "sydra/taxonomy.h"

namespace sydra {

// Engine x reference-subsystem presence grid (UNK is not a column).
struct PresenceMatrix {
  std::vector<std::string> engines;
  std::vector<std::array<bool, kReferenceSubsystemCount>> presence;
  std::vector<std::size_t> detected;  // row sums

  bool Has(std::size_t engine, SubsystemId id) const {
    return presence[engine][Index(id)];
  }

  // Fraction of engines detecting at least `min_detected` subsystems.
  double ShareAtLeast(std::size_t min_detected) const;
};

// Throws Error(kAggregate) on an empty corpus or duplicate engine names.
PresenceMatrix SubsystemPresence(std::span<const ArchModel> models);

// Smallest subsystem count that reaches `fraction` of the 16-entry taxonomy,
// e.g. 0.75 -> 12.
std::size_t TaxonomyCoverageCount(double fraction);

// Per ordered pair, the number of models whose subsystem graph contains it.
// Sorted by count descending, then by (from, to) codes ascending. Pairs with
// an UNK endpoint are ignored.
std::vector<PairCount> CouplingFrequency(std::span<const ArchModel> models);

// ceil(0.8 * corpus_size): the lowest count in the reference coupling table
// was 8 of 10 engines.
std::size_t DefaultFrequencyThreshold(std::size_t corpus_size);

inline constexpr std::size_t kDefaultInnerCoreSize = 4;

struct EmergentOptions {
  std::size_t k_inner = kDefaultInnerCoreSize;
  std::optional<std::size_t> threshold;  // default: DefaultFrequencyThreshold
  std::optional<std::size_t> max_edges;  // cap on selected pairs
};

struct EmergentResult {
  EmergentArchitecture architecture;
  std::vector<std::string> warnings;
};

// Inner core: the k_inner observed subsystems with the highest mean
// normalized betweenness (absent = 0). Outer core: other subsystems on a
// pair with count >= threshold. Periphery: the rest. Selected edges are the
// frequent pairs, ranked by count, then by the endpoints' summed mean
// betweenness, then by codes; max_edges truncates that ranking.
EmergentResult EmergentTiers(std::span<const ArchModel> models,
                             const EmergentOptions& options = {});

// Manifest format: one model path per line, '#' comments, relative paths
// resolved against the manifest's directory.
std::vector<std::filesystem::path> ReadCorpusManifest(
    const std::filesystem::path& manifest);

}  // namespace sydra

#endif  // SYDRA_CORPUS_AGGREGATOR_H_
