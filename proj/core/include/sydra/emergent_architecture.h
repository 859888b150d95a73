#ifndef SYDRA_EMERGENT_ARCHITECTURE_H_
#define SYDRA_EMERGENT_ARCHITECTURE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "sydra/taxonomy.h"

namespace sydra {

struct PairCount {
  SubsystemId from = SubsystemId::kUNK;
  SubsystemId to = SubsystemId::kUNK;
  std::size_t count = 0;

  friend bool operator==(const PairCount&, const PairCount&) = default;
};

struct TierScore {
  SubsystemId subsystem = SubsystemId::kUNK;
  double mean_betweenness = 0.0;

  friend bool operator==(const TierScore&, const TierScore&) = default;
};

// Corpus-level tiered subsystem diagram. The three tiers partition the
// subsystems observed in at least one model.
struct EmergentArchitecture {
  std::vector<SubsystemId> inner_core;
  std::vector<SubsystemId> outer_core;
  std::vector<SubsystemId> periphery;
  std::vector<PairCount> edges;      // selected frequent pairs
  std::vector<TierScore> centrality;  // mean normalized betweenness per tag
  std::size_t k_inner = 0;
  std::size_t threshold = 0;
  std::optional<std::size_t> max_edges;
  std::size_t corpus_size = 0;

  friend bool operator==(const EmergentArchitecture&,
                         const EmergentArchitecture&) = default;
};

}  // namespace sydra

#endif  // SYDRA_EMERGENT_ARCHITECTURE_H_
