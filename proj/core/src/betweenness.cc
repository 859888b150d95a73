#include "sydra/betweenness.h"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace sydra {
namespace {

constexpr std::size_t kMaxChunks = 64;

class BrandesWorkspace {
 public:
  explicit BrandesWorkspace(std::size_t n)
      : distance_(n), sigma_(n), delta_(n), order_(), predecessors_(n) {
    order_.reserve(n);
  }

  // Adds the dependencies of `source` to `acc`.
  void Accumulate(const Digraph& g, Digraph::Node source,
                  std::vector<double>& acc) {
    std::fill(distance_.begin(), distance_.end(), -1);
    std::fill(sigma_.begin(), sigma_.end(), 0.0);
    std::fill(delta_.begin(), delta_.end(), 0.0);
    for (auto& p : predecessors_) p.clear();
    order_.clear();

    distance_[source] = 0;
    sigma_[source] = 1.0;
    order_.push_back(source);
    // order_ doubles as the BFS queue; it ends up in non-decreasing distance.
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const Digraph::Node v = order_[head];
      for (Digraph::Node w : g.successors(v)) {
        if (distance_[w] < 0) {
          distance_[w] = distance_[v] + 1;
          order_.push_back(w);
        }
        if (distance_[w] == distance_[v] + 1) {
          sigma_[w] += sigma_[v];
          predecessors_[w].push_back(v);
        }
      }
    }
    for (std::size_t i = order_.size(); i-- > 0;) {
      const Digraph::Node w = order_[i];
      for (Digraph::Node v : predecessors_[w]) {
        delta_[v] += sigma_[v] / sigma_[w] * (1.0 + delta_[w]);
      }
      if (w != source) acc[w] += delta_[w];
    }
  }

 private:
  std::vector<long> distance_;
  std::vector<double> sigma_;
  std::vector<double> delta_;
  std::vector<Digraph::Node> order_;
  std::vector<std::vector<Digraph::Node>> predecessors_;
};

}  // namespace

Digraph::Digraph(std::size_t node_count) : successors_(node_count) {}

void Digraph::AddEdge(Node from, Node to) {
  if (from >= successors_.size() || to >= successors_.size()) {
    throw std::out_of_range("Digraph::AddEdge: node index out of range");
  }
  if (from == to) return;
  auto& succ = successors_[from];
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it != succ.end() && *it == to) return;
  succ.insert(it, to);
  ++edge_count_;
}

double BetweennessNormalizer(std::size_t node_count) {
  if (node_count < 3) return 0.0;
  const double n = static_cast<double>(node_count);
  return (n - 1.0) * (n - 2.0);
}

BetweennessScores Betweenness(const Digraph& graph, unsigned workers) {
  const std::size_t n = graph.node_count();
  BetweennessScores scores{std::vector<double>(n, 0.0),
                           std::vector<double>(n, 0.0)};
  if (n < 3) return scores;

  const std::size_t chunk_count = std::min(n, kMaxChunks);
  const std::size_t chunk_size = (n + chunk_count - 1) / chunk_count;
  std::vector<std::vector<double>> partial(chunk_count);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    BrandesWorkspace ws(n);
    for (std::size_t c = next++; c < chunk_count; c = next++) {
      std::vector<double> acc(n, 0.0);
      const std::size_t begin = c * chunk_size;
      const std::size_t end = std::min(n, begin + chunk_size);
      for (std::size_t s = begin; s < end; ++s) {
        ws.Accumulate(graph, static_cast<Digraph::Node>(s), acc);
      }
      partial[c] = std::move(acc);
    }
  };
  workers = std::max(1u, std::min<unsigned>(
                             workers, static_cast<unsigned>(chunk_count)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) scores.raw[v] += acc[v];
  }
  const double norm = BetweennessNormalizer(n);
  for (std::size_t v = 0; v < n; ++v) scores.normalized[v] = scores.raw[v] / norm;
  return scores;
}

}  // namespace sydra
