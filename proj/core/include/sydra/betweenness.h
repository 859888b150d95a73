#ifndef SYDRA_BETWEENNESS_H_
#define SYDRA_BETWEENNESS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sydra {

// Unweighted directed graph on dense node indices [0, n). Parallel edges and
// self-loops are dropped on insertion since neither affects shortest paths.
class Digraph {
 public:
  using Node = std::uint32_t;

  explicit Digraph(std::size_t node_count = 0);

  void AddEdge(Node from, Node to);

  std::size_t node_count() const { return successors_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Ascending, unique.
  std::span<const Node> successors(Node n) const { return successors_[n]; }

 private:
  std::vector<std::vector<Node>> successors_;
  std::size_t edge_count_ = 0;
};

struct BetweennessScores {
  std::vector<double> raw;
  // raw / ((n-1)(n-2)) for n >= 3, otherwise all zero.
  std::vector<double> normalized;
};

double BetweennessNormalizer(std::size_t node_count);

// Directed, unweighted betweenness by per-source BFS with dependency
// back-propagation. Sources are split into a fixed number of chunks that
// depends only on the graph size, and chunk results are summed in order, so
// the output is bit-identical for any worker count.
BetweennessScores Betweenness(const Digraph& graph, unsigned workers = 1);

}  // namespace sydra

#endif  // SYDRA_BETWEENNESS_H_
