#include "tropcer/random_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropcer {

MetricGraph random_bridgeless_graph(XorShift64Star& rng, int min_genus, int max_genus) {
  if (min_genus < 1 || max_genus < min_genus) {
    throw std::invalid_argument("random_bridgeless_graph requires 1 <= min_genus <= max_genus");
  }
  const int genus =
      min_genus + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_genus - min_genus + 1)));
  const int core = 1 + static_cast<int>(rng.below(5));

  std::vector<std::string> vertices;
  vertices.reserve(static_cast<std::size_t>(core));
  for (int i = 0; i < core; ++i) vertices.push_back("v" + std::to_string(i));

  std::vector<Edge> edges;
  EdgeId id = 1;
  for (int i = 0; i < core; ++i) {
    edges.push_back(Edge{id++, vertices[static_cast<std::size_t>(i)],
                         vertices[static_cast<std::size_t>((i + 1) % core)], rng.rat()});
  }
  for (int t = 1; t < genus; ++t) {
    const auto u = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(core)));
    const auto v = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(core)));
    edges.push_back(Edge{id++, vertices[u], vertices[v], rng.rat()});
  }
  return MetricGraph(std::move(vertices), std::move(edges));
}

std::vector<EdgeId> random_spanning_tree(const MetricGraph& graph, XorShift64Star& rng) {
  std::vector<EdgeId> order;
  order.reserve(graph.edges().size());
  for (const auto& e : graph.edges()) order.push_back(e.id);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.below(i))]);
  }

  std::map<std::string, std::string> parent;
  for (const auto& v : graph.vertices()) parent[v] = v;
  auto find = [&parent](std::string v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  std::vector<EdgeId> tree;
  for (const EdgeId eid : order) {
    const Edge& e = graph.edge(eid);
    if (e.src == e.dst) continue;
    const std::string ra = find(e.src);
    const std::string rb = find(e.dst);
    if (ra == rb) continue;
    parent[ra] = rb;
    tree.push_back(eid);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace tropcer
