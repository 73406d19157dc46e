#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "maxlin/model.hpp"

namespace testgen {

using maxlin::DirectedEdge;
using maxlin::EdgeWeights;
using maxlin::NodeId;
using maxlin::TttGraph;

// Grows a random ttt as a tree of tournaments. Each new tournament attaches
// at an existing separator node. With `unique_source` the separator becomes
// the source of its new tournament, which forces a single global source.
inline TttGraph random_ttt(std::mt19937_64& rng, std::size_t max_nodes,
                           bool unique_source) {
  std::uniform_int_distribution<std::size_t> tsize(2, 4);
  std::vector<NodeId> nodes;
  std::vector<DirectedEdge> edges;

  auto add_tournament = [&](std::vector<NodeId> order) {
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b)
        edges.push_back({order[a], order[b]});
  };

  NodeId next_label = 1;
  std::size_t first = std::min(max_nodes, tsize(rng));
  std::vector<NodeId> root;
  for (std::size_t k = 0; k < first; ++k) root.push_back(next_label++);
  add_tournament(root);
  nodes = root;

  while (nodes.size() < max_nodes) {
    std::size_t want = tsize(rng);
    std::size_t fresh = std::min(want - 1, max_nodes - nodes.size());
    if (fresh == 0) break;
    NodeId sep = nodes[std::uniform_int_distribution<std::size_t>(
        0, nodes.size() - 1)(rng)];
    std::vector<NodeId> order;
    for (std::size_t k = 0; k < fresh; ++k) order.push_back(next_label++);
    if (unique_source) {
      order.insert(order.begin(), sep);
    } else {
      std::size_t pos = std::uniform_int_distribution<std::size_t>(
          0, order.size())(rng);
      order.insert(order.begin() + pos, sep);
    }
    add_tournament(order);
    for (NodeId v : order)
      if (v != sep) nodes.push_back(v);
  }
  std::sort(nodes.begin(), nodes.end());
  return TttGraph::build(nodes, edges);
}

// Keeps sampling until the graph really has several sources.
inline TttGraph random_multi_source_ttt(std::mt19937_64& rng,
                                        std::size_t max_nodes) {
  for (;;) {
    TttGraph g = random_ttt(rng, max_nodes, false);
    if (g.sources().size() >= 2) return g;
  }
}

// Random weights from bands where criticality nearly always holds
// (w_min > w_max^2). High-degree nodes can push a diagonal negative, so the
// band is lowered every few rejected draws.
inline EdgeWeights random_theta(std::mt19937_64& rng, const TttGraph& g) {
  static constexpr std::pair<double, double> bands[] = {
      {0.35, 0.55}, {0.25, 0.45}, {0.15, 0.35}, {0.08, 0.25}, {0.04, 0.12}};
  for (int attempt = 0; attempt < 400; ++attempt) {
    auto [lo, hi] = bands[std::min(attempt / 20, 4)];
    std::uniform_real_distribution<double> band(lo, hi);
    EdgeWeights theta;
    for (const auto& e : g.edges()) theta.set(e.from, e.to, band(rng));
    try {
      maxlin::validate_theta(g, theta);
      return theta;
    } catch (const maxlin::Error&) {
      continue;
    }
  }
  throw std::runtime_error("no valid theta found in 400 attempts");
}

}  // namespace testgen
