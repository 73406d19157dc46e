#pragma once

#include "maxlin/model.hpp"

namespace fixtures {

using maxlin::DirectedEdge;
using maxlin::EdgeWeights;
using maxlin::NodeId;
using maxlin::TttGraph;

// Eight nodes, four tournaments {1,2,3},{3,4},{3,5,6,7},{7,8};
// sources 1, 4 and 8.
inline TttGraph three_source_graph() {
  return TttGraph::build({1, 2, 3, 4, 5, 6, 7, 8},
                         {{1, 2}, {1, 3}, {3, 2}, {4, 3}, {3, 5}, {3, 6},
                          {3, 7}, {5, 6}, {5, 7}, {7, 6}, {8, 7}});
}

// Same skeleton, single source on node 4.
inline TttGraph single_source_graph() {
  return TttGraph::build({1, 2, 3, 4, 5, 6, 7, 8},
                         {{1, 2}, {3, 1}, {3, 2}, {4, 3}, {3, 5}, {3, 6},
                          {3, 7}, {5, 6}, {5, 7}, {7, 6}, {7, 8}});
}

// Same skeleton, single source on node 1; the only nodes that may carry
// latent variables are 1, 3 and 7.
inline TttGraph latent_demo_graph() {
  return TttGraph::build({1, 2, 3, 4, 5, 6, 7, 8},
                         {{1, 2}, {1, 3}, {3, 2}, {3, 4}, {3, 5}, {3, 6},
                          {3, 7}, {5, 6}, {5, 7}, {7, 6}, {7, 8}});
}

// Triangle tournament 1 -> 2 -> 3 with shortcut 1 -> 3.
inline TttGraph triangle() {
  return TttGraph::build({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
}

inline EdgeWeights triangle_weights(double c12 = 0.5, double c23 = 0.4,
                                    double c13 = 0.3) {
  EdgeWeights w;
  w.set(1, 2, c12);
  w.set(2, 3, c23);
  w.set(1, 3, c13);
  return w;
}

// Chain 1 -> 2 -> 3.
inline TttGraph chain3() {
  return TttGraph::build({1, 2, 3}, {{1, 2}, {2, 3}});
}

inline EdgeWeights chain3_weights(double c12 = 0.5, double c23 = 0.4) {
  EdgeWeights w;
  w.set(1, 2, c12);
  w.set(2, 3, c23);
  return w;
}

// Collider 1 -> 3 <- 2.
inline TttGraph collider() {
  return TttGraph::build({1, 2, 3}, {{1, 3}, {2, 3}});
}

inline EdgeWeights collider_weights(double c13 = 0.4, double c23 = 0.5) {
  EdgeWeights w;
  w.set(1, 3, c13);
  w.set(2, 3, c23);
  return w;
}

// Three nodes, edges 2 -> 1 and 1 -> 3: the model whose angular measure has
// uniquely matchable zero patterns.
inline TttGraph zero_pattern_graph() {
  return TttGraph::build({1, 2, 3}, {{2, 1}, {1, 3}});
}

inline EdgeWeights zero_pattern_weights() {
  EdgeWeights w;
  w.set(2, 1, 0.8);
  w.set(1, 3, 0.5);
  return w;
}

}  // namespace fixtures
