#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "maxlin/graph.hpp"

// Brute-force re-implementations used purely as test oracles. Deliberately
// written with different algorithms than the library: the block-graph test
// uses the forbidden-subgraph characterization (no induced diamond, no
// induced cycle of length >= 4) instead of biconnected components.
namespace oracle {

using maxlin::DirectedEdge;
using maxlin::NodeId;

struct RawDigraph {
  std::vector<NodeId> nodes;
  std::vector<DirectedEdge> edges;

  bool has_edge(NodeId a, NodeId b) const {
    return std::find(edges.begin(), edges.end(), DirectedEdge{a, b}) !=
           edges.end();
  }
  bool adjacent(NodeId a, NodeId b) const {
    return has_edge(a, b) || has_edge(b, a);
  }
};

inline bool connected(const RawDigraph& g) {
  if (g.nodes.empty()) return false;
  std::set<NodeId> seen{g.nodes.front()};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& e : g.edges) {
      if (seen.count(e.from) && !seen.count(e.to)) seen.insert(e.to), grew = true;
      if (seen.count(e.to) && !seen.count(e.from)) seen.insert(e.from), grew = true;
    }
  }
  return seen.size() == g.nodes.size();
}

inline bool acyclic(const RawDigraph& g) {
  std::set<NodeId> remaining(g.nodes.begin(), g.nodes.end());
  for (bool removed = true; removed && !remaining.empty();) {
    removed = false;
    for (NodeId v : std::vector<NodeId>(remaining.begin(), remaining.end())) {
      bool has_parent = false;
      for (const auto& e : g.edges)
        if (e.to == v && remaining.count(e.from)) has_parent = true;
      if (!has_parent) remaining.erase(v), removed = true;
    }
  }
  return remaining.empty();
}

// Induced cycle of length >= 4 anywhere in the skeleton?
inline bool has_long_induced_cycle(const RawDigraph& g) {
  const std::size_t n = g.nodes.size();
  // Enumerate subsets; a subset is an induced cycle iff every member has
  // exactly two neighbours inside and the induced subgraph is connected.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<NodeId> subset;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) subset.push_back(g.nodes[k]);
    if (subset.size() < 4) continue;
    bool cycle = true;
    for (NodeId v : subset) {
      int deg = 0;
      for (NodeId w : subset)
        if (w != v && g.adjacent(v, w)) ++deg;
      if (deg != 2) cycle = false;
    }
    if (!cycle) continue;
    RawDigraph induced;
    induced.nodes = subset;
    for (const auto& e : g.edges)
      if (std::count(subset.begin(), subset.end(), e.from) &&
          std::count(subset.begin(), subset.end(), e.to))
        induced.edges.push_back(e);
    if (connected(induced)) return true;
  }
  return false;
}

// Induced diamond (K4 minus one edge)?
inline bool has_induced_diamond(const RawDigraph& g) {
  const std::size_t n = g.nodes.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          NodeId q[4] = {g.nodes[a], g.nodes[b], g.nodes[c], g.nodes[d]};
          int adj = 0;
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
              if (g.adjacent(q[x], q[y])) ++adj;
          if (adj == 5) return true;
        }
  return false;
}

// Every maximal clique's directed edges must be acyclic. With no diamond
// and no long induced cycle, blocks and maximal cliques coincide; a
// directed triangle inside any triangle then certifies non-transitivity.
inline bool all_clique_directions_acyclic(const RawDigraph& g) {
  const std::size_t n = g.nodes.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        NodeId x = g.nodes[a], y = g.nodes[b], z = g.nodes[c];
        if (g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(z, x))
          return false;
      }
  return true;
}

inline bool duplicate_or_reversed(const RawDigraph& g) {
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      const auto& e = g.edges[i];
      const auto& f = g.edges[j];
      if (e.from == f.from && e.to == f.to) return true;
      if (e.from == f.to && e.to == f.from) return true;
    }
  for (const auto& e : g.edges)
    if (e.from == e.to) return true;
  return false;
}

// Full independent check of the ttt definition for tiny graphs.
inline bool is_valid_ttt(const RawDigraph& g) {
  if (g.nodes.empty() || duplicate_or_reversed(g)) return false;
  for (const auto& e : g.edges) {
    if (!std::count(g.nodes.begin(), g.nodes.end(), e.from)) return false;
    if (!std::count(g.nodes.begin(), g.nodes.end(), e.to)) return false;
  }
  return connected(g) && acyclic(g) && !has_long_induced_cycle(g) &&
         !has_induced_diamond(g) && all_clique_directions_acyclic(g);
}

}  // namespace oracle
