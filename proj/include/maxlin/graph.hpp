#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "maxlin/error.hpp"

namespace maxlin {

// Node labels are preserved from the input; internal indices never leak
// through the public interface.
using NodeId = int;

struct DirectedEdge {
  NodeId from = 0;
  NodeId to = 0;

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Maximal transitive tournament. `nodes` is in Harari order: sorted by
// out-degree within the tournament, source first, sink last.
struct Tournament {
  std::vector<NodeId> nodes;
  std::vector<DirectedEdge> edges;

  NodeId source() const { return nodes.front(); }
  bool contains(NodeId v) const;
};

enum class TrailShape {
  forward,   // directed path u -> v
  backward,  // directed path v -> u
  apex,      // two directed paths out of a common apex node
  mixed,     // anything else (only possible with multiple sources)
};

// Undirected shortest trail (or a directed shortest path) between two nodes.
// `edges` keeps the original edge directions; `along_traversal[k]` tells
// whether edges[k] points in the direction the trail is walked.
struct Trail {
  std::vector<NodeId> nodes;  // traversal sequence, endpoints included
  std::vector<DirectedEdge> edges;
  std::vector<bool> along_traversal;
  TrailShape shape = TrailShape::forward;
  std::optional<NodeId> apex;

  std::size_t length() const { return edges.size(); }
};

struct Relatives {
  std::vector<NodeId> pa, ch, an, desc, An, Desc;
};

inline constexpr std::size_t kDefaultPathBudget = 1'000'000;

// Validated tree of transitive tournaments. Immutable after build; all
// queries are pure and safe for concurrent readers.
class TttGraph {
 public:
  // Validates the input into a ttt: connected, acyclic, every maximal
  // biconnected skeleton component a transitive tournament.
  static TttGraph build(std::vector<NodeId> nodes,
                        std::vector<DirectedEdge> edges);

  const std::vector<NodeId>& nodes() const { return labels_; }
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  const std::vector<Tournament>& tournaments() const { return tournaments_; }
  std::size_t size() const { return labels_.size(); }

  bool has_node(NodeId v) const { return index_.count(v) != 0; }
  bool has_edge(NodeId a, NodeId b) const;
  bool adjacent(NodeId a, NodeId b) const;

  std::vector<NodeId> sources() const;
  bool has_unique_source() const { return sources().size() == 1; }

  // All triples (a, b, v) with non-adjacent parents a < b of v.
  std::vector<std::array<NodeId, 3>> v_structures() const;

  Relatives relatives(NodeId v) const;
  std::vector<NodeId> parents(NodeId v) const;
  std::vector<NodeId> children(NodeId v) const;

  // i in An(v)? (includes i == v)
  bool reaches(NodeId i, NodeId v) const;

  // Unique shortest directed path p(i, v); empty trail for i == v,
  // nullopt when v is unreachable from i.
  std::optional<Trail> shortest_path(NodeId i, NodeId v) const;

  // Full enumeration of pi(i, v); pi(u, u) is empty by convention.
  std::vector<std::vector<DirectedEdge>> all_paths(
      NodeId i, NodeId v, std::size_t budget = kDefaultPathBudget) const;

  // Unique shortest trail t(u, v) on the skeleton, u != v.
  Trail shortest_trail(NodeId u, NodeId v) const;

  // E_u: every trail edge oriented away from u, irrespective of the
  // original direction.
  std::vector<std::pair<NodeId, NodeId>> edges_away_from(NodeId u) const;

  // w_{u,tau}: the unique node of tau closest to u along trails.
  NodeId closest_tournament_node(NodeId u, const Tournament& tau) const;

  // Tournament owning the (undirected) edge {a, b}.
  const Tournament& tournament_of_edge(NodeId a, NodeId b) const;

  // Tournaments whose node set contains v.
  std::vector<std::size_t> tournaments_of_node(NodeId v) const;
  bool is_tournament_source(NodeId v) const;

  const std::vector<NodeId>& topological_order() const { return topo_; }

 private:
  TttGraph() = default;

  std::size_t index_of(NodeId v) const;
  std::vector<std::size_t> skeleton_bfs_pred(std::size_t start) const;

  std::vector<NodeId> labels_;
  std::map<NodeId, std::size_t> index_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> skeleton_;
  std::vector<std::vector<bool>> desc_;  // desc_[i][v]: v in Desc(i)
  std::vector<Tournament> tournaments_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_tournament_;
  std::vector<NodeId> topo_;
};

}  // namespace maxlin
