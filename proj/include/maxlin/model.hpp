#pragma once

#include <map>
#include <span>
#include <vector>

#include "maxlin/graph.hpp"

namespace maxlin {

// Edge weight vector theta = (c_e, e in E).
class EdgeWeights {
 public:
  EdgeWeights() = default;

  void set(NodeId from, NodeId to, double c) { weights_[{from, to}] = c; }
  bool contains(NodeId from, NodeId to) const {
    return weights_.count({from, to}) != 0;
  }
  double at(NodeId from, NodeId to) const;
  std::size_t size() const { return weights_.size(); }

  const std::map<std::pair<NodeId, NodeId>, double>& entries() const {
    return weights_;
  }

  friend bool operator==(const EdgeWeights&, const EdgeWeights&) = default;

 private:
  std::map<std::pair<NodeId, NodeId>, double> weights_;
};

// Tag type: weights that passed validate_theta for their graph.
struct ValidatedTheta {
  EdgeWeights weights;
};

inline constexpr double kDefaultCriticalityMargin = 1e-12;

// Checks theta into the critical parameter space: all weights in (0,1),
// every shortest path strictly critical, all diagonals positive.
ValidatedTheta validate_theta(const TttGraph& g, const EdgeWeights& theta,
                              double eps_crit = kDefaultCriticalityMargin,
                              std::size_t path_budget = kDefaultPathBudget);

// Weight product over the unique shortest path p(i, v); 1 when i == v,
// 0 when v is unreachable from i.
double shortest_path_weight(const TttGraph& g, const EdgeWeights& theta,
                            NodeId i, NodeId v);

// Graph + validated weights + max-linear coefficient matrix. Immutable;
// evaluations are pure and safe for concurrent reads.
class MaxLinearModel {
 public:
  MaxLinearModel(TttGraph g, ValidatedTheta theta);

  static MaxLinearModel build(TttGraph g, const EdgeWeights& theta) {
    ValidatedTheta t = validate_theta(g, theta);
    return MaxLinearModel(std::move(g), std::move(t));
  }

  const TttGraph& graph() const { return graph_; }
  const EdgeWeights& theta() const { return theta_.weights; }

  // b_vi; zero when i is not an ancestor of v.
  double coefficient(NodeId v, NodeId i) const;
  // c_vv = b_vv.
  double diagonal(NodeId v) const { return coefficient(v, v); }

  // Row of B for node v, in nodes() order.
  std::span<const double> row(NodeId v) const;

  // Stable tail dependence function l(x); x indexed by nodes() order.
  double stdf(std::span<const double> x) const;

  // P(X <= z) = exp(-l(1/z)); +infinity coordinates contribute zero.
  double joint_cdf(std::span<const double> z) const;

 private:
  TttGraph graph_;
  ValidatedTheta theta_;
  std::vector<double> b_;  // row-major |V| x |V|
};

// b_vv recomputed from the triangular system (I + C) b = 1 over the
// tournament shared by v and its parents. Cross-check for the recursion.
double bvv_via_tournament(const TttGraph& g, const ValidatedTheta& theta,
                          NodeId v);

// theta' with c_ju scaled by lambda for j in pa(u) and c_uw by 1/lambda,
// where w is the single child of u. Exhibits non-identifiability.
EdgeWeights scale_witness(const MaxLinearModel& model, NodeId u, double lambda);

}  // namespace maxlin
